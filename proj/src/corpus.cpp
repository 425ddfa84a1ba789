#include "qpr/corpus.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "qpr/errors.hpp"

namespace qpr {

namespace {

QMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
QMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

QMatrix power(const QMatrix& m, std::size_t k) {
  QMatrix out = QMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

WeakProjectiveRep make_trivial_rep(const FiniteGroup& group, std::size_t dim) {
  return WeakProjectiveRep(group, dim, std::vector<QMatrix>(group.order(), QMatrix::identity(dim)));
}

WeakProjectiveRep make_real_sign_rep() {
  FiniteGroup g = cyclic_product_group(2, 2);
  std::vector<QMatrix> mats(4);
  for (std::size_t y = 0; y < 2; ++y)
    for (std::size_t x = 0; x < 2; ++x)
      mats[cyclic_product_index(2, x, y)] = power(pauli_x(), x) * power(pauli_z(), y);
  return WeakProjectiveRep(std::move(g), 2, std::move(mats));
}

WeakProjectiveRep make_clock_shift(std::size_t n) {
  if (n < 3) throw InvalidOrder("clock-shift needs n >= 3; n = 2 is the real sign rep");
  QMatrix shift(n, n), clock(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    shift((g + 1) % n, g) = 1.0;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(g) / static_cast<double>(n);
    clock(g, g) = Quaternion::complex(std::cos(angle), std::sin(angle));
  }
  FiniteGroup group = cyclic_product_group(n, n);
  std::vector<QMatrix> mats(n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      mats[cyclic_product_index(n, x, y)] = power(shift, x) * power(clock, y);
  return WeakProjectiveRep(std::move(group), n, std::move(mats));
}

WeakProjectiveRep make_case3(std::span<const Quaternion> sigma, double eps) {
  if (sigma.size() != 4) throw InvalidParams("case-3 construction needs one sigma per Z2xZ2 element");
  for (const auto& s : sigma)
    if (!is_unit(s, eps)) throw NotUnit(s.norm());
  if (max_abs_diff(sigma[0], 1.0) > eps) throw IdentityPhase("sigma at the identity must be 1");
  const WeakProjectiveRep base = make_real_sign_rep();
  std::vector<QMatrix> mats;
  for (Element a = 0; a < 4; ++a) mats.push_back(scale_left(sigma[a], base.matrix(a)));
  return WeakProjectiveRep(base.group(), 2, std::move(mats));
}

WeakProjectiveRep make_one_dim(const FiniteGroup& group, std::span<const Quaternion> u) {
  if (u.size() != group.order()) throw InvalidParams("one quaternion per group element required");
  std::vector<QMatrix> mats;
  for (const auto& q : u) mats.push_back(QMatrix{{q}});
  return WeakProjectiveRep(group, 1, std::move(mats));
}

WeakProjectiveRep make_direct_sum(const WeakProjectiveRep& lhs, const WeakProjectiveRep& rhs) {
  if (lhs.group().cayley() != rhs.group().cayley())
    throw InvalidParams("direct sum needs both summands over the same group");
  const std::size_t d1 = lhs.dim(), d = lhs.dim() + rhs.dim();
  std::vector<QMatrix> mats;
  for (Element a = 0; a < lhs.order(); ++a) {
    QMatrix m(d, d);
    for (std::size_t f = 0; f < d1; ++f)
      for (std::size_t g = 0; g < d1; ++g) m(f, g) = lhs.matrix(a)(f, g);
    for (std::size_t f = 0; f < rhs.dim(); ++f)
      for (std::size_t g = 0; g < rhs.dim(); ++g) m(d1 + f, d1 + g) = rhs.matrix(a)(f, g);
    mats.push_back(std::move(m));
  }
  return WeakProjectiveRep(lhs.group(), d, std::move(mats));
}

WeakProjectiveRep make_quaternion_group_rep() {
  const std::array<Quaternion, 8> elems = {Quaternion(1),    Quaternion(-1),  Quaternion::i(),
                                           -Quaternion::i(), Quaternion::j(), -Quaternion::j(),
                                           Quaternion::k(),  -Quaternion::k()};
  return make_one_dim(quaternion_group(), elems);
}

std::vector<CorpusEntry> corpus() {
  using SC = StructureCase;
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  const std::array<Quaternion, 4> sigma_jk = {1.0, j, k, 1.0};
  const WeakProjectiveRep case3 = make_case3(sigma_jk);
  const std::array<Quaternion, 4> sigma_ijk = {1.0, j, k, Quaternion{0.5, 0.5, 0.5, 0.5}};

  Reraying j_on_first = Reraying::identity(3);
  j_on_first.phases[0] = j;
  const Reraying skew{{normalized({1.0, 0.3, -0.5, 0.2}), normalized({0.1, 0.7, 0.2, -0.4})}};

  const std::array<Quaternion, 4> ijk = {1.0, i, j, k};
  const FiniteGroup klein = cyclic_product_group(2, 2);

  std::vector<CorpusEntry> out;
  out.push_back({"trivial_z2", make_trivial_rep(cyclic_group(2)), SC::Case1, true, true, true, true,
                 true, "U_a = 1"});
  out.push_back({"real_sign", make_real_sign_rep(), SC::Case1, true, true, true, true,
                 true, "X^x Z^y on Z2xZ2, phases +-1"});
  out.push_back({"quaternion_group", make_quaternion_group_rep(), SC::Case1, true, true, true, true,
                 true, "Q8 by left multiplication on H, a genuine representation"});
  out.push_back({"clock_shift_3", make_clock_shift(3), SC::Case2, true, true, true, true,
                 true, "complex Heisenberg-Weyl rep of Z3xZ3"});
  out.push_back({"clock_shift_3_j", apply_reraying(make_clock_shift(3), j_on_first), SC::Case2,
                 false, false, true, true, true,
                 "clock_shift_3 with basis vector 0 rerayed by j; phases at f=0 conjugated"});
  out.push_back({"clock_shift_4", make_clock_shift(4), SC::Case2, true, true, true, true,
                 true, "complex Heisenberg-Weyl rep of Z4xZ4"});
  out.push_back({"case3_jk", case3, SC::Case3, true, true, false, false,
                 false, "real_sign times sigma = (1, j, k, 1); splits over H"});
  out.push_back({"case3_jk_skew", apply_reraying(case3, skew), SC::Case3, false, false, false,
                 false, false, "case3_jk under a fixed generic reraying"});
  out.push_back({"case3_ijk", make_case3(sigma_ijk), SC::Case3, false, true, false, false, true,
                 "real_sign times sigma = (1, j, k, (1+i+j+k)/2); irreducible"});
  out.push_back({"reducible_sum", make_direct_sum(make_one_dim(klein, ijk), make_trivial_rep(klein)),
                 SC::Unclassified, false, false, true, true,
                 false, "(1, i, j, k) on Z2xZ2 plus the trivial rep; reducible"});
  return out;
}

std::optional<OracleHit> oracle_reraying_search(const WeakProjectiveRep& rep,
                                                const RerayingObjective& objective,
                                                std::size_t trials, std::uint64_t seed,
                                                double tol) {
  const Eigen::VectorXd r0 = objective(rep);
  const double res0 = r0.size() ? r0.cwiseAbs().maxCoeff() : 0.0;
  if (res0 <= tol) return OracleHit{Reraying::identity(rep.dim()), 0, res0};

  std::mt19937_64 rng(seed);
  for (std::size_t trial = 1; trial <= trials; ++trial) {
    RefineResult refined = refine_reraying(rep, objective, random_reraying(rep.dim(), rng));
    if (refined.max_residual <= tol)
      return OracleHit{std::move(refined.reraying), trial, refined.max_residual};
  }
  return std::nullopt;
}

}  // namespace qpr
