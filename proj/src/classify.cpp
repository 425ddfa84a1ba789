#include "qpr/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "qpr/errors.hpp"
#include "qpr/refine.hpp"

namespace qpr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative size below which a singular value of the cross-covariance counts
// as zero.
constexpr double kRankTol = 1e-8;

Quaternion align_cloud(const PhaseSystem& ps, std::size_t f, CloudStatus& status) {
  Eigen::Matrix3d cross = Eigen::Matrix3d::Zero();
  for (Element b = 0; b < ps.order(); ++b)
    for (Element a = 0; a < ps.order(); ++a)
      cross += ps(0, b, a).imag() * ps(f, b, a).imag().transpose();

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sv = svd.singularValues();
  if (sv(0) <= 1e-300 || sv(0) < 1e-12 * static_cast<double>(ps.order() * ps.order())) {
    status = CloudStatus::Degenerate;
    return 1.0;
  }
  status = CloudStatus::Aligned;
  Quaternion h;
  if (sv(1) <= kRankTol * sv(0)) {
    // Collinear cloud: every rotation taking one dominant direction to the
    // other fits equally well; take the smallest.
    h = minimal_rotation(svd.matrixV().col(0), svd.matrixU().col(0));
  } else {
    const Eigen::Matrix3d u = svd.matrixU();
    const Eigen::Matrix3d v = svd.matrixV();
    Eigen::Matrix3d fix = Eigen::Matrix3d::Identity();
    fix(2, 2) = (u * v.transpose()).determinant() < 0 ? -1.0 : 1.0;
    h = quaternion_from_rotation(u * fix * v.transpose());
  }
  // h x conj(h) = R x is wanted as conj(q) x q.
  return conj(h);
}

// Largest deviation of any entry or phase from span{1, i}.
double complexity_residual(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  double m = 0.0;
  for (const auto& mat : rep.matrices())
    for (const auto& e : mat.data()) m = std::max({m, std::abs(e.y), std::abs(e.z)});
  for (const auto& w : ps.data()) m = std::max({m, std::abs(w.y), std::abs(w.z)});
  return m;
}

// Global reraying turning the common imaginary axis of all entries and
// phases into i.
Quaternion complex_axis_rotation(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  Eigen::Vector3d best = Eigen::Vector3d::Zero();
  auto consider = [&](const Quaternion& q) {
    if (q.imag().squaredNorm() > best.squaredNorm()) best = q.imag();
  };
  for (const auto& mat : rep.matrices())
    for (const auto& e : mat.data()) consider(e);
  for (const auto& w : ps.data()) consider(w);
  if (best.norm() < 1e-12) return 1.0;
  return conj(minimal_rotation(best, Eigen::Vector3d::UnitX()));
}

// Im(conj(U_ref) U_fg) for each element, with the reference entry at the
// position of largest modulus (moduli do not change under reraying).
struct Case3Objective {
  std::vector<std::pair<std::size_t, std::size_t>> refs;

  explicit Case3Objective(const WeakProjectiveRep& rep) {
    for (const auto& m : rep.matrices()) {
      std::pair<std::size_t, std::size_t> best{0, 0};
      double best_mod = -1.0;
      for (std::size_t f = 0; f < m.rows(); ++f)
        for (std::size_t g = 0; g < m.cols(); ++g)
          if (m(f, g).norm() > best_mod + 1e-12) {
            best_mod = m(f, g).norm();
            best = {f, g};
          }
      refs.push_back(best);
    }
  }

  Eigen::VectorXd operator()(const WeakProjectiveRep& rep) const {
    const std::size_t d = rep.dim();
    Eigen::VectorXd out(static_cast<Eigen::Index>(3 * rep.order() * d * d));
    Eigen::Index k = 0;
    for (Element a = 0; a < rep.order(); ++a) {
      const QMatrix& m = rep.matrix(a);
      const Quaternion ref = conj(m(refs[a].first, refs[a].second));
      for (const auto& e : m.data()) {
        const Quaternion p = ref * e;
        out(k++) = p.x;
        out(k++) = p.y;
        out(k++) = p.z;
      }
    }
    return out;
  }
};

ClassificationOutcome unclassified(std::string reason) {
  ClassificationOutcome out;
  out.reason = std::move(reason);
  return out;
}

}  // namespace

PhaseAlignment align_phases(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  if (ps.dim() != rep.dim() || ps.order() != rep.order())
    throw ShapeMismatch("phase system does not match representation");
  PhaseAlignment out;
  out.reraying = Reraying::identity(rep.dim());
  out.status.assign(rep.dim(), CloudStatus::Reference);
  for (std::size_t f = 1; f < rep.dim(); ++f)
    out.reraying.phases[f] = align_cloud(ps, f, out.status[f]);
  return out;
}

std::string_view to_string(StructureCase c) {
  switch (c) {
    case StructureCase::Case1: return "Case1";
    case StructureCase::Case2: return "Case2";
    case StructureCase::Case3: return "Case3";
    case StructureCase::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::optional<StructureCase> parse_structure_case(std::string_view s) {
  for (auto c : {StructureCase::Case1, StructureCase::Case2, StructureCase::Case3,
                 StructureCase::Unclassified})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

double case1_residual(const PhaseSystem& ps) {
  double m = basis_dependence(ps);
  for (const auto& w : ps.data())
    m = std::max(m, std::min(max_abs_diff(w, 1.0), max_abs_diff(w, -1.0)));
  return m;
}

double case2_residual(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  return std::max(basis_dependence(ps), complexity_residual(rep, ps));
}

double case3_residual(const WeakProjectiveRep& rep, Case3Decomposition* out) {
  const std::size_t n = rep.order(), d = rep.dim();
  Case3Decomposition dec;
  double resid = 0.0;
  for (Element a = 0; a < n; ++a) {
    const QMatrix& m = rep.matrix(a);
    Quaternion ref;
    for (const auto& e : m.data())
      if (e.norm() > ref.norm() + 1e-12) ref = e;
    if (ref.norm() == 0.0) return kInf;
    const Quaternion sigma = normalized(ref);
    QMatrix real(d, d);
    for (std::size_t f = 0; f < d; ++f)
      for (std::size_t g = 0; g < d; ++g) {
        const Quaternion p = conj(sigma) * m(f, g);
        resid = std::max({resid, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
        real(f, g) = p.w;
      }
    resid = std::max(resid, unitarity_deviation(real));
    dec.real_part.push_back(std::move(real));
    dec.phase_part.push_back(sigma);
  }
  dec.signs.resize(n * n);
  for (Element b = 0; b < n; ++b)
    for (Element a = 0; a < n; ++a) {
      const QMatrix prod = dec.real_part[b] * dec.real_part[a];
      const QMatrix& target = dec.real_part[rep.group().mul(b, a)];
      double overlap = 0.0;
      for (std::size_t k = 0; k < prod.data().size(); ++k)
        overlap += prod.data()[k].w * target.data()[k].w;
      const int s = overlap < 0 ? -1 : 1;
      dec.signs[b * n + a] = s;
      resid = std::max(resid, max_abs_diff(prod, scale_left(static_cast<double>(s), target)));
    }
  if (out) *out = std::move(dec);
  return resid;
}

double witness_residual(const WeakProjectiveRep& rep, const ClassificationOutcome& outcome) {
  if (outcome.kind == StructureCase::Unclassified) return kInf;
  const WeakProjectiveRep w = apply_reraying(rep, outcome.witness);
  const PhaseSystem ps = measured_phases(w);
  switch (outcome.kind) {
    case StructureCase::Case1: return case1_residual(ps);
    case StructureCase::Case2: return case2_residual(w, ps);
    case StructureCase::Case3: return case3_residual(w);
    case StructureCase::Unclassified: break;
  }
  return kInf;
}

ClassificationOutcome classify_with_candidate(const WeakProjectiveRep& rep,
                                              const Reraying& candidate,
                                              const ClassifyOptions& opts) {
  const double eps = opts.eps;
  ClassificationOutcome out;

  const WeakProjectiveRep aligned = apply_reraying(rep, candidate, eps);
  const PhaseSystem aligned_ps = measured_phases(aligned);

  if (const double r = case1_residual(aligned_ps); r <= eps) {
    out.kind = StructureCase::Case1;
    out.witness = candidate;
    out.residual = r;
    return out;
  }

  if (basis_dependence(aligned_ps) <= eps) {
    const Reraying w =
        compose(candidate, Reraying::global(rep.dim(), complex_axis_rotation(aligned, aligned_ps)));
    const WeakProjectiveRep rotated = apply_reraying(rep, w, eps);
    if (const double r = case2_residual(rotated, measured_phases(rotated)); r <= eps) {
      out.kind = StructureCase::Case2;
      out.witness = w;
      out.residual = r;
      return out;
    }
  }

  // Case 3: search the reraying that makes every U_a a quaternionic phase
  // times a real matrix. Start from the candidate, then random restarts.
  const Case3Objective objective(rep);
  std::mt19937_64 rng(opts.seed);
  for (std::size_t attempt = 0; attempt <= opts.trials; ++attempt) {
    Reraying start = attempt == 0 ? candidate : random_reraying(rep.dim(), rng);
    const RefineResult refined = refine_reraying(rep, objective, std::move(start));
    if (refined.max_residual > std::sqrt(eps)) continue;
    Case3Decomposition dec;
    const double r = case3_residual(apply_reraying(rep, refined.reraying, eps), &dec);
    if (r <= eps) {
      out.kind = StructureCase::Case3;
      out.witness = refined.reraying;
      out.case3 = std::move(dec);
      out.residual = r;
      return out;
    }
  }

  out.witness = candidate;
  out.reason = "no case matched";
  return out;
}

ClassificationOutcome classify(const WeakProjectiveRep& rep, const ClassifyOptions& opts) {
  PhaseSystem ps(0, 0);
  try {
    validate_rep(rep, opts.eps);
    ps = extract_phases(rep, opts.eps);
  } catch (const Error& e) {
    return unclassified(std::string("invalid representation: ") + e.what());
  }
  // Detection runs on reducible reps too: a verified case witness is still
  // reported, flagged irreducible = false.
  const Commutant c = commutant(rep);
  auto out = classify_with_candidate(rep, align_phases(rep, ps).reraying, opts);
  out.commutant_dimension = c.dimension;
  out.irreducible = is_irreducible(c);
  if (out.kind == StructureCase::Unclassified && !out.irreducible) out.reason = "reducible";
  return out;
}

CorollaryReport check_corollary(const WeakProjectiveRep& rep, double eps) {
  return check_corollary(rep, measured_phases(rep), eps);
}

CorollaryReport check_corollary(const WeakProjectiveRep& rep, const PhaseSystem& ps, double eps) {
  CorollaryReport r;
  r.multicentral_deviation = multicentral_deviation(rep, ps);
  r.central_deviation = central_deviation(rep, ps);
  r.multicentral = r.multicentral_deviation <= eps;
  r.central = r.central_deviation <= eps;
  r.violation = r.multicentral && !r.central;
  return r;
}

}  // namespace qpr
