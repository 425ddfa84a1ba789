#include <doctest.h>

#include <complex>
#include <numbers>

#include "oracle.hpp"
#include "qpr/corpus.hpp"
#include "qpr/errors.hpp"
#include "qpr/reference.hpp"
#include "qpr/refine.hpp"
#include "qpr/scan.hpp"
#include "qpr/weakrep.hpp"

using namespace qpr;

namespace {

double max_phase_diff(const PhaseSystem& a, const PhaseSystem& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, oracle::diff(a.data()[i], b.data()[i]));
  return m;
}

// Real rotation rep of Z_n sending the generator to angle theta; weak
// projective only when n * theta is a multiple of pi.
WeakProjectiveRep rotation_rep(std::size_t n, double theta) {
  std::vector<QMatrix> m;
  for (std::size_t a = 0; a < n; ++a) {
    const double c = std::cos(a * theta), s = std::sin(a * theta);
    m.push_back(QMatrix{{c, -s}, {s, c}});
  }
  return WeakProjectiveRep(cyclic_group(n), 2, std::move(m));
}

}  // namespace

TEST_CASE("real sign rep phases are (-1)^(y_b x_a)") {
  const auto rep = make_real_sign_rep();
  const auto ps = extract_phases(rep);
  for (std::size_t xb = 0; xb < 2; ++xb)
    for (std::size_t yb = 0; yb < 2; ++yb)
      for (std::size_t xa = 0; xa < 2; ++xa)
        for (std::size_t ya = 0; ya < 2; ++ya) {
          const Element b = cyclic_product_index(2, xb, yb), a = cyclic_product_index(2, xa, ya);
          const double expect = (yb * xa) % 2 ? -1.0 : 1.0;
          for (std::size_t f = 0; f < 2; ++f) CHECK(oracle::diff(ps(f, b, a), expect) <= 1e-15);
        }
  CHECK(is_strong_complex(ps));
}

TEST_CASE("clock-shift phases are zeta^(y_b x_a)") {
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto rep = make_clock_shift(n);
    const auto ps = extract_phases(rep);
    for (Element b = 0; b < rep.order(); ++b)
      for (Element a = 0; a < rep.order(); ++a) {
        const std::size_t yb = b / n, xa = a % n;
        const auto z = std::polar(1.0, 2 * std::numbers::pi * double(yb * xa % n) / n);
        const auto from_oracle = oracle::phases(rep, b, a);
        for (std::size_t f = 0; f < n; ++f) {
          CHECK(oracle::diff(ps(f, b, a), Quaternion::complex(z.real(), z.imag())) <= 1e-12);
          CHECK(oracle::diff(ps(f, b, a), from_oracle[f]) <= 1e-12);
        }
      }
    CHECK(is_strong_complex(ps));
  }
  CHECK_THROWS_AS(make_clock_shift(2), InvalidOrder);
}

TEST_CASE("rerayed clock shift: phases at the rerayed index are conjugated") {
  const auto rep = make_clock_shift(3);
  Reraying r = Reraying::identity(3);
  r.phases[0] = Quaternion::j();
  const auto rr = apply_reraying(rep, r);
  const auto ps = extract_phases(rep), pr = extract_phases(rr);
  for (Element b = 0; b < 9; ++b)
    for (Element a = 0; a < 9; ++a) {
      CHECK(oracle::diff(pr(0, b, a), conj(ps(0, b, a))) <= 1e-12);
      CHECK(oracle::diff(pr(1, b, a), ps(1, b, a)) <= 1e-12);
    }
  CHECK_FALSE(is_strong_quaternionic(pr));
  CHECK(check_identities(rr).ok());
}

TEST_CASE("identities hold on every corpus entry") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    CHECK(check_identities(e.rep).max() <= 1e-9);
  }
}

TEST_CASE("a perturbed matrix shows up as an operator-form residual") {
  const auto base = make_real_sign_rep();
  auto mats = base.matrices();
  mats[1](0, 1) = mats[1](0, 1) + Quaternion(1e-3);
  const WeakProjectiveRep rep(base.group(), 2, mats);
  CHECK_THROWS_AS(validate_rep(rep), NotUnitary);
  const auto ids = check_identities(rep, measured_phases(rep));
  CHECK(ids.operator_form > 1e-4);
  CHECK(ids.operator_form < 1e-2);
}

TEST_CASE("validation errors") {
  SUBCASE("non-unitary names the element") {
    auto mats = make_real_sign_rep().matrices();
    mats[2] = scale_left(Quaternion(2.0), mats[2]);
    try {
      validate_rep(WeakProjectiveRep(cyclic_product_group(2, 2), 2, mats));
      FAIL("expected NotUnitary");
    } catch (const NotUnitary& e) {
      CHECK(e.element() == 2);
    }
  }
  SUBCASE("identity not normalized") {
    auto mats = make_real_sign_rep().matrices();
    mats[0] = scale_left(Quaternion::j(), mats[0]);
    CHECK_THROWS_AS(validate_rep(WeakProjectiveRep(cyclic_product_group(2, 2), 2, mats)),
                    IdentityNotNormalized);
  }
  SUBCASE("not weak projective names the first pair") {
    const auto rep = rotation_rep(3, 0.3);
    validate_rep(rep);
    try {
      extract_phases(rep);
      FAIL("expected NotWeakProjective");
    } catch (const NotWeakProjective& e) {
      CHECK(e.b() == 1);
      CHECK(e.a() == 2);
      CHECK(e.offdiag_norm() == doctest::Approx(std::sin(0.9)));
    }
    CHECK(weak_projective_deviation(rep) == doctest::Approx(std::sin(0.9)));
  }
  SUBCASE("rotation by 2pi/3 is an honest rep") {
    const auto rep = rotation_rep(3, 2 * std::numbers::pi / 3);
    CHECK_NOTHROW(make_weak_rep(rep.group(), 2, rep.matrices()));
  }
  SUBCASE("shape") {
    CHECK_THROWS_AS(WeakProjectiveRep(cyclic_group(2), 2, {QMatrix::identity(2)}), ShapeMismatch);
    CHECK_THROWS_AS(
        WeakProjectiveRep(cyclic_group(1), 2, {QMatrix::identity(3)}), ShapeMismatch);
  }
}

TEST_CASE("reraying covariance and invariants") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const auto gen = generate_scan_rep(rng, 12, 3);
    const auto& rep = gen.rep;
    const auto r = random_reraying(rep.dim(), rng);
    const auto rr = apply_reraying(rep, r);
    const auto ps = measured_phases(rep);
    const auto prr = measured_phases(rr);
    CAPTURE(gen.generator);
    CHECK(max_phase_diff(rerayed_phases(ps, r), prr) <= 1e-12);
    CHECK(check_identities(rr).max() <= 1e-9);
    // Deviations are componentwise maxima; a reraying keeps entry moduli, so
    // they agree within the factor 2 between max-norm and modulus.
    const double mc = multicentral_deviation(rep, ps), mc_r = multicentral_deviation(rr, prr);
    const double ce = central_deviation(rep, ps), ce_r = central_deviation(rr, prr);
    CHECK(mc_r <= 2 * mc + 1e-12);
    CHECK(mc <= 2 * mc_r + 1e-12);
    CHECK(ce_r <= 2 * ce + 1e-12);
    CHECK(ce <= 2 * ce_r + 1e-12);
    CHECK(is_multicentral(rep, ps) == is_multicentral(rr, prr));
    CHECK(is_central(rep, ps) == is_central(rr, prr));

    // Entry moduli are reraying invariant.
    for (Element a = 0; a < rep.order(); ++a)
      for (std::size_t i = 0; i < rep.dim() * rep.dim(); ++i)
        CHECK(std::abs(rep.matrix(a).data()[i].norm() - rr.matrix(a).data()[i].norm()) <= 1e-12);

    // Composition.
    const auto r2 = random_reraying(rep.dim(), rng);
    CHECK(max_abs_diff(apply_reraying(rr, r2).matrix(1 % rep.order()),
                       apply_reraying(rep, compose(r, r2)).matrix(1 % rep.order())) <= 1e-12);
  }
  CHECK_THROWS_AS(apply_reraying(make_real_sign_rep(), Reraying::global(2, Quaternion(2.0))),
                  NotUnit);
  CHECK_THROWS_AS(apply_reraying(make_real_sign_rep(), Reraying::identity(3)), ShapeMismatch);
}

TEST_CASE("build_omega is the diagonal of the phase table") {
  const auto rep = make_clock_shift(3);
  const auto ps = extract_phases(rep);
  const QMatrix om = build_omega(ps, 3, 1);
  CHECK(max_offdiag(om) == 0.0);
  for (std::size_t f = 0; f < 3; ++f) CHECK(om(f, f) == ps(f, 3, 1));
  // U_b U_a = U_ba Omega(b,a)
  const Element ba = rep.group().product(3, 1);
  CHECK(max_abs_diff(rep.matrix(3) * rep.matrix(1), rep.matrix(ba) * om) <= 1e-12);
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  std::mt19937_64 rng(32);
  std::vector<WeakProjectiveRep> reps;
  for (const auto& e : corpus()) reps.push_back(e.rep);
  for (int t = 0; t < 20; ++t) reps.push_back(generate_scan_rep(rng, 16, 4).rep);
  for (const auto& rep : reps) {
    const auto ps = measured_phases(rep);
    CHECK(ps == reference::measured_phases(rep));
    CHECK(weak_projective_deviation(rep) == reference::weak_projective_deviation(rep));
    const auto a = check_identities(rep, ps), b = reference::check_identities(rep, ps);
    CHECK(a.operator_form == b.operator_form);
    CHECK(a.associativity == b.associativity);
    CHECK(a.spectral == b.spectral);
    CHECK(multicentral_deviation(rep, ps) == reference::multicentral_deviation(rep, ps));
    CHECK(central_deviation(rep, ps) == reference::central_deviation(rep, ps));
    CHECK(detail::commutant_gram(rep) == reference::commutant_gram(rep));
  }
}

TEST_CASE("strong predicates against an independent phase table") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const auto& rep = e.rep;
    bool f_independent = true, complex = true;
    for (Element b = 0; b < rep.order(); ++b)
      for (Element a = 0; a < rep.order(); ++a) {
        const auto w = oracle::phases(rep, b, a);
        for (const auto& q : w) {
          f_independent = f_independent && oracle::diff(q, w[0]) <= 1e-9;
          complex = complex && std::abs(q.y) <= 1e-9 && std::abs(q.z) <= 1e-9;
        }
      }
    const auto ps = measured_phases(rep);
    CHECK(is_strong_quaternionic(ps) == f_independent);
    CHECK(is_strong_complex(ps) == (f_independent && complex));
    CHECK(e.strong_quaternionic == f_independent);
    CHECK(e.strong_complex == (f_independent && complex));
  }
}
