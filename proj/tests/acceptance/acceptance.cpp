// Acceptance suite: one PASS/FAIL line per primary criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "qpr/classify.hpp"
#include "qpr/corpus.hpp"
#include "qpr/errors.hpp"
#include "qpr/refine.hpp"
#include "qpr/scan.hpp"

using namespace qpr;

namespace {

constexpr double kTol = 1e-9;

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    v.pass = false;
    v.detail += " (over time limit " + std::to_string(limit_s) + " s)";
  }
  if (!v.pass) ++failures;
  std::printf("%s [%d] %s: %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(),
              secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool all_entries_complex(const WeakProjectiveRep& rep) {
  for (const auto& m : rep.matrices())
    for (const auto& q : m.data())
      if (!is_complex(q, 0.0)) return false;
  return true;
}

}  // namespace

int main() {
  const auto entries = corpus();

  run(1, "identity suite", 10.0, [&] {
    double worst = 0.0;
    bool rerayed = false;
    for (const auto& e : entries) {
      worst = std::max(worst, check_identities(e.rep, extract_phases(e.rep)).max());
      rerayed = rerayed || !e.strong_quaternionic;
    }
    const bool cases = entries.size() >= 6 && rerayed;
    return Verdict{worst <= kTol && cases,
                   fmt("%zu reps, max residual %.3g (tol %.0e)", entries.size(), worst, kTol)};
  });

  run(2, "classification soundness", 30.0, [&] {
    std::mt19937_64 rng(2024);
    int checked = 0, wrong = 0;
    double worst = 0.0;
    auto expect = [&](const WeakProjectiveRep& rep, StructureCase c) {
      const auto out = classify(rep, {.eps = kTol, .seed = 17});
      ++checked;
      if (out.kind != c) {
        ++wrong;
        return;
      }
      worst = std::max(worst, witness_residual(rep, out));
    };
    expect(make_real_sign_rep(), StructureCase::Case1);
    const auto cs = make_clock_shift(3);
    const auto c3 = make_case3(std::array<Quaternion, 4>{1.0, Quaternion::j(), Quaternion::k(), 1.0});
    expect(cs, StructureCase::Case2);
    expect(c3, StructureCase::Case3);
    for (int t = 0; t < 20; ++t) {
      expect(apply_reraying(cs, random_reraying(cs.dim(), rng)), StructureCase::Case2);
      expect(apply_reraying(c3, random_reraying(c3.dim(), rng)), StructureCase::Case3);
    }
    return Verdict{wrong == 0 && worst <= kTol,
                   fmt("%d reps, %d misclassified, max witness residual %.3g", checked, wrong, worst)};
  });

  run(3, "weak vs strong separation", 0.0, [&] {
    Reraying r = Reraying::identity(3);
    r.phases[0] = Quaternion::j();
    const auto rr = apply_reraying(make_clock_shift(3), r);
    bool extracted = true;
    PhaseSystem ps(0, 0);
    try {
      ps = extract_phases(rr, kTol);
    } catch (const Error&) {
      extracted = false;
    }
    const bool weak_only = extracted && !is_strong_quaternionic(ps, kTol);
    const bool case2 = classify(rr).kind == StructureCase::Case2;
    int complex_reps = 0, strong = 0;
    for (const auto& e : entries) {
      if (!all_entries_complex(e.rep)) continue;
      ++complex_reps;
      strong += is_strong_complex(extract_phases(e.rep), kTol);
    }
    return Verdict{weak_only && case2 && strong == complex_reps,
                   fmt("rerayed clock shift: extracted=%d strong=%d case2=%d; complex reps strong "
                       "%d/%d",
                       extracted, !weak_only && extracted, case2, strong, complex_reps)};
  });

  run(4, "corollary scan", 60.0, [&] {
    const auto rep = run_corollary_scan(
        {.seed = 20240601, .trials = 1000, .max_order = 16, .max_dim = 4, .eps = kTol});
    const auto& c = rep.counts;
    return Verdict{rep.violation_count() == 0 && c.total() == 1000,
                   fmt("%zu trials, multicentral&central %zu, multicentral&!central %zu, "
                       "!multicentral %zu",
                       c.total(), c.multicentral_central, c.multicentral_not_central,
                       c.not_multicentral_central + c.not_multicentral_not_central)};
  });

  run(5, "oracle equivalence", 0.0, [&] {
    int compared = 0, disagree = 0;
    std::string which;
    for (const auto& e : entries) {
      if (e.rep.dim() > 3) continue;
      ++compared;
      const auto& rep = e.rep;
      const auto al = align_phases(rep, measured_phases(rep));
      const bool aligned =
          basis_dependence(measured_phases(apply_reraying(rep, al.reraying))) <= kTol;
      const auto hit = oracle_reraying_search(rep, phase_independence_residuals, 200, 99, kTol);
      const auto case_a = classify_with_candidate(rep, al.reraying, {.seed = 99}).kind;
      const auto case_o =
          classify_with_candidate(rep, hit ? hit->reraying : Reraying::identity(rep.dim()),
                                  {.seed = 99})
              .kind;
      if (aligned != hit.has_value() || case_a != case_o) {
        ++disagree;
        which += " " + e.name;
      }
    }
    return Verdict{disagree == 0 && compared > 0,
                   fmt("%d corpus reps with dim <= 3, %d disagreements", compared, disagree) + which};
  });

  run(6, "algebraic substrate", 0.0, [&] {
    constexpr int kSamples = 10000;
    std::mt19937_64 rng(6);
    std::normal_distribution<double> n;
    double norm_err = 0.0, hom_err = 0.0, cov_err = 0.0;
    for (int t = 0; t < kSamples; ++t) {
      const Quaternion p{n(rng), n(rng), n(rng), n(rng)}, q{n(rng), n(rng), n(rng), n(rng)};
      norm_err = std::max(norm_err, std::abs((p * q).norm() - p.norm() * q.norm()) /
                                        std::max(1.0, p.norm() * q.norm()));
      const Quaternion u = random_unit_quaternion(rng), v = random_unit_quaternion(rng);
      hom_err = std::max(
          hom_err, (rotation_of(u * v) - rotation_of(u) * rotation_of(v)).cwiseAbs().maxCoeff());
    }
    for (int t = 0; t < kSamples; ++t) {
      const auto gen = generate_scan_rep(rng, 8, 3);
      const auto r = random_reraying(gen.rep.dim(), rng);
      const auto expect = rerayed_phases(measured_phases(gen.rep), r);
      const auto got = measured_phases(apply_reraying(gen.rep, r));
      for (std::size_t i = 0; i < got.data().size(); ++i)
        cov_err = std::max(cov_err, max_abs_diff(got.data()[i], expect.data()[i]));
    }
    return Verdict{norm_err <= kTol && hom_err <= kTol && cov_err <= kTol,
                   fmt("%d samples each: norm %.3g, rotation homomorphism %.3g, reraying "
                       "covariance %.3g",
                       kSamples, norm_err, hom_err, cov_err)};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
