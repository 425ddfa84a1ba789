#include "qpr/weakrep.hpp"

#include <algorithm>
#include <string>

#include "kernels.hpp"
#include "qpr/errors.hpp"

namespace qpr {

WeakProjectiveRep::WeakProjectiveRep(FiniteGroup group, std::size_t dim,
                                     std::vector<QMatrix> matrices)
    : group_(std::move(group)), dim_(dim), matrices_(std::move(matrices)) {
  if (dim_ == 0) throw ShapeMismatch("representation dimension must be positive");
  if (matrices_.size() != group_.order()) {
    throw ShapeMismatch("expected " + std::to_string(group_.order()) + " matrices, got " +
                        std::to_string(matrices_.size()));
  }
  for (std::size_t a = 0; a < matrices_.size(); ++a) {
    if (matrices_[a].rows() != dim_ || matrices_[a].cols() != dim_) {
      throw ShapeMismatch("matrix for element " + std::to_string(a) + " is not " +
                          std::to_string(dim_) + "x" + std::to_string(dim_));
    }
  }
}

Reraying compose(const Reraying& first, const Reraying& second) {
  if (first.dim() != second.dim()) throw ShapeMismatch("composing rerayings of different dims");
  Reraying out;
  out.phases.reserve(first.dim());
  for (std::size_t f = 0; f < first.dim(); ++f)
    out.phases.push_back(first.phases[f] * second.phases[f]);
  return out;
}

double IdentityReport::max() const { return std::max({operator_form, associativity, spectral}); }

void validate_rep(const WeakProjectiveRep& rep, double eps) {
  for (Element a = 0; a < rep.order(); ++a) {
    const double dev = unitarity_deviation(rep.matrix(a));
    if (dev > eps) throw NotUnitary(a, dev);
  }
  const double id_dev =
      max_abs_diff(rep.matrix(rep.group().identity()), QMatrix::identity(rep.dim()));
  if (id_dev > eps) throw IdentityNotNormalized(id_dev);
}

WeakProjectiveRep make_weak_rep(FiniteGroup group, std::size_t dim, std::vector<QMatrix> matrices,
                                double eps) {
  WeakProjectiveRep rep(std::move(group), dim, std::move(matrices));
  validate_rep(rep, eps);
  extract_phases(rep, eps);
  return rep;
}

namespace {

// Fills ps and returns the off-diagonal norm per pair, indexed b*n + a.
std::vector<double> measure(const WeakProjectiveRep& rep, PhaseSystem& ps) {
  const auto n = static_cast<std::ptrdiff_t>(rep.order());
  std::vector<double> offdiag(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < n * n; ++idx) {
    const auto b = static_cast<Element>(idx / n);
    const auto a = static_cast<Element>(idx % n);
    offdiag[static_cast<std::size_t>(idx)] =
        kernels::store_diagonal(kernels::pair_product(rep, b, a), ps, b, a);
  }
  return offdiag;
}

}  // namespace

PhaseSystem measured_phases(const WeakProjectiveRep& rep) {
  PhaseSystem ps(rep.order(), rep.dim());
  measure(rep, ps);
  return ps;
}

double weak_projective_deviation(const WeakProjectiveRep& rep) {
  PhaseSystem ps(rep.order(), rep.dim());
  const auto offdiag = measure(rep, ps);
  return *std::max_element(offdiag.begin(), offdiag.end());
}

PhaseSystem extract_phases(const WeakProjectiveRep& rep, double eps) {
  PhaseSystem ps(rep.order(), rep.dim());
  const auto offdiag = measure(rep, ps);
  const std::size_t n = rep.order();
  for (std::size_t idx = 0; idx < offdiag.size(); ++idx) {
    const Element b = idx / n, a = idx % n;
    if (offdiag[idx] > eps) throw NotWeakProjective(b, a, offdiag[idx]);
    for (std::size_t f = 0; f < rep.dim(); ++f) {
      const double mod = ps(f, b, a).norm();
      if (std::abs(mod - 1.0) > eps) throw NonUnitPhase(f, b, a, mod);
    }
  }
  return ps;
}

QMatrix build_omega(const PhaseSystem& ps, Element b, Element a) {
  if (b >= ps.order()) throw IndexOutOfRange(b, ps.order());
  if (a >= ps.order()) throw IndexOutOfRange(a, ps.order());
  return QMatrix::diagonal(ps.pair(b, a));
}

IdentityReport check_identities(const WeakProjectiveRep& rep) {
  return check_identities(rep, measured_phases(rep));
}

IdentityReport check_identities(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  const auto n = static_cast<std::ptrdiff_t>(rep.order());
  double op = 0.0, assoc = 0.0, spectral_max = 0.0;
#pragma omp parallel for schedule(static) reduction(max : op)
  for (std::ptrdiff_t idx = 0; idx < n * n; ++idx) {
    op = std::max(op, kernels::operator_form_residual(rep, ps, static_cast<Element>(idx / n),
                                                      static_cast<Element>(idx % n)));
  }
#pragma omp parallel for schedule(static) reduction(max : assoc, spectral_max)
  for (std::ptrdiff_t idx = 0; idx < n * n * n; ++idx) {
    const auto a = static_cast<Element>(idx / (n * n));
    const auto b = static_cast<Element>((idx / n) % n);
    const auto c = static_cast<Element>(idx % n);
    const auto r = kernels::triple_residual(rep, ps, a, b, c);
    assoc = std::max(assoc, r.associativity);
    spectral_max = std::max(spectral_max, r.spectral);
  }
  return {op, assoc, spectral_max};
}

double basis_dependence(const PhaseSystem& ps) {
  double m = 0.0;
  for (Element b = 0; b < ps.order(); ++b)
    for (Element a = 0; a < ps.order(); ++a) {
      const auto w = ps.pair(b, a);
      for (std::size_t f = 1; f < w.size(); ++f) m = std::max(m, max_abs_diff(w[f], w[0]));
    }
  return m;
}

bool is_strong_quaternionic(const PhaseSystem& ps, double eps) {
  return basis_dependence(ps) <= eps;
}

bool is_strong_complex(const PhaseSystem& ps, double eps) {
  if (!is_strong_quaternionic(ps, eps)) return false;
  return std::all_of(ps.data().begin(), ps.data().end(),
                     [eps](const Quaternion& w) { return is_complex(w, eps); });
}

double multicentral_deviation(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  const auto n = static_cast<std::ptrdiff_t>(rep.order());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (std::ptrdiff_t idx = 0; idx < n * n; ++idx) {
    m = std::max(m, kernels::pair_multicentral(rep, ps, static_cast<Element>(idx / n),
                                               static_cast<Element>(idx % n)));
  }
  return m;
}

double central_deviation(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  const auto n = static_cast<std::ptrdiff_t>(rep.order());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (std::ptrdiff_t idx = 0; idx < n * n; ++idx) {
    m = std::max(m, kernels::pair_central(rep, ps, static_cast<Element>(idx / n),
                                          static_cast<Element>(idx % n)));
  }
  return m;
}

bool is_multicentral(const WeakProjectiveRep& rep, const PhaseSystem& ps, double eps) {
  return multicentral_deviation(rep, ps) <= eps;
}

bool is_central(const WeakProjectiveRep& rep, const PhaseSystem& ps, double eps) {
  return central_deviation(rep, ps) <= eps;
}

WeakProjectiveRep apply_reraying(const WeakProjectiveRep& rep, const Reraying& r, double eps) {
  if (r.dim() != rep.dim()) {
    throw ShapeMismatch("reraying has " + std::to_string(r.dim()) + " phases for dimension " +
                        std::to_string(rep.dim()));
  }
  for (const auto& q : r.phases)
    if (!is_unit(q, eps)) throw NotUnit(q.norm());
  std::vector<QMatrix> out = rep.matrices();
  for (auto& m : out)
    for (std::size_t f = 0; f < rep.dim(); ++f)
      for (std::size_t g = 0; g < rep.dim(); ++g) m(f, g) = conj(r.phases[f]) * m(f, g) * r.phases[g];
  return WeakProjectiveRep(rep.group(), rep.dim(), std::move(out));
}

PhaseSystem rerayed_phases(const PhaseSystem& ps, const Reraying& r) {
  if (r.dim() != ps.dim()) throw ShapeMismatch("reraying dimension mismatch");
  PhaseSystem out = ps;
  for (Element b = 0; b < ps.order(); ++b)
    for (Element a = 0; a < ps.order(); ++a) {
      auto w = out.pair(b, a);
      for (std::size_t f = 0; f < w.size(); ++f) w[f] = conj(r.phases[f]) * w[f] * r.phases[f];
    }
  return out;
}

}  // namespace qpr
