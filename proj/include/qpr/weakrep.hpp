#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpr/group.hpp"
#include "qpr/qmatrix.hpp"
#include "qpr/quaternion.hpp"

namespace qpr {

/// Assignment a -> U_a of dim x dim quaternionic matrices over a finite group,
/// expressed in a fixed basis {|f>}.
///
/// The constructor checks shapes only, so perturbed or broken inputs can still
/// be measured by check_identities. Use make_weak_rep (or validate_rep) for
/// the full invariants: unitarity, U_e = I, and the weak projective condition.
class WeakProjectiveRep {
 public:
  WeakProjectiveRep(FiniteGroup group, std::size_t dim, std::vector<QMatrix> matrices);

  const FiniteGroup& group() const { return group_; }
  std::size_t order() const { return group_.order(); }
  std::size_t dim() const { return dim_; }
  const QMatrix& matrix(Element a) const { return matrices_.at(a); }
  const std::vector<QMatrix>& matrices() const { return matrices_; }

 private:
  FiniteGroup group_;
  std::size_t dim_;
  std::vector<QMatrix> matrices_;
};

/// Phase table omega(f; b, a), stored exhaustively.
class PhaseSystem {
 public:
  PhaseSystem(std::size_t order, std::size_t dim)
      : order_(order), dim_(dim), table_(order * order * dim) {}

  std::size_t order() const { return order_; }
  std::size_t dim() const { return dim_; }

  Quaternion& operator()(std::size_t f, Element b, Element a) {
    return table_[(b * order_ + a) * dim_ + f];
  }
  const Quaternion& operator()(std::size_t f, Element b, Element a) const {
    return table_[(b * order_ + a) * dim_ + f];
  }
  /// omega(.; b, a) over all basis indices.
  std::span<const Quaternion> pair(Element b, Element a) const {
    return {table_.data() + (b * order_ + a) * dim_, dim_};
  }
  std::span<Quaternion> pair(Element b, Element a) {
    return {table_.data() + (b * order_ + a) * dim_, dim_};
  }
  std::span<const Quaternion> data() const { return table_; }

  friend bool operator==(const PhaseSystem&, const PhaseSystem&) = default;

 private:
  std::size_t order_;
  std::size_t dim_;
  std::vector<Quaternion> table_;
};

/// One unit quaternion per basis index; the new basis is |f> q_f.
struct Reraying {
  std::vector<Quaternion> phases;

  static Reraying identity(std::size_t dim) { return {std::vector<Quaternion>(dim, 1.0)}; }
  /// Same quaternion on every basis vector.
  static Reraying global(std::size_t dim, const Quaternion& q) {
    return {std::vector<Quaternion>(dim, q)};
  }
  std::size_t dim() const { return phases.size(); }
};

/// Reraying equivalent to applying `first` and then `second`.
Reraying compose(const Reraying& first, const Reraying& second);

/// Maximum deviations of the operator identities, taken over all pairs or
/// triples of group elements.
struct IdentityReport {
  /// max |U_b U_a - U_ba Omega(b,a)|
  double operator_form = 0.0;
  /// max |U_a^-1 Omega(c,b) U_a - Omega(cb,a)^-1 Omega(c,ba) Omega(b,a)|
  double associativity = 0.0;
  /// max |U_a^-1 Omega(c,b) U_a - diag(conj w(f;cb,a) w(f;c,ba) w(f;b,a))|
  double spectral = 0.0;

  double max() const;
  bool ok(double eps = kDefaultEps) const { return max() <= eps; }
};

/// Throws NotUnitary or IdentityNotNormalized.
void validate_rep(const WeakProjectiveRep& rep, double eps = kDefaultEps);

/// Builds and fully validates a representation, including phase extraction.
WeakProjectiveRep make_weak_rep(FiniteGroup group, std::size_t dim, std::vector<QMatrix> matrices,
                                double eps = kDefaultEps);

/// Diagonal of adjoint(U_ba) U_b U_a for every pair, with no checks.
PhaseSystem measured_phases(const WeakProjectiveRep& rep);

/// Largest off-diagonal modulus of adjoint(U_ba) U_b U_a over all pairs.
double weak_projective_deviation(const WeakProjectiveRep& rep);

/// Phases omega(f; b, a) read off adjoint(U_ba) U_b U_a.
///
/// Throws NotWeakProjective for the first pair (in index order) whose product
/// has an off-diagonal entry above eps, and NonUnitPhase for a diagonal entry
/// whose modulus is off by more than eps.
PhaseSystem extract_phases(const WeakProjectiveRep& rep, double eps = kDefaultEps);

/// Omega(b,a) = sum_f |f> omega(f;b,a) <f|.
QMatrix build_omega(const PhaseSystem& ps, Element b, Element a);

IdentityReport check_identities(const WeakProjectiveRep& rep);
IdentityReport check_identities(const WeakProjectiveRep& rep, const PhaseSystem& ps);

/// max |omega(f;b,a) - omega(0;b,a)| over all entries.
double basis_dependence(const PhaseSystem& ps);

/// omega(f;b,a) independent of f.
bool is_strong_quaternionic(const PhaseSystem& ps, double eps = kDefaultEps);
/// Strong quaternionic with every phase in span{1, i}.
bool is_strong_complex(const PhaseSystem& ps, double eps = kDefaultEps);

/// max |[Omega(b,a), U_a]|, |[Omega(b,a), U_b]| over all pairs.
double multicentral_deviation(const WeakProjectiveRep& rep, const PhaseSystem& ps);
/// max |[Omega(b,a), U_c]| over all triples.
double central_deviation(const WeakProjectiveRep& rep, const PhaseSystem& ps);

bool is_multicentral(const WeakProjectiveRep& rep, const PhaseSystem& ps,
                     double eps = kDefaultEps);
bool is_central(const WeakProjectiveRep& rep, const PhaseSystem& ps, double eps = kDefaultEps);

/// Matrices in the basis |f> q_f: entry (f,g) becomes conj(q_f) U_fg q_g.
/// Throws NotUnit for a non-unit q_f, ShapeMismatch on a dimension mismatch.
WeakProjectiveRep apply_reraying(const WeakProjectiveRep& rep, const Reraying& r,
                                 double eps = kDefaultEps);

/// Phase table expected after a reraying: conj(q_f) omega(f;b,a) q_f.
PhaseSystem rerayed_phases(const PhaseSystem& ps, const Reraying& r);

}  // namespace qpr
