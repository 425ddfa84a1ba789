#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpr/classify.hpp"
#include "qpr/refine.hpp"
#include "qpr/weakrep.hpp"

namespace qpr {

/// A reference representation together with the properties it is known to
/// have.
struct CorpusEntry {
  std::string name;
  WeakProjectiveRep rep;
  StructureCase expected_case;
  bool strong_complex;
  bool strong_quaternionic;
  bool multicentral;
  bool central;
  bool irreducible;
  std::string provenance;
};

/// U_a = I for every element.
WeakProjectiveRep make_trivial_rep(const FiniteGroup& group, std::size_t dim = 1);

/// Z2 x Z2 in dimension 2 with U_(x,y) = X^x Z^y, X = [[0,1],[1,0]],
/// Z = diag(1,-1). Phases are (-1)^(y_b x_a).
WeakProjectiveRep make_real_sign_rep();

/// Zn x Zn in dimension n with U_(x,y) = S^x C^y, S the cyclic shift
/// |g> -> |g+1> and C = diag(1, z, ..., z^(n-1)), z = exp(2 pi i/n).
/// Throws InvalidOrder for n < 3.
WeakProjectiveRep make_clock_shift(std::size_t n);

/// Real sign rep with every U_a multiplied on the left by sigma[a]. `sigma`
/// is indexed like cyclic_product_group(2, 2). Throws NotUnit, or
/// IdentityPhase when sigma at the identity is not 1.
WeakProjectiveRep make_case3(std::span<const Quaternion> sigma, double eps = kDefaultEps);

/// 1 x 1 representation U_a = u[a]; always weak projective.
WeakProjectiveRep make_one_dim(const FiniteGroup& group, std::span<const Quaternion> u);

/// Block-diagonal sum of two representations of the same group.
WeakProjectiveRep make_direct_sum(const WeakProjectiveRep& lhs, const WeakProjectiveRep& rhs);

/// Q8 acting on H by left multiplication.
WeakProjectiveRep make_quaternion_group_rep();

/// Every reference entry, in a fixed order.
std::vector<CorpusEntry> corpus();

struct OracleHit {
  Reraying reraying;
  std::size_t trial = 0;
  double residual = 0.0;
};

/// Randomized search for a reraying whose objective residuals all fall
/// within tol. Trial 0 tests the identity; every later trial draws uniform
/// unit quaternions per basis index and refines them by Levenberg-Marquardt.
/// Returns nothing once `trials` random draws are exhausted.
std::optional<OracleHit> oracle_reraying_search(const WeakProjectiveRep& rep,
                                                const RerayingObjective& objective,
                                                std::size_t trials, std::uint64_t seed,
                                                double tol = kDefaultEps);

}  // namespace qpr
