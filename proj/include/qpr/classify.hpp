#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpr/weakrep.hpp"

namespace qpr {

// ---------------------------------------------------------------------------
// Irreducibility
// ---------------------------------------------------------------------------

/// Real-linear solution space of T U_a = U_a T over dim x dim quaternionic T.
struct Commutant {
  std::size_t dimension = 0;
  /// Orthonormal basis (Frobenius norm 1 in the 4 d^2 real coordinates).
  std::vector<QMatrix> basis;
};

Commutant commutant(const WeakProjectiveRep& rep);
std::size_t commutant_dimension(const WeakProjectiveRep& rep);

/// Commutant of real dimension 1, 2 or 4 whose self-adjoint part is only the
/// real multiples of I (so it holds no projection other than 0 and I).
bool is_irreducible(const WeakProjectiveRep& rep);
bool is_irreducible(const Commutant& c);

// ---------------------------------------------------------------------------
// Phase alignment
// ---------------------------------------------------------------------------

enum class CloudStatus {
  Reference,   ///< the basis index everything else is aligned to
  Aligned,     ///< Procrustes rotation found
  Degenerate,  ///< every imaginary part vanishes; q_f = 1
};

struct PhaseAlignment {
  Reraying reraying;
  std::vector<CloudStatus> status;
};

/// Reraying that tries to make omega(f;b,a) independent of f.
///
/// For each f the cloud of Im omega(f;.,.) is rotated onto the cloud of basis
/// index 0 by the best-fit rotation (SVD of the cross-covariance, with a sign
/// fix so det = +1). A rank-one cloud uses the smallest rotation between the
/// dominant directions. The result is a candidate only; callers re-extract.
PhaseAlignment align_phases(const WeakProjectiveRep& rep, const PhaseSystem& ps);

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class StructureCase { Case1, Case2, Case3, Unclassified };

std::string_view to_string(StructureCase c);
std::optional<StructureCase> parse_structure_case(std::string_view s);

/// U_a = sigma_a U_a^B with U^B real.
struct Case3Decomposition {
  std::vector<QMatrix> real_part;
  std::vector<Quaternion> phase_part;
  /// s(b,a) with U^B_b U^B_a = s(b,a) U^B_ba, row-major over (b, a).
  std::vector<int> signs;
};

struct ClassificationOutcome {
  StructureCase kind = StructureCase::Unclassified;
  Reraying witness;
  std::optional<Case3Decomposition> case3;
  /// Largest deviation found when re-verifying the witness.
  double residual = 0.0;
  std::size_t commutant_dimension = 0;
  bool irreducible = false;
  /// Why the outcome is Unclassified; empty otherwise.
  std::string reason;
};

struct ClassifyOptions {
  double eps = kDefaultEps;
  std::uint64_t seed = 0;
  /// Random restarts for the case-3 reraying search.
  std::size_t trials = 32;
};

/// Validates, extracts phases, aligns them and tests the three cases in order.
/// Case detection is attempted on reducible reps as well (some case-3
/// constructions split over the quaternions); `irreducible` says whether the
/// result is covered by the structure theorem.
ClassificationOutcome classify(const WeakProjectiveRep& rep, const ClassifyOptions& opts = {});

/// The case tests of classify, starting from a caller-supplied reraying in
/// place of align_phases. Leaves commutant_dimension and irreducible unset.
ClassificationOutcome classify_with_candidate(const WeakProjectiveRep& rep,
                                              const Reraying& candidate,
                                              const ClassifyOptions& opts = {});

// Case predicates on a representation already expressed in the witness basis.
// Each returns the largest deviation from the case's defining form.

/// Phases all +-1 and f-independent.
double case1_residual(const PhaseSystem& ps);
/// Phases f-independent; phases and matrix entries in span{1, i}.
double case2_residual(const WeakProjectiveRep& rep, const PhaseSystem& ps);
/// Factors sigma_a from the largest-modulus entry of each U_a and measures
/// realness of conj(sigma_a) U_a and the sign-projective law of the real parts.
/// `out` receives the decomposition.
double case3_residual(const WeakProjectiveRep& rep, Case3Decomposition* out = nullptr);

/// Applies the witness and re-runs the predicate for the claimed case.
double witness_residual(const WeakProjectiveRep& rep, const ClassificationOutcome& outcome);

// ---------------------------------------------------------------------------
// Multicentral vs central
// ---------------------------------------------------------------------------

struct CorollaryReport {
  bool multicentral = false;
  bool central = false;
  bool violation = false;
  double multicentral_deviation = 0.0;
  double central_deviation = 0.0;
};

CorollaryReport check_corollary(const WeakProjectiveRep& rep, double eps = kDefaultEps);
CorollaryReport check_corollary(const WeakProjectiveRep& rep, const PhaseSystem& ps,
                                double eps = kDefaultEps);

}  // namespace qpr
