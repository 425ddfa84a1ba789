#pragma once

// Single-threaded versions of the OpenMP kernels. They run the same per-item
// code in plain index order and exist so tests and benchmarks can compare the
// parallel path against them.

#include <Eigen/Core>

#include "qpr/weakrep.hpp"

namespace qpr {

namespace detail {
/// Gram matrix sum_a L_a^T L_a of the commutant equations (OpenMP fill).
Eigen::MatrixXd commutant_gram(const WeakProjectiveRep& rep);
}  // namespace detail

namespace reference {

PhaseSystem measured_phases(const WeakProjectiveRep& rep);
double weak_projective_deviation(const WeakProjectiveRep& rep);
IdentityReport check_identities(const WeakProjectiveRep& rep, const PhaseSystem& ps);
double multicentral_deviation(const WeakProjectiveRep& rep, const PhaseSystem& ps);
double central_deviation(const WeakProjectiveRep& rep, const PhaseSystem& ps);
Eigen::MatrixXd commutant_gram(const WeakProjectiveRep& rep);

}  // namespace reference
}  // namespace qpr
