#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include <Eigen/Core>

#include "qpr/weakrep.hpp"

namespace qpr {

/// Residual vector evaluated on a rerayed representation; zero means the
/// reraying satisfies whatever property the objective encodes.
using RerayingObjective = std::function<Eigen::VectorXd(const WeakProjectiveRep&)>;

struct RefineOptions {
  int max_iterations = 100;
  /// Stop once max |residual| falls below this.
  double target = 1e-14;
  double fd_step = 1e-7;
};

struct RefineResult {
  Reraying reraying;
  double max_residual = 0.0;
  int iterations = 0;
};

/// Levenberg-Marquardt over rerayings, moving each q_f by q_f exp(delta_f)
/// with a forward-difference Jacobian.
RefineResult refine_reraying(const WeakProjectiveRep& rep, const RerayingObjective& objective,
                             Reraying start, const RefineOptions& options = {});

/// Uniform unit quaternion: four independent standard normals, normalized.
Quaternion random_unit_quaternion(std::mt19937_64& rng);
Reraying random_reraying(std::size_t dim, std::mt19937_64& rng);

/// exp of the pure imaginary quaternion with vector part v.
Quaternion exp_imaginary(const Eigen::Vector3d& v);

// Objectives shared by the classifier and the corpus oracle.

/// omega(f;b,a) - omega(0;b,a) for every f >= 1 and pair.
Eigen::VectorXd phase_independence_residuals(const WeakProjectiveRep& rep);
/// j and k components of every matrix entry and every phase.
Eigen::VectorXd complex_residuals(const WeakProjectiveRep& rep);

}  // namespace qpr
