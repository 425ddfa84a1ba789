#include "qpr/refine.hpp"

#include <cmath>

#include <Eigen/Cholesky>

namespace qpr {

Quaternion exp_imaginary(const Eigen::Vector3d& v) {
  const double theta = v.norm();
  if (theta < 1e-300) return 1.0;
  return Quaternion::from_axis_angle(v / theta, theta);
}

Quaternion random_unit_quaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Quaternion q{normal(rng), normal(rng), normal(rng), normal(rng)};
    if (q.norm2() > 1e-12) return normalized(q);
  }
}

Reraying random_reraying(std::size_t dim, std::mt19937_64& rng) {
  Reraying r;
  r.phases.reserve(dim);
  for (std::size_t f = 0; f < dim; ++f) r.phases.push_back(random_unit_quaternion(rng));
  return r;
}

namespace {

Reraying step(const Reraying& base, const Eigen::VectorXd& delta) {
  Reraying out = base;
  for (std::size_t f = 0; f < out.dim(); ++f) {
    const Eigen::Vector3d v = delta.segment<3>(static_cast<Eigen::Index>(3 * f));
    out.phases[f] = normalized(out.phases[f] * exp_imaginary(v));
  }
  return out;
}

Eigen::VectorXd evaluate(const WeakProjectiveRep& rep, const RerayingObjective& objective,
                         const Reraying& r) {
  return objective(apply_reraying(rep, r, 1e-6));
}

}  // namespace

RefineResult refine_reraying(const WeakProjectiveRep& rep, const RerayingObjective& objective,
                             Reraying start, const RefineOptions& options) {
  const auto nparams = static_cast<Eigen::Index>(3 * rep.dim());
  Reraying current = std::move(start);
  Eigen::VectorXd r = evaluate(rep, objective, current);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (r.size() == 0 || r.cwiseAbs().maxCoeff() <= options.target) break;
    Eigen::MatrixXd jac(r.size(), nparams);
    for (Eigen::Index p = 0; p < nparams; ++p) {
      Eigen::VectorXd delta = Eigen::VectorXd::Zero(nparams);
      delta(p) = options.fd_step;
      jac.col(p) = (evaluate(rep, objective, step(current, delta)) - r) / options.fd_step;
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * r;
    bool improved = false;
    for (int attempt = 0; attempt < 12 && !improved; ++attempt) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
      const Eigen::VectorXd delta = damped.ldlt().solve(-jtr);
      Reraying trial = step(current, delta);
      Eigen::VectorXd rt = evaluate(rep, objective, trial);
      const double trial_cost = rt.squaredNorm();
      if (trial_cost < cost) {
        current = std::move(trial);
        r = std::move(rt);
        cost = trial_cost;
        lambda = std::max(lambda * 0.1, 1e-12);
        improved = true;
      } else {
        lambda *= 10.0;
      }
    }
    if (!improved) break;
  }
  return {std::move(current), r.size() ? r.cwiseAbs().maxCoeff() : 0.0, it};
}

Eigen::VectorXd phase_independence_residuals(const WeakProjectiveRep& rep) {
  const PhaseSystem ps = measured_phases(rep);
  const std::size_t n = rep.order(), d = rep.dim();
  Eigen::VectorXd out(static_cast<Eigen::Index>(n * n * (d - 1) * 4));
  Eigen::Index k = 0;
  for (Element b = 0; b < n; ++b)
    for (Element a = 0; a < n; ++a)
      for (std::size_t f = 1; f < d; ++f) {
        const Quaternion diff = ps(f, b, a) - ps(0, b, a);
        out(k++) = diff.w;
        out(k++) = diff.x;
        out(k++) = diff.y;
        out(k++) = diff.z;
      }
  return out;
}

Eigen::VectorXd complex_residuals(const WeakProjectiveRep& rep) {
  const PhaseSystem ps = measured_phases(rep);
  const std::size_t d = rep.dim();
  Eigen::VectorXd out(static_cast<Eigen::Index>(2 * (rep.order() * d * d + ps.data().size())));
  Eigen::Index k = 0;
  for (const auto& m : rep.matrices())
    for (const auto& e : m.data()) {
      out(k++) = e.y;
      out(k++) = e.z;
    }
  for (const auto& w : ps.data()) {
    out(k++) = w.y;
    out(k++) = w.z;
  }
  return out;
}

}  // namespace qpr
