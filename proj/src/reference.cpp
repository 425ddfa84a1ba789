#include "qpr/reference.hpp"

#include <algorithm>

#include "kernels.hpp"

namespace qpr::reference {

PhaseSystem measured_phases(const WeakProjectiveRep& rep) {
  PhaseSystem ps(rep.order(), rep.dim());
  for (Element b = 0; b < rep.order(); ++b)
    for (Element a = 0; a < rep.order(); ++a)
      kernels::store_diagonal(kernels::pair_product(rep, b, a), ps, b, a);
  return ps;
}

double weak_projective_deviation(const WeakProjectiveRep& rep) {
  PhaseSystem ps(rep.order(), rep.dim());
  double m = 0.0;
  for (Element b = 0; b < rep.order(); ++b)
    for (Element a = 0; a < rep.order(); ++a)
      m = std::max(m, kernels::store_diagonal(kernels::pair_product(rep, b, a), ps, b, a));
  return m;
}

IdentityReport check_identities(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  IdentityReport out;
  const std::size_t n = rep.order();
  for (Element b = 0; b < n; ++b)
    for (Element a = 0; a < n; ++a)
      out.operator_form =
          std::max(out.operator_form, kernels::operator_form_residual(rep, ps, b, a));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const auto r = kernels::triple_residual(rep, ps, a, b, c);
        out.associativity = std::max(out.associativity, r.associativity);
        out.spectral = std::max(out.spectral, r.spectral);
      }
  return out;
}

double multicentral_deviation(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  double m = 0.0;
  for (Element b = 0; b < rep.order(); ++b)
    for (Element a = 0; a < rep.order(); ++a)
      m = std::max(m, kernels::pair_multicentral(rep, ps, b, a));
  return m;
}

double central_deviation(const WeakProjectiveRep& rep, const PhaseSystem& ps) {
  double m = 0.0;
  for (Element b = 0; b < rep.order(); ++b)
    for (Element a = 0; a < rep.order(); ++a) m = std::max(m, kernels::pair_central(rep, ps, b, a));
  return m;
}

Eigen::MatrixXd commutant_gram(const WeakProjectiveRep& rep) {
  const std::size_t d = rep.dim();
  const auto m = static_cast<Eigen::Index>(4 * d * d);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd block(m, m);
  for (Element a = 0; a < rep.order(); ++a) {
    for (Eigen::Index col = 0; col < m; ++col) {
      const auto c = static_cast<std::size_t>(col);
      kernels::commutant_column(rep.matrix(a), c / (4 * d), (c / 4) % d, static_cast<int>(c % 4),
                                block.col(col));
    }
    gram.noalias() += block.transpose() * block;
  }
  return gram;
}

}  // namespace qpr::reference
