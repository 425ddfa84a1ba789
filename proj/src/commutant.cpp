#include <cmath>

#include <Eigen/Eigenvalues>

#include "kernels.hpp"
#include "qpr/classify.hpp"
#include "qpr/reference.hpp"

namespace qpr {

namespace detail {

Eigen::MatrixXd commutant_gram(const WeakProjectiveRep& rep) {
  const std::size_t d = rep.dim();
  const auto m = static_cast<Eigen::Index>(4 * d * d);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd block(m, m);
  // Elements are folded in index order; only the column fill is parallel.
  for (Element a = 0; a < rep.order(); ++a) {
    const QMatrix& u = rep.matrix(a);
#pragma omp parallel for schedule(static)
    for (Eigen::Index col = 0; col < m; ++col) {
      const auto c = static_cast<std::size_t>(col);
      kernels::commutant_column(u, c / (4 * d), (c / 4) % d, static_cast<int>(c % 4),
                                block.col(col));
    }
    gram.noalias() += block.transpose() * block;
  }
  return gram;
}

}  // namespace detail

namespace {

constexpr double kNullRelTol = 1e-9;
constexpr double kScalarTol = 1e-7;

Commutant null_space(const Eigen::MatrixXd& gram, std::size_t d) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  Commutant out;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) > kNullRelTol * scale) break;
    const Eigen::VectorXd v = es.eigenvectors().col(k);
    QMatrix t(d, d);
    for (std::size_t f = 0; f < d; ++f)
      for (std::size_t g = 0; g < d; ++g) {
        const auto base = kernels::commutant_coord(d, f, g, 0);
        t(f, g) = {v(base), v(base + 1), v(base + 2), v(base + 3)};
      }
    out.basis.push_back(std::move(t));
  }
  out.dimension = out.basis.size();
  return out;
}

}  // namespace

Commutant commutant(const WeakProjectiveRep& rep) {
  return null_space(detail::commutant_gram(rep), rep.dim());
}

std::size_t commutant_dimension(const WeakProjectiveRep& rep) { return commutant(rep).dimension; }

bool is_irreducible(const Commutant& c) {
  if (c.dimension != 1 && c.dimension != 2 && c.dimension != 4) return false;
  for (const auto& t : c.basis) {
    const QMatrix h = t + mat_adjoint(t);
    const std::size_t d = h.rows();
    double tr = 0.0;
    for (std::size_t f = 0; f < d; ++f) tr += h(f, f).w;
    const QMatrix scalar = scale_left(tr / static_cast<double>(d), QMatrix::identity(d));
    if (max_abs_diff(h, scalar) > kScalarTol) return false;
  }
  return true;
}

bool is_irreducible(const WeakProjectiveRep& rep) { return is_irreducible(commutant(rep)); }

}  // namespace qpr
