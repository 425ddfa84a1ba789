#pragma once

// Per-item bodies shared by the OpenMP kernels (weakrep.cpp, commutant.cpp)
// and the serial reference (reference.cpp). Both paths call exactly these
// functions, so their results agree bit for bit.

#include <algorithm>
#include <cstddef>

#include <Eigen/Core>

#include "qpr/weakrep.hpp"

namespace qpr::kernels {

/// adjoint(U_ba) U_b U_a.
inline QMatrix pair_product(const WeakProjectiveRep& rep, Element b, Element a) {
  const Element ba = rep.group().mul(b, a);
  return mat_mul(mat_adjoint(rep.matrix(ba)), mat_mul(rep.matrix(b), rep.matrix(a)));
}

/// Stores the diagonal of `m` as omega(.; b, a); returns the off-diagonal norm.
inline double store_diagonal(const QMatrix& m, PhaseSystem& ps, Element b, Element a) {
  auto out = ps.pair(b, a);
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = m(f, f);
  return max_offdiag(m);
}

/// |U_b U_a - U_ba Omega(b,a)|.
inline double operator_form_residual(const WeakProjectiveRep& rep, const PhaseSystem& ps,
                                     Element b, Element a) {
  const Element ba = rep.group().mul(b, a);
  return max_abs_diff(mat_mul(rep.matrix(b), rep.matrix(a)),
                      mat_mul(rep.matrix(ba), build_omega(ps, b, a)));
}

struct TripleResidual {
  double associativity = 0.0;
  double spectral = 0.0;
};

/// Associativity identity for (a, b, c) as full matrices, plus the spectral
/// form with the product order conj(w(f;cb,a)) w(f;c,ba) w(f;b,a).
inline TripleResidual triple_residual(const WeakProjectiveRep& rep, const PhaseSystem& ps,
                                      Element a, Element b, Element c) {
  const auto& g = rep.group();
  const Element cb = g.mul(c, b);
  const Element ba = g.mul(b, a);
  const QMatrix& ua = rep.matrix(a);
  const QMatrix lhs = mat_mul(mat_adjoint(ua), mat_mul(build_omega(ps, c, b), ua));

  QMatrix inv_cb_a(rep.dim(), rep.dim());
  for (std::size_t f = 0; f < rep.dim(); ++f) inv_cb_a(f, f) = quat_inv(ps(f, cb, a));
  const QMatrix rhs = mat_mul(inv_cb_a, mat_mul(build_omega(ps, c, ba), build_omega(ps, b, a)));

  QMatrix spectral(rep.dim(), rep.dim());
  for (std::size_t f = 0; f < rep.dim(); ++f)
    spectral(f, f) = conj(ps(f, cb, a)) * ps(f, c, ba) * ps(f, b, a);

  return {max_abs_diff(lhs, rhs), max_abs_diff(lhs, spectral)};
}

/// |[Omega, U]| for diagonal Omega = diag(w): entry (f,g) is w_f U_fg - U_fg w_g.
inline double diagonal_commutator(std::span<const Quaternion> w, const QMatrix& u) {
  double m = 0.0;
  for (std::size_t f = 0; f < u.rows(); ++f)
    for (std::size_t g = 0; g < u.cols(); ++g)
      m = std::max(m, max_abs_diff(w[f] * u(f, g), u(f, g) * w[g]));
  return m;
}

inline double pair_multicentral(const WeakProjectiveRep& rep, const PhaseSystem& ps, Element b,
                                Element a) {
  const auto w = ps.pair(b, a);
  return std::max(diagonal_commutator(w, rep.matrix(a)), diagonal_commutator(w, rep.matrix(b)));
}

inline double pair_central(const WeakProjectiveRep& rep, const PhaseSystem& ps, Element b,
                           Element a) {
  const auto w = ps.pair(b, a);
  double m = 0.0;
  for (Element c = 0; c < rep.order(); ++c) m = std::max(m, diagonal_commutator(w, rep.matrix(c)));
  return m;
}

/// Real coordinates of T ordered as ((f * d + g) * 4 + component).
inline Eigen::Index commutant_coord(std::size_t d, std::size_t f, std::size_t g, int comp) {
  return static_cast<Eigen::Index>((f * d + g) * 4 + static_cast<std::size_t>(comp));
}

/// Column of the real matrix of T -> T U - U T for the basis element T with a
/// single unit component `comp` at entry (f, g).
inline void commutant_column(const QMatrix& u, std::size_t f, std::size_t g, int comp,
                             Eigen::Ref<Eigen::VectorXd> col) {
  const std::size_t d = u.rows();
  Quaternion e;
  (comp == 0 ? e.w : comp == 1 ? e.x : comp == 2 ? e.y : e.z) = 1.0;
  col.setZero();
  auto add = [&](std::size_t r, std::size_t c, const Quaternion& q, double sign) {
    col(commutant_coord(d, r, c, 0)) += sign * q.w;
    col(commutant_coord(d, r, c, 1)) += sign * q.x;
    col(commutant_coord(d, r, c, 2)) += sign * q.y;
    col(commutant_coord(d, r, c, 3)) += sign * q.z;
  };
  for (std::size_t h = 0; h < d; ++h) add(f, h, e * u(g, h), 1.0);
  for (std::size_t h = 0; h < d; ++h) add(h, g, u(h, f) * e, -1.0);
}

}  // namespace qpr::kernels
