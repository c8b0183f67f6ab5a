#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "knotsig/seifert.hpp"

// Independent floating-point signature oracle: assemble W(omega(s)) in
// complex doubles and count eigenvalue signs with Eigen. Returns nullopt when
// any eigenvalue magnitude is at or below `tol` (untrusted region).
inline std::optional<int> float_signature(const knotsig::SeifertMatrix& v,
                                          const knotsig::CircleSample& s, double tol) {
  int n = v.size();
  if (n == 0) return 0;
  double re = s.re().get_d(), im = s.im().get_d();
  std::complex<double> one_minus_w(1.0 - re, -im);
  std::complex<double> one_minus_wbar(1.0 - re, im);
  Eigen::MatrixXcd w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w(i, j) = one_minus_w * v.at(i, j).get_d() + one_minus_wbar * v.at(j, i).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(w, Eigen::EigenvaluesOnly);
  int sig = 0;
  for (int i = 0; i < n; ++i) {
    double lam = es.eigenvalues()[i];
    if (std::abs(lam) <= tol) return std::nullopt;
    sig += lam > 0 ? 1 : -1;
  }
  return sig;
}
