#pragma once

#include <Eigen/Dense>
#include <complex>

#include "orbexp/quadrature.hpp"
#include "orbexp/types.hpp"

namespace orbexp {

/// Validate (n, ell, m) against the family's index conventions.
void validate_index(const BasisSpec& spec, const QuantumIndex& q);

/// Radial factor f_{n ell}(r) such that the full function is
/// f_{n ell}(r) Y_ell^m(theta, phi), with every normalization and argument
/// scaling folded in (so the Lambda-type families carry their (2 beta r)^ell).
double eval_radial(const BasisSpec& spec, const QuantumIndex& q, double r);

/// Full basis function at a point.
std::complex<double> eval(const BasisSpec& spec, const QuantumIndex& q, const Vec3& r);

/// Weighted radial Gram matrix over n, n' = ell+1 .. n_max at fixed (ell, m),
/// computed by quadrature.
Eigen::MatrixXd gram_matrix(const BasisSpec& spec, const WeightSpec& weight, int n_max, int ell,
                            int m, const QuadratureSpec& qspec = {});

/// Sobolev-form Gram matrix of the Sturmians, reduced analytically through
/// their differential equation: (beta^2 - lap)/(2 beta^2) Psi_n = (n/(beta r)) Psi_n.
Eigen::MatrixXd sobolev_gram_sturmian(double beta, int n_max, int ell,
                                      const QuadratureSpec& qspec = {});

}  // namespace orbexp
