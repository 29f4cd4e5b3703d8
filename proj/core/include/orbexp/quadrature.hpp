#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "orbexp/types.hpp"

namespace orbexp {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_refinements = 14;
    int gauss_laguerre_nodes = 200;
    double decay_hint = 1.0;  // dominant exponential decay rate of the integrand
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gauss-Legendre rule on [-1, 1]; cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int n);

/// Gauss-Laguerre rule against weight e^-x on [0, inf); weights are returned
/// as "total" weights w_i e^{x_i} (log-assembled, safe for large n); cached.
const std::vector<std::pair<double, double>>& gauss_laguerre_total(int n);

/// Adaptive 15-point Gauss-Kronrod on [a, b].
double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   const QuadratureSpec& spec = {});
std::complex<double> adaptive_gk_complex(const std::function<std::complex<double>(double)>& f,
                                         double a, double b, const QuadratureSpec& spec = {});

/// Int_0^inf f(r) r^{weight_exponent + 2} dr (the +2 is the volume element).
/// Gauss-Laguerre at the decay hint first, adaptive fallback when the two
/// node counts disagree. Throws QuadratureError on nonconvergence.
double radial_quadrature(const std::function<double(double)>& f, int weight_exponent,
                         const QuadratureSpec& spec = {});

/// Surface integral over the unit sphere, exact for spherical-harmonic
/// content up to the requested degree (Gauss-Legendre x trapezoid product).
std::complex<double> sphere_quadrature(
    const std::function<std::complex<double>(double, double)>& g, int degree);

/// Int F(u) G(u - shift) d^3u for exponentially decaying F, G, via bipolar
/// coordinates around the two centers (trapezoid in the common azimuth,
/// nested adaptive panels in the two radii).
std::complex<double> two_center_integral(const std::function<std::complex<double>(const Vec3&)>& F,
                                         const std::function<std::complex<double>(const Vec3&)>& G,
                                         const Vec3& shift, const QuadratureSpec& spec = {},
                                         int n_phi = 16, int sphere_degree = 24);

/// Int f(r_sample - rp) g(rp) d^3rp.
std::complex<double> convolution_3d(const std::function<std::complex<double>(const Vec3&)>& f,
                                    const std::function<std::complex<double>(const Vec3&)>& g,
                                    const Vec3& r_sample, const QuadratureSpec& spec = {},
                                    int n_phi = 16);

/// sqrt(2/pi) Int_0^inf f(r) j_ell(p r) r^2 dr with subdivision at the
/// spherical Bessel zeros and epsilon acceleration of the interval sums.
double spherical_bessel_transform(const std::function<double(double)>& f_radial, int ell, double p,
                                  const QuadratureSpec& spec = {});

}  // namespace orbexp
