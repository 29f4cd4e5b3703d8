#include "orbexp/basis.hpp"

#include "orbexp/mathutil.hpp"
#include "orbexp/special.hpp"

namespace orbexp {

void validate_index(const BasisSpec& spec, const QuantumIndex& q) {
    if (std::abs(q.m) > q.ell) throw std::invalid_argument("QuantumIndex: |m| > ell");
    switch (spec.family) {
        case Family::STF:
            if (q.ell < 0) throw std::invalid_argument("QuantumIndex: ell < 0");
            break;
        case Family::BFun:
            if (q.n + q.ell < 0)
                throw std::domain_error(
                    "eval: B function with n + ell < 0 is distributional, no pointwise value");
            break;
        default:
            if (q.n < 1 || q.ell > q.n - 1)
                throw std::invalid_argument("QuantumIndex: require 0 <= ell <= n-1");
    }
}

double eval_radial(const BasisSpec& spec, const QuantumIndex& q, double r) {
    validate_index(spec, q);
    if (r < 0.0) throw std::domain_error("eval_radial: r < 0");
    const double b = spec.beta;
    switch (spec.family) {
        case Family::STF: {
            const double N = spec.stf_N;
            if (r == 0.0 && N - q.ell - 1.0 < 0.0)
                throw std::domain_error("eval_radial: STF singular at the origin");
            // (beta r)^{N-L-1} e^{-beta r} (beta r)^L
            return std::pow(b * r, N - 1.0) * std::exp(-b * r);
        }
        case Family::Lambda: {
            double nrm = std::pow(2.0 * b, 1.5) *
                         (lfactorial(double(q.n - q.ell - 1)) / lfactorial(double(q.n + q.ell + 1)))
                             .sqrt()
                             .value();
            return nrm * std::exp(-b * r) * laguerre(q.n - q.ell - 1, 2.0 * q.ell + 2.0, 2.0 * b * r) *
                   std::pow(2.0 * b * r, double(q.ell));
        }
        case Family::Sturmian: {
            // bracket exponent 1/2 (the printed 3/2 fails the 1/r orthogonality)
            double nrm = std::pow(2.0 * b, 1.5) *
                         std::sqrt(std::exp(std::lgamma(q.n - q.ell) - std::lgamma(q.n + q.ell + 1.0)) /
                                   (2.0 * q.n));
            return nrm * std::exp(-b * r) * laguerre(q.n - q.ell - 1, 2.0 * q.ell + 1.0, 2.0 * b * r) *
                   std::pow(2.0 * b * r, double(q.ell));
        }
        case Family::Guseinov: {
            const int k = spec.guseinov_k;
            double nrm = std::sqrt(std::pow(2.0 * b, k + 3.0) *
                                   std::exp(std::lgamma(q.n - q.ell) -
                                            std::lgamma(q.n + q.ell + k + 2.0)));
            return nrm * std::exp(-b * r) *
                   laguerre(q.n - q.ell - 1, 2.0 * q.ell + k + 2.0, 2.0 * b * r) *
                   std::pow(2.0 * b * r, double(q.ell));
        }
        case Family::BFun: {
            if (r == 0.0 && q.n <= 0)
                throw std::domain_error("eval_radial: B function singular at the origin for n <= 0");
            double nrm = 1.0 / (std::pow(2.0, q.n + q.ell) * factorial(q.n + q.ell));
            if (r == 0.0)
                return q.ell > 0 ? 0.0
                                 : nrm * reduced_bessel(HalfOrder{2 * q.n - 1}, 1e-300);  // n >= 1
            return nrm * reduced_bessel(HalfOrder{2 * q.n - 1}, b * r) *
                   std::pow(b * r, double(q.ell));
        }
        case Family::Oscillator: {
            double nrm = std::pow(b, 1.5) *
                         std::sqrt(2.0 * std::exp(std::lgamma(q.n - q.ell) -
                                                  std::lgamma(q.n + 0.5)));
            return nrm * std::exp(-0.5 * b * b * r * r) *
                   laguerre(q.n - q.ell - 1, q.ell + 0.5, b * b * r * r) *
                   std::pow(b * r, double(q.ell));
        }
    }
    throw std::logic_error("eval_radial: unknown family");
}

std::complex<double> eval(const BasisSpec& spec, const QuantumIndex& q, const Vec3& rv) {
    const double r = norm(rv);
    if (r == 0.0) {
        // angle-free limit: nonzero only for ell = 0
        double rad = eval_radial(spec, q, 0.0);
        if (q.ell == 0) return rad / std::sqrt(4.0 * M_PI);
        return {0.0, 0.0};
    }
    return eval_radial(spec, q, r) * spherical_harmonic(AngularIndex(q.ell, q.m), rv);
}

Eigen::MatrixXd gram_matrix(const BasisSpec& spec, const WeightSpec& weight, int n_max, int ell,
                            int m, const QuadratureSpec& qspec) {
    if (weight.sobolev) {
        if (spec.family != Family::Sturmian)
            throw std::invalid_argument("gram_matrix: Sobolev weight implemented for Sturmians");
        return sobolev_gram_sturmian(spec.beta, n_max, ell, qspec);
    }
    const int dim = n_max - ell;
    if (dim <= 0) throw std::invalid_argument("gram_matrix: n_max < ell + 1");
    Eigen::MatrixXd g(dim, dim);
    QuadratureSpec qs = qspec;
    qs.decay_hint = 2.0 * spec.beta;
    if (spec.family == Family::Oscillator) qs.decay_hint = spec.beta;
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            QuantumIndex qi{ell + 1 + i, ell, m}, qj{ell + 1 + j, ell, m};
            auto f = [&](double r) {
                return eval_radial(spec, qi, r) * eval_radial(spec, qj, r);
            };
            g(i, j) = g(j, i) = radial_quadrature(f, weight.exponent, qs);
        }
    }
    return g;
}

Eigen::MatrixXd sobolev_gram_sturmian(double beta, int n_max, int ell,
                                      const QuadratureSpec& qspec) {
    BasisSpec spec = BasisSpec::sturmian(beta);
    Eigen::MatrixXd inv_r = gram_matrix(spec, WeightSpec::r_power(-1), n_max, ell, 0, qspec);
    // column scaling n'/beta from the differential-equation reduction
    for (int j = 0; j < inv_r.cols(); ++j) inv_r.col(j) *= double(ell + 1 + j) / beta;
    return inv_r;
}

}  // namespace orbexp
