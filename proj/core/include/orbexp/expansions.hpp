#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orbexp/quadrature.hpp"
#include "orbexp/transforms.hpp"
#include "orbexp/types.hpp"

namespace orbexp {

/// Parameters of the radial Laguerre-series engines: expand x^mu e^{u x} over
/// L_n^(alpha)(x) up to n_max.
struct RadialSeriesSpec {
    double mu = 0.0;
    double u = 0.0;       // exponential rate, must stay below 1/2
    double alpha = 0.0;   // Laguerre superscript, > -1
    int n_max = 20;
};

enum class Verdict { converging, diverging, stagnant };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::converging: return "converging";
        case Verdict::diverging: return "diverging";
        case Verdict::stagnant: return "stagnant";
    }
    return "?";
}

struct ConvergenceReport {
    std::vector<int> orders;
    std::vector<double> partial_sums;
    std::vector<double> terms;
    std::vector<double> norm_errors;   // empty or same length as orders
    std::vector<double> accelerated;   // empty or same length as orders
    std::string accel_method;
    int accel_order = 0;
    Verdict verdict = Verdict::stagnant;
    std::string verdict_basis;  // "heuristic(ratio)" or "analytic"
    std::map<std::string, double> params;
};

/// Verdict from the data alone: ratio test over the trailing window plus a
/// monotone-growth check. Labeled heuristic wherever it is reported.
Verdict heuristic_verdict(const std::vector<double>& partial_sums, int window = 10);

/// Coefficients c_0..c_n_max of x^mu over L_n^(alpha)(x), u = 0:
/// c_n = Gamma(mu+alpha+1)/Gamma(alpha+1) (-mu)_n / (alpha+1)_n.
/// Terminates at n = mu for integral mu >= 0. Requires mu + alpha > -1.
std::vector<double> power_laguerre_coeffs(const RadialSeriesSpec& spec);

/// Coefficients of x^mu e^{u x} over L_n^(alpha)(x) for u < 1/2, via the
/// terminating 2F1(-n, alpha+mu+1; alpha+1; 1/(1-u)) with compensated summation.
std::vector<double> expo_power_laguerre_coeffs(const RadialSeriesSpec& spec);

/// Closed-form expansion coefficient of e^{-x beta r} Y_0^0 over the
/// r^k-orthonormal family: order n, s-channel only (ell > 0 vanishes).
double guseinov_exp_coeff(int k, double x, double beta, int n);

struct ParsevalResult {
    double lhs = 0.0;   // squared weighted norm of f
    double rhs = 0.0;   // sum of squared coefficients
    double gap = 0.0;
    bool lhs_converged = true;
};

/// Check sum |c|^2 against the quadrature norm of an (ell0, m0)-channel
/// radial function f(r) Y_{ell0}^{m0}.
ParsevalResult parseval_check(const std::map<QuantumIndex, double>& coeffs,
                              const std::function<double(double)>& f_radial, int weight_exponent,
                              const QuadratureSpec& qspec = {});

/// Partial sums of the mu = -1 Laguerre series of 1/x at the point x: the
/// pointwise/mean convergence split probe. norm_errors carry the weighted-L2
/// truncation error estimated on a fixed Gauss-Laguerre rule.
ConvergenceReport inverse_power_divergence_probe(double x, int n_max, double alpha = 1.0);

/// Partial sums of 1F0(k - mu; 1) = sum_m binom(mu-k, m) (-1)^m, the inner
/// series left behind by rearranging the x^mu Laguerre expansion into powers.
/// Verdict is the analytic three-case classification; the sums corroborate it.
ConvergenceReport rearrangement_probe(double mu, int k, int n_max);

}  // namespace orbexp
