#pragma once

#include <string>
#include <vector>

namespace orbexp {

/// Ordered partial sums s_n, optionally with the terms a_n (s_n = sum_{i<=n} a_i).
struct PartialSumSequence {
    std::vector<double> s;
    std::vector<double> terms;

    static PartialSumSequence from_terms(const std::vector<double>& a) {
        PartialSumSequence p;
        p.terms = a;
        double acc = 0.0;
        for (double t : a) p.s.push_back(acc += t);
        return p;
    }
    static PartialSumSequence from_sums(const std::vector<double>& s_in) {
        PartialSumSequence p;
        p.s = s_in;
        for (std::size_t i = 0; i < s_in.size(); ++i)
            p.terms.push_back(i == 0 ? s_in[0] : s_in[i] - s_in[i - 1]);
        return p;
    }
};

struct EpsilonResult {
    std::vector<std::vector<double>> even_columns;  // even_columns[k] = eps_{2k} entries
    double best = 0.0;
    int best_order = 0;  // deepest even column reached
    bool breakdown = false;
};

/// Wynn's epsilon algorithm. Denominator underflow truncates the affected
/// diagonal and sets the breakdown flag; non-finite values never propagate.
EpsilonResult wynn_epsilon(const std::vector<double>& s);

/// Levin transformation, u variant (omega_n = (beta0 + n) a_n, beta0 = 1).
/// order < 0 runs the deepest transformation the input supports.
double levin_u(const PartialSumSequence& seq, int order = -1);
/// Levin transformation, t variant (omega_n = a_n).
double levin_t(const PartialSumSequence& seq, int order = -1);

/// Brezinski theta algorithm; same call surface as the epsilon best estimate.
double brezinski_theta(const std::vector<double>& s);

/// True when the trailing `window` values agree within `tol` of each other.
bool stable_plateau(const std::vector<double>& estimates, int window, double tol);

struct ConvergenceReport;

/// Wrap a partial-sum stream with per-prefix transformed estimates
/// (method in {"epsilon", "levin_u", "levin_t", "theta"}). Divergent inputs
/// whose estimates settle are labeled "summed (heuristic)"; estimates that
/// keep drifting stay labeled by the plain verdict.
ConvergenceReport accelerate_report(const PartialSumSequence& seq, const std::string& method,
                                    int order);

}  // namespace orbexp
