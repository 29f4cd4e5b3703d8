#include "orbexp/accel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orbexp/expansions.hpp"

namespace orbexp {

EpsilonResult wynn_epsilon(const std::vector<double>& s) {
    if (s.size() < 3) throw std::invalid_argument("wynn_epsilon: need at least 3 partial sums");
    EpsilonResult res;
    res.even_columns.push_back(s);
    res.best = s.back();
    std::vector<double> prev(s.size() + 1, 0.0);  // eps_{-1}
    std::vector<double> cur = s;                  // eps_0
    int col = 0;
    while (cur.size() >= 2) {
        std::vector<double> next;
        next.reserve(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            double d = cur[i + 1] - cur[i];
            if (std::abs(d) < 1e-300 || !std::isfinite(d)) {
                res.breakdown = true;
                break;
            }
            double v = prev[i + 1] + 1.0 / d;
            if (!std::isfinite(v)) {
                res.breakdown = true;
                break;
            }
            next.push_back(v);
        }
        if (next.empty()) break;
        prev = cur;
        cur = next;
        ++col;
        if (col % 2 == 0) {
            res.even_columns.push_back(cur);
            res.best = cur.back();
            res.best_order = col;
        }
    }
    return res;
}

namespace {

double levin_impl(const PartialSumSequence& seq, bool u_variant, int order) {
    const auto& s = seq.s;
    const auto& a = seq.terms;
    if (s.size() < 2 || a.size() != s.size())
        throw std::invalid_argument("levin: need partial sums with matching terms");
    const double beta0 = 1.0;
    int kmax = int(s.size()) - 1;
    if (order >= 0) kmax = std::min(kmax, order);
    std::vector<double> num(s.size()), den(s.size());
    for (std::size_t n = 0; n < s.size(); ++n) {
        double omega = u_variant ? (beta0 + double(n)) * a[n] : a[n];
        if (omega == 0.0) throw std::domain_error("levin: zero remainder estimate");
        num[n] = s[n] / omega;
        den[n] = 1.0 / omega;
    }
    for (int k = 1; k <= kmax; ++k) {
        for (int n = 0; n + k < int(s.size()); ++n) {
            double bn = beta0 + n;
            double c = bn * std::pow(bn + k - 1, k - 2) / std::pow(bn + k, k - 1);
            num[n] = num[n + 1] - c * num[n];
            den[n] = den[n + 1] - c * den[n];
        }
    }
    if (den[0] == 0.0 || !std::isfinite(num[0] / den[0]))
        throw std::domain_error("levin: denominator breakdown");
    return num[0] / den[0];
}

}  // namespace

double levin_u(const PartialSumSequence& seq, int order) { return levin_impl(seq, true, order); }
double levin_t(const PartialSumSequence& seq, int order) { return levin_impl(seq, false, order); }

bool stable_plateau(const std::vector<double>& estimates, int window, double tol) {
    if (int(estimates.size()) < window) return false;
    double lo = estimates.back(), hi = estimates.back();
    for (int i = 0; i < window; ++i) {
        double v = estimates[estimates.size() - 1 - i];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return std::isfinite(lo) && std::isfinite(hi) && (hi - lo) <= tol;
}

ConvergenceReport accelerate_report(const PartialSumSequence& seq, const std::string& method,
                                    int order) {
    ConvergenceReport rep;
    rep.accel_method = method;
    rep.accel_order = order;
    for (std::size_t i = 0; i < seq.s.size(); ++i) {
        rep.orders.push_back(int(i));
        rep.partial_sums.push_back(seq.s[i]);
        rep.terms.push_back(i < seq.terms.size() ? seq.terms[i] : 0.0);
        double est = seq.s[i];
        if (i >= 2) {
            std::vector<double> prefix(seq.s.begin(), seq.s.begin() + i + 1);
            try {
                if (method == "epsilon") {
                    est = wynn_epsilon(prefix).best;
                } else if (method == "levin_u" || method == "levin_t") {
                    PartialSumSequence sub;
                    sub.s = prefix;
                    sub.terms.assign(seq.terms.begin(), seq.terms.begin() + i + 1);
                    est = (method == "levin_u") ? levin_u(sub, order) : levin_t(sub, order);
                } else if (method == "theta") {
                    est = (prefix.size() >= 4) ? brezinski_theta(prefix) : prefix.back();
                } else {
                    throw std::invalid_argument("accelerate_report: unknown method " + method);
                }
            } catch (const std::domain_error&) {
                est = rep.accelerated.empty() ? seq.s[i] : rep.accelerated.back();
            }
        }
        rep.accelerated.push_back(est);
    }
    rep.verdict = heuristic_verdict(rep.partial_sums);
    rep.verdict_basis = "heuristic(ratio)";
    if (rep.verdict == Verdict::diverging && stable_plateau(rep.accelerated, 5, 1e-6))
        rep.verdict_basis = "summed (heuristic)";
    return rep;
}

double brezinski_theta(const std::vector<double>& s) {
    if (s.size() < 4) throw std::invalid_argument("brezinski_theta: need at least 4 partial sums");
    std::vector<double> prev(s.size() + 1, 0.0);
    std::vector<double> cur = s;
    double best = s.back();
    int col = 0;
    while (true) {
        std::vector<double> next;
        if (col % 2 == 0) {
            // odd column: theta_{2k+1} = theta_{2k-1}^{(n+1)} + 1/Delta theta_{2k}
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                double d = cur[i + 1] - cur[i];
                if (std::abs(d) < 1e-300) return best;
                next.push_back(prev[i + 1] + 1.0 / d);
            }
        } else {
            // even column needs three consecutive odd entries
            for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
                double d2 = cur[i + 2] - 2.0 * cur[i + 1] + cur[i];
                if (std::abs(d2) < 1e-300) return best;
                double v = prev[i + 1] +
                           (prev[i + 2] - prev[i + 1]) * (cur[i + 2] - cur[i + 1]) / d2;
                if (!std::isfinite(v)) return best;
                next.push_back(v);
            }
        }
        if (next.size() < 1) return best;
        prev = cur;
        cur = next;
        ++col;
        if (col % 2 == 0 && !cur.empty()) best = cur.back();
        if (cur.size() < 2) return best;
    }
}

}  // namespace orbexp
