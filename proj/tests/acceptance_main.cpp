// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orbexp/accel.hpp"
#include "orbexp/addition.hpp"
#include "orbexp/basis.hpp"
#include "orbexp/expansions.hpp"
#include "orbexp/mathutil.hpp"
#include "orbexp/quadrature.hpp"
#include "orbexp/special.hpp"
#include "orbexp/stgo.hpp"
#include "orbexp/transforms.hpp"

using namespace orbexp;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %-28s %s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
void criterion_orthonormality() {
    const double beta = 1.0, tol = 1e-10;
    double worst = 0.0;
    auto check_family = [&](const BasisSpec& spec, const WeightSpec& w, bool sturm) {
        for (int ell = 0; ell <= 3; ++ell) {
            if (ell + 1 > 6) continue;
            Eigen::MatrixXd g = gram_matrix(spec, w, 6, ell, 0);
            for (int i = 0; i < g.rows(); ++i)
                for (int j = 0; j < g.cols(); ++j) {
                    double target =
                        (i == j) ? (sturm ? beta / double(ell + 1 + i) : 1.0) : 0.0;
                    worst = std::max(worst, std::abs(g(i, j) - target));
                }
        }
    };
    check_family(BasisSpec::lambda(beta), WeightSpec::r_power(0), false);
    for (int k : {-1, 0, 1, 2})
        check_family(BasisSpec::guseinov(k, beta), WeightSpec::r_power(k), false);
    check_family(BasisSpec::oscillator(beta), WeightSpec::r_power(0), false);
    check_family(BasisSpec::sturmian(beta), WeightSpec::r_power(-1), true);
    report(1, "orthonormality", worst <= tol, "max |gram dev| = " + fmt(worst) + " (tol 1e-10)");
}

// ---------------------------------------------------------------- criterion 2
void criterion_sobolev() {
    const double beta = 0.9, tol = 1e-10;
    double worst = 0.0;
    for (int ell = 0; ell <= 3; ++ell) {
        auto W = sobolev_gram_sturmian(beta, 6, ell);
        worst = std::max(
            worst, (W - Eigen::MatrixXd::Identity(W.rows(), W.cols())).cwiseAbs().maxCoeff());
    }
    report(2, "sobolev orthonormality", worst <= tol,
           "max |dev from identity| = " + fmt(worst) + " (tol 1e-10)");
}

// ---------------------------------------------------------------- criterion 3
void criterion_transforms() {
    const double beta = 1.0, tol = 1e-10;
    std::vector<double> radii;
    for (int i = 0; i < 20; ++i)
        radii.push_back(std::pow(10.0, -3.0 + i * (std::log10(30.0) + 3.0) / 19.0) / beta);

    double worst = 0.0;
    auto grid_err = [&](const CoeffTensor& t, const BasisSpec& src, const QuantumIndex& q) {
        double me = 0.0, mv = 0.0;
        for (double r : radii) {
            double want = eval_radial(src, q, r);
            double got = 0.0;
            for (const auto& [qq, cc] : t.entries) {
                BasisSpec tgt = (t.target.family == Family::STF)
                                    ? BasisSpec::stf(double(qq.n), t.target.beta)
                                    : t.target;
                got += cc * eval_radial(tgt, qq, r);
            }
            me = std::max(me, std::abs(got - want));
            mv = std::max(mv, std::abs(want));
        }
        return me / mv;
    };
    for (int ell = 0; ell <= 3; ++ell) {
        for (int n = ell + 1; n <= 6; ++n) {
            worst = std::max(worst, grid_err(lambda_to_bfun(n, ell, beta),
                                             BasisSpec::lambda(beta), {n, ell, 0}));
            worst = std::max(worst, grid_err(bfun_to_lambda(n, ell, beta), BasisSpec::bfun(beta),
                                             {n, ell, 0}));
            worst = std::max(worst, grid_err(stf_to_lambda(n, ell, beta),
                                             BasisSpec::stf(double(n), beta), {n, ell, 0}));
            worst = std::max(worst, grid_err(stf_to_bfun(n, ell, beta),
                                             BasisSpec::stf(double(n), beta), {n, ell, 0}));
            for (int k : {-1, 0, 1, 2}) {
                worst = std::max(worst, grid_err(lambda_to_guseinov(k, n, ell, beta),
                                                 BasisSpec::lambda(beta), {n, ell, 0}));
                worst = std::max(worst, grid_err(guseinov_to_lambda(k, n, ell, beta),
                                                 BasisSpec::guseinov(k, beta), {n, ell, 0}));
                worst = std::max(worst, grid_err(guseinov_to_bfun(k, n, ell, beta),
                                                 BasisSpec::guseinov(k, beta), {n, ell, 0}));
                worst = std::max(worst, grid_err(bfun_to_guseinov(k, n, ell, beta),
                                                 BasisSpec::bfun(beta), {n, ell, 0}));
                worst = std::max(worst, grid_err(guseinov_to_stf(k, n, ell, beta),
                                                 BasisSpec::guseinov(k, beta), {n, ell, 0}));
            }
        }
    }

    // round trips compose to the identity on coefficient space
    double worst_rt = 0.0;
    auto roundtrip = [&](const std::function<CoeffTensor(int, int)>& fwd,
                         const std::function<CoeffTensor(int, int)>& back, int n, int ell) {
        std::map<int, double> total;
        for (const auto& [qm, cm] : fwd(n, ell).entries)
            for (const auto& [qv, cv] : back(qm.n, qm.ell).entries)
                total[qv.n] += cm * cv;
        for (const auto& [nn, c] : total)
            worst_rt = std::max(worst_rt, std::abs(c - (nn == n ? 1.0 : 0.0)));
    };
    for (int ell = 0; ell <= 3; ++ell)
        for (int n = ell + 1; n <= 6; ++n) {
            roundtrip([&](int a, int b) { return lambda_to_bfun(a, b, beta); },
                      [&](int a, int b) { return bfun_to_lambda(a, b, beta); }, n, ell);
            for (int k : {-1, 0, 1, 2}) {
                roundtrip([&](int a, int b) { return lambda_to_guseinov(k, a, b, beta); },
                          [&](int a, int b) { return guseinov_to_lambda(k, a, b, beta); }, n,
                          ell);
                roundtrip([&](int a, int b) { return guseinov_to_bfun(k, a, b, beta); },
                          [&](int a, int b) { return bfun_to_guseinov(k, a, b, beta); }, n, ell);
            }
        }
    // scalar pair: half-order kernels <-> Laguerre
    for (int n = 0; n <= 4; ++n) {
        std::map<int, double> total;
        for (const auto& [qm, cm] : rbf_to_laguerre(n, 1.0).entries)
            for (const auto& [qv, cv] : laguerre_inverse_expand(qm.n, 1.0).entries)
                total[qv.n] += cm * cv;
        for (const auto& [nn, c] : total)
            worst_rt = std::max(worst_rt, std::abs(c - (nn == n ? 1.0 : 0.0)));
    }
    bool pass = worst <= tol && worst_rt <= tol;
    report(3, "inter-basis transforms", pass,
           "worst grid err = " + fmt(worst) + ", worst round trip = " + fmt(worst_rt) +
               " (tol 1e-10)");
}

// ---------------------------------------------------------------- criterion 4
void criterion_convolution_addition() {
    const double beta = 1.0;
    BasisSpec bs = BasisSpec::bfun(beta);
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    qs.rel_tol = 1e-9;
    qs.decay_hint = beta;
    double worst = 0.0;
    const std::vector<Vec3> samples = {Vec3{0, 0, 0.9}, Vec3{0.5, 0.3, 1.0},
                                       Vec3{-0.7, 1.1, 0.4}, Vec3{0, 0, 2.2}};
    for (int n1 : {1, 2})
        for (int l1 : {0, 1})
            for (int n2 : {1, 2})
                for (int l2 : {0, 1})
                    for (int m1 = -l1; m1 <= l1; ++m1)
                        for (int m2 = -l2; m2 <= l2; ++m2) {
                            auto t = bfun_convolution(n1, l1, m1, n2, l2, m2, beta);
                            for (const Vec3& r : samples) {
                                std::complex<double> got{0.0, 0.0};
                                for (const auto& [q, c] : t.entries) got += c * eval(bs, q, r);
                                auto f = [&](const Vec3& u) { return eval(bs, {n1, l1, m1}, u); };
                                auto g = [&](const Vec3& u) { return eval(bs, {n2, l2, m2}, u); };
                                auto want = convolution_3d(f, g, r, qs,
                                                           std::max(8, 2 * (l1 + l2) + 4));
                                worst = std::max(worst, std::abs(got - want) /
                                                            std::max(1e-4, std::abs(want)));
                            }
                        }
    bool conv_ok = worst <= 1e-8;

    // one-range expansion: grid-L2 error strictly decreasing as the order doubles
    Vec3 rp{0, 0, 0.5 / beta};
    BasisSpec lam = BasisSpec::lambda(beta);
    auto grid_error = [&](const SymCoeffTensor& T) {
        double err2 = 0.0, norm2 = 0.0;
        for (double r = 0.1; r <= 6.0; r += 0.145) {
            Vec3 rv{0, 0, r};
            double direct = eval(lam, {1, 0, 0}, rv - rp).real();
            double recon = T.reconstruct(rv, rp).real();
            err2 += (direct - recon) * (direct - recon) * r * r;
            norm2 += direct * direct * r * r;
        }
        return std::sqrt(err2 / norm2);
    };
    double e8 = grid_error(symmetric_coeffs_lambda(1, 0, 0, 8, beta));
    double e16 = grid_error(symmetric_coeffs_lambda(1, 0, 0, 16, beta));
    bool add_ok = e16 < e8;
    report(4, "convolution + expansion", conv_ok && add_ok,
           "conv rel err = " + fmt(worst) + " (tol 1e-8); grid err 8->16: " + fmt(e8) + " -> " +
               fmt(e16) + (add_ok ? " (decreasing)" : " (NOT decreasing)"));
}

// ---------------------------------------------------------------- criterion 5
void criterion_exp_expansion() {
    const double beta = 1.0;
    // x = 1: exactly one nonzero coefficient
    bool single = true;
    for (int n = 2; n <= 12; ++n)
        if (std::abs(guseinov_exp_coeff(0, 1.0, beta, n)) > 1e-14) single = false;
    if (std::abs(guseinov_exp_coeff(0, 1.0, beta, 1)) < 0.1) single = false;

    // closed form vs quadrature projection, n <= 12, tol 1e-9
    double worst = 0.0;
    for (int k : {0, 1, 2, 3}) {
        BasisSpec gus = BasisSpec::guseinov(k, beta);
        for (double x : {3.0, 0.5}) {
            QuadratureSpec qs;
            qs.decay_hint = beta * (1.0 + x);
            for (int n = 1; n <= 12; ++n) {
                auto f = [&](double r) {
                    return eval_radial(gus, {n, 0, 0}, r) * std::exp(-x * beta * r);
                };
                double proj = radial_quadrature(f, k, qs);
                double closed = guseinov_exp_coeff(k, x, beta, n);
                worst = std::max(worst,
                                 std::abs(closed - proj) / std::max(1.0, std::abs(proj)));
            }
        }
    }
    bool proj_ok = worst <= 1e-9;

    // relative truncation error at fixed order increases with k (x = 3)
    bool k_monotone = true;
    double prev = 0.0;
    for (int k : {0, 1, 2, 3}) {
        double norm2 = 0.0, tail2 = 0.0;
        for (int n = 1; n <= 400; ++n) {
            double e = guseinov_exp_coeff(k, 3.0, beta, n);
            norm2 += e * e;
            if (n > 8) tail2 += e * e;
        }
        double rel = std::sqrt(tail2 / norm2);
        if (rel <= prev) k_monotone = false;
        prev = rel;
    }
    report(5, "exponential expansion", single && proj_ok && k_monotone,
           std::string("x=1 single term: ") + (single ? "yes" : "NO") +
               ", closed vs quadrature = " + fmt(worst) +
               " (tol 1e-9), error grows with k: " + (k_monotone ? "yes" : "NO"));
}

// ---------------------------------------------------------------- criterion 6
void criterion_divergence_suite() {
    // pointwise growth at x = 1e-3 with decreasing weighted-L2 diagnostics
    auto rep = inverse_power_divergence_probe(1e-3, 200, 1.0);
    bool monotone = true;
    for (std::size_t i = 1; i < rep.partial_sums.size(); ++i)
        if (rep.partial_sums[i] <= rep.partial_sums[i - 1]) monotone = false;
    bool grew = rep.partial_sums.back() > 10.0 * rep.partial_sums.front();
    bool norm_dec = rep.norm_errors[10] < rep.norm_errors[5] &&
                    rep.norm_errors[20] < rep.norm_errors[10] &&
                    rep.norm_errors[40] < rep.norm_errors[20] &&
                    rep.norm_errors[80] < rep.norm_errors[40];

    // rearranged inner series: the three-case table, matched exactly
    struct Case {
        double mu;
        int k;
        Verdict want;
    };
    bool table_ok = true;
    for (const Case& cs : {Case{-1.0, 0, Verdict::diverging}, Case{-0.5, 1, Verdict::diverging},
                           Case{-2.5, 0, Verdict::diverging}, Case{3.0, 1, Verdict::converging},
                           Case{2.0, 0, Verdict::converging}, Case{5.0, 4, Verdict::converging},
                           Case{0.5, 2, Verdict::diverging}, Case{1.5, 3, Verdict::diverging},
                           Case{0.0, 1, Verdict::diverging}}) {
        if (rearrangement_probe(cs.mu, cs.k, 200).verdict != cs.want) table_ok = false;
    }

    // one-center limits of the rearranged route
    bool oc_ok = one_center_nonexistence_probe(0.0, 0, 200).verdict == Verdict::diverging &&
                 one_center_nonexistence_probe(1.5, 0, 200).verdict == Verdict::diverging &&
                 one_center_nonexistence_probe(2.0, 0, 200).verdict == Verdict::converging;

    report(6, "divergence suite", monotone && grew && norm_dec && table_ok && oc_ok,
           std::string("growth: ") + (monotone && grew ? "yes" : "NO") +
               ", L2 diagnostics decreasing: " + (norm_dec ? "yes" : "NO") +
               ", table match: " + (table_ok ? "yes" : "NO") +
               ", one-center {0, 1.5, 2}: " + (oc_ok ? "yes" : "NO"));
}

// ---------------------------------------------------------------- criterion 7
void criterion_laplace() {
    auto res = laplace_coulomb(Vec3{0, 0, 2}, Vec3{0, 0, 1}, 30);
    double collinear_err = std::abs(res.value - 1.0);
    bool col_ok = collinear_err <= 1e-9;

    // slope of the per-order error for radius ratio 0.4
    Vec3 a{0.3, -1.1, 1.4};
    double an = norm(a);
    Vec3 b{0.55, 0.2, 0.45};
    double bn = norm(b);
    for (auto& xx : b) xx *= 0.4 * an / bn;
    double direct = 1.0 / norm(a - b);
    auto lr = laplace_coulomb(a, b, 34);
    std::vector<double> xs, ys;
    // the rank-dependent Legendre factor adds slope noise at low orders; fit
    // the asymptotic window
    for (int lam = 6; lam <= 32; ++lam) {
        double err = std::abs(lr.partial_sums[lam] - direct);
        if (err > 1e-13) {
            xs.push_back(lam);
            ys.push_back(std::log(err));
        }
    }
    double n = double(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double rel_slope_dev = std::abs(slope - std::log(0.4)) / std::abs(std::log(0.4));
    bool slope_ok = rel_slope_dev <= 0.05;
    report(7, "two-range expansion", col_ok && slope_ok,
           "collinear err = " + fmt(collinear_err) + " (tol 1e-9), slope dev = " +
               fmt(rel_slope_dev) + " (tol 5%)");
}

// ---------------------------------------------------------------- criterion 8
GammaTensor g_gamma;             // shared with criterion 10
ConvergenceReport g_shell_rep;   // shell partial sums of the 1s study

void criterion_coulomb_weak() {
    const double zeta = 1.0, beta = zeta;
    const int shells = 20, n_max = shells - 1;
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    qs.rel_tol = 1e-9;
    g_gamma = coulomb_gamma(0, beta, n_max, 0, qs);
    BasisSpec gus = BasisSpec::guseinov(0, beta);
    auto rho = [zeta](double r) {
        return zeta * zeta * zeta / M_PI * std::exp(-2.0 * zeta * r);
    };
    std::map<QuantumIndex, double> F;
    QuadratureSpec fq;
    fq.decay_hint = 2.0 * zeta + beta;
    for (int nn = 1; nn <= n_max; ++nn) {
        auto f = [&](double r) { return rho(r) * eval_radial(gus, {nn, 0, 0}, r); };
        F[{nn, 0, 0}] = radial_quadrature(f, 0, fq) * std::sqrt(4.0 * M_PI);
    }
    g_shell_rep = coulomb_energy_series(F, F, g_gamma);
    // partial sum at shell 20
    double at20 = 0.0;
    for (std::size_t i = 0; i < g_shell_rep.orders.size(); ++i)
        if (g_shell_rep.orders[i] <= 20) at20 = g_shell_rep.partial_sums[i];
    double err20 = std::abs(at20 - 0.625 * zeta);
    bool energy_ok = err20 <= 1e-4;

    // diagonal norms grow without plateau over n <= 12
    QuadratureSpec qd;
    qd.abs_tol = 1e-9;
    qd.rel_tol = 1e-8;
    auto gd = coulomb_gamma(0, beta, 12, 0, qd);
    bool growth = true;
    double acc = 0.0, prev_acc = 0.0, last_inc = 0.0;
    for (int nn = 1; nn <= 12; ++nn) {
        double inc = std::abs(gd.coeff(nn, 0, 0, nn, 0, 0));
        if (inc <= last_inc) growth = false;  // increments keep growing: no plateau
        acc += inc;
        prev_acc = acc;
        last_inc = inc;
    }
    report(8, "coulomb weak convergence", energy_ok && growth,
           "shell-20 err = " + fmt(err20) + " (tol 1e-4), diagonal growth: " +
               (growth ? "monotone, no plateau" : "NOT monotone"));
    (void)prev_acc;
}

// ---------------------------------------------------------------- criterion 9
void criterion_stgo() {
    // Hobson route, ell <= 3
    double worst_h = 0.0;
    auto inv = RadialFunctionHandle::from_exppoly(ExpPolyRadial::power(-1));
    for (int l = 0; l <= 3; ++l) {
        auto res = stgo_on_radial(l, 0, inv);
        double pref = parity(l) / double_factorial(2 * l - 1);
        for (const Vec3& r : {Vec3{0, 0, 1.5}, Vec3{0.8, 0.3, -0.9}, Vec3{-1.2, 0.5, 0.4},
                              Vec3{2.0, -1.0, 0.7}, Vec3{0.2, 1.9, 1.1}, Vec3{-0.6, -0.6, 2.2},
                              Vec3{1.4, 0.1, -0.3}, Vec3{0.9, -1.4, -1.6}, Vec3{3.0, 0.4, 0.2},
                              Vec3{0.1, 0.2, -2.5}}) {
            auto got = pref * res.eval(r);
            auto want = irregular_solid_harmonic(AngularIndex(l, 0), r);
            worst_h = std::max(worst_h, std::abs(got - want) / std::abs(want));
        }
    }
    bool hobson_ok = worst_h <= 1e-8;

    // gradient tensor on the bessel family vs cartesian finite differences:
    // reuse the rank-one ladder identity as the analytic anchor and verify
    // the generic tensor against second-order differences of the evaluator
    double worst_fd = 0.0;
    {
        const double beta = 1.1;
        BasisSpec bs = BasisSpec::bfun(beta);
        const double h = 0.01;
        for (auto [l1, n2, l2, m2] : {std::tuple<int, int, int, int>{1, 2, 0, 0},
                                      {1, 1, 1, 0}, {2, 2, 0, 0}, {2, 2, 1, 1}}) {
            auto tensor = stgo_on_bfun(l1, 0, n2, l2, m2, beta);
            // apply the polynomial gradient by nested central differences
            std::function<std::complex<double>(const Vec3&)> f =
                [&](const Vec3& p) { return eval(bs, {n2, l2, m2}, p); };
            for (const Vec3& r : {Vec3{0.9, 0.4, 1.2}, Vec3{1.6, -0.6, 0.5},
                                  Vec3{0.5, 0.5, -1.5}}) {
                std::complex<double> got{0.0, 0.0};
                for (const auto& [q, c] : tensor.entries) got += c * eval(bs, q, r);
                // l1 = 1: Y10(grad) = sqrt(3/4pi) d/dz; l1 = 2: sqrt(5/16pi)(2dzz - dxx - dyy)
                std::complex<double> want{0.0, 0.0};
                if (l1 == 1) {
                    Vec3 rp = r, rm = r;
                    rp[2] += h;
                    rm[2] -= h;
                    Vec3 rp2 = r, rm2 = r;
                    rp2[2] += h / 2;
                    rm2[2] -= h / 2;
                    auto d1 = (f(rp) - f(rm)) / (2.0 * h);
                    auto d2 = (f(rp2) - f(rm2)) / (2.0 * (h / 2));
                    want = std::sqrt(3.0 / (4.0 * M_PI)) * (4.0 * d2 - d1) / 3.0;
                } else {
                    auto second = [&](int dim, double hh) {
                        Vec3 rp = r, rm = r;
                        rp[dim] += hh;
                        rm[dim] -= hh;
                        return (f(rp) - 2.0 * f(r) + f(rm)) / (hh * hh);
                    };
                    auto at = [&](double hh) {
                        return std::sqrt(5.0 / (16.0 * M_PI)) *
                               (2.0 * second(2, hh) - second(0, hh) - second(1, hh));
                    };
                    want = (4.0 * at(h / 2) - at(h)) / 3.0;
                }
                worst_fd = std::max(worst_fd,
                                    std::abs(got - want) / std::max(1.0, std::abs(want)));
            }
        }
    }
    bool fd_ok = worst_fd <= 1e-6;

    // six gamma forms pairwise
    double worst_g = 0.0;
    struct Triple {
        int l1, l2, l;
    };
    for (const Triple& t : {Triple{1, 1, 0}, Triple{1, 1, 2}, Triple{2, 1, 1}, Triple{2, 2, 2},
                            Triple{1, 2, 1}, Triple{2, 0, 2}, Triple{3, 1, 2}}) {
        auto f = RadialFunctionHandle::from_exppoly(
            ExpPolyRadial::exponential(1.0).times_power(t.l2));
        std::vector<int> forms = {1, 2, 3, 6};
        if (t.l2 >= t.l) forms.push_back(4);
        if (t.l >= t.l2) forms.push_back(5);
        std::vector<RadialFunctionHandle> gs;
        for (int form : forms) gs.push_back(gamma_radial(form, f, t.l1, t.l2, t.l));
        for (double r : {0.3, 0.7, 1.2, 1.9, 2.8, 4.0, 5.5}) {
            double ref = gs[0](r);
            for (std::size_t i = 1; i < gs.size(); ++i)
                worst_g = std::max(worst_g,
                                   std::abs(gs[i](r) - ref) / std::max(1e-12, std::abs(ref)));
        }
    }
    bool gamma_ok = worst_g <= 1e-8;
    report(9, "tensor gradient machinery", hobson_ok && fd_ok && gamma_ok,
           "hobson = " + fmt(worst_h) + " (1e-8), fd = " + fmt(worst_fd) + " (1e-6), forms = " +
               fmt(worst_g) + " (1e-8)");
}

// --------------------------------------------------------------- criterion 10
void criterion_acceleration() {
    // epsilon exact on geometric partial sums (convergent and divergent)
    double worst_geo = 0.0;
    for (double q : {0.5, -0.7, 0.9, 0.1, -1.5, -3.0}) {
        std::vector<double> s;
        double accum = 0.0, t = 1.0;
        for (int i = 0; i < 8; ++i) {
            accum += t;
            t *= q;
            s.push_back(accum);
        }
        worst_geo = std::max(worst_geo, std::abs(wynn_epsilon(s).best - 1.0 / (1.0 - q)));
    }
    bool geo_ok = worst_geo <= 1e-12;

    // Levin u on the alternating series for log 2, ten terms
    std::vector<double> terms;
    for (int i = 1; i <= 10; ++i) terms.push_back((i % 2 ? 1.0 : -1.0) / i);
    double lerr = std::abs(levin_u(PartialSumSequence::from_terms(terms)) - std::log(2.0));
    bool levin_ok = lerr <= 1e-9;

    // epsilon on the mu = 1/2 reconstruction at x = 2 vs the converged value
    RadialSeriesSpec spec{0.5, 0.0, 0.0, 20};
    auto c = power_laguerre_coeffs(spec);
    std::vector<double> ts;
    for (int n = 0; n <= 20; ++n) ts.push_back(c[n] * laguerre(n, 0.0, 2.0));
    auto seq = PartialSumSequence::from_terms(ts);
    const double ref = std::sqrt(2.0);
    double plain_err = std::abs(seq.s.back() - ref);
    double eps_err = std::abs(wynn_epsilon(seq.s).best - ref);
    bool lag_ok = eps_err <= 1e-3 * plain_err;

    // epsilon on the shell sums of criterion 8: shell 12 beats plain shell 20
    std::vector<double> upto12, upto20;
    double plain20 = 0.0;
    for (std::size_t i = 0; i < g_shell_rep.orders.size(); ++i) {
        if (g_shell_rep.orders[i] <= 12) upto12.push_back(g_shell_rep.partial_sums[i]);
        if (g_shell_rep.orders[i] <= 20) plain20 = g_shell_rep.partial_sums[i];
    }
    double eps12_err = std::abs(wynn_epsilon(upto12).best - 0.625);
    double plain20_err = std::abs(plain20 - 0.625);
    bool shell_ok = eps12_err <= plain20_err;

    report(10, "sequence transformations", geo_ok && levin_ok && lag_ok && shell_ok,
           "geo = " + fmt(worst_geo) + " (1e-12), levin-u ln2 = " + fmt(lerr) +
               " (1e-9), eps/plain = " + fmt(eps_err / plain_err) +
               " (<= 1e-3), eps@12 " + fmt(eps12_err) + " vs plain@20 " + fmt(plain20_err));
}

// --------------------------------------------------------------- criterion 11
void criterion_fourier_optional() {
    double a = 1.4;
    BasisSpec bsv = BasisSpec::bfun(a);
    double worst = 0.0;
    for (double p : {0.3, 0.9, 1.4, 2.2, 5.0}) {
        auto frad = [&](double r) { return eval_radial(bsv, {1, 0, 0}, r); };
        double got = spherical_bessel_transform(frad, 0, p);
        double want = std::sqrt(2.0 / M_PI) * a / std::pow(a * a + p * p, 2.0);
        worst = std::max(worst, std::abs(got - want) / std::abs(want));
    }
    report(11, "fourier spot check (optional)", worst <= 1e-7,
           "max rel err = " + fmt(worst) + " (tol 1e-7)");
}

}  // namespace

int main() {
    criterion_orthonormality();
    criterion_sobolev();
    criterion_transforms();
    criterion_convolution_addition();
    criterion_exp_expansion();
    criterion_divergence_suite();
    criterion_laplace();
    criterion_coulomb_weak();
    criterion_stgo();
    criterion_acceleration();
    criterion_fourier_optional();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf(
        "acceptance: %d criteria FAILED\n"
        "note: criterion 10 carries two clauses that no parameter choice satisfies in\n"
        "      double precision (see docs/known-limits.md): epsilon cannot gain 1e-3\n"
        "      on the irregularly oscillating half-power Laguerre tail (best ~0.2x\n"
        "      across x, alpha, and term grouping), and no expansion scaling makes\n"
        "      epsilon-at-12-shells beat plain-at-20 while the 20-shell sum still\n"
        "      meets 1e-4. The remaining clauses of criterion 10 pass.\n",
        g_failures);
    return 1;
}
