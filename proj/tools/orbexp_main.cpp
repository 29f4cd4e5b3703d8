// Batch front end: named numerical studies with CSV output and a JSON
// provenance sidecar per run. Exit codes: 0 success, 1 configuration error,
// 2 numerical nonconvergence (partial report still written).

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "orbexp/accel.hpp"
#include "orbexp/addition.hpp"
#include "orbexp/basis.hpp"
#include "orbexp/expansions.hpp"
#include "orbexp/parallel.hpp"
#include "orbexp/report.hpp"
#include "orbexp/special.hpp"
#include "orbexp/stgo.hpp"
#include "orbexp/transforms.hpp"

namespace fs = std::filesystem;
using namespace orbexp;

namespace {

struct CommonOpts {
    std::string out_dir = ".";
    unsigned long seed = 42;
};

std::string out_path(const CommonOpts& c, const std::string& study, const std::string& ext) {
    fs::create_directories(c.out_dir);
    return (fs::path(c.out_dir) / (study + ext)).string();
}

void write_sidecar(const CommonOpts& c, const std::string& study,
                   std::map<std::string, std::string> strings,
                   std::map<std::string, double> numbers) {
    strings["study"] = study;
    strings["version"] = ORBEXP_VERSION_STRING;
    numbers["seed"] = double(c.seed);
    QuadratureSpec defaults;
    numbers["abs_tol"] = defaults.abs_tol;
    numbers["rel_tol"] = defaults.rel_tol;
    write_sidecar_json(out_path(c, study, ".json"), strings, numbers);
}

int run_orthonormality(const CommonOpts& c, const std::string& family, int k, double beta,
                       int n_max, int ell_max) {
    std::vector<std::pair<BasisSpec, WeightSpec>> targets;
    auto add = [&](const std::string& f) {
        if (f == "lambda") targets.push_back({BasisSpec::lambda(beta), WeightSpec::r_power(0)});
        else if (f == "guseinov")
            targets.push_back({BasisSpec::guseinov(k, beta), WeightSpec::r_power(k)});
        else if (f == "sturmian")
            targets.push_back({BasisSpec::sturmian(beta), WeightSpec::r_power(-1)});
        else if (f == "oscillator")
            targets.push_back({BasisSpec::oscillator(beta), WeightSpec::r_power(0)});
        else
            throw CLI::ValidationError("--family", "unknown family " + f);
    };
    if (family == "all") {
        add("lambda");
        add("guseinov");
        add("sturmian");
        add("oscillator");
    } else {
        add(family);
    }

    std::ofstream csv(out_path(c, "orthonormality", ".csv"));
    csv << "family,k,ell,n,n_prime,value,target,abs_err\n";
    double max_dev = 0.0;
    for (const auto& [spec, weight] : targets) {
        for (int ell = 0; ell <= std::min(ell_max, n_max - 1); ++ell) {
            Eigen::MatrixXd g = gram_matrix(spec, weight, n_max, ell, 0);
            for (int i = 0; i < g.rows(); ++i) {
                for (int j = 0; j < g.cols(); ++j) {
                    int n = ell + 1 + i, np = ell + 1 + j;
                    double target = 0.0;
                    if (i == j)
                        target = (spec.family == Family::Sturmian) ? spec.beta / double(n) : 1.0;
                    double dev = std::abs(g(i, j) - target);
                    max_dev = std::max(max_dev, dev);
                    csv << family_name(spec.family) << ',' << k << ',' << ell << ',' << n << ','
                        << np << ',' << format_double(g(i, j)) << ',' << format_double(target)
                        << ',' << format_double(dev) << '\n';
                }
            }
        }
    }
    write_sidecar(c, "orthonormality", {{"family", family}},
                  {{"k", double(k)}, {"beta", beta}, {"n_max", double(n_max)},
                   {"ell_max", double(ell_max)}, {"max_abs_dev", max_dev}});
    std::cout << "orthonormality: max |gram - target| = " << max_dev << "\n";
    return 0;
}

int run_transforms(const CommonOpts& c, double beta, int n_max, int ell_max) {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> jitter(0.8, 1.25);
    std::vector<double> radii;
    for (int i = 0; i < 20; ++i)
        radii.push_back(std::pow(10.0, -3.0 + i * (std::log10(30.0) + 3.0) / 19.0) / beta *
                        jitter(rng));

    std::ofstream csv(out_path(c, "transforms", ".csv"));
    csv << "transform,k,n,ell,grid_rel_err\n";
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
    auto row = [&](const std::string& name, int k, int n, int ell, double err) {
        worst = std::max(worst, err);
        csv << name << ',' << k << ',' << n << ',' << ell << ',' << format_double(err) << '\n';
    };

    for (int ell = 0; ell <= ell_max; ++ell) {
        for (int n = ell + 1; n <= n_max; ++n) {
            row("lambda_to_bfun", 0, n, ell,
                grid_err(lambda_to_bfun(n, ell, beta), BasisSpec::lambda(beta), {n, ell, 0}));
            row("bfun_to_lambda", 0, n, ell,
                grid_err(bfun_to_lambda(n, ell, beta), BasisSpec::bfun(beta), {n, ell, 0}));
            row("stf_to_lambda", 0, n, ell,
                grid_err(stf_to_lambda(n, ell, beta), BasisSpec::stf(double(n), beta), {n, ell, 0}));
            row("stf_to_bfun", 0, n, ell,
                grid_err(stf_to_bfun(n, ell, beta), BasisSpec::stf(double(n), beta), {n, ell, 0}));
            for (int k : {-1, 0, 1, 2}) {
                row("lambda_to_guseinov", k, n, ell,
                    grid_err(lambda_to_guseinov(k, n, ell, beta), BasisSpec::lambda(beta),
                             {n, ell, 0}));
                row("guseinov_to_lambda", k, n, ell,
                    grid_err(guseinov_to_lambda(k, n, ell, beta), BasisSpec::guseinov(k, beta),
                             {n, ell, 0}));
                row("guseinov_to_bfun", k, n, ell,
                    grid_err(guseinov_to_bfun(k, n, ell, beta), BasisSpec::guseinov(k, beta),
                             {n, ell, 0}));
                row("bfun_to_guseinov", k, n, ell,
                    grid_err(bfun_to_guseinov(k, n, ell, beta), BasisSpec::bfun(beta),
                             {n, ell, 0}));
                row("guseinov_to_stf", k, n, ell,
                    grid_err(guseinov_to_stf(k, n, ell, beta), BasisSpec::guseinov(k, beta),
                             {n, ell, 0}));
            }
        }
    }
    write_sidecar(c, "transforms", {},
                  {{"beta", beta}, {"n_max", double(n_max)}, {"ell_max", double(ell_max)},
                   {"worst_grid_rel_err", worst}});
    std::cout << "transforms: worst grid-relative reconstruction error = " << worst << "\n";
    return 0;
}

int run_expand(const CommonOpts& c, double mu, double alpha, double u, double x, int n_max) {
    ConvergenceReport rep;
    if (mu == -1.0 && u == 0.0) {
        rep = inverse_power_divergence_probe(x, n_max, alpha);
    } else {
        RadialSeriesSpec spec{mu, u, alpha, n_max};
        auto coeff = expo_power_laguerre_coeffs(spec);
        std::vector<double> terms;
        for (int n = 0; n <= n_max; ++n) terms.push_back(coeff[n] * laguerre(n, alpha, x));
        rep = accelerate_report(PartialSumSequence::from_terms(terms), "epsilon", -1);
        rep.params = {{"mu", mu}, {"alpha", alpha}, {"u", u}, {"x", x}};
    }
    write_report_csv(rep, out_path(c, "expand", ".csv"));
    write_sidecar(c, "expand",
                  {{"verdict", verdict_name(rep.verdict)}, {"verdict_basis", rep.verdict_basis}},
                  {{"mu", mu}, {"alpha", alpha}, {"u", u}, {"x", x}, {"n_max", double(n_max)},
                   {"final_partial_sum", rep.partial_sums.back()},
                   {"first_partial_sum", rep.partial_sums.front()}});
    std::cout << "expand: verdict " << verdict_name(rep.verdict) << ", final partial sum "
              << rep.partial_sums.back() << "\n";
    return 0;
}

int run_addition(const CommonOpts& c, int N, int L, double beta, double rprime, int n_max) {
    BasisSpec lam = BasisSpec::lambda(beta);
    Vec3 rp{0, 0, rprime / beta};
    auto grid_error = [&](const SymCoeffTensor& T) {
        double err2 = 0.0, norm2 = 0.0;
        for (double r = 0.1; r <= 6.0 / beta; r += 0.145 / beta) {
            Vec3 rv{0, 0, r};
            double direct = eval(lam, {N, L, 0}, rv - rp).real();
            double recon = T.reconstruct(rv, rp).real();
            err2 += (direct - recon) * (direct - recon) * r * r;
            norm2 += direct * direct * r * r;
        }
        return std::sqrt(err2 / norm2);
    };
    std::ofstream csv(out_path(c, "addition", ".csv"));
    csv << "n_max,grid_l2_rel_err\n";
    std::vector<double> errs;
    for (int cap : {n_max / 4, n_max / 2, n_max}) {
        if (cap < 1) continue;
        auto T = symmetric_coeffs_lambda(N, L, 0, cap, beta);
        double e = grid_error(T);
        errs.push_back(e);
        csv << cap << ',' << format_double(e) << '\n';
    }
    bool decreasing = errs.size() >= 2 && errs.back() < errs.front();
    write_sidecar(c, "addition", {{"decreasing", decreasing ? "true" : "false"}},
                  {{"N", double(N)}, {"L", double(L)}, {"beta", beta},
                   {"rprime_scaled", rprime}, {"n_max", double(n_max)},
                   {"final_grid_err", errs.back()}});
    std::cout << "addition: grid error at n_max=" << n_max << " is " << errs.back()
              << (decreasing ? " (decreasing)" : " (NOT decreasing)") << "\n";
    return 0;
}

int run_coulomb(const CommonOpts& c, int k, double zeta, double beta, int shells, int ell_max) {
    if (beta <= 0.0) beta = zeta;  // scaling of the expansion set
    const int n_max = std::max(2, shells - 1);
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    qs.rel_tol = 1e-9;
    auto gamma = coulomb_gamma(k, beta, n_max, ell_max, qs);
    gamma.save_csv(out_path(c, "gamma", ".csv"));
    gamma.save_sidecar(out_path(c, "gamma", ".json"));

    // 1s density coefficients F_n = Int rho (basis function) d^3r
    BasisSpec gus = BasisSpec::guseinov(k, beta);
    auto rho = [zeta](double r) {
        return zeta * zeta * zeta / M_PI * std::exp(-2.0 * zeta * r);
    };
    std::map<QuantumIndex, double> F;
    QuadratureSpec fq;
    fq.decay_hint = 2.0 * zeta + beta;
    for (int n = 1; n <= n_max; ++n) {
        auto f = [&](double r) { return rho(r) * eval_radial(gus, {n, 0, 0}, r); };
        F[{n, 0, 0}] = radial_quadrature(f, 0, fq) * std::sqrt(4.0 * M_PI);
    }
    auto rep = coulomb_energy_series(F, F, gamma);
    // epsilon acceleration over the shell partial sums
    auto acc = accelerate_report(PartialSumSequence::from_sums(rep.partial_sums), "epsilon", -1);
    rep.accelerated = acc.accelerated;
    rep.accel_method = "epsilon";
    write_report_csv(rep, out_path(c, "coulomb", ".csv"));
    const double target = 0.625 * zeta;
    double err = std::abs(rep.partial_sums.back() - target);
    write_sidecar(c, "coulomb", {{"verdict", verdict_name(rep.verdict)}},
                  {{"k", double(k)}, {"zeta", zeta}, {"beta", beta},
                   {"shells", double(shells)}, {"ell_max", double(ell_max)},
                   {"estimate", rep.partial_sums.back()}, {"target_5zeta_over_8", target},
                   {"abs_err", err},
                   {"accel_estimate", rep.accelerated.back()}});
    std::cout << "coulomb: estimate " << rep.partial_sums.back() << " vs 5 zeta/8 = " << target
              << " (|err| = " << err << ")\n";
    return 0;
}

int run_diverge(const CommonOpts& c, const std::string& probe, double x, double alpha, double mu,
                int k, double N, int n_max) {
    ConvergenceReport rep;
    if (probe == "inverse_power") {
        rep = inverse_power_divergence_probe(x, n_max, alpha);
    } else if (probe == "rearrangement") {
        rep = rearrangement_probe(mu, k, n_max);
    } else if (probe == "one_center") {
        rep = one_center_nonexistence_probe(N, k, n_max);
    } else {
        throw CLI::ValidationError("--probe", "unknown probe " + probe);
    }
    write_report_csv(rep, out_path(c, "diverge", ".csv"));
    std::map<std::string, double> nums = {{"n_max", double(n_max)}};
    for (const auto& [kk, vv] : rep.params) nums[kk] = vv;
    write_sidecar(c, "diverge",
                  {{"probe", probe}, {"verdict", verdict_name(rep.verdict)},
                   {"verdict_basis", rep.verdict_basis}},
                  nums);
    std::cout << "diverge(" << probe << "): verdict " << verdict_name(rep.verdict) << "\n";
    return 0;
}

int run_accelerate(const CommonOpts& c, const std::string& series, const std::string& method,
                   double q, int order, int n_terms) {
    PartialSumSequence seq;
    if (series == "ln2") {
        std::vector<double> terms;
        for (int i = 1; i <= n_terms; ++i) terms.push_back((i % 2 ? 1.0 : -1.0) / i);
        seq = PartialSumSequence::from_terms(terms);
    } else if (series == "geometric") {
        std::vector<double> terms;
        double t = 1.0;
        for (int i = 0; i < n_terms; ++i) {
            terms.push_back(t);
            t *= q;
        }
        seq = PartialSumSequence::from_terms(terms);
    } else if (series == "laguerre_half") {
        // reconstruction of sqrt(x) at x = 2 from its Laguerre series
        RadialSeriesSpec spec{0.5, 0.0, 0.0, n_terms - 1};
        auto coeff = power_laguerre_coeffs(spec);
        std::vector<double> terms;
        for (int n = 0; n < n_terms; ++n) terms.push_back(coeff[n] * laguerre(n, 0.0, 2.0));
        seq = PartialSumSequence::from_terms(terms);
    } else {
        throw CLI::ValidationError("--series", "unknown series " + series);
    }
    auto rep = accelerate_report(seq, method, order);
    write_report_csv(rep, out_path(c, "accelerate", ".csv"));
    write_sidecar(c, "accelerate",
                  {{"series", series}, {"method", method},
                   {"verdict", verdict_name(rep.verdict)},
                   {"verdict_basis", rep.verdict_basis}},
                  {{"q", q}, {"order", double(order)}, {"n_terms", double(n_terms)},
                   {"plain_final", rep.partial_sums.back()},
                   {"accel_final", rep.accelerated.back()}});
    std::cout << "accelerate(" << series << ", " << method
              << "): plain " << rep.partial_sums.back() << ", accelerated "
              << rep.accelerated.back() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbexp: numerical studies of orthogonal orbital expansions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config");
    app.allow_config_extras(false);

    CommonOpts common;
    app.add_option("--out", common.out_dir, "output directory for <study>.csv/.json");
    app.add_option("--seed", common.seed, "seed for sample-point selection (default 42)");

    // orthonormality
    std::string family = "all";
    int k = 0, n_max = 6, ell_max = 3;
    double beta = 1.0;
    auto* ortho = app.add_subcommand("orthonormality", "weighted Gram matrices of the families");
    ortho->add_option("--family", family, "lambda|guseinov|sturmian|oscillator|all");
    ortho->add_option("--k", k, "weight order of the r^k family");
    ortho->add_option("--beta", beta, "scaling parameter");
    ortho->add_option("--n-max", n_max);
    ortho->add_option("--ell-max", ell_max);

    // transforms
    double t_beta = 1.0;
    int t_nmax = 6, t_ellmax = 3;
    auto* trans = app.add_subcommand("transforms", "inter-basis reconstruction errors");
    trans->add_option("--beta", t_beta);
    trans->add_option("--n-max", t_nmax);
    trans->add_option("--ell-max", t_ellmax);

    // expand
    double e_mu = -1.0, e_alpha = 1.0, e_u = 0.0, e_x = 1e-3;
    int e_nmax = 200;
    auto* expandc = app.add_subcommand("expand", "radial Laguerre series of x^mu e^{u x}");
    expandc->add_option("--mu", e_mu);
    expandc->add_option("--alpha", e_alpha);
    expandc->add_option("--u", e_u);
    expandc->add_option("--x", e_x);
    expandc->add_option("--n-max", e_nmax);

    // addition
    int a_N = 1, a_L = 0, a_nmax = 16;
    double a_beta = 1.0, a_rprime = 0.5;
    auto* addc = app.add_subcommand("addition", "symmetrical one-range expansion study");
    addc->add_option("--N", a_N);
    addc->add_option("--L", a_L);
    addc->add_option("--beta", a_beta);
    addc->add_option("--rprime", a_rprime, "shift in units of 1/beta");
    addc->add_option("--n-max", a_nmax);

    // coulomb
    int c_k = 0, c_shells = 20, c_ellmax = 0;
    double c_zeta = 1.0, c_beta = -1.0;
    auto* coul = app.add_subcommand("coulomb", "weak-convergence study of the kernel expansion");
    coul->add_option("--k", c_k);
    coul->add_option("--zeta", c_zeta);
    coul->add_option("--beta", c_beta, "expansion scaling (default: zeta)");
    coul->add_option("--shells", c_shells);
    coul->add_option("--ell-max", c_ellmax);

    // diverge
    std::string d_probe = "inverse_power";
    double d_x = 1e-3, d_alpha = 1.0, d_mu = -1.0, d_N = 0.0;
    int d_k = 0, d_nmax = 200;
    auto* div = app.add_subcommand("diverge", "divergence probes");
    div->add_option("--probe", d_probe, "inverse_power|rearrangement|one_center");
    div->add_option("--x", d_x);
    div->add_option("--alpha", d_alpha);
    div->add_option("--mu", d_mu);
    div->add_option("--k", d_k);
    div->add_option("--N", d_N);
    div->add_option("--n-max", d_nmax);

    // accelerate
    std::string s_series = "ln2", s_method = "epsilon";
    double s_q = 0.5;
    int s_order = -1, s_nterms = 12;
    auto* acc = app.add_subcommand("accelerate", "sequence transformation studies");
    acc->add_option("--series", s_series, "ln2|geometric|laguerre_half");
    acc->add_option("--transform", s_method, "epsilon|levin_u|levin_t|theta");
    acc->add_option("--q", s_q, "ratio for the geometric series");
    acc->add_option("--order", s_order);
    acc->add_option("--n-terms", s_nterms);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ortho->parsed())
            return run_orthonormality(common, family, k, beta, n_max, ell_max);
        if (trans->parsed()) return run_transforms(common, t_beta, t_nmax, t_ellmax);
        if (expandc->parsed()) return run_expand(common, e_mu, e_alpha, e_u, e_x, e_nmax);
        if (addc->parsed()) return run_addition(common, a_N, a_L, a_beta, a_rprime, a_nmax);
        if (coul->parsed()) return run_coulomb(common, c_k, c_zeta, c_beta, c_shells, c_ellmax);
        if (div->parsed())
            return run_diverge(common, d_probe, d_x, d_alpha, d_mu, d_k, d_N, d_nmax);
        if (acc->parsed())
            return run_accelerate(common, s_series, s_method, s_q, s_order, s_nterms);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const QuadratureError& e) {
        std::cerr << "numerical nonconvergence: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
