#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "orbexp/addition.hpp"
#include "orbexp/special.hpp"

using namespace orbexp;

TEST_SUITE_BEGIN("addition");

TEST_CASE("convolution theorem: scalar x scalar single term") {
    double beta = 1.3;
    auto t = bfun_convolution(1, 0, 0, 1, 0, 0, beta);
    REQUIRE(t.entries.size() == 1);
    CHECK(t.coeff({3, 0, 0}) ==
          doctest::Approx(4.0 * M_PI / std::pow(beta, 3.0) / std::sqrt(4.0 * M_PI))
              .epsilon(1e-13));
}

TEST_CASE("convolution theorem: p x p couples even ranks") {
    auto t = bfun_convolution(1, 1, 0, 1, 1, 0, 1.0);
    bool has0 = false, has2 = false;
    for (const auto& [q, c] : t.entries) {
        if (q.ell == 0) has0 = true;
        if (q.ell == 2) has2 = true;
        CHECK((q.ell == 0 || q.ell == 2));
    }
    CHECK(has0);
    CHECK(has2);
}

TEST_CASE("convolution theorem equals direct 3-D quadrature") {
    const double beta = 1.0;
    BasisSpec bs = BasisSpec::bfun(beta);
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    qs.rel_tol = 1e-9;
    qs.decay_hint = beta;
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
                                for (const auto& [q, c] : t.entries)
                                    got += c * eval(bs, q, r);
                                auto f = [&](const Vec3& u) {
                                    return eval(bs, {n1, l1, m1}, u);
                                };
                                auto g = [&](const Vec3& u) {
                                    return eval(bs, {n2, l2, m2}, u);
                                };
                                auto want = convolution_3d(f, g, r, qs,
                                                           std::max(8, 2 * (l1 + l2) + 4));
                                CHECK(std::abs(got - want) <=
                                      1e-8 * std::max(1e-4, std::abs(want)));
                            }
                        }
}

TEST_CASE("overlap: orthonormality at zero shift") {
    double beta = 1.0;
    OverlapRequest req;
    req.bra_spec = req.ket_spec = BasisSpec::lambda(beta);
    req.bra = req.ket = {1, 0, 0};
    CHECK(overlap(req).real() == doctest::Approx(1.0).epsilon(1e-10));
    req.ket = {2, 0, 0};
    CHECK(std::abs(overlap(req)) < 1e-10);
}

TEST_CASE("overlap: analytic route equals quadrature route off center") {
    double beta = 1.1;
    OverlapRequest req;
    req.bra_spec = BasisSpec::lambda(beta);
    req.bra = {1, 0, 0};
    req.ket_spec = BasisSpec::bfun(beta);
    req.ket = {1, 0, 0};
    req.shift = Vec3{0.2, -0.3, 1.0 / beta};
    auto a = overlap_analytic(req);
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    qs.rel_tol = 1e-9;
    auto q = overlap_quadrature(req, qs);
    CHECK(std::abs(a - q) < 1e-8 * std::max(1.0, std::abs(a)));

    // with a nontrivial weight and angular structure
    req.bra = {2, 1, 0};
    req.ket = {1, 1, 1};
    req.weight = WeightSpec::r_power(1);
    a = overlap_analytic(req);
    q = overlap_quadrature(req, qs);
    CHECK(std::abs(a - q) < 1e-8 * std::max(1.0, std::abs(a)));

    // weight absorbed on the bra side for the r^k family, k = 2
    req.bra_spec = BasisSpec::guseinov(2, beta);
    req.bra = {2, 0, 0};
    req.ket_spec = BasisSpec::lambda(beta);
    req.ket = {1, 0, 0};
    req.weight = WeightSpec::r_power(2);
    a = overlap_analytic(req);
    q = overlap_quadrature(req, qs);
    CHECK(std::abs(a - q) < 1e-8 * std::max(1.0, std::abs(a)));
}

TEST_CASE("symmetric expansion: one-center rows collapse to the unit coefficient") {
    double beta = 1.0;
    auto T = symmetric_coeffs_lambda(1, 0, 0, 3, beta);
    BasisSpec lam = BasisSpec::lambda(beta);
    // C_{n1 l1 m1}(0) = sum_n2 T * Lambda_{n2 l2 m2}(0) = delta_{(n1 l1 m1),(1 0 0)}
    for (int n1 = 1; n1 <= 3; ++n1) {
        for (int l1 = 0; l1 < n1; ++l1) {
            for (int m1 = -l1; m1 <= l1; ++m1) {
                std::complex<double> acc{0.0, 0.0};
                for (const auto& [key, c] : T.entries) {
                    if (key.first != QuantumIndex{n1, l1, m1}) continue;
                    acc += c * eval(lam, key.second, Vec3{0, 0, 0});
                }
                double want = (n1 == 1 && l1 == 0 && m1 == 0) ? 1.0 : 0.0;
                CHECK(std::abs(acc - want) < 1e-10);
            }
        }
    }
}

TEST_CASE("symmetric expansion: reconstruction error decreases as the order doubles") {
    double beta = 1.0;
    Vec3 rp{0, 0, 0.5 / beta};
    BasisSpec lam = BasisSpec::lambda(beta);
    auto grid_error = [&](const SymCoeffTensor& T) {
        // weighted-L2 error on a radial grid along the axis through both points
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
    auto T8 = symmetric_coeffs_lambda(1, 0, 0, 8, beta);
    auto T16 = symmetric_coeffs_lambda(1, 0, 0, 16, beta);
    double e8 = grid_error(T8), e16 = grid_error(T16);
    CHECK(e16 < e8);
    CHECK(e16 < 0.05);  // the cusp at r = r' limits the mean-convergence rate
    // pointwise spot check at r = 1.5/beta z
    Vec3 rv{0, 0, 1.5 / beta};
    double direct = eval(lam, {1, 0, 0}, rv - rp).real();
    CHECK(std::abs(T16.reconstruct(rv, rp).real() - direct) < 5e-3 * std::abs(direct));
}

TEST_CASE("symmetric expansion: exchange structure for the nodeless member") {
    double beta = 1.0;
    // N = L + 1 = 1: swapping the two legs flips the argument sign, which for
    // L = 0 leaves the function unchanged: entries symmetric under exchange
    auto T = symmetric_coeffs_lambda(1, 0, 0, 4, beta, 2);
    auto inside_row_block = [](const QuantumIndex& q) {
        return q.n <= 4 && q.ell <= std::min(2, q.n - 1) && std::abs(q.m) <= q.ell;
    };
    int compared = 0;
    for (const auto& [key, c] : T.entries) {
        // exchange symmetry is only visible where both legs lie in the
        // computed row range; columns extend beyond it by construction
        if (!inside_row_block(key.second)) continue;
        auto swapped = std::make_pair(key.second, key.first);
        auto it = T.entries.find(swapped);
        if (it == T.entries.end()) {
            // the mirror row's finite column support ends earlier: the
            // symmetric partner is absent exactly when the value vanishes
            CHECK(std::abs(c) < 1e-9);
        } else {
            CHECK(c == doctest::Approx(it->second).epsilon(1e-9).scale(1.0));
            ++compared;
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("unsymmetrical expansion: equal scalings at zero shift terminate at one term") {
    double beta = 0.8;
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    auto X = guseinov_unsym_coeffs(1.0, 0, 0, 0, beta, beta, Vec3{0, 0, 0}, 4, 1, qs);
    for (const auto& [q, c] : X) {
        if (q == QuantumIndex{1, 0, 0}) {
            CHECK(std::abs(c) > 0.1);
        } else {
            CHECK(std::abs(c) < 1e-9);
        }
    }
    // the nonzero coefficient is exactly the closed-form x = 1 projection:
    // the target function equals e^{-beta r} Y00
    double want = guseinov_exp_coeff(0, 1.0, beta, 1);
    CHECK(X.at({1, 0, 0}).real() == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("unsymmetrical expansion: unequal scalings map onto the exponential-power series") {
    double beta = 0.7, gamma = 1.4;  // gamma = 2 beta
    int k = 1;
    QuadratureSpec qs;
    qs.abs_tol = 1e-12;
    auto X = guseinov_unsym_coeffs(1.0, 0, 0, k, gamma, beta, Vec3{0, 0, 0}, 6, 0, qs);
    // cross-module identity at N = 1:
    // X_n = sqrt((2 gamma)^{k+3} (n+k+1)!/(n-1)!) (2 gamma)^{-(k+3)}
    //       * c_{n-1}(mu = 0, u, alpha = k+2),  u = (gamma - beta)/(2 gamma)
    double u = (gamma - beta) / (2.0 * gamma);
    RadialSeriesSpec spec{0.0, u, double(k) + 2.0, 6};
    auto c = expo_power_laguerre_coeffs(spec);
    for (int n = 1; n <= 6; ++n) {
        double pref = std::sqrt(std::pow(2.0 * gamma, k + 3.0) *
                                std::exp(std::lgamma(n + k + 2.0) - std::lgamma(double(n)))) *
                      std::pow(2.0 * gamma, -double(k) - 3.0);
        double want = pref * c[n - 1];
        CHECK(X.at({n, 0, 0}).real() == doctest::Approx(want).epsilon(1e-8).scale(1e-10));
    }
}

TEST_CASE("unsymmetrical expansion: bessel bound closes with growing order") {
    double beta = 1.0;
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    Vec3 shift{0, 0, 0.6};
    // norm of the shifted target in the plain L2 space (k = 0 weight)
    double norm2 = 1.0 / (4.0 * std::pow(beta, 3.0));
    double sum2 = 0.0;
    std::vector<double> gaps;
    for (int n_cap : {2, 4, 8}) {
        auto X = guseinov_unsym_coeffs(1.0, 0, 0, 0, beta, beta, shift, n_cap, 2, qs);
        sum2 = 0.0;
        for (const auto& [q, c] : X) sum2 += std::norm(c);
        CHECK(sum2 <= norm2 * (1.0 + 1e-9));
        gaps.push_back(norm2 - sum2);
    }
    CHECK(gaps[1] < gaps[0]);
    CHECK(gaps[2] < gaps[1]);
}

TEST_CASE("one-center probe: nonintegral principal numbers have no rearranged limit") {
    auto r0 = one_center_nonexistence_probe(0.0, 0, 200);
    CHECK(r0.verdict == Verdict::diverging);
    CHECK(r0.partial_sums.back() > 10.0 * std::abs(r0.partial_sums.front()));
    auto r15 = one_center_nonexistence_probe(1.5, 0, 200);
    CHECK(r15.verdict == Verdict::diverging);
    auto r2 = one_center_nonexistence_probe(2.0, 0, 200);
    CHECK(r2.verdict == Verdict::converging);
    CHECK(r2.verdict_basis.find("terminating") != std::string::npos);
}

TEST_CASE("two-range expansion of the coulomb kernel") {
    // collinear pair: plain geometric series
    auto res = laplace_coulomb(Vec3{0, 0, 2}, Vec3{0, 0, 1}, 30);
    CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));
    // zero second argument: the monopole term alone, exactly 1/r
    auto res0 = laplace_coulomb(Vec3{0, 0, 2}, Vec3{1e-300, 0, 0}, 2);
    CHECK(res0.partial_sums[0] == doctest::Approx(0.5).epsilon(1e-12));
    // boundary throws
    CHECK_THROWS_AS(laplace_coulomb(Vec3{0, 0, 1}, Vec3{1, 0, 0}, 4), std::domain_error);
    // error decay slope for a generic pair with radius ratio 0.4
    Vec3 a{0.3, -1.1, 1.4};
    double an = norm(a);
    Vec3 b{0.55 * an * 0.4 / 0.7, 0.2 * an * 0.4 / 0.7, 0.45 * an * 0.4 / 0.7};
    // rescale b to |b| = 0.4 |a|
    double bn = norm(b);
    for (auto& x : b) x *= 0.4 * an / bn;
    double direct = 1.0 / norm(a - b);
    auto lr = laplace_coulomb(a, b, 34);
    // log-linear fit of the per-order error over the asymptotic window (the
    // rank-dependent Legendre factor adds slope noise at low orders)
    std::vector<double> xs, ys;
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
    CHECK(slope == doctest::Approx(std::log(0.4)).epsilon(0.05));
}

TEST_CASE("coulomb kernel tensor: selection rules, symmetry, oracle") {
    QuadratureSpec qs;
    qs.abs_tol = 1e-10;
    qs.rel_tol = 1e-9;
    auto G = coulomb_gamma(0, 1.0, 3, 1, qs);
    // selection rules baked into the key layout
    CHECK(G.coeff(1, 0, 0, 1, 1, 0) == 0.0);
    CHECK(G.coeff(1, 1, 1, 1, 1, -1) == 0.0);
    // exchange symmetry
    CHECK(G.coeff(1, 0, 0, 3, 0, 0) == doctest::Approx(G.coeff(3, 0, 0, 1, 0, 0)));
    // m-independence of the radial blocks
    CHECK(G.coeff(2, 1, 0, 3, 1, 0) == doctest::Approx(G.coeff(2, 1, 1, 3, 1, 1)));
    // brute-force double-radial oracle for the head entry (k = 0, beta = 1):
    // Gamma_11 = 4 pi II R1(r) R1(r') r^2 r'^2 / r_> with R1 = 2 e^{-r};
    // II e^{-r-r'} r^2 r'^2 / r_> = 2 Int e^{-y} y [2 - e^{-y}(y^2+2y+2)] dy = 5/4
    double want = 4.0 * M_PI * 4.0 * 1.25;  // = 20 pi
    CHECK(G.coeff(1, 0, 0, 1, 0, 0) == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("coulomb kernel tensor: csv round trip with sidecar") {
    QuadratureSpec qs;
    qs.abs_tol = 1e-9;
    qs.rel_tol = 1e-8;
    auto G = coulomb_gamma(0, 1.0, 2, 0, qs);
    auto dir = std::filesystem::temp_directory_path();
    auto csv = (dir / "orbexp_gamma_test.csv").string();
    auto side = (dir / "orbexp_gamma_test.json").string();
    G.save_csv(csv);
    G.save_sidecar(side);
    std::ifstream is(csv);
    std::string header;
    std::getline(is, header);
    CHECK(header == "n,l,m,n_prime,l_prime,m_prime,value");
    int rows = 0;
    for (std::string line; std::getline(is, line);) ++rows;
    CHECK(rows == int(G.entries.size()));
    std::ifstream js(side);
    std::string all((std::istreambuf_iterator<char>(js)), std::istreambuf_iterator<char>());
    CHECK(all.find("\"k\": 0") != std::string::npos);
    CHECK(all.find("version") != std::string::npos);
}

TEST_CASE("gamma s-block is positive semidefinite and its diagonal norms grow") {
    QuadratureSpec qs;
    qs.abs_tol = 1e-9;
    qs.rel_tol = 1e-8;
    auto G = coulomb_gamma(0, 1.0, 6, 0, qs);
    Eigen::MatrixXd M(6, 6);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) M(i - 1, j - 1) = G.coeff(i, 0, 0, j, 0, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
    // diagonal growth without plateau
    double acc = 0.0, prev_inc = 0.0;
    for (int i = 0; i < 6; ++i) {
        double inc = std::abs(M(i, i));
        CHECK(inc > prev_inc * 0.9);
        acc += inc;
        prev_inc = inc;
    }
    CHECK(acc > 10.0 * std::abs(M(0, 0)) * 0.5);
}

TEST_CASE("energy series: single basis-element densities hit one tensor entry") {
    QuadratureSpec qs;
    qs.abs_tol = 1e-9;
    qs.rel_tol = 1e-8;
    auto G = coulomb_gamma(0, 1.0, 3, 0, qs);
    std::map<QuantumIndex, double> f{{{2, 0, 0}, 1.0}}, g{{{3, 0, 0}, 1.0}};
    auto rep = coulomb_energy_series(f, g, G);
    REQUIRE(rep.partial_sums.size() == 1);
    CHECK(rep.partial_sums[0] == doctest::Approx(G.coeff(2, 0, 0, 3, 0, 0)));
}

TEST_CASE("yukawa pair energy: small and large screening behavior") {
    double zeta = 1.0;
    auto rho = [zeta](double r) { return zeta * zeta * zeta / M_PI * std::exp(-2.0 * zeta * r); };
    QuadratureSpec qs;
    qs.decay_hint = 2.0 * zeta;
    qs.abs_tol = 1e-11;
    qs.rel_tol = 1e-9;
    // zero screening is the bare result 5 zeta / 8
    CHECK(yukawa_pair_energy(rho, rho, 0.0, qs) ==
          doctest::Approx(0.625 * zeta).epsilon(1e-9));
    // large screening kills the kernel
    CHECK(yukawa_pair_energy(rho, rho, 50.0 * zeta, qs) < 1e-3);
    // monotone increase toward the unscreened value
    auto rep = yukawa_vs_coulomb_limit({1.0, 0.5, 0.25, 0.125}, rho, rho, 0.625 * zeta, qs);
    for (std::size_t i = 1; i < rep.values.size(); ++i) CHECK(rep.values[i] > rep.values[i - 1]);
    // the coarse ladder extrapolates to ~4e-3; the halved ladder reaches 1e-5
    CHECK(std::abs(rep.extrapolated - 0.625 * zeta) < 5e-3);
    auto fine = yukawa_vs_coulomb_limit({0.125, 0.0625, 0.03125, 0.015625}, rho, rho,
                                        0.625 * zeta, qs);
    CHECK(std::abs(fine.extrapolated - 0.625 * zeta) < 1e-5);
}

TEST_SUITE_END();
