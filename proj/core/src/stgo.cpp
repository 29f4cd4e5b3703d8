#include "orbexp/stgo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "orbexp/mathutil.hpp"
#include "orbexp/quadrature.hpp"
#include "orbexp/special.hpp"

namespace orbexp {

void ExpPolyRadial::compress() {
    std::map<std::pair<int, long long>, double> acc;
    for (const auto& t : terms_) {
        long long akey = llround(t.a * 1e12);
        acc[{t.p, akey}] += t.c;
    }
    terms_.clear();
    for (const auto& [key, c] : acc)
        if (c != 0.0) terms_.push_back({c, key.first, key.second * 1e-12});
}

ExpPolyRadial ExpPolyRadial::reduced_bessel_half(int n, double beta) {
    if (n < 0) throw std::domain_error("reduced_bessel_half: n >= 0");
    // upward: hk_{nu+1}(z) = 2 nu hk_nu(z) + z^2 hk_{nu-1}(z), z = beta r
    // km tracks hk_{-1/2} which is e^{-z}/z
    ExpPolyRadial km({{1.0 / beta, -1, beta}});
    ExpPolyRadial k({{1.0, 0, beta}});
    double nu = 0.5;
    for (int i = 0; i < n; ++i) {
        ExpPolyRadial kp = k.scaled(2.0 * nu) +
                           km.times_power(2).scaled(beta * beta);
        km = k;
        k = kp;
        nu += 1.0;
    }
    return k;
}

ExpPolyRadial ExpPolyRadial::bfun_radial(int n, int ell, double beta) {
    if (n + ell < 0) throw std::domain_error("bfun_radial: distributional index range");
    double nrm = 1.0 / (std::pow(2.0, n + ell) * factorial(n + ell));
    ExpPolyRadial hk = (n >= 1)
                           ? reduced_bessel_half(n - 1, beta)
                           // hk_{n-1/2} = (beta r)^{2n-1} hk_{(1-2n)/2}... reflection:
                           // hk_{-nu} = z^{-2nu} hk_nu with nu = 1/2 - n >= 1/2
                           : reduced_bessel_half(-n, beta).times_power(2 * n - 1).scaled(
                                 std::pow(beta, 2.0 * n - 1.0));
    return hk.times_power(ell).scaled(nrm * std::pow(beta, double(ell)));
}

double ExpPolyRadial::operator()(double r) const {
    double s = 0.0;
    for (const auto& t : terms_) s += t.c * std::pow(r, double(t.p)) * std::exp(-t.a * r);
    return s;
}

ExpPolyRadial ExpPolyRadial::ddr() const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.p != 0) out.push_back({t.c * t.p, t.p - 1, t.a});
        if (t.a != 0.0) out.push_back({-t.c * t.a, t.p, t.a});
    }
    return ExpPolyRadial(std::move(out));
}

ExpPolyRadial ExpPolyRadial::rinv_ddr(int j) const {
    ExpPolyRadial f = *this;
    for (int i = 0; i < j; ++i) f = f.ddr().times_power(-1);
    return f;
}

ExpPolyRadial ExpPolyRadial::times_power(int p) const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.p += p;
    return ExpPolyRadial(std::move(out));
}

ExpPolyRadial ExpPolyRadial::scaled(double factor) const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.c *= factor;
    return ExpPolyRadial(std::move(out));
}

ExpPolyRadial ExpPolyRadial::operator+(const ExpPolyRadial& o) const {
    std::vector<Term> out = terms_;
    out.insert(out.end(), o.terms_.begin(), o.terms_.end());
    return ExpPolyRadial(std::move(out));
}

RadialFunctionHandle RadialFunctionHandle::from_exppoly(ExpPolyRadial f) {
    RadialFunctionHandle h;
    h.analytic = std::move(f);
    h.value = [g = *h.analytic](double r) { return g(r); };
    return h;
}

RadialFunctionHandle RadialFunctionHandle::from_function(std::function<double(double)> f) {
    RadialFunctionHandle h;
    h.value = std::move(f);
    return h;
}

double RadialFunctionHandle::ring_derivative(int j, double r) const {
    if (analytic) return analytic->rinv_ddr(j)(r);
    // Richardson-extrapolated central differences, h halving per level
    std::function<double(int, double)> ring = [&](int jj, double rr) -> double {
        if (jj == 0) return value(rr);
        const int levels = 5;
        double h = 0.05 * std::max(rr, 0.5);
        std::vector<double> est(levels);
        for (int i = 0; i < levels; ++i) {
            est[i] = (ring(jj - 1, rr + h) - ring(jj - 1, rr - h)) / (2.0 * h * rr);
            h *= 0.5;
        }
        // Richardson on the h^2 error ladder
        for (int k = 1; k < levels; ++k)
            for (int i = levels - 1; i >= k; --i)
                est[i] = (std::pow(4.0, k) * est[i] - est[i - 1]) / (std::pow(4.0, k) - 1.0);
        return est[levels - 1];
    };
    return ring(j, r);
}

std::complex<double> TensorDerivativeResult::eval(const Vec3& r) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& t : terms)
        acc += t.gaunt_weight * t.radial(norm(r)) * spherical_harmonic(t.angular, r);
    return acc;
}

TensorDerivativeResult stgo_on_radial(int ell, int m, const RadialFunctionHandle& phi) {
    if (!phi.analytic) {
        // FD path still works through ring_derivative; keep it callable
        TensorDerivativeResult res;
        RadialFunctionHandle rad = RadialFunctionHandle::from_function(
            [phi, ell](double r) { return phi.ring_derivative(ell, r) * std::pow(r, double(ell)); });
        res.terms.push_back({AngularIndex(ell, m), 1.0, std::move(rad)});
        return res;
    }
    TensorDerivativeResult res;
    ExpPolyRadial g = ell == 0 ? *phi.analytic : phi.analytic->rinv_ddr(ell).times_power(ell);
    res.terms.push_back({AngularIndex(ell, m), 1.0, RadialFunctionHandle::from_exppoly(g)});
    return res;
}

std::vector<StgoLinTerm> stgo_linearize(int l1, int m1, int l2, int m2) {
    std::vector<StgoLinTerm> out;
    auto lim = gaunt_limits(l1, m1, l2, m2);
    for (int l = lim.ell_min; l <= lim.ell_max; l += 2) {
        double g = gaunt(l, m1 + m2, l1, m1, l2, m2);
        auto d = delta_ell(l1, l2, l);
        out.push_back({l, g, d.dl});
    }
    return out;
}

RadialFunctionHandle gamma_radial(int form, const RadialFunctionHandle& f, int l1, int l2,
                                  int ell) {
    if (!f.analytic)
        throw std::domain_error("gamma_radial: closed-form derivatives unavailable for this radial");
    auto d = delta_ell(l1, l2, ell);
    const ExpPolyRadial& fr = *f.analytic;
    switch (form) {
        case 1: {
            ExpPolyRadial acc;
            for (int q = 0; q <= d.dl; ++q) {
                double coef = pochhammer(double(-d.dl), q) * pochhammer(-d.sigma - 0.5, q) /
                              factorial(q) * std::pow(2.0, q);
                ExpPolyRadial piece =
                    fr.times_power(-l2).rinv_ddr(l1 - q).times_power(l1 + l2 - 2 * q).scaled(coef);
                acc = acc + piece;
            }
            return RadialFunctionHandle::from_exppoly(acc);
        }
        case 2:
            return RadialFunctionHandle::from_exppoly(fr.times_power(-l2)
                                                          .rinv_ddr(d.dl2)
                                                          .times_power(l1 + l2 + ell + 1)
                                                          .rinv_ddr(d.dl)
                                                          .times_power(-ell - 1));
        case 3:
            return RadialFunctionHandle::from_exppoly(fr.times_power(l2 + 1)
                                                          .rinv_ddr(d.dl)
                                                          .times_power(l1 - l2 - ell - 1)
                                                          .rinv_ddr(d.dl2)
                                                          .times_power(ell));
        case 4:
            if (l2 < ell) throw std::domain_error("gamma_radial: form 4 requires l2 >= ell");
            return RadialFunctionHandle::from_exppoly(fr.times_power(l2 + 1)
                                                          .rinv_ddr(l2 - ell)
                                                          .times_power(-2 * ell - 1)
                                                          .rinv_ddr(d.dl2)
                                                          .times_power(l1 - l2 + 3 * ell + 1)
                                                          .rinv_ddr(d.dl2)
                                                          .times_power(-ell - 1));
        case 5:
            if (ell < l2) throw std::domain_error("gamma_radial: form 5 requires ell >= l2");
            return RadialFunctionHandle::from_exppoly(fr.times_power(-l2)
                                                          .rinv_ddr(ell - l2)
                                                          .times_power(2 * ell + 1)
                                                          .rinv_ddr(d.dl)
                                                          .times_power(l1 + l2 - 3 * ell - 1)
                                                          .rinv_ddr(d.dl)
                                                          .times_power(ell));
        case 6: {
            ExpPolyRadial acc;
            for (int s = 0; s <= d.dl2; ++s) {
                double coef = pochhammer(double(-d.dl2), s) * pochhammer(d.dl1 + 0.5, s) /
                              factorial(s) * std::pow(2.0, s);
                ExpPolyRadial piece = fr.times_power(l2 + 1)
                                          .rinv_ddr(l1 - s)
                                          .times_power(l1 - l2 - 2 * s - 1)
                                          .scaled(coef);
                acc = acc + piece;
            }
            return RadialFunctionHandle::from_exppoly(acc);
        }
        default:
            throw std::invalid_argument("gamma_radial: form must be 1..6");
    }
}

CoeffTensor stgo_on_bfun(int l1, int m1, int n2, int l2, int m2, double beta) {
    CoeffTensor t{BasisSpec::bfun(beta), BasisSpec::bfun(beta), {}};
    auto lim = gaunt_limits(l1, m1, l2, m2);
    const double pref = std::pow(-beta, double(l1));
    for (int l = lim.ell_min; l <= lim.ell_max; l += 2) {
        double g = gaunt(l, m1 + m2, l1, m1, l2, m2);
        if (g == 0.0) continue;
        auto d = delta_ell(l1, l2, l);
        for (int tt = 0; tt <= d.dl; ++tt) {
            double c = pref * g * parity(tt) * binom_real(double(d.dl), tt);
            t.entries[{n2 + l2 - l - tt, l, m1 + m2}] += c;
        }
    }
    return t;
}

CoeffTensor laplacian_power_on_bfun(int nu, int n, int ell) {
    if (nu < 0) throw std::invalid_argument("laplacian_power_on_bfun: nu >= 0");
    if (n - nu < 1)
        throw std::domain_error(
            "laplacian_power_on_bfun: n - nu < 1 reaches the distributional index range");
    CoeffTensor t;
    for (int tt = 0; tt <= nu; ++tt)
        t.entries[{n - tt, ell, 0}] = parity(tt) * binom_real(double(nu), tt);
    return t;
}

std::vector<MonomialTerm> monomial_tensor_decomposition(int u, int v, int w) {
    const int n = u + v + w;
    if (u < 0 || v < 0 || w < 0) throw std::invalid_argument("monomial_tensor_decomposition");
    if (n > 6) throw std::domain_error("monomial_tensor_decomposition: degree above 6 unsupported");
    std::vector<MonomialTerm> out;
    for (int lambda = n % 2; lambda <= n; lambda += 2) {
        int nu = (n - lambda) / 2;
        for (int mu = -lambda; mu <= lambda; ++mu) {
            auto integrand = [&](double th, double ph) -> std::complex<double> {
                double x = std::sin(th) * std::cos(ph), y = std::sin(th) * std::sin(ph),
                       z = std::cos(th);
                double mono = std::pow(x, u) * std::pow(y, v) * std::pow(z, w);
                return std::conj(spherical_harmonic(AngularIndex(lambda, mu), th, ph)) * mono;
            };
            std::complex<double> c = sphere_quadrature(integrand, n + lambda + 2);
            if (std::abs(c) > 1e-13) out.push_back({nu, AngularIndex(lambda, mu), c});
        }
    }
    return out;
}

}  // namespace orbexp
