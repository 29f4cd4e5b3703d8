#include "orbexp/special.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "orbexp/mathutil.hpp"

namespace orbexp {

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw std::domain_error("laguerre: n must be >= 0");
    if (n == 0) return 1.0;
    if (n == 1) return alpha + 1.0 - x;
    double lm1 = 1.0;
    double l = alpha + 1.0 - x;
    for (int k = 1; k < n; ++k) {
        double lp1 = ((2.0 * k + alpha + 1.0 - x) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

double reduced_bessel(HalfOrder nu, double z) {
    if (!(z > 0.0)) throw std::domain_error("reduced_bessel: z must be > 0");
    if (nu.twice_nu % 2 == 0)
        throw std::domain_error("reduced_bessel: only half-integral orders supported");
    if (nu.twice_nu < 0) {
        // hk_{-nu}(z) = z^{-2 nu} hk_nu(z)
        return std::pow(z, double(nu.twice_nu)) * reduced_bessel(HalfOrder{-nu.twice_nu}, z);
    }
    // upward from hk_{-1/2} = e^-z / z and hk_{1/2} = e^-z
    double km = std::exp(-z) / z;
    double k = std::exp(-z);
    if (nu.twice_nu == 1) return k;
    double order = 0.5;
    for (int steps = (nu.twice_nu - 1) / 2; steps > 0; --steps) {
        double kp = 2.0 * order * k + z * z * km;
        km = k;
        k = kp;
        order += 1.0;
    }
    return k;
}

namespace {

// Associated Legendre P_l^m(x), m >= 0, no Condon-Shortley phase in P itself.
double assoc_legendre(int l, int m, double x) {
    double pmm = 1.0;
    if (m > 0) {
        double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
        double fact = 1.0;
        for (int i = 0; i < m; ++i) {
            pmm *= fact * somx2;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = ((2.0 * ll - 1.0) * x * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

std::complex<double> ipow_binomial(std::complex<double> base, int e) {
    std::complex<double> r{1.0, 0.0};
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

std::complex<double> spherical_harmonic(const AngularIndex& a, double theta, double phi) {
    const int l = a.ell, m = a.m, am = std::abs(a.m);
    double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI) *
                            std::exp(std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0)));
    double p = assoc_legendre(l, am, std::cos(theta));
    // i^{m+|m|}: (-1)^m for m > 0, +1 for m <= 0
    double phase = (m > 0 && m % 2 != 0) ? -1.0 : 1.0;
    return phase * norm * p * std::polar(1.0, m * phi);
}

std::complex<double> spherical_harmonic(const AngularIndex& a, const Vec3& v) {
    double r = norm(v);
    if (r == 0.0) throw std::domain_error("spherical_harmonic: zero direction vector");
    double theta = std::acos(std::clamp(v[2] / r, -1.0, 1.0));
    double phi = std::atan2(v[1], v[0]);
    return spherical_harmonic(a, theta, phi);
}

std::complex<double> regular_solid_harmonic(const AngularIndex& a, const Vec3& r) {
    const int l = a.ell, m = a.m;
    if (m < 0) {
        auto v = regular_solid_harmonic(AngularIndex(l, -m), r);
        return double(parity(m)) * std::conj(v);
    }
    const std::complex<double> xm{-r[0], -r[1]};  // -x - i y
    const std::complex<double> xp{r[0], -r[1]};   //  x - i y
    const double z = r[2];
    double pref = std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI) *
                            std::exp(std::lgamma(l + m + 1.0) + std::lgamma(l - m + 1.0)));
    std::complex<double> sum{0.0, 0.0};
    for (int k = 0; m + 2 * k <= l; ++k) {
        double denom = std::exp(std::lgamma(m + k + 1.0) + std::lgamma(k + 1.0) +
                                std::lgamma(l - m - 2.0 * k + 1.0)) *
                       std::pow(2.0, m + 2 * k);
        sum += ipow_binomial(xm, m + k) * ipow_binomial(xp, k) *
               std::pow(z, double(l - m - 2 * k)) / denom;
    }
    return pref * sum;
}

std::complex<double> irregular_solid_harmonic(const AngularIndex& a, const Vec3& rv) {
    double r = norm(rv);
    if (r == 0.0) throw std::domain_error("irregular_solid_harmonic: singular at the origin");
    return std::pow(r, -a.ell - 1.0) * spherical_harmonic(a, rv);
}

double wigner3j(int l1, int l2, int l3, int m1, int m2, int m3) {
    if (m1 + m2 + m3 != 0) return 0.0;
    if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3) return 0.0;
    if (l3 < std::abs(l1 - l2) || l3 > l1 + l2) return 0.0;

    LogSigned delta = (lfactorial(double(l1 + l2 - l3)) * lfactorial(double(l1 - l2 + l3)) *
                       lfactorial(double(-l1 + l2 + l3)) / lfactorial(double(l1 + l2 + l3 + 1)))
                          .sqrt();
    LogSigned fpref = (lfactorial(double(l1 + m1)) * lfactorial(double(l1 - m1)) *
                       lfactorial(double(l2 + m2)) * lfactorial(double(l2 - m2)) *
                       lfactorial(double(l3 + m3)) * lfactorial(double(l3 - m3)))
                          .sqrt();

    int tmin = std::max({0, l2 - l3 - m1, l1 - l3 + m2});
    int tmax = std::min({l1 + l2 - l3, l1 - m1, l2 + m2});
    double sum = 0.0;
    for (int t = tmin; t <= tmax; ++t) {
        LogSigned den = lfactorial(double(t)) * lfactorial(double(l3 - l2 + t + m1)) *
                        lfactorial(double(l3 - l1 + t - m2)) *
                        lfactorial(double(l1 + l2 - l3 - t)) * lfactorial(double(l1 - t - m1)) *
                        lfactorial(double(l2 - t + m2));
        sum += parity(t) * (delta * fpref / den).value();
    }
    return parity(l1 - l2 - m3) * sum;
}

GauntLimits gaunt_limits(int l1, int m1, int l2, int m2) {
    if (std::abs(m1) > l1 || std::abs(m2) > l2)
        throw std::invalid_argument("gaunt_limits: |m| > ell");
    int lmax = l1 + l2;
    int lam = std::max(std::abs(l1 - l2), std::abs(m1 + m2));
    int lmin = ((lmax + lam) % 2 == 0) ? lam : lam + 1;
    return {lmin, lmax, 2};
}

CouplingDeltas delta_ell(int l1, int l2, int l) {
    if ((l1 + l2 + l) % 2 != 0)
        throw std::invalid_argument("delta_ell: odd-parity coupling triple");
    CouplingDeltas d{(l1 + l2 - l) / 2, (l - l1 + l2) / 2, (l + l1 - l2) / 2, (l1 + l2 + l) / 2};
    if (d.dl < 0 || d.dl1 < 0 || d.dl2 < 0)
        throw std::invalid_argument("delta_ell: triple violates triangle condition");
    return d;
}

double gaunt(const GauntKey& k) {
    if (std::abs(k.m1) > k.l1 || std::abs(k.m2) > k.l2 || std::abs(k.m3) > k.l3)
        throw std::invalid_argument("gaunt: |m| > ell");
    if (k.m3 != k.m1 + k.m2) return 0.0;
    if ((k.l1 + k.l2 + k.l3) % 2 != 0) return 0.0;
    auto lim = gaunt_limits(k.l1, k.m1, k.l2, k.m2);
    if (k.l3 < lim.ell_min || k.l3 > lim.ell_max) return 0.0;
    double pref = std::sqrt((2.0 * k.l1 + 1.0) * (2.0 * k.l2 + 1.0) * (2.0 * k.l3 + 1.0) /
                            (4.0 * M_PI));
    return parity(k.m3) * pref * wigner3j(k.l1, k.l2, k.l3, 0, 0, 0) *
           wigner3j(k.l1, k.l2, k.l3, k.m1, k.m2, -k.m3);
}

namespace {

// Pack (l3,m3)(l2,m2)(l1,m1) into one key; the (2,1) legs are ordered
// canonically to share storage across the exchange symmetry.
std::uint64_t pack_key(const GauntKey& k) {
    int a2 = k.l2, b2 = k.m2, a1 = k.l1, b1 = k.m1;
    if (a1 > a2 || (a1 == a2 && b1 > b2)) {
        std::swap(a1, a2);
        std::swap(b1, b2);
    }
    auto enc = [](int l, int m) -> std::uint64_t {
        return (std::uint64_t(l) << 10) | std::uint64_t(m + 512);
    };
    return (enc(k.l3, k.m3) << 40) | (enc(a2, b2) << 20) | enc(a1, b1);
}

}  // namespace

double GauntTable::coeff(const GauntKey& key) const {
    const std::uint64_t pk = pack_key(key);
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(pk);
        if (it != table_.end()) return it->second;
    }
    double v = gaunt(key);
    std::unique_lock lock(mutex_);
    table_.emplace(pk, v);
    return v;
}

void GauntTable::prepopulate(int ell_max) {
    std::unique_lock lock(mutex_);
    for (int l1 = 0; l1 <= ell_max; ++l1)
        for (int m1 = -l1; m1 <= l1; ++m1)
            for (int l2 = 0; l2 <= ell_max; ++l2)
                for (int m2 = -l2; m2 <= l2; ++m2) {
                    auto lim = gaunt_limits(l1, m1, l2, m2);
                    for (int l3 = lim.ell_min; l3 <= lim.ell_max; l3 += 2) {
                        GauntKey key{l3, m1 + m2, l2, m2, l1, m1};
                        table_.emplace(pack_key(key), gaunt(key));
                    }
                }
}

std::size_t GauntTable::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

}  // namespace orbexp
