#include "orbexp/transforms.hpp"

#include <cmath>

#include "orbexp/mathutil.hpp"

namespace orbexp {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

CoeffTensor lambda_to_bfun(int n, int ell, double beta) {
    require(n >= 1 && ell >= 0 && ell <= n - 1, "lambda_to_bfun: require 1 <= ell+1 <= n");
    CoeffTensor t{BasisSpec::lambda(beta), BasisSpec::bfun(beta), {}};
    LogSigned pref = LogSigned::of(std::pow(2.0 * beta, 1.5)) *
                     LogSigned::of(std::pow(2.0, ell)) *
                     LogSigned::of((2.0 * n + 1.0) / double_factorial(2 * ell + 3)) *
                     (lfactorial(double(n + ell + 1)) / lfactorial(double(n - ell - 1))).sqrt();
    for (int nu = 0; nu <= n - ell - 1; ++nu) {
        LogSigned c = pref * pochhammer_ls(-n + ell + 1, nu) * pochhammer_ls(n + ell + 2, nu) /
                      (lfactorial(double(nu)) * pochhammer_ls(ell + 2.5, nu));
        t.entries[{nu + 1, ell, 0}] = c.value();
    }
    return t;
}

CoeffTensor bfun_to_lambda(int n, int ell, double beta) {
    require(n >= 1 && ell >= 0, "bfun_to_lambda: require n >= 1, ell >= 0");
    CoeffTensor t{BasisSpec::bfun(beta), BasisSpec::lambda(beta), {}};
    LogSigned pref = LogSigned::of(std::pow(2.0 * beta, -1.5)) * pochhammer_ls(n + 2 * ell + 3, n - 1) /
                     (LogSigned::of(std::pow(2.0, 2 * n + 2 * ell - 1)) *
                      lfactorial(double(n + ell)));
    for (int nu = 0; nu <= n - 1; ++nu) {
        LogSigned c = pref * pochhammer_ls(1 - n, nu) / pochhammer_ls(n + 2 * ell + 3, nu) *
                      (lfactorial(double(nu + 2 * ell + 2)) / lfactorial(double(nu))).sqrt();
        t.entries[{nu + ell + 1, ell, 0}] = c.value();
    }
    return t;
}

CoeffTensor stf_to_lambda(int n, int ell, double beta) {
    require(n >= ell + 1, "stf_to_lambda: require n >= ell + 1");
    CoeffTensor t{BasisSpec::stf(double(n), beta), BasisSpec::lambda(beta), {}};
    LogSigned pref = LogSigned::of(std::pow(2.0 * beta, -1.5)) *
                     pochhammer_ls(2 * ell + 3, n - ell - 1) /
                     LogSigned::of(std::pow(2.0, n - 1));
    for (int nu = 0; nu <= n - ell - 1; ++nu) {
        LogSigned c = pref * pochhammer_ls(-n + ell + 1, nu) / pochhammer_ls(2 * ell + 3, nu) *
                      (lfactorial(double(nu + 2 * ell + 2)) / lfactorial(double(nu))).sqrt();
        t.entries[{nu + ell + 1, ell, 0}] = c.value();
    }
    return t;
}

CoeffTensor stf_to_bfun(int n, int ell, double beta) {
    require(n >= ell + 1, "stf_to_bfun: require n >= ell + 1");
    CoeffTensor t{BasisSpec::stf(double(n), beta), BasisSpec::bfun(beta), {}};
    for (int sigma = 0;; ++sigma) {
        LogSigned p1 = pochhammer_ls(-0.5 * (n - ell - 1), sigma);
        LogSigned p2 = pochhammer_ls(-0.5 * (n - ell), sigma);
        if (p1.sign == 0 || p2.sign == 0) break;
        LogSigned c = LogSigned::of(std::pow(2.0, n)) * LogSigned::of(parity(sigma)) * p1 * p2 /
                      lfactorial(double(sigma)) * lfactorial(double(n - sigma));
        t.entries[{n - ell - sigma, ell, 0}] = c.value();
        if (n - ell - (sigma + 1) < 1) break;  // next index would leave the regular range
    }
    return t;
}

CoeffTensor laguerre_superscript_shift(int n, double from_sup, double to_sup) {
    require(n >= 0, "laguerre_superscript_shift: n >= 0");
    CoeffTensor t;
    for (int m = 0; m <= n; ++m) {
        LogSigned c = pochhammer_ls(from_sup - to_sup, m) / lfactorial(double(m));
        if (c.sign != 0) t.entries[{n - m, 0, 0}] = c.value();
        if (c.sign == 0 && m > 0) break;  // integral difference truncates
    }
    return t;
}

CoeffTensor rbf_to_laguerre(int n, double alpha) {
    require(n >= 0 && alpha > -1.0, "rbf_to_laguerre: n >= 0, alpha > -1");
    CoeffTensor t;
    LogSigned pref = lfactorial(double(n)) / LogSigned::of(std::pow(2.0, n));
    for (int m = 0; m <= n; ++m) {
        // binom(2n + alpha + 1, n - m)
        LogSigned b = lgamma_signed(2.0 * n + alpha + 2.0) /
                      (lfactorial(double(n - m)) * lgamma_signed(n + alpha + m + 2.0));
        LogSigned c = pref * LogSigned::of(parity(m)) * b;
        t.entries[{m, 0, 0}] = c.value();
    }
    return t;
}

CoeffTensor laguerre_inverse_expand(int n, double alpha) {
    require(n >= 0, "laguerre_inverse_expand: n >= 0");
    CoeffTensor t;
    for (int nu = 0; nu <= n; ++nu) {
        LogSigned c = LogSigned::of(2.0 * n + alpha + 1.0) *
                      LogSigned::of(parity(nu)) * LogSigned::of(std::pow(2.0, nu)) *
                      lgamma_signed(n + alpha + nu + 1.0) /
                      (lfactorial(double(nu)) * lfactorial(double(n - nu)) *
                       lgamma_signed(alpha + 2.0 * nu + 2.0));
        t.entries[{nu, 0, 0}] = c.value();
    }
    return t;
}

CoeffTensor lambda_to_guseinov(int k, int n, int ell, double beta) {
    require(k >= -1 && n >= 1 && ell <= n - 1, "lambda_to_guseinov: bad indices");
    CoeffTensor t{BasisSpec::lambda(beta), BasisSpec::guseinov(k, beta), {}};
    const int nu_max = (k >= 0) ? std::min(n - ell - 1, k) : n - ell - 1;
    for (int nu = 0; nu <= nu_max; ++nu) {
        // bracket resolved as the product (n-ell-nu)_nu (n+ell+2)_{k-nu}, i.e.
        // (n-ell-1)! (n-nu+ell+k+1)! / [(n+ell+1)! (n-nu-ell-1)!]
        LogSigned bracket = (lfactorial(double(n - ell - 1)) *
                             lgamma_signed(n - nu + ell + k + 2.0) /
                             (lfactorial(double(n + ell + 1)) *
                              lfactorial(double(n - nu - ell - 1))))
                                .sqrt();
        LogSigned c = LogSigned::of(std::pow(2.0 * beta, -0.5 * k)) * bracket *
                      pochhammer_ls(double(-k), nu) / lfactorial(double(nu));
        if (c.sign != 0) t.entries[{n - nu, ell, 0}] = c.value();
    }
    return t;
}

CoeffTensor guseinov_to_lambda(int k, int n, int ell, double beta) {
    require(k >= -1 && n >= 1 && ell <= n - 1, "guseinov_to_lambda: bad indices");
    CoeffTensor t{BasisSpec::guseinov(k, beta), BasisSpec::lambda(beta), {}};
    for (int nu = 0; nu <= n - ell - 1; ++nu) {
        // [(n-ell-nu)_nu / (n+ell-nu+2)_{k+nu}]^{1/2} (k)_nu / nu!
        LogSigned bracket = (lfactorial(double(n - ell - 1)) *
                             lfactorial(double(n - nu + ell + 1)) /
                             (lgamma_signed(n + ell + k + 2.0) *
                              lfactorial(double(n - nu - ell - 1))))
                                .sqrt();
        LogSigned c = LogSigned::of(std::pow(2.0 * beta, 0.5 * k)) * bracket *
                      pochhammer_ls(double(k), nu) / lfactorial(double(nu));
        if (c.sign != 0) t.entries[{n - nu, ell, 0}] = c.value();
        if (c.sign == 0 && nu > 0) break;  // (k)_nu = 0 for k = 0 beyond nu = 0
    }
    return t;
}

CoeffTensor guseinov_to_bfun(int k, int n, int ell, double beta) {
    require(k >= -1 && n >= 1 && ell <= n - 1, "guseinov_to_bfun: bad indices");
    CoeffTensor t{BasisSpec::guseinov(k, beta), BasisSpec::bfun(beta), {}};
    LogSigned pref = (LogSigned::of(std::pow(beta, k + 3.0)) *
                      lgamma_signed(n + ell + k + 2.0) /
                      (LogSigned::of(std::pow(2.0, k + 1.0)) * lfactorial(double(n - ell - 1))))
                         .sqrt() *
                     LogSigned::of(2.0 * n + k + 1.0) * lgamma_signed(0.5) *
                     lfactorial(double(ell + 1)) /
                     (lgamma_signed(ell + 2.0 + 0.5 * k) * lgamma_signed(ell + 0.5 * (k + 5.0)));
    for (int nu = 0; nu <= n - ell - 1; ++nu) {
        LogSigned c = pref * pochhammer_ls(-n + ell + 1, nu) *
                      pochhammer_ls(n + ell + k + 2.0, nu) * pochhammer_ls(ell + 2.0, nu) /
                      (lfactorial(double(nu)) * pochhammer_ls(ell + 2.0 + 0.5 * k, nu) *
                       pochhammer_ls(ell + 0.5 * (k + 5.0), nu));
        t.entries[{nu + 1, ell, 0}] = c.value();
    }
    return t;
}

CoeffTensor bfun_to_guseinov(int k, int n, int ell, double beta) {
    require(k >= -1 && n >= 1 && ell >= 0, "bfun_to_guseinov: bad indices");
    CoeffTensor t{BasisSpec::bfun(beta), BasisSpec::guseinov(k, beta), {}};
    LogSigned pref = pochhammer_ls(n + 2 * ell + k + 3.0, n - 1) /
                     (LogSigned::of(std::pow(2.0, 2 * n + 2 * ell - 1)) *
                      lfactorial(double(n + ell)));
    for (int nu = 0; nu <= n - 1; ++nu) {
        LogSigned c = pref * pochhammer_ls(1 - n, nu) /
                      pochhammer_ls(n + 2 * ell + k + 3.0, nu) *
                      (lgamma_signed(nu + 2 * ell + k + 3.0) /
                       (LogSigned::of(std::pow(2.0 * beta, k + 3.0)) * lfactorial(double(nu))))
                          .sqrt();
        t.entries[{nu + ell + 1, ell, 0}] = c.value();
    }
    return t;
}

CoeffTensor guseinov_to_stf(int k, int n, int ell, double beta) {
    require(k >= -1 && n >= 1 && ell <= n - 1, "guseinov_to_stf: bad indices");
    CoeffTensor t{BasisSpec::guseinov(k, beta), BasisSpec::stf(double(ell + 1), beta), {}};
    LogSigned pref = LogSigned::of(std::pow(2.0, ell)) *
                     (LogSigned::of(std::pow(2.0 * beta, k + 3.0)) *
                      lgamma_signed(n + ell + k + 2.0) / lfactorial(double(n - ell - 1)))
                         .sqrt();
    for (int nu = 0; nu <= n - ell - 1; ++nu) {
        LogSigned c = pref * pochhammer_ls(-n + ell + 1, nu) * LogSigned::of(std::pow(2.0, nu)) /
                      (lgamma_signed(2 * ell + k + nu + 3.0) * lfactorial(double(nu)));
        t.entries[{nu + ell + 1, ell, 0}] = c.value();
    }
    return t;
}

CoeffTensor power_times_bfun(int s, int n, int ell, double beta) {
    require(s >= -1 && n >= 1, "power_times_bfun: require s >= -1, n >= 1");
    CoeffTensor t{BasisSpec::bfun(beta), BasisSpec::bfun(beta), {}};
    for (int sigma = 0;; ++sigma) {
        LogSigned p1 = pochhammer_ls(-0.5 * s, sigma);
        LogSigned p2 = pochhammer_ls(-n - 0.5 * (s - 1.0), sigma);
        if (p1.sign == 0 || p2.sign == 0) break;
        // (n+ell+1)_{s-sigma} multiplies; negative counts (s = -1) go
        // through the Gamma-ratio form
        LogSigned poch = lgamma_signed(n + ell + 1.0 + s - sigma) /
                         lgamma_signed(n + ell + 1.0);
        LogSigned c = LogSigned::of(std::pow(2.0 / beta, double(s))) *
                      LogSigned::of(parity(sigma)) * p1 * p2 * poch /
                      lfactorial(double(sigma));
        t.entries[{n + s - sigma, ell, 0}] = c.value();
        if (sigma > n + std::abs(s) + 2) break;  // safety stop
    }
    return t;
}

}  // namespace orbexp
