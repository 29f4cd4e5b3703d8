#pragma once

#include <map>

#include "orbexp/types.hpp"

namespace orbexp {

/// Finite expansion of one source function over a target family: map from the
/// target index to a real coefficient. Scalar (radial-series) transforms key
/// their single index as (n, 0, 0).
struct CoeffTensor {
    BasisSpec source;
    BasisSpec target;
    std::map<QuantumIndex, double> entries;

    double coeff(const QuantumIndex& q) const {
        auto it = entries.find(q);
        return it == entries.end() ? 0.0 : it->second;
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto& [k, v] : entries) m = std::max(m, std::abs(v));
        return m;
    }
};

// ---- Lambda / B function pair ----
/// Lambda_{n,ell}^m over B_{nu+1,ell}^m, nu = 0..n-ell-1.
CoeffTensor lambda_to_bfun(int n, int ell, double beta);
/// B_{n,ell}^m over Lambda_{nu+ell+1,ell}^m, nu = 0..n-1 (n >= 1).
CoeffTensor bfun_to_lambda(int n, int ell, double beta);

// ---- Slater-type functions, integral principal number ----
CoeffTensor stf_to_lambda(int n, int ell, double beta);
CoeffTensor stf_to_bfun(int n, int ell, double beta);

// ---- scalar Laguerre-index transforms ----
/// L_n^(from) over L_{n-m}^(to), coefficients (from - to)_m / m!.
CoeffTensor laguerre_superscript_shift(int n, double from_sup, double to_sup);
/// hk_{n+1/2}(z) over e^{-z} L_m^(alpha)(2z); key (m,0,0).
CoeffTensor rbf_to_laguerre(int n, double alpha);
/// e^{-z} L_n^(alpha)(2z) over hk_{nu+1/2}(z); key (nu,0,0).
CoeffTensor laguerre_inverse_expand(int n, double alpha);

// ---- Guseinov r^k-orthonormal family ----
CoeffTensor lambda_to_guseinov(int k, int n, int ell, double beta);
CoeffTensor guseinov_to_lambda(int k, int n, int ell, double beta);
CoeffTensor guseinov_to_bfun(int k, int n, int ell, double beta);
CoeffTensor bfun_to_guseinov(int k, int n, int ell, double beta);
CoeffTensor guseinov_to_stf(int k, int n, int ell, double beta);

/// r^s B_{n,ell}^m as a finite B sum, s >= -1, n >= 1.
CoeffTensor power_times_bfun(int s, int n, int ell, double beta);

}  // namespace orbexp
