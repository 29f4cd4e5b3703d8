#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "orbexp/transforms.hpp"
#include "orbexp/types.hpp"

namespace orbexp {

/// Exact radial algebra on finite sums of c r^p e^{-a r} (integer p, possibly
/// negative). Closed under d/dr, (1/r d/dr)^j, and multiplication by integer
/// powers, which is all the tensor-gradient machinery needs.
class ExpPolyRadial {
  public:
    struct Term {
        double c;
        int p;
        double a;
    };

    ExpPolyRadial() = default;
    explicit ExpPolyRadial(std::vector<Term> terms) : terms_(std::move(terms)) { compress(); }

    static ExpPolyRadial exponential(double a, double c = 1.0, int p = 0) {
        return ExpPolyRadial({{c, p, a}});
    }
    static ExpPolyRadial power(int p, double c = 1.0) { return ExpPolyRadial({{c, p, 0.0}}); }
    /// Radial part of the Bessel-based basis function (n + ell >= 0), exact.
    static ExpPolyRadial bfun_radial(int n, int ell, double beta);
    /// hk_{n+1/2}(beta r) as an exponential-times-polynomial, n >= 0.
    static ExpPolyRadial reduced_bessel_half(int n, double beta);

    double operator()(double r) const;
    ExpPolyRadial ddr() const;
    ExpPolyRadial rinv_ddr(int j) const;  // (1/r d/dr)^j
    ExpPolyRadial times_power(int p) const;
    ExpPolyRadial scaled(double factor) const;
    ExpPolyRadial operator+(const ExpPolyRadial& o) const;
    const std::vector<Term>& terms() const { return terms_; }

  private:
    void compress();
    std::vector<Term> terms_;
};

/// Radial function with a derivative oracle: exact when the closed form is
/// attached, Richardson-extrapolated central differences otherwise.
struct RadialFunctionHandle {
    std::function<double(double)> value;
    std::optional<ExpPolyRadial> analytic;

    static RadialFunctionHandle from_exppoly(ExpPolyRadial f);
    static RadialFunctionHandle from_function(std::function<double(double)> f);

    double operator()(double r) const { return value(r); }
    /// (1/r d/dr)^j applied to the function, evaluated at r.
    double ring_derivative(int j, double r) const;
};

struct TensorDerivativeTerm {
    AngularIndex angular;
    double gaunt_weight = 1.0;   // 1 for the single-term Hobson case
    RadialFunctionHandle radial; // multiplies the SURFACE harmonic Y_ell^{m}
};

struct TensorDerivativeResult {
    std::vector<TensorDerivativeTerm> terms;
    /// Evaluate sum_i w_i f_i(r) Y_{ell_i}^{m_i}(r/|r|).
    std::complex<double> eval(const Vec3& r) const;
};

/// Gradient-tensor of rank ell applied to a pure radial function:
/// one term, radial factor (1/r d/dr)^ell phi, solid harmonic of r. The
/// surface-harmonic radial handle returned therefore carries the extra r^ell.
TensorDerivativeResult stgo_on_radial(int ell, int m, const RadialFunctionHandle& phi);

struct StgoLinTerm {
    int ell;
    double gaunt_weight;
    int laplacian_power;  // Delta ell of the coupling triple
};

/// Linearization of the product of two gradient tensors into single tensors
/// times even Laplacian powers.
std::vector<StgoLinTerm> stgo_linearize(int l1, int m1, int l2, int m2);

/// gamma_{l1 l2}^{ell}(r): the radial factor multiplying Y_ell^{m1+m2} when a
/// rank-l1 gradient tensor hits f(r) Y_{l2}^{m2}. Six equivalent closed forms
/// (selected by `form` in 1..6); forms 4 and 5 require l2 >= ell and
/// ell >= l2 respectively.
RadialFunctionHandle gamma_radial(int form, const RadialFunctionHandle& f, int l1, int l2, int ell);

/// Rank-l1 gradient tensor applied to a Bessel-based basis function: finite
/// coefficient tensor over B_{n2+l2-ell-t, ell}^{m1+m2}.
CoeffTensor stgo_on_bfun(int l1, int m1, int n2, int l2, int m2, double beta);

/// (lap/beta^2)^nu on B_{n,ell}: binomial ladder tensor; requires n - nu >= 1.
CoeffTensor laplacian_power_on_bfun(int nu, int n, int ell);

struct MonomialTerm {
    int nu;  // power r^{2 nu}
    AngularIndex angular;
    std::complex<double> coeff;
};

/// x^u y^v z^w = sum C r^{2 nu} (solid harmonic), by homogeneity plus
/// sphere-quadrature projection. Supported up to total degree 6.
std::vector<MonomialTerm> monomial_tensor_decomposition(int u, int v, int w);

}  // namespace orbexp
