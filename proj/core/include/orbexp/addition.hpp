#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "orbexp/basis.hpp"
#include "orbexp/expansions.hpp"
#include "orbexp/transforms.hpp"

namespace orbexp {

/// Overlap integral <bra(r) | w(r) | ket(r - shift)> over all space.
struct OverlapRequest {
    BasisSpec bra_spec;
    QuantumIndex bra;
    BasisSpec ket_spec;
    QuantumIndex ket;
    Vec3 shift{0.0, 0.0, 0.0};
    WeightSpec weight = WeightSpec::r_power(0);
};

/// Convolution of two Bessel-based functions with equal scaling: finite sum
/// over B_{n1+n2+l1+l2-l-t+1, l}^{m1+m2}(beta, .) with prefactor 4 pi / beta^3.
CoeffTensor bfun_convolution(int n1, int l1, int m1, int n2, int l2, int m2, double beta);

/// Overlap by two-center quadrature (any families, any scalings).
std::complex<double> overlap_quadrature(const OverlapRequest& req, const QuadratureSpec& spec = {});
/// Overlap through the convolution theorem; requires equal scalings and both
/// sides expressible as finite B sums (Lambda/STF/Guseinov/BFun families).
std::complex<double> overlap_analytic(const OverlapRequest& req);
/// Route choice: analytic when available, quadrature otherwise.
std::complex<double> overlap(const OverlapRequest& req, const QuadratureSpec& spec = {});

/// Doubly indexed coefficients of the symmetrical one-range expansion of
/// Lambda_{N L}^{M}(beta, r - r') over Lambda(r) x Lambda(r'). For each row
/// (n1, l1, m1), n1 <= n_max, the column support is finite and exact.
struct SymCoeffTensor {
    int N, L, M;
    double beta;
    std::map<std::pair<QuantumIndex, QuantumIndex>, double> entries;

    std::complex<double> reconstruct(const Vec3& r, const Vec3& rp) const;
};
SymCoeffTensor symmetric_coeffs_lambda(int N, int L, int M, int n_max, double beta,
                                       int ell_cap = -1);

/// Overlap coefficients of the unsymmetrical expansion of a Slater function
/// chi_{N,L}^{M}(beta, r - shift) over the r^k-orthonormal family at scaling
/// gamma, n <= n_max; computed by quadrature (scalings may differ).
std::map<QuantumIndex, std::complex<double>> guseinov_unsym_coeffs(
    double N, int L, int M, int k, double gamma, double beta, const Vec3& shift, int n_max,
    int ell_max, const QuadratureSpec& spec = {});

/// One-center limit of the rearranged Slater-over-Slater expansion: for each
/// fixed target power index the inner sums are assembled in rearranged order.
/// Diverges for non-integral N, terminates for N in {1, 2, ...}.
ConvergenceReport one_center_nonexistence_probe(double N, int k, int n_max);

struct LaplaceResult {
    double value = 0.0;                 // deepest partial sum
    std::vector<double> partial_sums;   // per multipole order
};

/// Two-range multipole expansion of 1/|r - rp| with per-order partial sums.
/// Throws on |r| == |rp| (boundary of convergence).
LaplaceResult laplace_coulomb(const Vec3& r, const Vec3& rp, int L_max);

/// Expansion tensor of the Coulomb kernel over the r^k-orthonormal family:
/// diagonal in (ell, m) with m-independent radial blocks. The second index
/// pairs the complex-conjugated function of r', so the selection rule reads
/// ell = ell', m = m'.
struct GammaTensor {
    int k = 0;
    double beta = 1.0;
    int n_max = 0;
    int ell_max = 0;
    double abs_tol = 0.0, rel_tol = 0.0;
    std::map<std::array<int, 6>, double> entries;  // (n, l, m, n', l', m')

    double coeff(int n, int l, int m, int np, int lp, int mp) const {
        auto it = entries.find({n, l, m, np, lp, mp});
        return it == entries.end() ? 0.0 : it->second;
    }
    /// CSV columns (n, l, m, n', l', m', value), sorted keys, 17 significant digits.
    void save_csv(const std::string& path) const;
    /// JSON sidecar: k, beta, quadrature tolerances, code version.
    void save_sidecar(const std::string& path) const;
};

GammaTensor coulomb_gamma(int k, double beta, int n_max, int ell_max,
                          const QuadratureSpec& spec = {}, int threads = 0);

/// Triple contraction sum Gamma . F . G in shells of constant n + n'
/// (ties in (l, m) lexicographic); the weak-convergence demonstration.
ConvergenceReport coulomb_energy_series(const std::map<QuantumIndex, double>& f_coeffs,
                                        const std::map<QuantumIndex, double>& g_coeffs,
                                        const GammaTensor& gamma);

struct YukawaLimitReport {
    std::vector<double> betas;
    std::vector<double> values;
    double extrapolated = 0.0;
    double coulomb_ref = 0.0;
};

/// Screened-kernel energies of two s-type densities at the given screening
/// values, with Richardson extrapolation toward zero screening.
YukawaLimitReport yukawa_vs_coulomb_limit(const std::vector<double>& beta_screen,
                                          const std::function<double(double)>& f_density,
                                          const std::function<double(double)>& g_density,
                                          double coulomb_ref, const QuadratureSpec& spec = {});

/// Screened two-density energy Int Int f(r) e^{-b |r-r'|}/|r-r'| g(r') for
/// spherically symmetric densities (4 pi shells folded in).
double yukawa_pair_energy(const std::function<double(double)>& f_density,
                          const std::function<double(double)>& g_density, double screen,
                          const QuadratureSpec& spec = {});

}  // namespace orbexp
