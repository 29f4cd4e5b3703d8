#pragma once

#include <complex>
#include <shared_mutex>
#include <unordered_map>

#include "orbexp/types.hpp"

namespace orbexp {

/// Generalized Laguerre polynomial L_n^(alpha)(x), any real alpha, by upward
/// three-term recurrence.
double laguerre(int n, double alpha, double x);

/// Reduced Bessel function hk_nu(z) = sqrt(2/pi) z^nu K_nu(z) for half-integral
/// nu (exponential times polynomial form). Requires z > 0.
double reduced_bessel(HalfOrder nu, double z);

/// Surface spherical harmonic Y_ell^m(theta, phi), Condon-Shortley phase.
std::complex<double> spherical_harmonic(const AngularIndex& a, double theta, double phi);
std::complex<double> spherical_harmonic(const AngularIndex& a, const Vec3& direction);

/// Regular solid harmonic r^ell Y_ell^m, evaluated through its homogeneous
/// polynomial form so the origin is regular.
std::complex<double> regular_solid_harmonic(const AngularIndex& a, const Vec3& r);

/// Irregular solid harmonic r^{-ell-1} Y_ell^m; singular at the origin.
std::complex<double> irregular_solid_harmonic(const AngularIndex& a, const Vec3& r);

/// Wigner 3j symbol (integer angular momenta).
double wigner3j(int l1, int l2, int l3, int m1, int m2, int m3);

/// Gaunt coefficient <l3 m3 | l2 m2 | l1 m1> = Int [Y_l3^m3]* Y_l2^m2 Y_l1^m1 dOmega.
double gaunt(const GauntKey& key);
inline double gaunt(int l3, int m3, int l2, int m2, int l1, int m1) {
    return gaunt(GauntKey{l3, m3, l2, m2, l1, m1});
}

struct GauntLimits {
    int ell_min;
    int ell_max;
    int step;  // always 2
};

/// Range of ell carrying nonzero Gaunt coefficients for the product
/// Y_l1^m1 Y_l2^m2, stepping by two.
GauntLimits gaunt_limits(int l1, int m1, int l2, int m2);

struct CouplingDeltas {
    int dl;     // (l1 + l2 - l)/2
    int dl1;    // (l - l1 + l2)/2
    int dl2;    // (l + l1 - l2)/2
    int sigma;  // (l1 + l2 + l)/2
};

/// Half-sum integers of a coupling triple; throws if any is fractional or negative.
CouplingDeltas delta_ell(int l1, int l2, int l);

/// Memoizing Gaunt coefficient cache. Reads are concurrent; insertion is
/// guarded by a shared mutex. prepopulate() fills all keys up to ell_max so
/// parallel phases can run lookup-only.
class GauntTable {
  public:
    double coeff(const GauntKey& key) const;
    double coeff(int l3, int m3, int l2, int m2, int l1, int m1) const {
        return coeff(GauntKey{l3, m3, l2, m2, l1, m1});
    }
    void prepopulate(int ell_max);
    std::size_t size() const;

  private:
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::uint64_t, double> table_;
};

}  // namespace orbexp
