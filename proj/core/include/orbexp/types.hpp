#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace orbexp {

using Vec3 = std::array<double, 3>;

inline double norm(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator*(double s, const Vec3& v) {
    return {s * v[0], s * v[1], s * v[2]};
}

/// Orbital/magnetic quantum number pair with |m| <= ell.
struct AngularIndex {
    int ell = 0;
    int m = 0;
    AngularIndex() = default;
    AngularIndex(int l, int mm) : ell(l), m(mm) {
        if (ell < 0 || std::abs(m) > ell)
            throw std::invalid_argument("AngularIndex: require ell >= 0 and |m| <= ell");
    }
};

/// Half-integral order stored exactly as 2*nu.
struct HalfOrder {
    int twice_nu = 1;
    static HalfOrder from_twice(int t) { return HalfOrder{t}; }
    double value() const { return 0.5 * twice_nu; }
};

/// (n, ell, m) triple; n may be <= 0 for the Bessel-based family.
struct QuantumIndex {
    int n = 1;
    int ell = 0;
    int m = 0;
    auto operator<=>(const QuantumIndex&) const = default;
};

struct GauntKey {
    int l3, m3, l2, m2, l1, m1;
};

enum class Family { STF, Lambda, Sturmian, Guseinov, BFun, Oscillator };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::STF: return "stf";
        case Family::Lambda: return "lambda";
        case Family::Sturmian: return "sturmian";
        case Family::Guseinov: return "guseinov";
        case Family::BFun: return "bfun";
        case Family::Oscillator: return "oscillator";
    }
    return "?";
}

/// Basis family tag plus its scaling parameter (inverse length).
struct BasisSpec {
    Family family = Family::Lambda;
    double beta = 1.0;
    double stf_N = 1.0;     // real principal number, STF only
    int guseinov_k = 0;     // weight order, Guseinov only (k >= -1)

    static BasisSpec lambda(double beta) { return check({Family::Lambda, beta}); }
    static BasisSpec sturmian(double beta) { return check({Family::Sturmian, beta}); }
    static BasisSpec oscillator(double beta) { return check({Family::Oscillator, beta}); }
    static BasisSpec bfun(double beta) { return check({Family::BFun, beta}); }
    static BasisSpec stf(double N, double beta) { return check({Family::STF, beta, N}); }
    static BasisSpec guseinov(int k, double beta) {
        if (k < -1) throw std::invalid_argument("BasisSpec: Guseinov order requires k >= -1");
        return check({Family::Guseinov, beta, 1.0, k});
    }

  private:
    static BasisSpec check(BasisSpec s) {
        if (!(s.beta > 0.0)) throw std::invalid_argument("BasisSpec: beta must be > 0");
        return s;
    }
};

/// Weight r^k in the radial inner product, or the Sobolev form (eta^2 - lap)/(2 eta^2).
struct WeightSpec {
    int exponent = 0;
    bool sobolev = false;
    double eta = 0.0;
    static WeightSpec r_power(int k) { return {k, false, 0.0}; }
    static WeightSpec sobolev_form(double eta) { return {0, true, eta}; }
};

}  // namespace orbexp
