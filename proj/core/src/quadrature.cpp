#include "orbexp/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "orbexp/accel.hpp"
#include "orbexp/mathutil.hpp"

namespace orbexp {

namespace {

std::mutex cache_mutex;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> jacobi_eigen(const Eigen::VectorXd& diag,
                                                            const Eigen::VectorXd& off) {
    const int n = int(diag.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = diag(i);
        if (i + 1 < n) {
            J(i, i + 1) = off(i);
            J(i + 1, i) = off(i);
        }
    }
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(J);
}

// log |L_n(x)| by a scaled three-term recurrence (alpha = 0).
double log_abs_laguerre(int n, double x) {
    double lm1 = 1.0, l = 1.0 - x, scale = 0.0;
    if (n == 0) return 0.0;
    for (int k = 1; k < n; ++k) {
        double lp1 = ((2.0 * k + 1.0 - x) * l - k * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
        double m = std::max(std::abs(l), std::abs(lm1));
        if (m > 1e100) {
            l /= m;
            lm1 /= m;
            scale += std::log(m);
        }
    }
    return scale + std::log(std::abs(l));
}

}  // namespace

const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), off(std::max(n - 1, 0));
    for (int k = 1; k < n; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    auto es = jacobi_eigen(diag, off);
    std::vector<std::pair<double, double>> rule(n);
    for (int i = 0; i < n; ++i)
        rule[i] = {es.eigenvalues()(i), 2.0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i)};
    return cache.emplace(n, std::move(rule)).first->second;
}

const std::vector<std::pair<double, double>>& gauss_laguerre_total(int n) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
    for (int k = 1; k < n; ++k) off(k - 1) = double(k);
    auto es = jacobi_eigen(diag, off);
    std::vector<std::pair<double, double>> rule(n);
    for (int i = 0; i < n; ++i) {
        double x = es.eigenvalues()(i);
        // total weight w_i e^{x_i} assembled in logs through
        // w_i = x_i / [(n+1) L_{n+1}(x_i)]^2; the eigenvector route loses the
        // tail components to the dense solver's absolute noise floor
        double logw = std::log(x) + x -
                      2.0 * (std::log(double(n + 1)) + log_abs_laguerre(n + 1, x));
        rule[i] = {x, std::exp(logw)};
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

// 15-point Kronrod / 7-point Gauss pair (positive abscissae).
constexpr double kron_x[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                              0.741531185599394, 0.586087235467691, 0.405845151377397,
                              0.207784955007898, 0.0};
constexpr double kron_w[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                              0.140653259715525, 0.169004726639267, 0.190350578064785,
                              0.204432940075298, 0.209482141084728};
constexpr double gauss_w[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                               0.417959183673469};

template <typename T>
void gk15(const std::function<T(double)>& f, double a, double b, T& kron, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fk{};
    T fg{};
    for (int i = 0; i < 8; ++i) {
        if (i == 7) {
            T v = f(c);
            fk += kron_w[7] * v;
            fg += gauss_w[3] * v;
        } else {
            T v1 = f(c - h * kron_x[i]), v2 = f(c + h * kron_x[i]);
            fk += kron_w[i] * (v1 + v2);
            if (i % 2 == 1) fg += gauss_w[i / 2] * (v1 + v2);
        }
    }
    kron = h * fk;
    err = std::abs(std::abs(h) * std::abs(fk - fg));
}

template <typename T>
T adaptive_impl(const std::function<T(double)>& f, double a, double b,
                const QuadratureSpec& spec) {
    struct Panel {
        double a, b, err;
        T val;
    };
    auto check_finite = [](const T& v, double e) {
        if (!std::isfinite(std::abs(v)) || !std::isfinite(e))
            throw QuadratureError("adaptive_gk: non-finite integrand");
    };
    T total{};
    double err_total = 0.0;
    std::vector<Panel> panels;
    {
        T v;
        double e;
        gk15(f, a, b, v, e);
        check_finite(v, e);
        panels.push_back({a, b, e, v});
        total = v;
        err_total = e;
    }
    const std::size_t max_panels = std::size_t(1) << spec.max_refinements;
    while (err_total > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) &&
           panels.size() < max_panels) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        Panel p = panels[worst];
        double mid = 0.5 * (p.a + p.b);
        if (mid == p.a || mid == p.b) break;  // cannot subdivide further
        T v1, v2;
        double e1, e2;
        gk15(f, p.a, mid, v1, e1);
        gk15(f, mid, p.b, v2, e2);
        check_finite(v1, e1);
        check_finite(v2, e2);
        total += v1 + v2 - p.val;
        err_total += e1 + e2 - p.err;
        panels[worst] = {p.a, mid, e1, v1};
        panels.push_back({mid, p.b, e2, v2});
    }
    if (err_total > 10.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
        throw QuadratureError("adaptive_gk: did not converge within max_refinements");
    return total;
}

}  // namespace

double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   const QuadratureSpec& spec) {
    return adaptive_impl<double>(f, a, b, spec);
}

std::complex<double> adaptive_gk_complex(const std::function<std::complex<double>(double)>& f,
                                         double a, double b, const QuadratureSpec& spec) {
    return adaptive_impl<std::complex<double>>(f, a, b, spec);
}

double radial_quadrature(const std::function<double(double)>& f, int weight_exponent,
                         const QuadratureSpec& spec) {
    const double c = spec.decay_hint > 0 ? spec.decay_hint : 1.0;
    auto g = [&](double r) { return f(r) * std::pow(r, weight_exponent + 2.0); };

    auto gl_estimate = [&](int n) {
        double s = 0.0;
        for (const auto& [x, w] : gauss_laguerre_total(n)) s += w * g(x / c);
        return s / c;
    };
    double full = gl_estimate(spec.gauss_laguerre_nodes);
    double half = gl_estimate(spec.gauss_laguerre_nodes / 2);
    double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(full));
    // the log-assembled weights bottom out near 1e-12 relative; tighter
    // requests go through the adaptive route
    if (spec.rel_tol >= 1e-11 && std::abs(full - half) <= 1e3 * tol) return full;

    // adaptive fallback with an automatic cutoff
    double rmax = 8.0 / c;
    while (rmax < 1e6 / c && std::abs(g(rmax)) > 0.01 * spec.abs_tol) rmax *= 2.0;
    QuadratureSpec inner = spec;
    double v = adaptive_gk(g, 0.0, rmax, inner);
    double v2 = adaptive_gk(g, 0.0, 2.0 * rmax, inner);
    if (std::abs(v2 - v) > 1e3 * std::max(spec.abs_tol, spec.rel_tol * std::abs(v2)))
        throw QuadratureError("radial_quadrature: estimates keep drifting with the cutoff");
    return v2;
}

std::complex<double> sphere_quadrature(
    const std::function<std::complex<double>(double, double)>& g, int degree) {
    const int n_theta = degree / 2 + 2;
    const int n_phi = degree + 2;
    const auto& rule = gauss_legendre(n_theta);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [x, w] : rule) {
        double theta = std::acos(x);
        std::complex<double> ring{0.0, 0.0};
        for (int j = 0; j < n_phi; ++j) ring += g(theta, 2.0 * M_PI * j / n_phi);
        acc += w * ring * (2.0 * M_PI / n_phi);
    }
    return acc;
}

namespace {

// orthonormal triad with e3 along d
void frame_from(const Vec3& d, Vec3& e1, Vec3& e2, Vec3& e3) {
    double dn = norm(d);
    e3 = {d[0] / dn, d[1] / dn, d[2] / dn};
    Vec3 seed = std::abs(e3[2]) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    // e1 = normalize(seed - (seed . e3) e3)
    double proj = seed[0] * e3[0] + seed[1] * e3[1] + seed[2] * e3[2];
    e1 = {seed[0] - proj * e3[0], seed[1] - proj * e3[1], seed[2] - proj * e3[2]};
    double n1 = norm(e1);
    e1 = {e1[0] / n1, e1[1] / n1, e1[2] / n1};
    e2 = {e3[1] * e1[2] - e3[2] * e1[1], e3[2] * e1[0] - e3[0] * e1[2],
          e3[0] * e1[1] - e3[1] * e1[0]};
}

}  // namespace

std::complex<double> two_center_integral(const std::function<std::complex<double>(const Vec3&)>& F,
                                         const std::function<std::complex<double>(const Vec3&)>& G,
                                         const Vec3& shift, const QuadratureSpec& spec, int n_phi,
                                         int sphere_degree) {
    const double d = norm(shift);
    if (d < 1e-14) {
        // one-center reduction: radial shell x angular product
        auto shell = [&](double r) -> std::complex<double> {
            if (r == 0.0) return {0.0, 0.0};
            auto ang = [&](double th, double ph) {
                Vec3 u{r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph),
                       r * std::cos(th)};
                return F(u) * G(u);
            };
            return r * r * sphere_quadrature(ang, sphere_degree);
        };
        double rmax = 8.0 / spec.decay_hint;
        while (rmax < 1e5 && std::abs(shell(rmax)) > 0.01 * spec.abs_tol) rmax *= 2.0;
        QuadratureSpec outer = spec;
        outer.abs_tol = std::max(spec.abs_tol, 1e-13);
        return adaptive_gk_complex(shell, 0.0, rmax, outer);
    }

    Vec3 e1, e2, e3;
    frame_from(shift, e1, e2, e3);

    // u = |r|, v = |r - shift|; d^3r = (u v / d) du dv dphi
    auto point = [&](double u, double v, double phi) -> Vec3 {
        double ct = std::clamp((u * u + d * d - v * v) / (2.0 * u * d), -1.0, 1.0);
        double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        double c1 = u * st * std::cos(phi), c2 = u * st * std::sin(phi), c3 = u * ct;
        return {c1 * e1[0] + c2 * e2[0] + c3 * e3[0], c1 * e1[1] + c2 * e2[1] + c3 * e3[1],
                c1 * e1[2] + c2 * e2[2] + c3 * e3[2]};
    };

    QuadratureSpec inner_spec = spec;
    inner_spec.abs_tol = std::max(1e-14, 0.01 * spec.abs_tol);
    inner_spec.rel_tol = std::max(1e-12, 0.1 * spec.rel_tol);

    auto outer_integrand = [&](double u) -> std::complex<double> {
        if (u <= 0.0) return {0.0, 0.0};
        auto inner = [&](double v) -> std::complex<double> {
            std::complex<double> ring{0.0, 0.0};
            for (int j = 0; j < n_phi; ++j) {
                Vec3 p = point(u, v, 2.0 * M_PI * j / n_phi);
                ring += F(p) * G(p - shift);
            }
            return (u * v / d) * ring * (2.0 * M_PI / n_phi);
        };
        return adaptive_gk_complex(inner, std::abs(u - d), u + d, inner_spec);
    };

    double umax = d + 8.0 / spec.decay_hint;
    while (umax < d + 1e5 && std::abs(outer_integrand(umax)) > 0.01 * spec.abs_tol) umax *= 2.0;
    QuadratureSpec outer = spec;
    // split at the kink u = d
    std::complex<double> left = adaptive_gk_complex(outer_integrand, 0.0, d, outer);
    std::complex<double> right = adaptive_gk_complex(outer_integrand, d, umax, outer);
    return left + right;
}

std::complex<double> convolution_3d(const std::function<std::complex<double>(const Vec3&)>& f,
                                    const std::function<std::complex<double>(const Vec3&)>& g,
                                    const Vec3& r_sample, const QuadratureSpec& spec, int n_phi) {
    // conv(r) = Int g(u) f(r - u) d^3u = Int g(u) ftilde(u - r) d^3u, ftilde(w) = f(-w)
    auto ftilde = [&](const Vec3& w) { return f(Vec3{-w[0], -w[1], -w[2]}); };
    return two_center_integral(g, ftilde, r_sample, spec, n_phi);
}

namespace {

double sph_bessel_j(int ell, double x) { return std::sph_bessel(unsigned(ell), x); }

}  // namespace

double spherical_bessel_transform(const std::function<double(double)>& f_radial, int ell, double p,
                                  const QuadratureSpec& spec) {
    const double pref = std::sqrt(2.0 / M_PI);
    auto integrand = [&](double r) { return f_radial(r) * sph_bessel_j(ell, p * r) * r * r; };
    if (p <= 0.0) {
        // j_0(0) = 1, j_l(0) = 0 for l > 0: plain radial integral
        return pref * radial_quadrature([&](double r) { return ell == 0 ? f_radial(r) : 0.0; }, 0,
                                        spec);
    }
    // subdivide at the oscillation scale pi/p past the first |ell|-controlled hump
    const double period = M_PI / p;
    double a = 0.0;
    double partial = 0.0;
    std::vector<double> partial_sums;
    QuadratureSpec seg = spec;
    seg.abs_tol = std::max(1e-15, 0.01 * spec.abs_tol);
    const int max_segments = 512;
    for (int k_seg = 0; k_seg < max_segments; ++k_seg) {
        double b = a + period;
        partial += adaptive_gk(integrand, a, b, seg);
        partial_sums.push_back(partial);
        a = b;
        if (partial_sums.size() >= 4) {
            double last_inc = std::abs(partial_sums.back() - partial_sums[partial_sums.size() - 2]);
            if (last_inc < std::max(spec.abs_tol, spec.rel_tol * std::abs(partial)) &&
                std::abs(integrand(a)) < spec.abs_tol)
                break;
        }
    }
    if (partial_sums.size() >= 6) {
        auto eps = wynn_epsilon(partial_sums);
        if (!eps.breakdown && std::isfinite(eps.best)) return pref * eps.best;
    }
    return pref * partial;
}

}  // namespace orbexp
