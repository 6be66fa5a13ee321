#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "momcl/closure.hpp"
#include "momcl/errors.hpp"

namespace momcl {

/// Quadrature rule for velocity integrals over [lo, hi].
struct VelocityRule {
    enum class Kind { legendre, chebyshev };

    std::vector<double> nodes;
    std::vector<double> weights;
    double lo = -1.0;
    double hi = 1.0;
    int exact_degree = 0;
    Kind kind = Kind::legendre;

    [[nodiscard]] int size() const { return static_cast<int>(nodes.size()); }
};

/// n-node Gauss-Legendre rule on [lo, hi], exact for polynomials of degree
/// <= 2n-1.  Nodes from Newton iteration on P_n with the classical cosine
/// initial guesses; the rule is mirrored about the midpoint so symmetric
/// intervals give bit-symmetric nodes.
[[nodiscard]] inline VelocityRule gauss_legendre_rule(int n, double lo = -1.0, double hi = 1.0) {
    if (n < 1) throw size_mismatch_error("gauss_legendre_rule: n must be >= 1");
    if (!(lo < hi)) throw out_of_interval_error("gauss_legendre_rule: empty interval");

    std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    const double pi = pi_v<double>();
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        int iter = 0;
        for (;; ++iter) {
            if (iter >= 100) throw no_convergence_error("gauss_legendre_rule: Newton did not converge");
            double p0 = 1.0, p1 = t;
            for (int k = 1; k < n; ++k) {
                const double p2 = ((2 * k + 1) * t * p1 - k * p0) / (k + 1);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) <= 1e-15) break;
        }
        x[static_cast<std::size_t>(n - 1 - i)] = t;
        x[static_cast<std::size_t>(i)] = -t;
        const double wi = 2.0 / ((1.0 - t * t) * dp * dp);
        w[static_cast<std::size_t>(i)] = wi;
        w[static_cast<std::size_t>(n - 1 - i)] = wi;
    }
    if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = 0.0;

    VelocityRule rule;
    rule.lo = lo;
    rule.hi = hi;
    rule.exact_degree = 2 * n - 1;
    rule.kind = VelocityRule::Kind::legendre;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = mid + half * x[static_cast<std::size_t>(i)];
        rule.weights[static_cast<std::size_t>(i)] = half * w[static_cast<std::size_t>(i)];
    }
    return rule;
}

/// n-node Gauss-Chebyshev rule on (-1,1) written as a plain-dv rule:
/// nodes cos((2m+1)pi/(2n)) and weights (pi/n)*sqrt(1-v^2).  It integrates
/// integrands of the form R(v)/sqrt(1-v^2) exactly for deg R <= 2n-1 (so
/// every moment of the Maxwellian range is exact), but it is NOT exact for
/// plain polynomials; sum(weights) differs from 2 at O(1/n^2).
[[nodiscard]] inline VelocityRule gauss_chebyshev_rule(int n) {
    if (n < 1) throw size_mismatch_error("gauss_chebyshev_rule: n must be >= 1");
    VelocityRule rule;
    rule.lo = -1.0;
    rule.hi = 1.0;
    rule.exact_degree = 2 * n - 1;
    rule.kind = VelocityRule::Kind::chebyshev;
    rule.nodes = chebyshev_nodes<double>(n - 1);
    rule.weights.resize(static_cast<std::size_t>(n));
    const double pi = pi_v<double>();
    for (int m = 0; m < n; ++m) {
        const double v = rule.nodes[static_cast<std::size_t>(m)];
        rule.weights[static_cast<std::size_t>(m)] = pi / n * std::sqrt(1.0 - v * v);
    }
    return rule;
}

/// The reference integrator used for every analytic velocity integral:
/// 200-node Gauss-Legendre (exact through degree 399).
[[nodiscard]] inline VelocityRule reference_rule(double lo = -1.0, double hi = 1.0) {
    return gauss_legendre_rule(200, lo, hi);
}

[[nodiscard]] inline double integrate(const VelocityRule& rule, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (int m = 0; m < rule.size(); ++m)
        acc += rule.weights[static_cast<std::size_t>(m)] * f(rule.nodes[static_cast<std::size_t>(m)]);
    return acc;
}

/// rho_N(v) = pi/(N+1) * sqrt(1-v^2); 1/rho_N is the normalized Chebyshev
/// weight whose quadrature nodes are the closure spectrum.
struct ChebyshevWeight {
    int order = 0;

    [[nodiscard]] double operator()(double v) const {
        return pi_v<double>() / (order + 1) * std::sqrt(1.0 - v * v);
    }
};

/// Node-sum quadrature sum_k R(lambda_k); equals the integral of R/rho_N
/// over (-1,1) exactly iff deg R <= 2N+1.
[[nodiscard]] inline double inverse_weight_quadrature(const ClosureSpec<double>& spec,
                                                      const std::vector<double>& poly_coeffs) {
    double acc = 0.0;
    for (const double lam : spec.eigenvalues) acc += poly_eval(poly_coeffs, lam);
    return acc;
}

/// gamma_i = integral of v^i q(v) dv, i = 0..i_max, by the given rule.
[[nodiscard]] inline std::vector<double> kernel_moments(const std::function<double(double)>& q,
                                                        const VelocityRule& rule, int i_max) {
    std::vector<double> gam(static_cast<std::size_t>(i_max) + 1, 0.0);
    for (int m = 0; m < rule.size(); ++m) {
        const double v = rule.nodes[static_cast<std::size_t>(m)];
        double p = rule.weights[static_cast<std::size_t>(m)] * q(v);
        for (int i = 0; i <= i_max; ++i) {
            gam[static_cast<std::size_t>(i)] += p;
            p *= v;
        }
    }
    return gam;
}

/// Node-sum approximation of the weighted norm ||f||_phi, from samples at
/// the closure spectrum: sqrt(sum_k f(lambda_k)^2 rho_N(lambda_k)^2).
/// Exact iff (f*rho_N)^2 is a polynomial of degree <= 2N+1, in particular
/// for f = R/rho_N with deg R <= N; an approximation otherwise.
[[nodiscard]] inline double weighted_velocity_norm(const std::vector<double>& samples,
                                                   const ClosureSpec<double>& spec) {
    if (static_cast<int>(samples.size()) != spec.size())
        throw size_mismatch_error("weighted_velocity_norm: sample count != N+1");
    const ChebyshevWeight rho{spec.order};
    double acc = 0.0;
    for (int k = 0; k < spec.size(); ++k) {
        const double r = rho(spec.eigenvalues[static_cast<std::size_t>(k)]);
        acc += samples[static_cast<std::size_t>(k)] * samples[static_cast<std::size_t>(k)] * r * r;
    }
    return std::sqrt(acc);
}

/// Reference-rule weighted norm sqrt(int f^2 rho dv) for general integrands.
[[nodiscard]] inline double weighted_norm(const std::function<double(double)>& f,
                                          const ChebyshevWeight& rho, const VelocityRule& rule) {
    double acc = 0.0;
    for (int m = 0; m < rule.size(); ++m) {
        const double v = rule.nodes[static_cast<std::size_t>(m)];
        acc += rule.weights[static_cast<std::size_t>(m)] * rho(v) * f(v) * f(v);
    }
    return std::sqrt(acc);
}

/// Stability constants of the weighted-norm estimate.
struct WeightedNorms {
    double C_N_f0 = 0.0;      ///< weighted norm of the initial data
    double C_N_q = 0.0;       ///< Lambda_{N,d} * ||q||_rho - lambda_loss
    double Lambda_N_d = 0.0;  ///< sqrt(sum alpha_j^2) * sqrt(sum_{j<=d} sum_k lambda_k^{2j})
};

[[nodiscard]] inline double lambda_constant(const ClosureSpec<double>& spec,
                                            const std::vector<double>& alphas) {
    double sa = 0.0;
    for (const double a : alphas) sa += a * a;
    double sl = 0.0;
    for (std::size_t j = 0; j < alphas.size(); ++j)
        for (const double lam : spec.eigenvalues) sl += std::pow(lam, 2.0 * static_cast<double>(j));
    return std::sqrt(sa) * std::sqrt(sl);
}

} // namespace momcl
