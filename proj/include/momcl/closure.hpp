#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "momcl/errors.hpp"
#include "momcl/real.hpp"

namespace momcl {

/// Evaluate a polynomial given by ascending coefficients, Horner form.
template <class T>
[[nodiscard]] inline T poly_eval(const std::vector<T>& coeffs, const T& x) {
    T acc{0};
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

/// Roots of the degree-(N+1) Chebyshev polynomial of the first kind,
/// lambda_k = cos((2k+1)/(2N+2) * pi), returned in decreasing order.
/// Symmetry about 0 is enforced exactly: lambda_{N-k} = -lambda_k.
template <class T = double>
[[nodiscard]] inline std::vector<T> chebyshev_nodes(int order) {
    const int n = order + 1;
    std::vector<T> nodes(static_cast<std::size_t>(n));
    const T pi = pi_v<T>();
    using std::cos;
    for (int k = 0; k < n / 2; ++k) {
        const T theta = T(2 * k + 1) / T(2 * n) * pi;
        nodes[static_cast<std::size_t>(k)] = cos(theta);
        nodes[static_cast<std::size_t>(n - 1 - k)] = -nodes[static_cast<std::size_t>(k)];
    }
    if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = T(0);
    return nodes;
}

/// Closure data: spectrum lambda_0..lambda_N, closure coefficients
/// a_0..a_N and the monic characteristic polynomial
/// chi(X) = X^{N+1} - sum_i a_i X^i = prod_k (X - lambda_k).
template <class T = double>
struct ClosureSpec {
    int order = 0;                   ///< N
    std::vector<T> eigenvalues;      ///< size N+1, pairwise distinct, in [-1,1]
    std::vector<T> closure_coeffs;   ///< a_0..a_N
    std::vector<T> charpoly_coeffs;  ///< ascending, size N+2, leading 1

    [[nodiscard]] int size() const { return order + 1; }
};

/// Expand prod_k (X - lambda_k) and read the closure coefficients off the
/// sign-flipped monic coefficients.  The product is accumulated by
/// incremental convolution in descending-k order.
template <class T>
[[nodiscard]] inline ClosureSpec<T> closure_from_roots(const std::vector<T>& eigenvalues) {
    if (eigenvalues.empty()) throw size_mismatch_error("closure_from_roots: empty spectrum");
    const int n = static_cast<int>(eigenvalues.size());
    using std::abs;

    T lo = eigenvalues[0], hi = eigenvalues[0];
    for (const T& l : eigenvalues) {
        if (abs(l) > T(1)) throw out_of_interval_error("closure_from_roots: eigenvalue outside [-1,1]");
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    const T span = std::max(hi - lo, T(1e-30));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (abs(eigenvalues[static_cast<std::size_t>(i)] - eigenvalues[static_cast<std::size_t>(j)]) <= T(1e-14) * span)
                throw duplicate_eigenvalue_error("closure_from_roots: eigenvalues not pairwise distinct");

    std::vector<T> c{T(1)};  // ascending coefficients of the running product
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = n - 1; k >= 0; --k) {
        const T r = eigenvalues[static_cast<std::size_t>(k)];
        c.push_back(T(0));
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }

    ClosureSpec<T> spec;
    spec.order = n - 1;
    spec.eigenvalues = eigenvalues;
    spec.charpoly_coeffs = c;
    spec.closure_coeffs.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) spec.closure_coeffs[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
    return spec;
}

template <class T = double>
[[nodiscard]] inline ClosureSpec<T> chebyshev_closure(int order) {
    return closure_from_roots(chebyshev_nodes<T>(order));
}

/// P_{i,j} = lambda_j^i, the eigenvector matrix of the companion form.
template <class T>
[[nodiscard]] inline mat<T> build_vandermonde(const ClosureSpec<T>& spec) {
    const int n = spec.size();
    mat<T> P(n, n);
    for (int j = 0; j < n; ++j) {
        P(0, j) = T(1);
        for (int i = 1; i < n; ++i) P(i, j) = P(i - 1, j) * spec.eigenvalues[static_cast<std::size_t>(j)];
    }
    return P;
}

/// Explicit inverse P^{-1}_{i,j} = ptilde_{i,j} / pi_i with
/// pi_i = prod_{j != i} (lambda_i - lambda_j) and the ptilde row filled by
/// the backward Horner recurrence ptilde_{i,N} = 1,
/// ptilde_{i,j-1} = lambda_i ptilde_{i,j} - a_j (synthetic division of the
/// characteristic polynomial by X - lambda_i).
template <class T>
[[nodiscard]] inline mat<T> invert_vandermonde(const ClosureSpec<T>& spec) {
    const int n = spec.size();
    mat<T> Pinv(n, n);
    using std::abs;
    for (int i = 0; i < n; ++i) {
        const T li = spec.eigenvalues[static_cast<std::size_t>(i)];
        T pi_i{1};
        for (int j = 0; j < n; ++j)
            if (j != i) pi_i *= (li - spec.eigenvalues[static_cast<std::size_t>(j)]);
        if (abs(pi_i) < T(1e-300))
            throw ill_conditioned_error("invert_vandermonde: node product underflow");
        std::vector<T> p(static_cast<std::size_t>(n));
        p[static_cast<std::size_t>(n - 1)] = T(1);
        for (int j = n - 1; j > 0; --j)
            p[static_cast<std::size_t>(j - 1)] = li * p[static_cast<std::size_t>(j)] - spec.closure_coeffs[static_cast<std::size_t>(j)];
        for (int j = 0; j < n; ++j) Pinv(i, j) = p[static_cast<std::size_t>(j)] / pi_i;
    }
    return Pinv;
}

/// Eigen-structure bundle for one closure: P, its explicit inverse, the
/// spectrum as a diagonal, and the Gram matrix G = P^{-T} P^{-1} of the
/// weighted inner product.
template <class T = double>
struct SpectralDecomp {
    mat<T> P;
    mat<T> P_inv;
    std::vector<T> D;  ///< eigenvalues, decreasing for Chebyshev spectra
    mat<T> G;          ///< symmetric positive definite
};

template <class T>
[[nodiscard]] inline mat<T> gram_matrix(const mat<T>& P_inv) {
    return mat<T>(P_inv.transpose() * P_inv);
}

template <class T>
[[nodiscard]] inline SpectralDecomp<T> spectral_decomp(const ClosureSpec<T>& spec) {
    SpectralDecomp<T> d;
    d.P = build_vandermonde(spec);
    d.P_inv = invert_vandermonde(spec);
    d.D = spec.eigenvalues;
    d.G = gram_matrix(d.P_inv);
    return d;
}

/// Columns are the monomial coefficients of the dual polynomials
/// Ttilde_i(X) = sum_k G_{k,i} X^k; they satisfy the biorthogonality
/// Ttilde_i(lambda_k) = (P^{-1})_{k,i}.
template <class T = double>
struct TTildeBasis {
    mat<T> coeffs;  ///< (N+1) x (N+1), column i = coefficients of Ttilde_i

    [[nodiscard]] T eval(int i, const T& x) const {
        T acc{0};
        for (Eigen::Index k = coeffs.rows(); k-- > 0;) acc = acc * x + coeffs(k, i);
        return acc;
    }
};

template <class T>
[[nodiscard]] inline TTildeBasis<T> t_tilde_basis(const SpectralDecomp<T>& decomp) {
    return TTildeBasis<T>{decomp.G};
}

/// Closure system stored at precision T but built through quad-precision
/// internals.  The monomial-basis Vandermonde inverse loses roughly
/// N*log2(1+sqrt(2)) ~ 1.27*N bits to conditioning, so constructing in
/// quad and rounding once keeps every stored entry correctly rounded up
/// to N ~ 64; constructing directly in T does not past N ~ 12.
template <class T = double>
struct ClosureSystem {
    ClosureSpec<T> spec;
    SpectralDecomp<T> decomp;
    TTildeBasis<T> basis;
};

template <class T = double>
[[nodiscard]] inline ClosureSystem<T> closure_system_from_roots(const std::vector<T>& eigenvalues) {
    const ClosureSpec<quad> spec_q = closure_from_roots(cast_vec<quad>(eigenvalues));
    const SpectralDecomp<quad> dec_q = spectral_decomp(spec_q);

    ClosureSystem<T> sys;
    sys.spec.order = spec_q.order;
    sys.spec.eigenvalues = eigenvalues;
    sys.spec.closure_coeffs = cast_vec<T>(spec_q.closure_coeffs);
    sys.spec.charpoly_coeffs = cast_vec<T>(spec_q.charpoly_coeffs);
    sys.decomp.P = cast_mat<T>(dec_q.P);
    sys.decomp.P_inv = cast_mat<T>(dec_q.P_inv);
    sys.decomp.D = eigenvalues;
    sys.decomp.G = cast_mat<T>(dec_q.G);
    sys.basis.coeffs = sys.decomp.G;
    return sys;
}

/// Pipeline entry point: double-precision Chebyshev closure of a given order.
using ChebyshevSystem = ClosureSystem<double>;

template <class T = double>
[[nodiscard]] inline ClosureSystem<T> make_chebyshev_system(int order) {
    return closure_system_from_roots(chebyshev_nodes<T>(order));
}

} // namespace momcl
