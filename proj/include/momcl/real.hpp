#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/math/constants/constants.hpp>
#include <Eigen/Dense>

namespace momcl {

/// 113-bit significand float used for the internal construction of the
/// closure algebra.  Vandermonde inverses in the monomial basis lose
/// roughly N*log2(1+sqrt(2)) bits to conditioning, so double internals
/// stop being useful near N ~ 16 while quad internals carry to N ~ 64.
using quad = boost::multiprecision::cpp_bin_float_quad;

template <class T>
using mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <class T>
[[nodiscard]] inline T pi_v() {
    return boost::math::constants::pi<T>();
}

template <>
[[nodiscard]] inline double pi_v<double>() {
    return 3.14159265358979323846;
}

template <class To, class From>
[[nodiscard]] inline mat<To> cast_mat(const mat<From>& m) {
    mat<To> out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            out(i, j) = static_cast<To>(m(i, j));
    return out;
}

template <class To, class From>
[[nodiscard]] inline std::vector<To> cast_vec(const std::vector<From>& v) {
    std::vector<To> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(static_cast<To>(x));
    return out;
}

} // namespace momcl
