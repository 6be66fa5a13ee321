#pragma once

#include <stdexcept>
#include <string>

namespace momcl {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class duplicate_eigenvalue_error : public error {
public:
    using error::error;
};

class out_of_interval_error : public error {
public:
    using error::error;
};

class ill_conditioned_error : public error {
public:
    using error::error;
};

class size_mismatch_error : public error {
public:
    using error::error;
};

class no_convergence_error : public error {
public:
    using error::error;
};

class truncation_below_kernel_degree_error : public error {
public:
    using error::error;
};

class node_at_endpoint_error : public error {
public:
    using error::error;
};

class overflow_error : public error {
public:
    using error::error;
};

class cfl_violation_error : public error {
public:
    using error::error;
};

class insufficient_samples_error : public error {
public:
    using error::error;
};

class grid_mismatch_error : public error {
public:
    using error::error;
};

class bump_outside_interval_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

class config_error : public error {
public:
    using error::error;
};

} // namespace momcl
