#pragma once

#include <stdexcept>
#include <string>

namespace krig {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument to a covariance, prior or sampling routine.
class domain_error : public error {
public:
    using error::error;
};

/// A design request that cannot be honoured (degenerate rectangle,
/// subsample larger than its parent, ...).
class invalid_design_error : public error {
public:
    using error::error;
};

/// CSV or flag parsing failure; the message names the offending row/field.
class parse_error : public error {
public:
    using error::error;
};

/// Correlation matrix is numerically not positive definite.
class singular_system_error : public error {
public:
    using error::error;
};

/// Likelihood maximisation could not produce a finite optimum.
class fit_error : public error {
public:
    using error::error;
};

/// Data carry no usable signal (constant values, zero residual).
class degenerate_data_error : public error {
public:
    using error::error;
};

/// A validation criterion is undefined for the given records.
class undefined_criterion_error : public error {
public:
    using error::error;
};

/// Every posterior weight underflowed; the support grid is misconfigured.
class posterior_degenerate_error : public error {
public:
    using error::error;
};

} // namespace krig
