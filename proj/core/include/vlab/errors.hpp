#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

/// Precondition violated by the caller (bad dimension, out-of-range index, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base class for failures of a numerical procedure on valid input.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gauss-Legendre refinement reached the maximum order without two
/// successive values agreeing. Carries both values and, when known,
/// the dyadic box being integrated.
class QuadratureFailure : public NumericalFailure {
public:
    QuadratureFailure(double previous, double last, std::string context = {});

    double previous() const noexcept { return previous_; }
    double last() const noexcept { return last_; }
    const std::string& context() const noexcept { return context_; }

    QuadratureFailure with_context(const std::string& ctx) const;

private:
    double previous_;
    double last_;
    std::string context_;
};

/// Graded window strips did not decay fast enough for a geometric tail.
class TailDivergence : public NumericalFailure {
public:
    TailDivergence(double ratio, std::string context = {});
    double ratio() const noexcept { return ratio_; }

private:
    double ratio_;
};

/// A rearranged index beyond the certified prefix was requested.
class UncertifiedIndex : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

} // namespace vlab
