#include "vlab/errors.hpp"

#include <sstream>

namespace vlab {

namespace {

std::string quadrature_message(double previous, double last, const std::string& context)
{
    std::ostringstream os;
    os.precision(17);
    os << "quadrature did not converge";
    if (!context.empty()) {
        os << " on " << context;
    }
    os << " (last two values " << previous << ", " << last << ")";
    return os.str();
}

std::string tail_message(double ratio, const std::string& context)
{
    std::ostringstream os;
    os << "window tail ratio " << ratio << " >= 0.95";
    if (!context.empty()) {
        os << " on " << context;
    }
    os << "; density too singular for the grading depth";
    return os.str();
}

} // namespace

QuadratureFailure::QuadratureFailure(double previous, double last, std::string context)
    : NumericalFailure(quadrature_message(previous, last, context))
    , previous_(previous)
    , last_(last)
    , context_(std::move(context))
{
}

QuadratureFailure QuadratureFailure::with_context(const std::string& ctx) const
{
    return QuadratureFailure(previous_, last_, ctx);
}

TailDivergence::TailDivergence(double ratio, std::string context)
    : NumericalFailure(tail_message(ratio, context))
    , ratio_(ratio)
{
}

} // namespace vlab
