#include "aaslab/errors.hpp"

namespace aaslab {

OrderNotInGroup::OrderNotInGroup(unsigned order)
    : Error("order " + std::to_string(order) + " is not an element order of the group"), order_(order)
{
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " (at column " + std::to_string(position + 1) + ")"), position_(position)
{
}

} // namespace aaslab
