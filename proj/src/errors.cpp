#include "presmin/errors.hpp"

namespace presmin {

HorizonExceeded::HorizonExceeded(Natural requested, Natural horizon)
    : Error("query at " + std::to_string(requested) + " exceeds horizon " +
            std::to_string(horizon)),
      requested_(requested),
      horizon_(horizon) {}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace presmin
