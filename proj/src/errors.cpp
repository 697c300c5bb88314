#include "euclidpt/errors.hpp"

namespace euclidpt {

MapUndefined::MapUndefined(const std::string& what, double rhs)
    : Error(what), rhs_(rhs) {}

TrackingAmbiguity::TrackingAmbiguity(const std::string& what, double axis_value)
    : Error(what), axis_value_(axis_value) {}

}  // namespace euclidpt
