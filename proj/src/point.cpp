#include "barycalc/point.hpp"

#include "barycalc/errors.hpp"

namespace barycalc {

const Coordinates& Point::coords() const {
    if (!is_vector()) {
        throw DomainError("point '" + std::get<std::string>(repr_) + "' has no coordinates");
    }
    return std::get<Coordinates>(repr_);
}

const std::string& Point::element_id() const {
    if (is_vector()) {
        throw DomainError("coordinate point has no element id");
    }
    return std::get<std::string>(repr_);
}

std::string Point::to_string() const {
    if (is_vector()) {
        return barycalc::to_string(std::get<Coordinates>(repr_));
    }
    return std::get<std::string>(repr_);
}

}  // namespace barycalc
