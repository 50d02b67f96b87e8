#pragma once

#include "barycalc/rational.hpp"

#include <string>
#include <variant>

namespace barycalc {

// A carrier element in canonical form: hull models use exact coordinate
// vectors, finite models (semilattice, table) use element identifiers.
// Equality and ordering are decided on the canonical representation.
class Point {
public:
    static Point vector(Coordinates coords) { return Point(std::move(coords)); }
    static Point element(std::string id) { return Point(std::move(id)); }

    bool is_vector() const { return std::holds_alternative<Coordinates>(repr_); }

    const Coordinates& coords() const;
    const std::string& element_id() const;

    std::string to_string() const;

    friend bool operator==(const Point& a, const Point& b) { return a.repr_ == b.repr_; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) { return a.repr_ < b.repr_; }

private:
    explicit Point(Coordinates c) : repr_(std::move(c)) {}
    explicit Point(std::string id) : repr_(std::move(id)) {}

    std::variant<Coordinates, std::string> repr_;
};

}  // namespace barycalc
