#include "barycalc/rational.hpp"

#include "barycalc/errors.hpp"

#include <cctype>
#include <sstream>

namespace barycalc {

namespace {

boost::multiprecision::cpp_rational make_canonical(BigInt num, BigInt den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    // cpp_rational reduces to lowest terms on construction.
    return boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) {
        return false;
    }
    const bool negative = text[0] == '-';
    std::size_t start = (negative || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        return false;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            return false;
        }
    }
    out = BigInt(std::string(text.substr(start)));
    if (negative) {
        out = -out;
    }
    return true;
}

}  // namespace

Rational::Rational(long long num, long long den)
    : value_(make_canonical(BigInt(num), BigInt(den))) {}

Rational::Rational(BigInt num, BigInt den)
    : value_(make_canonical(std::move(num), std::move(den))) {}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    BigInt den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) {
            throw ParseError("invalid rational '" + std::string(text) + "'");
        }
    } else {
        if (!parse_integer(text.substr(0, slash), num) ||
            !parse_integer(text.substr(slash + 1), den)) {
            throw ParseError("invalid rational '" + std::string(text) + "'");
        }
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
    }
    return Rational(std::move(num), std::move(den));
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw DomainError("reciprocal of zero");
    }
    return Rational(denominator(), numerator());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    return numerator().str() + "/" + denominator().str();
}

Coordinates add(const Coordinates& a, const Coordinates& b) {
    if (a.size() != b.size()) {
        throw DimensionError("coordinate dimensions differ");
    }
    Coordinates r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

Coordinates sub(const Coordinates& a, const Coordinates& b) {
    if (a.size() != b.size()) {
        throw DimensionError("coordinate dimensions differ");
    }
    Coordinates r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

Coordinates scaled(const Rational& s, const Coordinates& a) {
    Coordinates r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = s * a[i];
    }
    return r;
}

bool is_zero(const Coordinates& a) {
    for (const auto& c : a) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Coordinates& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) {
            os << ", ";
        }
        os << a[i].to_string();
    }
    os << ")";
    return os.str();
}

}  // namespace barycalc
