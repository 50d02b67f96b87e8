#pragma once

#include <stdexcept>
#include <string>

namespace barycalc {

// Base class for all library errors. Check *failures* are never exceptions;
// they travel as report data. Exceptions are reserved for contract
// violations: bad dimensions, off-grid table queries, malformed input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// A point does not belong to the model's carrier, or a construction-time
// invariant (meet-table laws, weight ranges, distribution sums) fails.
class DomainError : public Error {
public:
    using Error::Error;
};

// Table model queried at a weight outside its declared grid.
class UnsupportedWeightError : public Error {
public:
    using Error::Error;
};

class NoMetricError : public Error {
public:
    using Error::Error;
};

// drop_last on a distribution whose final weight is 1.
class DegenerateDistributionError : public Error {
public:
    using Error::Error;
};

// nu_assoc at lambda = mu = 1, where the associated weight is arbitrary.
class DegenerateAssociativityError : public Error {
public:
    using Error::Error;
};

class InvalidQuadError : public Error {
public:
    using Error::Error;
};

class WitnessError : public Error {
public:
    using Error::Error;
};

class UnrepresentableDirectionError : public Error {
public:
    using Error::Error;
};

class PipelineError : public Error {
public:
    using Error::Error;
};

// Malformed model-spec input; the message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace barycalc
