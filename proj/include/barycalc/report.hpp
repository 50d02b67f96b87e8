#pragma once

#include "barycalc/point.hpp"
#include "barycalc/prob.hpp"
#include "barycalc/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace barycalc {

using Json = nlohmann::ordered_json;

Json json_of(const Rational& r);
Json json_of(const Weight& w);
Json json_of(const Point& p);
Json json_of(const Coordinates& c);
Json json_of(const ProbDist& d);

// One refuted instance: the exact inputs plus both evaluated sides, enough
// to replay the violation bit for bit.
struct Failure {
    std::uint64_t instance = 0;
    Json inputs;
    std::string lhs;
    std::string rhs;

    Json to_json() const;
};

// Outcome of one check. Failures are data, never exceptions; a report
// passes exactly when no instance failed. Stored witnesses are sorted by
// instance index and truncated to a fixed prefix so reports stay bounded;
// failure_count always carries the true total.
struct CheckReport {
    static constexpr std::size_t kMaxStoredFailures = 32;

    std::string check;
    std::uint64_t instances = 0;
    std::uint64_t skipped = 0;
    std::uint64_t failure_count = 0;
    std::vector<Failure> failures;
    std::map<std::string, std::string> stats;

    bool passed() const { return failure_count == 0; }

    void record(std::vector<Failure> sorted_failures);
    Json to_json() const;
};

}  // namespace barycalc
