#include "barycalc/report.hpp"

namespace barycalc {

Json json_of(const Rational& r) { return r.to_string(); }

Json json_of(const Weight& w) { return w.to_string(); }

Json json_of(const Coordinates& c) {
    Json arr = Json::array();
    for (const auto& v : c) {
        arr.push_back(v.to_string());
    }
    return arr;
}

Json json_of(const Point& p) {
    if (p.is_vector()) {
        return json_of(p.coords());
    }
    return p.element_id();
}

Json json_of(const ProbDist& d) {
    Json arr = Json::array();
    for (const auto& w : d.weights()) {
        arr.push_back(w.to_string());
    }
    return arr;
}

Json Failure::to_json() const {
    Json j;
    j["instance"] = instance;
    j["inputs"] = inputs;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    return j;
}

void CheckReport::record(std::vector<Failure> sorted_failures) {
    failure_count += sorted_failures.size();
    for (auto& f : sorted_failures) {
        if (failures.size() >= kMaxStoredFailures) {
            break;
        }
        failures.push_back(std::move(f));
    }
}

Json CheckReport::to_json() const {
    Json j;
    j["check"] = check;
    j["instances"] = instances;
    j["skipped"] = skipped;
    j["passed"] = passed();
    j["failure_count"] = failure_count;
    Json fs = Json::array();
    for (const auto& f : failures) {
        fs.push_back(f.to_json());
    }
    j["failures"] = fs;
    if (!stats.empty()) {
        Json s;
        for (const auto& [k, v] : stats) {
            s[k] = v;
        }
        j["stats"] = s;
    }
    return j;
}

}  // namespace barycalc
