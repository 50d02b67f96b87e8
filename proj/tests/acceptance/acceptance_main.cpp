// Acceptance suite: runs every top-level criterion against the bundled
// fixtures and prints one PASS/FAIL line per criterion. Exits nonzero if
// any criterion fails. Requires BARYCALC_CLI and BARYCALC_FIXTURES in the
// environment (ctest sets both).

#include "barycalc/axioms.hpp"
#include "barycalc/embedding.hpp"
#include "barycalc/errors.hpp"
#include "barycalc/geometry.hpp"
#include "barycalc/metric_norm.hpp"
#include "barycalc/model_spec.hpp"
#include "support/affine_oracle.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace barycalc;

namespace {

std::string g_cli;
std::string g_fixtures;
int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& id, bool passed, const std::string& detail) {
    std::printf("%s %s  %s\n", id.c_str(), passed ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!passed) {
        ++g_failures;
    }
}

ParsedSpec fixture(const std::string& name) {
    return load_model_spec(g_fixtures + "/" + name);
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    const std::string command = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        return result;
    }
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// AC-1: the derived recursive gamma equals the direct affine oracle on the
// triangle and square fixtures, for every grid distribution with n <= 5 and
// every sampled point tuple, >= 10^4 instances total, under 30 seconds.
void ac1() {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t total = 0;
    std::uint64_t failures = 0;
    for (const char* name : {"triangle-l1.json", "square-l1.json"}) {
        const ParsedSpec spec = fixture(name);
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto dists = enumerate_grid_distributions(spec.sampler.grid, n);
            const std::uint64_t tuples =
                std::max<std::uint64_t>(1, 6000 / (5 * dists.size()) + 1);
            const std::uint64_t batch = dists.size() * tuples;
            const BatchResult r = run_batch(batch, ExecMode::Parallel, [&](std::uint64_t i) {
                const ProbDist& mu = dists[static_cast<std::size_t>(i % dists.size())];
                const std::uint64_t t = i / dists.size();
                SplitMix64 rng = SplitMix64::at(spec.sampler.seed, 1000 + n, t);
                const auto pts = spec.sampler.point_tuple(spec.model, n, t, rng);
                if (spec.model.gamma(mu, pts) == testing::affine_combination_oracle(mu, pts)) {
                    return InstanceResult::pass();
                }
                Failure f;
                f.instance = i;
                return InstanceResult::fail(std::move(f));
            });
            total += r.instances;
            failures += r.failures.size();
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "derived gamma vs affine oracle: " << total << " instances, " << failures
           << " failures, " << elapsed << "s";
    report("AC-1", failures == 0 && total >= 10000 && elapsed < 30.0, detail.str());
}

// AC-2: axiom checks pass with zero failures on every hull and semilattice
// fixture; the corrupted table fails and the witness names the corrupted
// tuple.
void ac2() {
    bool ok = true;
    std::ostringstream detail;
    for (const char* name :
         {"segment-l1.json", "triangle-l1.json", "triangle-linf.json", "square-l1.json",
          "square-linf.json", "simplex-l1.json", "segment5-l1.json",
          "twochain-semilattice.json", "antichain-bottom-semilattice.json"}) {
        const ParsedSpec spec = fixture(name);
        const auto cs = check_convex_space_axioms(spec.model, spec.sampler);
        const auto gamma = check_gamma_axioms(spec.model, spec.sampler);
        if (!cs.passed() || !gamma.passed()) {
            ok = false;
            detail << name << " unexpectedly failed; ";
        }
    }
    const ParsedSpec corrupted = fixture("corrupted-table.json");
    const auto cs = check_convex_space_axioms(corrupted.model, corrupted.sampler);
    bool witness_names_corruption = false;
    for (const auto& f : cs.failures) {
        const auto axiom = f.inputs.value("axiom", "");
        if (axiom != "cs.3" && axiom != "cs.4") {
            continue;
        }
        const std::string dump = f.inputs.dump();
        if (dump.find("1/2") != std::string::npos && dump.find("\"a\"") != std::string::npos &&
            dump.find("\"b\"") != std::string::npos) {
            witness_names_corruption = true;
        }
    }
    if (cs.passed() || !witness_names_corruption) {
        ok = false;
        detail << "corrupted table not flagged with the corrupted tuple; ";
    }
    detail << "9 passing fixtures, corrupted table flagged by "
           << (cs.failures.empty() ? std::string("-") : cs.failures[0].inputs.value("axiom", "?"));
    report("AC-2", ok, detail.str());
}

// AC-3: embed on the hull fixtures is injective, affinely consistent, and
// has quotient dimension = affine dimension + 1.
void ac3() {
    bool ok = true;
    std::ostringstream detail;
    for (const char* name : {"segment-l1.json", "triangle-l1.json", "triangle-linf.json",
                             "square-l1.json", "square-linf.json"}) {
        const ParsedSpec spec = fixture(name);
        const std::size_t expected_dim = affine_dimension(spec.model.generators()) + 1;
        const auto r = run_cli("embed " + g_fixtures + "/" + name);
        if (r.exit_code != 0) {
            ok = false;
            detail << name << " exit " << r.exit_code << "; ";
            continue;
        }
        const auto report_json = Json::parse(r.output);
        const auto& embedding = report_json["sections"]["embedding"];
        const bool injective = embedding["injective"].get<bool>();
        const std::size_t dim = embedding["quotient_dimension"].get<std::size_t>();
        const bool affine =
            report_json["sections"]["verification"]["affine"]["passed"].get<bool>();
        if (!injective || !affine || dim != expected_dim) {
            ok = false;
            detail << name << " injective=" << injective << " dim=" << dim << " expected "
                   << expected_dim << "; ";
        }
    }
    detail << "5 hull fixtures embedded";
    report("AC-3", ok, detail.str());
}

// AC-4: embed on the two-chain yields exactly the collision class {a, b}
// with an attached valid witness, and cancel-search finds one independently.
void ac4() {
    bool ok = true;
    std::ostringstream detail;
    const ParsedSpec spec = fixture("twochain-semilattice.json");

    const auto embed = run_cli("embed " + g_fixtures + "/twochain-semilattice.json");
    if (embed.exit_code != 1) {
        ok = false;
        detail << "embed exit " << embed.exit_code << " (want 1); ";
    } else {
        const auto report_json = Json::parse(embed.output);
        const auto& embedding = report_json["sections"]["embedding"];
        std::vector<std::vector<std::size_t>> nontrivial;
        for (const auto& cls : embedding["collision_classes"]) {
            if (cls.size() > 1) {
                nontrivial.push_back(cls.get<std::vector<std::size_t>>());
            }
        }
        const bool one_class =
            nontrivial.size() == 1 && nontrivial[0] == std::vector<std::size_t>{0, 1};
        const auto& witness = report_json["sections"]["verification"]["witness"];
        bool witness_valid = false;
        if (witness.is_object()) {
            const Point x = Point::element(witness["x"].get<std::string>());
            const Point y = Point::element(witness["y"].get<std::string>());
            const Point z = Point::element(witness["z"].get<std::string>());
            const Weight lam = Weight::from_string(witness["lambda"].get<std::string>());
            witness_valid = y != z && lam.is_interior() &&
                            spec.model.cc(lam, x, y) == spec.model.cc(lam, x, z);
        }
        if (!one_class || !witness_valid) {
            ok = false;
            detail << "collision class or witness wrong; ";
        }
    }

    const auto search = run_cli("cancel-search " + g_fixtures + "/twochain-semilattice.json");
    if (search.exit_code != 1) {
        ok = false;
        detail << "cancel-search exit " << search.exit_code << " (want 1); ";
    } else {
        const auto report_json = Json::parse(search.output);
        const auto& witness = report_json["sections"]["witness"];
        bool witness_valid = false;
        if (witness.is_object()) {
            const Point x = Point::element(witness["x"].get<std::string>());
            const Point y = Point::element(witness["y"].get<std::string>());
            const Point z = Point::element(witness["z"].get<std::string>());
            const Weight lam = Weight::from_string(witness["lambda"].get<std::string>());
            witness_valid = y != z && lam.is_interior() &&
                            spec.model.cc(lam, x, y) == spec.model.cc(lam, x, z);
        }
        if (!witness_valid) {
            ok = false;
            detail << "cancel-search witness invalid; ";
        }
    }
    detail << "collision class {a,b} with valid witnesses";
    report("AC-4", ok, detail.str());
}

// AC-5: the lambda sequence from 1/2 matches 2^n/(2^n+1) for 20 steps, and
// propagation of the semilattice witness passes at all 20 steps.
void ac5() {
    bool ok = true;
    std::ostringstream detail;
    const auto seq = lambda_sequence(Weight(Rational(1, 2)), 20);
    Rational pow2(1);
    for (std::size_t n = 1; n <= 20; ++n) {
        pow2 *= Rational(2);
        if (seq[n - 1] != Weight(pow2 / (pow2 + Rational(1)))) {
            ok = false;
            detail << "sequence mismatch at step " << n << "; ";
        }
    }
    const ParsedSpec spec = fixture("twochain-semilattice.json");
    const auto witness = cancellation_search(spec.model, spec.sampler);
    if (!witness) {
        ok = false;
        detail << "no witness found; ";
    } else {
        const auto propagation =
            cancellation_propagation(spec.model, *witness, 20, spec.sampler);
        if (!propagation.passed() || propagation.instances < 20 || propagation.skipped != 0) {
            ok = false;
            detail << "propagation failed (" << propagation.failure_count << " failures); ";
        }
    }
    detail << "20 exact steps of the closed form and of the propagated collision";
    report("AC-5", ok, detail.str());
}

// AC-6: the embed-then-recover pipeline reproduces the metric exactly on
// the triangle and square fixtures under both metrics, >= 10^3 pairs each,
// within 60 seconds overall.
void ac6() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;
    std::uint64_t total_pairs = 0;
    for (const char* name : {"triangle-l1.json", "triangle-linf.json", "square-l1.json",
                             "square-linf.json"}) {
        const ParsedSpec spec = fixture(name);
        try {
            const auto report_check = verify_isometry(spec.model, spec.sampler, spec.depth);
            const std::uint64_t pairs = std::stoull(report_check.stats.at("pairs"));
            total_pairs += pairs;
            if (!report_check.passed() || pairs < 1000) {
                ok = false;
                detail << name << " failed (" << pairs << " pairs); ";
            }
        } catch (const Error& e) {
            ok = false;
            detail << name << " error: " << e.what() << "; ";
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) {
        ok = false;
    }
    detail << total_pairs << " pairs reproduced d(x,y) exactly, " << elapsed << "s";
    report("AC-6", ok, detail.str());
}

// AC-7: uniform-on-lines and translation invariance hold exactly on all
// metric hull fixtures, with the per-epsilon relations at 1/2 .. 1/16.
void ac7() {
    bool ok = true;
    std::ostringstream detail;
    const std::vector<Weight> epsilons = {Weight(Rational(1, 2)), Weight(Rational(1, 4)),
                                          Weight(Rational(1, 8)), Weight(Rational(1, 16))};
    std::uint64_t quads_checked = 0;
    for (const char* name : {"segment-l1.json", "triangle-l1.json", "triangle-linf.json",
                             "square-l1.json", "square-linf.json", "simplex-l1.json",
                             "segment5-l1.json"}) {
        const ParsedSpec spec = fixture(name);
        if (!check_uniform_on_lines(spec.model, spec.sampler).passed()) {
            ok = false;
            detail << name << " uniform-on-lines failed; ";
        }
        const auto quads = sample_translation_quads(spec.model, spec.sampler, 8, epsilons);
        if (quads.empty()) {
            ok = false;
            detail << name << " produced no quads; ";
        }
        for (const auto& quad : quads) {
            ++quads_checked;
            if (!check_translation_invariance(spec.model, quad).passed()) {
                ok = false;
                detail << name << " quad failed; ";
            }
        }
    }
    detail << "uniform-on-lines + " << quads_checked
           << " translation quads at eps 1/2..1/16, all exact";
    report("AC-7", ok, detail.str());
}

// AC-8: boundedness passes on the unit simplex with C0 = 1 and diameter
// exactly 2; the scaled segment with claimed C = 1 fails with the Dirac
// witness LHS 5 > RHS 2.
void ac8() {
    bool ok = true;
    std::ostringstream detail;
    const ParsedSpec simplex = fixture("simplex-l1.json");
    const auto bounded = boundedness_check(simplex.model, simplex.sampler);
    if (!bounded.passed() || bounded.stats.at("c0") != "1/1" ||
        bounded.stats.at("max_distance") != "2/1") {
        ok = false;
        detail << "simplex: c0=" << bounded.stats.at("c0") << " max_distance="
               << bounded.stats.at("max_distance") << "; ";
    }

    const auto r = run_cli("bounded " + g_fixtures + "/segment5-l1.json --constant 1/1");
    bool witness_found = false;
    if (r.exit_code == 1) {
        const auto report_json = Json::parse(r.output);
        for (const auto& f : report_json["sections"]["first_metric_condition"]["failures"]) {
            if (f["inputs"]["mu"] == Json::array({"1/1", "0/1"}) &&
                f["inputs"]["mu_tilde"] == Json::array({"0/1", "1/1"}) && f["lhs"] == "5/1" &&
                f["rhs"] == "2/1") {
                witness_found = true;
            }
        }
    }
    if (!witness_found) {
        ok = false;
        detail << "segment5 witness missing (exit " << r.exit_code << "); ";
    }
    detail << "simplex C0=1 diameter 2; segment5 fails C=1 with LHS 5/1 > RHS 2/1";
    report("AC-8", ok, detail.str());
}

// AC-9: every subcommand is byte-deterministic for a fixed spec and seed.
void ac9() {
    bool ok = true;
    std::ostringstream detail;
    const std::vector<std::string> invocations = {
        "check-axioms " + g_fixtures + "/square-l1.json",
        "embed " + g_fixtures + "/triangle-l1.json",
        "cancel-search " + g_fixtures + "/twochain-semilattice.json",
        "recover-norm " + g_fixtures + "/square-l1.json --direction 1/2,1/2",
        "verify-isometry " + g_fixtures + "/triangle-linf.json",
        "bounded " + g_fixtures + "/simplex-l1.json",
    };
    for (const auto& args : invocations) {
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        if (first.output.empty() || first.output != second.output ||
            first.exit_code != second.exit_code) {
            ok = false;
            detail << "nondeterministic: " << args << "; ";
        }
    }
    detail << invocations.size() << " subcommands byte-identical across reruns";
    report("AC-9", ok, detail.str());
}

}  // namespace

int main() {
    const char* cli = std::getenv("BARYCALC_CLI");
    const char* fixtures = std::getenv("BARYCALC_FIXTURES");
    if (!cli || !fixtures) {
        std::cerr << "BARYCALC_CLI and BARYCALC_FIXTURES must be set\n";
        return 2;
    }
    g_cli = cli;
    g_fixtures = fixtures;

    try {
        ac1();
        ac2();
        ac3();
        ac4();
        ac5();
        ac6();
        ac7();
        ac8();
        ac9();
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 2;
    }

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}
