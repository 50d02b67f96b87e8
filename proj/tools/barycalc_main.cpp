// Command-line driver: loads a model spec, runs the requested check suite,
// and prints a deterministic JSON report on stdout.
//
// Exit codes: 0 every check passed / no witness found; 1 a check failed or
// a witness was found (the report contains it); 2 usage or parse error.

#include "barycalc/axioms.hpp"
#include "barycalc/embedding.hpp"
#include "barycalc/errors.hpp"
#include "barycalc/metric_norm.hpp"
#include "barycalc/model_spec.hpp"
#include "barycalc/version.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace barycalc;

Json model_summary(const ConvexModel& model) {
    Json j;
    j["kind"] = model.kind_name();
    if (model.kind() == ModelKind::Hull) {
        j["dimension"] = model.dimension();
        j["generators"] = model.generators().size();
        j["metric"] = model.has_metric() ? Json(model.metric().name()) : Json(nullptr);
    } else {
        j["carrier_size"] = model.elements().size();
    }
    return j;
}

int emit(const std::string& command, const ParsedSpec& spec, Json sections, bool pass) {
    Json report;
    report["tool"] = "barycalc";
    report["version"] = kVersion;
    report["command"] = command;
    report["spec_digest"] = spec.digest;
    report["seed"] = spec.sampler.seed;
    report["model"] = model_summary(spec.model);
    report["sections"] = std::move(sections);
    report["overall_pass"] = pass;
    std::cout << report.dump(2) << "\n";
    return pass ? 0 : 1;
}

int run_check_axioms(const ParsedSpec& spec) {
    Json sections;
    bool pass = true;
    const CheckReport cs = check_convex_space_axioms(spec.model, spec.sampler);
    sections["convex_space_axioms"] = cs.to_json();
    pass = pass && cs.passed();
    const CheckReport gamma = check_gamma_axioms(spec.model, spec.sampler);
    sections["gamma_axioms"] = gamma.to_json();
    pass = pass && gamma.passed();
    if (spec.model.kind() == ModelKind::Hull && spec.model.has_metric()) {
        const CheckReport metric = check_metric_axiom(spec.model, spec.sampler);
        sections["metric_compatibility"] = metric.to_json();
        pass = pass && metric.passed();
    }
    return emit("check-axioms", spec, std::move(sections), pass);
}

int run_embed(const ParsedSpec& spec) {
    Json sections;
    const FiniteCarrier carrier = generate_carrier(
        spec.model, spec.model.generator_points(), spec.sampler.grid, spec.depth);
    sections["carrier"] = carrier.to_json();
    const RelationSet relations = build_relations(carrier, spec.model, spec.sampler.grid);
    Json rel;
    rel["rows"] = relations.rows.size();
    rel["escaped"] = relations.escaped;
    sections["relations"] = rel;
    const EmbeddingReport embedding = quotient_coordinates(relations, carrier);
    sections["embedding"] = embedding.to_json();
    const EmbeddingVerification verification =
        verify_embedding(embedding, carrier, spec.model, spec.sampler.grid);
    Json ver;
    ver["affine"] = verification.affine.to_json();
    ver["witness"] = verification.witness ? verification.witness->to_json() : Json(nullptr);
    sections["verification"] = ver;
    const bool pass = embedding.injective && verification.affine.passed();
    return emit("embed", spec, std::move(sections), pass);
}

int run_cancel_search(const ParsedSpec& spec) {
    Json sections;
    const auto witness = cancellation_search(spec.model, spec.sampler);
    sections["witness"] = witness ? witness->to_json() : Json(nullptr);
    return emit("cancel-search", spec, std::move(sections), !witness.has_value());
}

int run_recover_norm(const ParsedSpec& spec, const std::string& direction_text) {
    Json sections;
    Coordinates direction;
    std::size_t start = 0;
    while (start <= direction_text.size()) {
        const std::size_t comma = direction_text.find(',', start);
        const std::string item = direction_text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        direction.push_back(Rational::from_string(item));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    try {
        const NormProbe probe = recover_norm(spec.model, direction, spec.sampler);
        sections["probe"] = probe.to_json();
        return emit("recover-norm", spec, std::move(sections), true);
    } catch (const UnrepresentableDirectionError& e) {
        sections["error"] = e.what();
        return emit("recover-norm", spec, std::move(sections), false);
    }
}

int run_verify_isometry(const ParsedSpec& spec) {
    Json sections;
    try {
        const CheckReport report = verify_isometry(spec.model, spec.sampler, spec.depth);
        sections["isometry"] = report.to_json();
        return emit("verify-isometry", spec, std::move(sections), report.passed());
    } catch (const PipelineError& e) {
        sections["error"] = e.what();
        return emit("verify-isometry", spec, std::move(sections), false);
    }
}

int run_bounded(const ParsedSpec& spec, const std::optional<std::string>& constant) {
    Json sections;
    if (constant) {
        const Rational c = Rational::from_string(*constant);
        const CheckReport report = check_first_metric_condition(spec.model, c, spec.sampler);
        sections["first_metric_condition"] = report.to_json();
        return emit("bounded", spec, std::move(sections), report.passed());
    }
    const CheckReport report = boundedness_check(spec.model, spec.sampler);
    sections["boundedness"] = report.to_json();
    return emit("bounded", spec, std::move(sections), report.passed());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"barycalc: exact checks for abstract convex structures"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("barycalc ") + barycalc::kVersion);

    std::string spec_path;
    std::string direction;
    std::optional<std::string> constant;

    auto* check_axioms = app.add_subcommand(
        "check-axioms", "Check the convex-space, gamma and metric axioms");
    check_axioms->add_option("spec", spec_path, "model spec JSON file")->required();

    auto* embed = app.add_subcommand(
        "embed", "Embed a finitely sampled carrier into a rational vector space");
    embed->add_option("spec", spec_path, "model spec JSON file")->required();

    auto* cancel = app.add_subcommand("cancel-search", "Search for a cancellation counterexample");
    cancel->add_option("spec", spec_path, "model spec JSON file")->required();

    auto* recover = app.add_subcommand("recover-norm", "Recover the norm of a direction vector");
    recover->add_option("spec", spec_path, "model spec JSON file")->required();
    recover->add_option("--direction", direction, "comma-separated num/den coordinates")
        ->required();

    auto* isometry = app.add_subcommand(
        "verify-isometry", "Verify the embed-then-recover pipeline reproduces the metric");
    isometry->add_option("spec", spec_path, "model spec JSON file")->required();

    auto* bounded = app.add_subcommand(
        "bounded", "Check the first metric condition / boundedness constant");
    bounded->add_option("spec", spec_path, "model spec JSON file")->required();
    bounded->add_option("--constant", [&constant](const CLI::results_t& r) {
        constant = r.at(0);
        return true;
    }, "claimed constant as num/den");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const barycalc::ParsedSpec spec = barycalc::load_model_spec(spec_path);
        if (check_axioms->parsed()) {
            return run_check_axioms(spec);
        }
        if (embed->parsed()) {
            return run_embed(spec);
        }
        if (cancel->parsed()) {
            return run_cancel_search(spec);
        }
        if (recover->parsed()) {
            return run_recover_norm(spec, direction);
        }
        if (isometry->parsed()) {
            return run_verify_isometry(spec);
        }
        if (bounded->parsed()) {
            return run_bounded(spec, constant);
        }
    } catch (const barycalc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const barycalc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
