#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hn/core/axioms.hpp"
#include "hn/instances/broken.hpp"
#include "hn/instances/generators.hpp"
#include "hn/io/object_io.hpp"
#include "hn/io/report.hpp"

namespace hn::cli {

struct RunConfig {
    std::string command;                 // compute | oracle | axioms | hom | polygon
    std::string instance;                // filtvec | quiver | phimod | broken-degree (axioms/compute)
    std::vector<std::string> inputs;
    std::string format = "json";         // json | tsv
    bool want_svg = false;
    std::uint64_t seed = 0;
    int samples = 25;
    int precision = 0;                   // 0: object/default precision
};

struct RunResult {
    int exit_code = 0;
    std::string report; // rendered in the requested format
    std::string svg;    // nonempty when requested and available
};

// Exit codes: 0 success, 1 check failed (oracle divergence, axiom check
// failure, inconsistent hom report), 2 invalid input (including zero
// objects), 3 enumeration bound or precision exhausted, 4 axiom violation
// detected in the instance under inspection.
inline int exit_code_for(const Error& e) {
    if (dynamic_cast<const AxiomViolation*>(&e)) return 4;
    if (dynamic_cast<const EnumerationBound*>(&e)) return 3;
    if (dynamic_cast<const PrecisionExhausted*>(&e)) return 3;
    return 2; // InvalidInput, ZeroObject, ArithmeticOverflow
}

namespace detail {

inline std::string basename_of(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

template <class I>
nlohmann::json compute_body(const I& inst, const typename I::Object& x, PolygonFn* poly_out) {
    auto filt = hn_filtration(inst, x);
    PolygonFn poly = hn_polygon(filt);
    nlohmann::json body;
    body["rank"] = inst.rank(x);
    body["degree"] = inst.degree(x);
    body["slope"] = object_slope(inst, x).str();
    body["semistable"] = filt.length() == 1;
    body["object"] = inst.describe(x);
    body["filtration"] = io::filtration_to_json(inst, filt);
    body["polygon"] = io::polygon_to_json(poly);
    if (poly_out) *poly_out = std::move(poly);
    return body;
}

template <class I>
nlohmann::json oracle_body(const I& inst, const typename I::Object& x) {
    auto engine_poly = hn_polygon(hn_filtration(inst, x));
    auto oracle_poly = oracle_polygon(inst, x);
    nlohmann::json body;
    body["engine_polygon"] = io::polygon_to_json(engine_poly);
    body["oracle_polygon"] = io::polygon_to_json(oracle_poly);
    bool equal = engine_poly == oracle_poly;
    body["equal"] = equal;
    if (!equal) {
        Int x_div = 0;
        Rational ey, oy;
        polygon_first_divergence(engine_poly, oracle_poly, &x_div, &ey, &oy);
        body["first_divergence"] = {{"x", x_div}, {"engine", ey.str()}, {"oracle", oy.str()}};
    }
    return body;
}

inline nlohmann::json axiom_report_to_json(const AxiomReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json entry{{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}};
        if (!c.pass) entry["witness"] = c.witness;
        checks.push_back(entry);
    }
    return {{"checks", checks}, {"all_pass", report.all_pass()}};
}

inline void apply_precision(pm::PhiModObject& x, int precision) {
    if (precision > 0) x.precision = precision;
}

} // namespace detail

inline RunResult finish(const RunConfig& config, nlohmann::json body, int exit_code, const PolygonFn* svg_poly) {
    body["schema"] = io::kReportSchema;
    body["command"] = config.command;
    RunResult result;
    result.exit_code = exit_code;
    result.report = config.format == "tsv" ? io::render_tsv(body) : io::render_json(body);
    if (config.want_svg && svg_poly) result.svg = io::polygon_svg(*svg_poly);
    return result;
}

inline RunResult run_compute(const RunConfig& config) {
    if (config.inputs.size() != 1) throw InvalidInput("compute expects exactly one --input file");
    auto loaded = io::load_object_file(config.inputs[0]);
    bool broken = config.instance == "broken-degree";
    if (!config.instance.empty() && !broken && config.instance != loaded.instance)
        throw InvalidInput("--instance " + config.instance + " does not match input file (" + loaded.instance + ")");
    if (broken && loaded.instance != "filtvec")
        throw InvalidInput("the broken-degree demo instance runs on filtvec object files");
    nlohmann::json body;
    PolygonFn poly;
    if (auto* x = std::get_if<fv::FiltVecObject>(&loaded.object)) {
        if (broken) {
            fv::BrokenDegreeInstance inst;
            body = detail::compute_body(inst, *x, &poly);
        } else {
            fv::FiltVecInstance inst;
            body = detail::compute_body(inst, *x, &poly);
        }
    } else if (auto* x = std::get_if<qv::QuiverRepObject>(&loaded.object)) {
        qv::QuiverInstance inst;
        body = detail::compute_body(inst, *x, &poly);
    } else {
        auto x2 = std::get<pm::PhiModObject>(loaded.object);
        detail::apply_precision(x2, config.precision);
        pm::PhiModInstance inst;
        body = detail::compute_body(inst, x2, &poly);
    }
    body["instance"] = broken ? "broken-degree" : loaded.instance;
    body["input"] = detail::basename_of(config.inputs[0]);
    return finish(config, std::move(body), 0, &poly);
}

inline RunResult run_oracle(const RunConfig& config) {
    if (config.inputs.size() != 1) throw InvalidInput("oracle expects exactly one --input file");
    auto loaded = io::load_object_file(config.inputs[0]);
    if (!config.instance.empty() && config.instance != loaded.instance)
        throw InvalidInput("--instance does not match input file");
    nlohmann::json body;
    if (auto* x = std::get_if<fv::FiltVecObject>(&loaded.object)) {
        body = detail::oracle_body(fv::FiltVecInstance{}, *x);
    } else if (auto* x = std::get_if<qv::QuiverRepObject>(&loaded.object)) {
        body = detail::oracle_body(qv::QuiverInstance{}, *x);
    } else {
        auto x2 = std::get<pm::PhiModObject>(loaded.object);
        detail::apply_precision(x2, config.precision);
        body = detail::oracle_body(pm::PhiModInstance{}, x2);
    }
    body["instance"] = loaded.instance;
    body["input"] = detail::basename_of(config.inputs[0]);
    bool equal = body.at("equal").get<bool>();
    body["verdict"] = equal ? "EQUAL" : "DIVERGENT";
    return finish(config, std::move(body), equal ? 0 : 1, nullptr);
}

inline RunResult run_axioms(const RunConfig& config) {
    if (config.instance.empty()) throw InvalidInput("axioms requires --instance");
    gen::Rng rng(config.seed);
    nlohmann::json body;
    AxiomReport report;
    if (config.instance == "filtvec" || config.instance == "broken-degree") {
        std::vector<fv::FiltVecObject> samples = gen::fv_corpus(2, 2, 0, 2);
        for (int i = 0; i < config.samples; ++i) samples.push_back(gen::fv_random(rng, 3, 2));
        if (config.instance == "filtvec")
            report = check_instance_axioms(fv::FiltVecInstance{}, samples);
        else
            report = check_instance_axioms(fv::BrokenDegreeInstance{}, samples);
    } else if (config.instance == "quiver") {
        std::vector<qv::QuiverRepObject> samples = gen::qv_small_corpus(2);
        for (int i = 0; i < config.samples; ++i) samples.push_back(gen::qv_random(rng, 4, 2));
        report = check_instance_axioms(qv::QuiverInstance{}, samples);
    } else if (config.instance == "phimod") {
        std::vector<pm::PhiModObject> samples{gen::pm_diag({0, 1}), gen::pm_diag({0, 0}),
                                              gen::pm_diag({2, 1}), gen::pm_triangular_fixture()};
        report = check_instance_axioms(pm::PhiModInstance{}, samples);
    } else {
        throw InvalidInput("unknown instance for axioms: " + config.instance);
    }
    body = detail::axiom_report_to_json(report);
    body["instance"] = config.instance;
    body["seed"] = config.seed;
    body["samples"] = config.samples;
    return finish(config, std::move(body), report.all_pass() ? 0 : 1, nullptr);
}

inline RunResult run_hom(const RunConfig& config) {
    if (config.inputs.size() != 2) throw InvalidInput("hom expects two --input files (source, target)");
    auto lx = io::load_object_file(config.inputs[0]);
    auto ly = io::load_object_file(config.inputs[1]);
    if (lx.instance != ly.instance) throw InvalidInput("hom requires both objects from the same instance");
    if (!config.instance.empty() && config.instance != lx.instance)
        throw InvalidInput("--instance does not match input files");
    nlohmann::json body;
    auto fill = [&]<MorphismInstance I>(const I& inst, const typename I::Object& x,
                                        const typename I::Object& y) {
        auto basis = inst.hom_basis(x, y);
        auto fx = hn_filtration(inst, x);
        auto fy = hn_filtration(inst, y);
        bool predicted = hom_vanishes_predicted(fx, fy);
        body["hom_dim"] = basis.size();
        body["predicted_vanishing"] = predicted;
        nlohmann::json sx = nlohmann::json::array(), sy = nlohmann::json::array();
        for (const auto& mu : fx.graded_slopes) sx.push_back(mu.str());
        for (const auto& mu : fy.graded_slopes) sy.push_back(mu.str());
        body["source_slopes"] = sx;
        body["target_slopes"] = sy;
        bool consistent = !(predicted && !basis.empty());
        if (fx.length() == 1 && fy.length() == 1 && !basis.empty())
            consistent = consistent && !(object_slope(inst, y) < object_slope(inst, x));
        body["consistent"] = consistent;
    };
    if (auto* x = std::get_if<fv::FiltVecObject>(&lx.object)) {
        fill(fv::FiltVecInstance{}, *x, std::get<fv::FiltVecObject>(ly.object));
    } else if (auto* x = std::get_if<qv::QuiverRepObject>(&lx.object)) {
        fill(qv::QuiverInstance{}, *x, std::get<qv::QuiverRepObject>(ly.object));
    } else {
        throw InvalidInput("hom is not available for the phimod instance");
    }
    body["instance"] = lx.instance;
    body["source"] = detail::basename_of(config.inputs[0]);
    body["target"] = detail::basename_of(config.inputs[1]);
    return finish(config, std::move(body), body.at("consistent").get<bool>() ? 0 : 1, nullptr);
}

inline RunResult run_polygon(const RunConfig& config) {
    if (config.inputs.size() != 1) throw InvalidInput("polygon expects exactly one --input file");
    auto loaded = io::load_object_file(config.inputs[0]);
    if (!config.instance.empty() && config.instance != loaded.instance)
        throw InvalidInput("--instance does not match input file");
    PolygonFn poly;
    if (auto* x = std::get_if<fv::FiltVecObject>(&loaded.object)) {
        poly = hn_polygon(hn_filtration(fv::FiltVecInstance{}, *x));
    } else if (auto* x = std::get_if<qv::QuiverRepObject>(&loaded.object)) {
        poly = hn_polygon(hn_filtration(qv::QuiverInstance{}, *x));
    } else {
        auto x2 = std::get<pm::PhiModObject>(loaded.object);
        detail::apply_precision(x2, config.precision);
        poly = hn_polygon(hn_filtration(pm::PhiModInstance{}, x2));
    }
    nlohmann::json body;
    body["instance"] = loaded.instance;
    body["input"] = detail::basename_of(config.inputs[0]);
    body["polygon"] = io::polygon_to_json(poly);
    return finish(config, std::move(body), 0, &poly);
}

inline RunResult run(const RunConfig& config) {
    try {
        if (config.command == "compute") return run_compute(config);
        if (config.command == "oracle") return run_oracle(config);
        if (config.command == "axioms") return run_axioms(config);
        if (config.command == "hom") return run_hom(config);
        if (config.command == "polygon") return run_polygon(config);
        throw InvalidInput("unknown command: " + config.command);
    } catch (const Error& e) {
        RunResult result;
        result.exit_code = exit_code_for(e);
        nlohmann::json body{{"schema", io::kReportSchema}, {"command", config.command},
                            {"error", e.what()}, {"exit_code", exit_code_for(e)}};
        result.report = config.format == "tsv" ? io::render_tsv(body) : io::render_json(body);
        return result;
    }
}

} // namespace hn::cli
