// acumen-lite: command-line front door for checking and simulating models.
//
// Exit codes: 0 ok, 1 usage, 2 static diagnostics, 3 runtime simulation error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acumen/check.hpp"
#include "acumen/engine.hpp"
#include "acumen/error.hpp"
#include "acumen/parser.hpp"
#include "acumen/scene.hpp"
#include "acumen/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiagnostics = 2;
constexpr int kExitRuntime = 3;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

void print_diagnostic(const std::string& file, const acumen::SourcePos& pos,
                      const std::string& message) {
    std::cerr << file << ":" << pos.line << ":" << pos.column << ": " << message
              << "\n";
}

int cmd_check(const std::string& file) {
    std::string source;
    if (!read_file(file, source)) {
        std::cerr << "error: cannot read " << file << "\n";
        return kExitUsage;
    }
    acumen::Model model;
    try {
        model = acumen::parse_model(source);
    } catch (const acumen::LexError& e) {
        std::cerr << file << ":" << e.what() << "\n";
        return kExitDiagnostics;
    } catch (const acumen::ParseError& e) {
        std::cerr << file << ":" << e.what() << "\n";
        return kExitDiagnostics;
    }
    std::vector<acumen::Diagnostic> diagnostics = acumen::check_model(model);
    for (const acumen::Diagnostic& d : diagnostics)
        print_diagnostic(file, d.pos, d.message);
    return diagnostics.empty() ? kExitOk : kExitDiagnostics;
}

struct RunSpec {
    std::string file;
    std::string root;  // empty: last class in the file
    std::string args;
    std::string trace_path;
    std::string trace_format = "csv";
    std::string scene_path;
    std::vector<std::string> vars;
    acumen::SimConfig config;
};

int cmd_run(const RunSpec& spec) {
    std::string source;
    if (!read_file(spec.file, source)) {
        std::cerr << "error: cannot read " << spec.file << "\n";
        return kExitUsage;
    }

    acumen::Model model;
    try {
        model = acumen::parse_model(source);
    } catch (const acumen::LexError& e) {
        std::cerr << spec.file << ":" << e.what() << "\n";
        return kExitDiagnostics;
    } catch (const acumen::ParseError& e) {
        std::cerr << spec.file << ":" << e.what() << "\n";
        return kExitDiagnostics;
    }
    std::vector<acumen::Diagnostic> diagnostics = acumen::check_model(model);
    if (!diagnostics.empty()) {
        for (const acumen::Diagnostic& d : diagnostics)
            print_diagnostic(spec.file, d.pos, d.message);
        return kExitDiagnostics;
    }
    if (model.classes.empty()) {
        std::cerr << "error: " << spec.file << " defines no classes\n";
        return kExitDiagnostics;
    }

    std::string root = spec.root.empty() ? model.classes.back().name : spec.root;
    std::vector<acumen::Value> args;
    try {
        if (!spec.args.empty()) args = acumen::eval_literal_list(spec.args);
    } catch (const std::exception& e) {
        std::cerr << "error: --args: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        spec.config.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    acumen::Engine engine{std::move(model)};
    if (!engine.has_class(root)) {
        std::cerr << "error: unknown class '" << root << "'\n";
        return kExitUsage;
    }
    const acumen::ClassDef& root_def = engine.class_def(root);
    if (root_def.params.size() != args.size()) {
        std::cerr << "error: class '" << root << "' expects " << root_def.params.size()
                  << " argument(s), got " << args.size() << "\n";
        return kExitUsage;
    }

    // Sinks. `--trace -` streams CSV/JSONL to standard output.
    std::ofstream trace_file;
    std::ofstream scene_file;
    std::unique_ptr<acumen::TraceCsvWriter> csv;
    std::unique_ptr<acumen::TraceJsonlWriter> jsonl;
    std::ostream* scene_out = nullptr;
    if (!spec.trace_path.empty()) {
        std::ostream* out = &std::cout;
        if (spec.trace_path != "-") {
            trace_file.open(spec.trace_path, std::ios::binary);
            if (!trace_file) {
                std::cerr << "error: cannot write " << spec.trace_path << "\n";
                return kExitUsage;
            }
            out = &trace_file;
        }
        if (spec.trace_format == "csv")
            csv = std::make_unique<acumen::TraceCsvWriter>(*out, spec.vars);
        else
            jsonl = std::make_unique<acumen::TraceJsonlWriter>(*out, spec.vars);
    }
    if (!spec.scene_path.empty()) {
        scene_file.open(spec.scene_path, std::ios::binary);
        if (!scene_file) {
            std::cerr << "error: cannot write " << spec.scene_path << "\n";
            return kExitUsage;
        }
        scene_out = &scene_file;
    }
    if (!csv && !jsonl && !scene_out) {
        std::cerr << "error: select at least one sink (--trace and/or --scene)\n";
        return kExitUsage;
    }

    std::size_t frames = 0;
    std::size_t events = 0;
    acumen::SimSinks sinks;
    sinks.trace = [&](const acumen::TraceFrame& frame) {
        ++frames;
        if (csv) csv->write(frame);
        if (jsonl) jsonl->write(frame);
    };
    if (scene_out)
        sinks.scene = [&](const acumen::SceneFrame& frame) {
            acumen::write_scene_jsonl(frame, *scene_out);
        };
    sinks.event = [&](const acumen::DiscreteEvent&) { ++events; };

    auto begin = std::chrono::steady_clock::now();
    try {
        engine.simulate(root, args, spec.config, sinks);
    } catch (const acumen::SimulationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - begin)
                       .count();
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.1f", elapsed);
    std::cerr << "summary: " << frames << " frame(s), " << events
              << " discrete event(s), " << wall << " ms\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acumen-lite: check and simulate hybrid models"};
    app.require_subcommand(1);

    std::string check_file;
    CLI::App* check = app.add_subcommand("check", "parse a model and run static checks");
    check->add_option("file", check_file, "model file (.acm)")->required();

    RunSpec spec;
    CLI::App* run = app.add_subcommand("run", "simulate a model and write traces");
    run->add_option("file", spec.file, "model file (.acm)")->required();
    run->add_option("--root", spec.root,
                    "root class to instantiate (default: last class in the file)");
    run->add_option("--args", spec.args,
                    "argument list for the root class, e.g. \"5,[0,0,0]\"");
    run->add_option("--time-step", spec.config.time_step, "integration step");
    run->add_option("--end-time", spec.config.end_time, "simulation end time");
    run->add_option("--start-time", spec.config.start_time, "simulation start time");
    run->add_option("--max-discrete-iters", spec.config.max_discrete_iterations,
                    "discrete fixpoint iteration cap");
    run->add_option("--trace", spec.trace_path, "trace file path, or - for stdout");
    run->add_option("--trace-format", spec.trace_format, "trace format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    run->add_option("--scene", spec.scene_path, "scene JSONL file path");
    run->add_option("--vars", spec.vars,
                    "glob pattern(s) selecting trace variables (repeatable)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (check->parsed()) return cmd_check(check_file);
    return cmd_run(spec);
}
