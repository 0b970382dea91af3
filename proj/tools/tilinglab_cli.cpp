#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tilinglab/error.hpp"
#include "tilinglab/report.hpp"

using nlohmann::json;
using namespace tilinglab;

namespace {

enum class Kind { Int, Real, Text };

// Options are collected as strings and typed when the parameters object is built,
// so that "1/64" stays a fraction string for the experiment to parse.
struct Binding {
    std::string key;
    Kind kind;
    bool list;
    std::vector<std::string> values;
    CLI::Option* opt = nullptr;
};

struct Command {
    std::string experiment;
    CLI::App* app = nullptr;
    std::vector<Binding> bindings;
    std::vector<std::tuple<std::string, std::vector<std::string>, bool*>> flags;  // key, option names, value
};

json typed(const std::string& s, Kind k) {
    try {
        switch (k) {
        case Kind::Int: {
            std::size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used == s.size()) return v;
            break;
        }
        case Kind::Real:
            if (s.find('/') != std::string::npos) return s;
            return std::stod(s);
        case Kind::Text:
            return s;
        }
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::ConfigError, "command line: cannot read '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domino tilings, spanning trees and loop-erased walks: exact counts and numerical experiments"};
    app.require_subcommand(1);
    std::string config_path, out_format = "markdown", output_path;
    std::vector<std::unique_ptr<Command>> commands;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config; command-line options override its parameters");
        sub->add_option("--out", out_format, "Format written to stdout")->check(CLI::IsMember({"json", "csv", "markdown"}));
        sub->add_option("--output", output_path, "Also write the report to this file (format from --out)");
    };
    auto command = [&](CLI::App* parent, const std::string& name, const std::string& experiment, const std::string& help) {
        auto c = std::make_unique<Command>();
        c->experiment = experiment;
        c->app = parent->add_subcommand(name, help);
        common(c->app);
        commands.push_back(std::move(c));
        return commands.back().get();
    };
    struct Spec {
        std::string flag, key;
        Kind kind;
        bool list;
        std::string help;
    };
    auto define = [&](CLI::App* parent, const std::string& name, const std::string& experiment, const std::string& help,
                      const std::vector<Spec>& specs) {
        Command* c = command(parent, name, experiment, help);
        c->bindings.reserve(specs.size());
        for (const auto& s : specs) {
            auto& b = c->bindings.emplace_back(Binding{s.key, s.kind, s.list, {}, nullptr});
            b.opt = c->app->add_option(s.flag, b.values, s.help);
            if (s.list)
                b.opt->delimiter(',');
            else
                b.opt->expected(1);
        }
        return c;
    };

    bool enumerate = false, compare_half = true;
    auto* count = define(&app, "count", "count", "Exact tiling counts of ASCII regions",
                         {{"--region", "regions", Kind::Text, true, "Region files ('#' cell, 'X' base square)"}});
    count->app->add_flag("--enumerate", enumerate, "Cross-check against brute-force enumeration");
    count->flags.push_back({"enumerate", {"--enumerate"}, &enumerate});
    define(&app, "trees", "temperley", "Spanning trees of grids versus tilings of the Temperleyan region",
           {{"--grids", "grids", Kind::Text, true, "Grids like 2x2,3x4"}});
    define(&app, "coupling", "coupling", "Coupling function against the Green's function formula",
           {{"--grids", "grids", Kind::Text, true, "Grids like 2x2,3x4"}});
    define(&app, "rect-expansion", "rect-expansion", "Rectangle tree count against its asymptotic expansion",
           {{"--sizes", "sizes", Kind::Int, true, "Side lengths; all pairs are run"},
            {"--precision", "precision", Kind::Int, false, "MPFR bits (default from TILINGLAB_PRECISION or 128)"},
            {"--bound", "bound_constant", Kind::Real, false, "Constant C in |residual| <= C/(mn)"}});
    std::vector<Spec> poly{{"--polygon", "polygon", Kind::Text, false, "Polygon JSON file"},
                           {"--rect", "rectangle", Kind::Real, true, "Rectangle width,height (base at lower left)"}};
    auto with = [](std::vector<Spec> a, std::vector<Spec> b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    define(&app, "energy", "energy", "Delta-normalized Dirichlet energy of the harmonic height",
           with(poly, {{"--mesh", "mesh", Kind::Real, false, "Grid mesh"},
                       {"--deltas", "deltas", Kind::Real, true, "Cutoff radii"}}));
    define(&app, "corner-law", "corner-law", "Slope of the energy against log(1/delta)",
           with(poly, {{"--deltas", "deltas", Kind::Real, true, "At least four cutoffs"},
                       {"--cells-per-delta", "cells_per_delta", Kind::Int, false, "Mesh is delta / this"}}));
    define(&app, "expansion", "main2", "Log tiling count against the area, perimeter and energy terms",
           {{"--m", "m", Kind::Int, false, "Vertices along the short side (eps = 1/(2m))"},
            {"--aspects", "aspects", Kind::Int, true, "Aspect ratios"},
            {"--mesh-factor", "mesh_factor", Kind::Int, false, "Energy mesh is eps / this"}});
    define(&app, "conformal", "conformal", "Schwarzian and energy-rate identities, cut constants",
           {{"--seed", "seed", Kind::Int, false, "Seed for the random (p, q) draws"},
            {"--draws", "draws", Kind::Int, false, "Number of draws"}});
    auto* lerw = app.add_subcommand("lerw", "Loop-erased random walk experiments");
    lerw->require_subcommand(1);
    define(lerw, "exponent", "lerw-exponent", "Growth exponent of the half-plane branch",
           {{"--sizes", "sizes", Kind::Int, true, "Radii N"},
            {"--samples", "samples", Kind::Int, false, "Samples per size"},
            {"--bootstrap", "bootstrap", Kind::Int, false, "Bootstrap resamples"},
            {"--seed", "seed", Kind::Int, false, "Seed (required)"}});
    define(lerw, "profile", "lerw-profile", "Hit probability along the axis and by angle",
           {{"--n", "N", Kind::Int, false, "Box size"},
            {"--samples", "samples", Kind::Int, false, "Samples"},
            {"--bins", "bins", Kind::Int, false, "Angular bins"},
            {"--seed", "seed", Kind::Int, false, "Seed (required)"}});
    define(lerw, "two-hole-check", "two-hole", "Tilings with two holes against trees through w",
           {{"--sides", "sides", Kind::Int, true, "Odd square sides"}});
    define(lerw, "ratio", "ratio", "Two-hole count ratio regression",
           {{"--alphas", "alphas", Kind::Real, true, "White hole positions"},
            {"--betas", "betas", Kind::Real, true, "Black hole positions"},
            {"--eps", "eps", Kind::Real, true, "Mesh sizes, e.g. 1/16,1/32"},
            {"--k", "K", Kind::Real, false, "Square side"}});
    auto* slit = define(&app, "slit-greens", "slit-greens", "Green's function of the slit plane",
                        {{"--size", "size", Kind::Int, false, "Box half-width M"}});
    slit->app->add_flag("--compare-half,!--no-compare-half", compare_half, "Also solve at M/2");
    slit->flags.push_back({"compare_half", {"--compare-half", "--no-compare-half"}, &compare_half});

    Command run_cmd;
    run_cmd.app = app.add_subcommand("run", "Run the experiment named in a JSON config");
    run_cmd.app->add_option("config", config_path, "JSON config")->required();
    run_cmd.app->add_option("--out", out_format, "Format written to stdout")->check(CLI::IsMember({"json", "csv", "markdown"}));
    run_cmd.app->add_option("--output", output_path, "Also write the report to this file");
    std::string seed_override;
    run_cmd.app->add_option("--seed", seed_override, "Override parameters.seed");

    CLI11_PARSE(app, argc, argv);

    try {
        json config = json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw Error(ErrorKind::ConfigError, "config: file not found: " + config_path);
            try {
                config = json::parse(in);
            } catch (const json::exception& e) {
                throw Error(ErrorKind::ConfigError, std::string("config: ") + e.what());
            }
            if (!config.is_object()) throw Error(ErrorKind::ConfigError, "config: expected a JSON object");
        }
        Command* chosen = nullptr;
        for (auto& c : commands)
            if (c->app->parsed()) chosen = c.get();
        if (chosen) {
            config["experiment"] = chosen->experiment;
            json& params = config["parameters"];
            if (!params.is_object()) params = json::object();
            for (auto& b : chosen->bindings) {
                if (b.opt->count() == 0) continue;
                if (b.list) {
                    json arr = json::array();
                    for (auto& v : b.values) arr.push_back(typed(v, b.kind));
                    params[b.key] = arr;
                } else {
                    params[b.key] = typed(b.values.back(), b.kind);
                }
            }
            for (auto& [key, names, value] : chosen->flags)
                for (const auto& n : names)
                    if (chosen->app->count(n)) params[key] = *value;
        } else if (!seed_override.empty()) {
            config["parameters"]["seed"] = typed(seed_override, Kind::Int);
        }

        Report r = run_experiment(config);
        std::string text = report_render(r, parse_report_format(out_format));
        std::cout << text;
        if (!output_path.empty()) {
            std::ofstream f(output_path);
            if (!f) throw Error(ErrorKind::ConfigError, "output: cannot write " + output_path);
            f << text;
        }
        write_outputs(r, config);
        return r.all_pass() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
