// Command-line front end: build regions, count tilings, evaluate the
// closed formulas, run verification sweeps, and render figures.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhex/formulas.hpp"
#include "qhex/harness.hpp"
#include "qhex/lattice.hpp"
#include "qhex/matching.hpp"
#include "qhex/render.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_dents(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

struct Selector {
    std::string family;
    std::vector<int> params;
    std::string dents_spec;
    std::string region_file;

    std::vector<int> dents() const { return parse_dents(dents_spec); }

    qhex::Region build() const {
        if (!region_file.empty()) {
            std::ifstream in(region_file);
            if (!in)
                throw std::invalid_argument("cannot open region file: " +
                                            region_file);
            return qhex::read_region(in);
        }
        if (params.size() != 3)
            throw std::invalid_argument("expected three size parameters");
        int a = params[0], b = params[1], c = params[2];
        if (family == "hexagon") return qhex::build_hexagon(a, b, c);
        if (family == "staircase")
            return qhex::build_staircase_trimmed(a, b, c);
        if (family == "quartered")
            return qhex::build_quartered(a, b, c, dents());
        throw std::invalid_argument("unknown region family: " + family);
    }

    json to_json(const std::string& value) const {
        json j;
        j["family"] = region_file.empty() ? family : "file";
        j["params"] = params;
        j["dents"] = dents();
        j["value"] = value;
        return j;
    }
};

void add_selector(CLI::App* cmd, Selector& sel, bool allow_file) {
    cmd->add_option("family", sel.family,
                    "region family: hexagon | staircase | quartered");
    cmd->add_option("params", sel.params, "side parameters a b c")
        ->expected(0, 3);
    cmd->add_option("--dents", sel.dents_spec,
                    "comma-separated dent positions, e.g. 2,3");
    if (allow_file)
        cmd->add_option("--region-file", sel.region_file,
                        "read the region from a text file instead");
}

std::string out_path(const std::string& name) {
    const char* dir = std::getenv("QHEX_OUT_DIR");
    if (!dir || !*dir) return name;
    return std::string(dir) + "/" + name;
}

void emit_value(const Selector& sel, const std::string& value,
                const std::string& format) {
    if (format == "json") {
        std::cout << sel.to_json(value).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "family,params,dents,value\n";
        std::cout << sel.family << ",";
        for (std::size_t i = 0; i < sel.params.size(); i++)
            std::cout << (i ? " " : "") << sel.params[i];
        std::cout << "," << sel.dents_spec << "," << value << "\n";
    } else {
        std::cout << value << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"quartered-hexagon lozenge tiling toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    Selector count_sel;
    auto* count_cmd =
        app.add_subcommand("count", "count lozenge tilings by enumeration");
    add_selector(count_cmd, count_sel, true);

    Selector formula_sel;
    auto* formula_cmd = app.add_subcommand(
        "formula", "evaluate the closed product formula");
    formula_cmd->add_option("family", formula_sel.family,
                            "formula family: macmahon | proctor | quartered");
    formula_cmd->add_option("params", formula_sel.params, "parameters a b c")
        ->expected(3);
    formula_cmd->add_option("--dents", formula_sel.dents_spec,
                            "comma-separated dent positions");

    auto* verify_cmd =
        app.add_subcommand("verify", "run verification sweeps");
    qhex::SweepSpec spec;
    std::string preset = "desk";
    std::string report_name = "verify_report.txt";
    verify_cmd->add_option("--preset", preset, "desk | quick")
        ->check(CLI::IsMember({"desk", "quick"}));
    verify_cmd->add_option("--check", spec.checks,
                           "run only the named checks (repeatable)");
    verify_cmd->add_option("--grid", spec.identity_max,
                           "identity grid bound");
    verify_cmd->add_option("--instances", spec.ratio_lemma_instances,
                           "ratio lemma instance count");
    verify_cmd->add_option("--seed", spec.seed, "sampling seed");
    verify_cmd->add_option("--max-a", spec.max_a, "quartered sweep bound on a");
    verify_cmd->add_option("--max-c", spec.max_c, "quartered sweep bound on c");
    verify_cmd->add_option("--max-k", spec.max_k, "quartered sweep bound on k");
    verify_cmd->add_option("--out", report_name, "report file name");

    Selector render_sel;
    auto* render_cmd =
        app.add_subcommand("render", "draw a region (optionally one tiling)");
    add_selector(render_cmd, render_sel, true);
    long long tiling_index = -1;
    std::string render_format = "svg";
    std::string render_out;
    render_cmd->add_option("--tiling", tiling_index,
                           "overlay the n-th enumerated tiling (0-based)");
    render_cmd->add_option("--render-format", render_format, "svg | text")
        ->check(CLI::IsMember({"svg", "text"}));
    render_cmd->add_option("--out", render_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count_cmd->parsed()) {
            qhex::Region r = count_sel.build();
            emit_value(count_sel, qhex::count_tilings(r).str(), format);
            return 0;
        }
        if (formula_cmd->parsed()) {
            const auto& p = formula_sel.params;
            qhex::Count value;
            if (formula_sel.family == "macmahon") {
                value = qhex::macmahon_count(p[0], p[1], p[2]);
            } else if (formula_sel.family == "proctor") {
                value = qhex::proctor_count(p[0], p[1], p[2]);
            } else if (formula_sel.family == "quartered") {
                qhex::QHParams qp{p[0], p[1], p[2], formula_sel.dents()};
                value = qp.odd_case() ? qhex::formula_odd(qp)
                                      : qhex::formula_even(qp);
            } else {
                throw std::invalid_argument("unknown formula family: " +
                                            formula_sel.family);
            }
            emit_value(formula_sel, value.str(), format);
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (preset == "quick") {
                spec.max_a = 1;
                spec.max_c = 2;
                spec.identity_max = std::min(spec.identity_max, 6);
                spec.ratio_lemma_instances =
                    std::min(spec.ratio_lemma_instances, 50);
                spec.hex_max = 2;
                spec.proctor_max_a = 2;
                spec.proctor_max_b = 3;
            }
            spec.output_path = out_path(report_name);
            qhex::CheckReport rep = qhex::run_sweep(spec);
            std::cout << (rep.all_pass() ? "all checks passed"
                                         : "CHECK FAILURES") << ": "
                      << rep.records.size() << " checks, " << rep.failures()
                      << " failures, report written to " << spec.output_path
                      << "\n";
            if (!rep.all_pass()) {
                for (const auto& r : rep.records)
                    if (!r.pass)
                        std::cout << "  " << r.check << " " << r.params
                                  << " expected=" << r.expected
                                  << " actual=" << r.actual << "\n";
                return 1;
            }
            return 0;
        }
        if (render_cmd->parsed()) {
            qhex::Region r = render_sel.build();
            std::ostringstream buf;
            if (render_format == "text") {
                buf << qhex::render_text(r);
            } else if (tiling_index >= 0) {
                auto tilings =
                    qhex::enumerate_tilings(r, (std::size_t)tiling_index + 1);
                if ((long long)tilings.size() <= tiling_index)
                    throw std::invalid_argument("tiling index out of range");
                qhex::render_svg(buf, r, &tilings[(std::size_t)tiling_index]);
            } else {
                qhex::render_svg(buf, r);
            }
            if (render_out.empty()) {
                std::cout << buf.str();
            } else {
                std::ofstream out(out_path(render_out));
                if (!out)
                    throw std::invalid_argument("cannot write " + render_out);
                out << buf.str();
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
