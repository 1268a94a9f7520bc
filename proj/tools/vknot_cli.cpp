// vknot command line: validation, invariant tables, genus reports,
// connected sums, move search with certificates, orbits, catalog
// management and SVG chord-diagram rendering.

#include <exception>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vknot/catalog.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/render.hpp"
#include "vknot/search.hpp"
#include "vknot/surface.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 64;

// Catalog names are accepted anywhere a code is; names never collide with
// the grammar (codes start with 'O', 'U' or '@').
std::string resolve_code(const std::string& arg, const std::vector<vknot::CatalogEntry>& cat) {
    if (auto code = vknot::catalog_lookup(cat, arg)) return *code;
    return arg;
}

std::vector<std::string> read_code_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw vknot::Error("cannot open file '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string word;
        if (fields >> word) out.push_back(word);
    }
    return out;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += '"';
    return quoted;
}

struct InvariantRow {
    std::string code;
    int components = 0;
    int writhe = 0;
    bool has_j = false;
    int j = 0;
    int genus = 0;
    std::string f_poly;
    std::string error;
};

InvariantRow compute_row(const std::string& code) {
    InvariantRow row;
    row.code = code;
    try {
        const vknot::GaussDiagram d = vknot::parse(code);
        row.components = vknot::component_count(d);
        row.writhe = vknot::writhe(d);
        if (row.components == 1) {
            row.has_j = true;
            row.j = vknot::odd_writhe(d);
        }
        row.genus = vknot::genus(d).genus;
        try {
            row.f_poly = vknot::f_polynomial(d).to_string();
        } catch (const vknot::BudgetExceededError&) {
            row.f_poly = "n/a";
        }
    } catch (const vknot::Error& e) {
        row.error = e.what();
    }
    return row;
}

// Index-ordered parallel map; the output order is the input order.
std::vector<InvariantRow> compute_rows(const std::vector<std::string>& codes, int threads) {
    std::vector<InvariantRow> rows(codes.size());
    if (threads <= 1 || codes.size() <= 1) {
        for (std::size_t i = 0; i < codes.size(); ++i) rows[i] = compute_row(codes[i]);
        return rows;
    }
    std::vector<std::future<void>> jobs;
    const std::size_t count = codes.size();
    const std::size_t workers = std::min<std::size_t>(threads, count);
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers) rows[i] = compute_row(codes[i]);
        }));
    }
    for (auto& j : jobs) j.get();
    return rows;
}

int cmd_invariants(const std::vector<std::string>& codes, const std::string& format,
                   int threads) {
    const std::vector<InvariantRow> rows = compute_rows(codes, threads);
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const InvariantRow& r : rows) {
            ordered_json obj;
            obj["code"] = r.code;
            if (r.error.empty()) {
                obj["components"] = r.components;
                obj["writhe"] = r.writhe;
                obj["J"] = r.has_j ? ordered_json(r.j) : ordered_json(nullptr);
                obj["genus"] = r.genus;
                obj["f_polynomial"] = r.f_poly;
                obj["error"] = nullptr;
            } else {
                obj["components"] = nullptr;
                obj["writhe"] = nullptr;
                obj["J"] = nullptr;
                obj["genus"] = nullptr;
                obj["f_polynomial"] = nullptr;
                obj["error"] = r.error;
            }
            out.push_back(std::move(obj));
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "code,components,writhe,J,genus,f_polynomial,error\n";
        for (const InvariantRow& r : rows) {
            if (r.error.empty()) {
                std::cout << csv_field(r.code) << ',' << r.components << ',' << r.writhe
                          << ',' << (r.has_j ? std::to_string(r.j) : std::string("n/a"))
                          << ',' << r.genus << ',' << csv_field(r.f_poly) << ",\n";
            } else {
                std::cout << csv_field(r.code) << ",,,,,," << csv_field(r.error) << '\n';
            }
        }
    }
    return 0;
}

vknot::Regime parse_regime(const std::string& name) {
    if (name == "virtual") return vknot::Regime::Virtual;
    if (name == "welded") return vknot::Regime::Welded;
    if (name == "all-forbidden") return vknot::Regime::AllForbidden;
    throw CLI::ValidationError("--regime", "must be virtual, welded or all-forbidden");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual knot and link engine on Gauss diagrams"};
    app.require_subcommand(1);

    std::vector<vknot::CatalogEntry> cat;
    try {
        cat = vknot::active_catalog();
    } catch (const vknot::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    // Shared options.
    std::vector<std::string> codes;
    std::string file;
    std::string format = "csv";
    std::string regime_name = "virtual";
    std::string cert_path = "vknot-cert.txt";
    vknot::SearchBudget budget;

    auto add_budget_flags = [&budget, &regime_name](CLI::App* cmd) {
        cmd->add_option("--regime", regime_name, "virtual, welded or all-forbidden");
        cmd->add_option("--budget-nodes", budget.max_nodes, "visited node cap");
        cmd->add_option("--budget-depth", budget.max_depth, "combined depth cap");
        cmd->add_option("--max-arrows", budget.max_arrows,
                        "diagram size cap (0 = input arrows + 4)");
        cmd->add_option("--insertion-cap", budget.insertion_cap,
                        "insertion variants per arc");
        cmd->add_option("--seed", budget.seed, "search seed");
        cmd->add_option("--threads", budget.threads, "worker threads");
    };

    auto* validate = app.add_subcommand("validate", "parse and validate codes");
    validate->add_option("codes", codes, "Gauss codes or catalog names");
    validate->add_option("--file", file, "file of codes, one per line");

    auto* canon = app.add_subcommand("canon", "print canonical forms");
    canon->add_option("codes", codes)->required();

    auto* invariants_cmd = app.add_subcommand("invariants", "invariant table");
    invariants_cmd->add_option("codes", codes, "Gauss codes or catalog names");
    invariants_cmd->add_option("--file", file, "file of codes, one per line");
    invariants_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    int table_threads = 1;
    invariants_cmd->add_option("--threads", table_threads, "worker threads");

    auto* genus_cmd = app.add_subcommand("genus", "carrier genus report");
    genus_cmd->add_option("codes", codes)->required();
    std::string genus_format = "json";
    genus_cmd->add_option("--format", genus_format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* mirror_cmd = app.add_subcommand("mirror", "mirror image codes");
    mirror_cmd->add_option("codes", codes)->required();

    auto* sum_cmd = app.add_subcommand("sum", "connected sum of two knot codes");
    std::string sum_code1, sum_code2;
    int break1 = 0, break2 = 0;
    sum_cmd->add_option("code1", sum_code1)->required();
    sum_cmd->add_option("break1", break1)->required();
    sum_cmd->add_option("code2", sum_code2)->required();
    sum_cmd->add_option("break2", break2)->required();

    auto* search_cmd = app.add_subcommand("search", "bounded equivalence search");
    std::string search_code1, search_code2;
    search_cmd->add_option("code1", search_code1)->required();
    search_cmd->add_option("code2", search_code2)->required();
    add_budget_flags(search_cmd);
    search_cmd->add_option("--cert", cert_path, "certificate output path (on Proven)");

    auto* replay_cmd = app.add_subcommand("replay", "re-validate a certificate file");
    std::string replay_path;
    replay_cmd->add_option("certificate", replay_path)->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "canonical forms reachable in budget");
    std::string orbit_code;
    orbit_cmd->add_option("code", orbit_code)->required();
    add_budget_flags(orbit_cmd);

    auto* render_cmd = app.add_subcommand("render", "chord diagram SVG");
    std::string render_code, render_out;
    render_cmd->add_option("code", render_code)->required();
    render_cmd->add_option("output", render_out, "output SVG path")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "list the active catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!file.empty())
            for (const std::string& line : read_code_lines(file)) codes.push_back(line);
        for (std::string& code : codes) code = resolve_code(code, cat);

        if (validate->parsed()) {
            bool all_ok = true;
            for (const std::string& code : codes) {
                try {
                    vknot::parse(code);
                    std::cout << "ok " << code << '\n';
                } catch (const vknot::Error& e) {
                    all_ok = false;
                    std::cout << "error " << code << ": " << e.what() << '\n';
                }
            }
            return all_ok ? 0 : 1;
        }
        if (canon->parsed()) {
            for (const std::string& code : codes)
                std::cout << vknot::canonical_form(vknot::parse(code)) << '\n';
            return 0;
        }
        if (invariants_cmd->parsed()) return cmd_invariants(codes, format, table_threads);
        if (genus_cmd->parsed()) {
            if (genus_format == "csv") {
                std::cout << "code,crossings,boundary_curves,genus\n";
                for (const std::string& code : codes) {
                    const vknot::GenusReport g = vknot::genus(vknot::parse(code));
                    std::cout << csv_field(code) << ',' << g.crossings << ','
                              << g.boundary_curves << ',' << g.genus << '\n';
                }
            } else {
                for (const std::string& code : codes)
                    std::cout << vknot::genus(vknot::parse(code)).to_json() << '\n';
            }
            return 0;
        }
        if (mirror_cmd->parsed()) {
            for (const std::string& code : codes)
                std::cout << vknot::serialize(vknot::mirror(vknot::parse(code))) << '\n';
            return 0;
        }
        if (sum_cmd->parsed()) {
            const auto d1 = vknot::parse(resolve_code(sum_code1, cat));
            const auto d2 = vknot::parse(resolve_code(sum_code2, cat));
            std::cout << vknot::serialize(vknot::connected_sum(d1, break1, d2, break2))
                      << '\n';
            return 0;
        }
        if (search_cmd->parsed()) {
            const vknot::Regime regime = parse_regime(regime_name);
            const auto d1 = vknot::parse(resolve_code(search_code1, cat));
            const auto d2 = vknot::parse(resolve_code(search_code2, cat));
            const vknot::SearchVerdict verdict =
                vknot::equivalent_within(d1, d2, regime, budget);
            switch (verdict.kind) {
                case vknot::SearchVerdict::Kind::Proven: {
                    const vknot::Certificate cert =
                        vknot::make_certificate(d1, d2, regime, budget, verdict.path);
                    std::ofstream out(cert_path, std::ios::binary);
                    if (!out) throw vknot::Error("cannot write '" + cert_path + "'");
                    out << vknot::certificate_to_string(cert);
                    std::cout << "proven: path length " << verdict.path.size()
                              << "; certificate written to " << cert_path << '\n';
                    return 0;
                }
                case vknot::SearchVerdict::Kind::Distinguished:
                    std::cout << "distinguished: " << verdict.witness.invariant << " "
                              << verdict.witness.lhs << " vs " << verdict.witness.rhs
                              << '\n';
                    return 1;
                case vknot::SearchVerdict::Kind::Unknown:
                    std::cout << "unknown: nodes=" << verdict.stats.nodes
                              << " depth-forward=" << verdict.stats.depth_forward
                              << " depth-backward=" << verdict.stats.depth_backward << '\n';
                    return 2;
            }
        }
        if (replay_cmd->parsed()) {
            std::ifstream in(replay_path, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot open '" << replay_path << "'\n";
                return kExitUsage;
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            const vknot::Certificate cert = vknot::certificate_from_string(buffer.str());
            if (vknot::replay_certificate(cert)) {
                std::cout << "certificate valid: " << cert.path.size() << " moves from "
                          << cert.start << " to " << cert.end << '\n';
                return 0;
            }
            std::cout << "certificate INVALID\n";
            return 1;
        }
        if (orbit_cmd->parsed()) {
            const vknot::Regime regime = parse_regime(regime_name);
            const auto d = vknot::parse(resolve_code(orbit_code, cat));
            for (const std::string& code : vknot::orbit(d, regime, budget))
                std::cout << code << '\n';
            return 0;
        }
        if (render_cmd->parsed()) {
            const auto d = vknot::parse(resolve_code(render_code, cat));
            std::ofstream out(render_out, std::ios::binary);
            if (!out) throw vknot::Error("cannot write '" + render_out + "'");
            out << vknot::render_svg(d);
            return 0;
        }
        if (catalog_cmd->parsed()) {
            for (const vknot::CatalogEntry& e : cat)
                std::cout << e.name << ' ' << e.code << '\n';
            return 0;
        }
    } catch (const vknot::SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const vknot::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const vknot::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return kExitUsage;
}
