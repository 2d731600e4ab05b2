// dindex: distinguishing index of graphs read as graph6 lines.
//
//   dindex exact     [FILE]          D' per graph, JSON lines
//   dindex construct [FILE] --mode   certificates from the constructive bounds
//   dindex verify    [FILE] --mode   corpus sweep against a bound, CSV or JSON lines
//   dindex formula   FAMILY PARAMS   closed-form values
//   dindex aut       [FILE]          automorphism group orders
//
// Exit status: 0 when every row passed or was filtered, 1 otherwise, 2 on a
// usage error.

#include <dindex/certificate_json.hpp>
#include <dindex/families.hpp>
#include <dindex/harness.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dindex;
using nlohmann::json;

namespace {

struct Common {
    std::string input = "-";
    RunConfig config;
    std::string mode = "thm23";
    std::string format = "jsonl";
    std::int64_t budget_ms = 60'000;
};

std::string read_input(const std::string& path)
{
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (! in)
        throw Error("cannot open " + path);
    ss << in.rdbuf();
    return ss.str();
}

json error_row(const Graph6Line& line, const std::string& what)
{
    return {{"line", line.line_no}, {"input", line.text}, {"error", what}};
}

json order_json(const BigInt& order)
{
    if (order <= std::numeric_limits<std::uint64_t>::max())
        return order.convert_to<std::uint64_t>();
    return order.str();
}

/// Applies f to every line on the configured workers, printing rows in order.
/// f returns the row and whether it counts as passed.
int stream_rows(const Common& c, const std::function<std::pair<json, bool>(const Graph6Line&)>& f)
{
    auto lines = split_graph6_lines(read_input(c.input));
    bool all_ok = true;
    run_ordered<std::pair<json, bool>>(
        lines.size(), c.config.workers,
        [&](std::size_t i) {
            try {
                return f(lines[i]);
            }
            catch (const Error& e) {
                return std::pair<json, bool>{error_row(lines[i], e.what()), false};
            }
        },
        [&](std::size_t, std::pair<json, bool>&& row) {
            all_ok = all_ok && row.second;
            std::cout << row.first.dump() << '\n';
        });
    std::cout.flush();
    return all_ok ? 0 : 1;
}

int cmd_exact(const Common& c)
{
    return stream_rows(c, [&](const Graph6Line& line) {
        Graph g = parse_graph6(line.text);
        auto r = exact_distinguishing_index(g, c.config.solve_options());
        json row{{"line", line.line_no},          {"graph6", line.text},
                 {"status", status_name(r.status)}, {"lower_bound", r.lower_bound},
                 {"nodes", r.stats.nodes},         {"elapsed_ms", r.stats.elapsed_ms}};
        if (r.status == SolveStatus::solved)
            row["dprime"] = r.dprime;
        if (r.certificate)
            row["certificate"] = certificate_to_json(g, *r.certificate);
        bool ok = r.status == SolveStatus::solved || r.status == SolveStatus::impossible;
        return std::pair{row, ok};
    });
}

int cmd_construct(const Common& c, BoundMode mode)
{
    return stream_rows(c, [&](const Graph6Line& line) {
        Graph g = parse_graph6(line.text);
        json row{{"line", line.line_no}, {"graph6", line.text}, {"mode", mode_name(mode)}};
        Construction built;
        try {
            built = mode == BoundMode::thm32 ? construct_thm32(g, c.config.construct_options())
                                             : construct_thm23(g, c.config.construct_options());
        }
        catch (const Error& e) {
            row["skipped"] = e.what();
            return std::pair{row, true};
        }
        bool verified = verify_certificate(g, built.certificate);
        row["certificate"] = certificate_to_json(g, built.certificate);
        row["labels_used"] = built.certificate.labeling.label_count();
        row["budget"] = built.budget;
        row["route"] = built.route;
        row["verified"] = verified;
        return std::pair{row, verified && built.ok()};
    });
}

int cmd_verify(const Common& c)
{
    auto lines = split_graph6_lines(read_input(c.input));
    const bool csv = c.format == "csv";
    if (csv)
        std::cout << csv_header() << '\n';
    auto report = verify_corpus(lines, c.config, [&](const BoundRow& row) {
        std::cout << (csv ? to_csv(row) : to_json(row).dump()) << '\n';
    });
    json summary = to_json(report.summary);
    if (csv)
        std::cerr << summary.dump() << '\n';
    else
        std::cout << json{{"summary", summary}}.dump() << '\n';
    std::cout.flush();
    return report.summary.all_passed() ? 0 : 1;
}

int cmd_aut(const Common& c)
{
    return stream_rows(c, [&](const Graph6Line& line) {
        Graph g = parse_graph6(line.text);
        AutConfig cfg;
        cfg.brute_force_cap = c.config.brute_force_cap;
        auto group = automorphism_group(g, cfg);
        json gens = json::array();
        for (const auto& p : group.generators)
            gens.push_back(p.images);
        json row{{"line", line.line_no}, {"graph6", line.text}, {"order", order_json(group.order)},
                 {"generators", gens}};
        return std::pair{row, true};
    });
}

int cmd_formula(const std::string& family, const std::vector<std::int64_t>& params)
{
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw CLI::ValidationError("formula " + family + " takes " + std::to_string(k) + " parameter(s)");
    };
    auto as_int = [](std::int64_t v) {
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            throw Error("parameter out of range");
        return static_cast<int>(v);
    };
    json out{{"family", family}, {"params", params}};
    if (family == "path") {
        need(1);
        out["value"] = formula_path(as_int(params[0]));
    }
    else if (family == "cycle") {
        need(1);
        out["value"] = formula_cycle(as_int(params[0]));
    }
    else if (family == "friendship") {
        need(1);
        out["value"] = formula_friendship(params[0]);
    }
    else if (family == "bipartite") {
        need(2);
        auto r = formula_complete_bipartite(as_int(params[0]), as_int(params[1]));
        out["case"] = bipartite_case_name(r.kind);
        out["r"] = r.r;
        out["lo"] = r.lo;
        out["hi"] = r.hi ? json(*r.hi) : json(nullptr);
        out["resolved_exactly"] = r.resolved_exactly;
        if (r.exact())
            out["value"] = r.lo;
    }
    else
        throw CLI::ValidationError("unknown family " + family + " (path, cycle, friendship, bipartite)");
    std::cout << out.dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Distinguishing index of graphs given as graph6 lines"};
    app.require_subcommand(1);
    Common c;

    auto add_common = [&](CLI::App* sub, bool with_mode) {
        sub->add_option("input", c.input, "graph6 file, - for stdin")->capture_default_str();
        sub->add_option("--budget-nodes", c.config.budget_nodes, "search nodes per graph")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--budget-ms", c.budget_ms, "wall time per graph in ms")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", c.config.seed, "seed for randomized steps")->capture_default_str();
        sub->add_option("--workers", c.config.workers, "worker threads")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--brute-force-cap", c.config.brute_force_cap,
                        "largest n handled by the exhaustive automorphism scan")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--repair-attempts", c.config.repair_attempts, "randomized repair attempts")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        if (with_mode)
            sub->add_option("--mode", c.mode, "bound to check")
                ->capture_default_str()
                ->check(CLI::IsMember({"thm23", "thm32", "conjecture11"}));
    };

    auto* exact = app.add_subcommand("exact", "exact distinguishing index per graph");
    add_common(exact, false);
    auto* construct = app.add_subcommand("construct", "constructive certificates");
    add_common(construct, true);
    auto* verify = app.add_subcommand("verify", "sweep a corpus against a bound");
    add_common(verify, true);
    verify->add_option("--format", c.format, "report format")->capture_default_str()->check(
        CLI::IsMember({"csv", "jsonl"}));
    auto* aut = app.add_subcommand("aut", "automorphism group order per graph");
    add_common(aut, false);

    std::string family;
    std::vector<std::int64_t> params;
    auto* formula = app.add_subcommand("formula", "closed-form index of a graph family");
    formula->add_option("family", family, "path, cycle, friendship or bipartite")->required();
    formula->add_option("params", params, "family parameters")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        c.config.budget_time = std::chrono::milliseconds(c.budget_ms);
        if (construct->parsed() && c.mode == "conjecture11")
            throw CLI::ValidationError("construct supports --mode thm23 or thm32");
        BoundMode mode = *parse_mode(c.mode);
        c.config.mode = mode;
        if (exact->parsed())
            return cmd_exact(c);
        if (construct->parsed())
            return cmd_construct(c, mode);
        if (verify->parsed())
            return cmd_verify(c);
        if (aut->parsed())
            return cmd_aut(c);
        return cmd_formula(family, params);
    }
    catch (const CLI::Error& e) {
        std::cerr << "dindex: " << e.what() << '\n';
        return 2;
    }
    catch (const Error& e) {
        std::cerr << "dindex: " << e.what() << '\n';
        return family.empty() ? 1 : 2;
    }
}
