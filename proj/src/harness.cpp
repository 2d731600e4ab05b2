#include <dindex/harness.hpp>

#include <sstream>

namespace dindex {

std::string_view mode_name(BoundMode m)
{
    switch (m) {
    case BoundMode::thm23: return "thm23";
    case BoundMode::thm32: return "thm32";
    case BoundMode::conjecture11: return "conjecture11";
    }
    return "unknown";
}

std::optional<BoundMode> parse_mode(std::string_view name)
{
    for (auto m : {BoundMode::thm23, BoundMode::thm32, BoundMode::conjecture11})
        if (mode_name(m) == name)
            return m;
    return std::nullopt;
}

void RunConfig::validate() const
{
    if (brute_force_cap < 1 || budget_nodes < 1 || budget_time.count() < 1 || repair_attempts < 1 || workers < 1)
        throw Error("run configuration values must be positive");
}

SolveOptions RunConfig::solve_options() const
{
    SolveOptions o;
    o.budget.nodes = budget_nodes;
    o.budget.time = budget_time;
    o.seed = seed;
    o.aut.brute_force_cap = brute_force_cap;
    return o;
}

ConstructOptions RunConfig::construct_options() const
{
    ConstructOptions o;
    o.seed = seed;
    o.repair_attempts = repair_attempts;
    o.fallback = solve_options();
    return o;
}

std::string_view row_status_name(RowStatus s)
{
    switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::unknown: return "unknown";
    case RowStatus::filtered: return "filtered";
    case RowStatus::error: return "error";
    }
    return "unknown";
}

std::optional<int> BoundRow::mode_bound(BoundMode mode) const
{
    if (mode == BoundMode::thm32)
        return regular_bound;
    if (mode == BoundMode::conjecture11) {
        if (max_degree < 1)
            return std::nullopt;
        return 1 + ceil_root(max_degree, 2);
    }
    return bound;
}

void BoundSummary::add(const BoundRow& row, BoundMode m)
{
    ++total;
    switch (row.status) {
    case RowStatus::pass: ++passed; break;
    case RowStatus::fail: ++failed; break;
    case RowStatus::unknown: ++unknown; break;
    case RowStatus::filtered: ++filtered; break;
    case RowStatus::error: ++errors; break;
    }
    auto b = row.mode_bound(m);
    if (row.index && row.index_kind == "exact" && b && *b > 0)
        max_ratio = std::max(max_ratio, static_cast<double>(*row.index) / *b);
}

namespace {

std::optional<std::string> filter_reason(const Graph& g, const DegreeStats& ds, bool connected, BoundMode mode)
{
    if (! connected)
        return "disconnected";
    switch (mode) {
    case BoundMode::thm23:
        if (ds.min_degree < 2)
            return "minimum degree below 2";
        break;
    case BoundMode::thm32:
        if (! ds.regular_k || *ds.regular_k < 5)
            return "not k-regular with k >= 5";
        break;
    case BoundMode::conjecture11:
        if (g.order() < 3 || ! is_biconnected(g))
            return "not 2-connected";
        break;
    }
    return std::nullopt;
}

}  // namespace

BoundRow evaluate_line(const Graph6Line& line, const RunConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    BoundRow row;
    row.line_no = line.line_no;
    row.graph6 = line.text;
    auto stamp = [&] {
        row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    Graph g;
    try {
        g = parse_graph6(line.text);
    }
    catch (const Error& e) {
        row.status = RowStatus::error;
        row.note = e.what();
        stamp();
        return row;
    }
    const auto ds = degree_stats(g);
    row.n = g.order();
    row.m = g.size();
    row.min_degree = ds.min_degree;
    row.max_degree = ds.max_degree;
    row.connected = g.order() > 0 && is_connected(g);
    if (ds.min_degree >= 2)
        row.bound = paper_bound(ds.min_degree, ds.max_degree);
    if (ds.regular_k && *ds.regular_k >= 5)
        row.regular_bound = 2;

    if (auto reason = filter_reason(g, ds, row.connected, config.mode)) {
        row.status = RowStatus::filtered;
        row.note = *reason;
        stamp();
        return row;
    }
    const int bound = *row.mode_bound(config.mode);

    auto solved = exact_distinguishing_index(g, config.solve_options());
    if (solved.status == SolveStatus::solved) {
        row.method = method_name(Method::exact_search);
        row.index = solved.dprime;
        row.index_kind = "exact";
        row.status = solved.dprime <= bound ? RowStatus::pass : RowStatus::fail;
        stamp();
        return row;
    }
    if (solved.status == SolveStatus::impossible || solved.lower_bound > bound) {
        row.method = method_name(Method::exact_search);
        row.index = solved.lower_bound;
        row.index_kind = "lower";
        row.status = RowStatus::fail;
        stamp();
        return row;
    }

    try {
        auto built = config.mode == BoundMode::thm32 ? construct_thm32(g, config.construct_options())
                                                     : construct_thm23(g, config.construct_options());
        row.method = method_name(built.certificate.method);
        if (built.certificate.distinguishing && verify_certificate(g, built.certificate)) {
            row.index = built.certificate.labeling.label_count();
            row.index_kind = "upper";
            row.status = *row.index <= bound ? RowStatus::pass : RowStatus::unknown;
        }
        else {
            row.status = RowStatus::unknown;
            row.note = "no certificate within budget";
        }
    }
    catch (const Error& e) {
        row.status = RowStatus::unknown;
        row.note = e.what();
    }
    stamp();
    return row;
}

BoundReport verify_corpus(std::span<const Graph6Line> lines, const RunConfig& config,
                          const std::function<void(const BoundRow&)>& sink)
{
    config.validate();
    BoundReport report;
    report.summary.mode = config.mode;
    run_ordered<BoundRow>(
        lines.size(), config.workers, [&](std::size_t i) { return evaluate_line(lines[i], config); },
        [&](std::size_t, BoundRow&& row) {
            report.summary.add(row, config.mode);
            if (sink)
                sink(row);
            report.rows.push_back(std::move(row));
        });
    return report;
}

std::string csv_header()
{
    return "graph6,n,m,delta,Delta,connected,status,method,index,index_kind,bound,regular_bound,pass,elapsed_ms";
}

std::string to_csv(const BoundRow& row)
{
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    std::ostringstream out;
    // graph6 characters never include a comma or a quote, so no escaping.
    out << row.graph6 << ',' << row.n << ',' << row.m << ',' << row.min_degree << ',' << row.max_degree << ','
        << (row.connected ? 1 : 0) << ',' << row_status_name(row.status) << ',' << row.method << ','
        << opt(row.index) << ',' << row.index_kind << ',' << opt(row.bound) << ',' << opt(row.regular_bound) << ','
        << (row.pass() ? 1 : 0) << ',' << row.elapsed_ms;
    return out.str();
}

nlohmann::json to_json(const BoundRow& row)
{
    nlohmann::json j{{"line", row.line_no},
                     {"graph6", row.graph6},
                     {"n", row.n},
                     {"m", row.m},
                     {"delta", row.min_degree},
                     {"Delta", row.max_degree},
                     {"connected", row.connected},
                     {"status", row_status_name(row.status)},
                     {"method", row.method},
                     {"index_kind", row.index_kind},
                     {"pass", row.pass()},
                     {"elapsed_ms", row.elapsed_ms}};
    j["index"] = row.index ? nlohmann::json(*row.index) : nlohmann::json(nullptr);
    j["bound"] = row.bound ? nlohmann::json(*row.bound) : nlohmann::json(nullptr);
    j["regular_bound"] = row.regular_bound ? nlohmann::json(*row.regular_bound) : nlohmann::json(nullptr);
    if (! row.note.empty())
        j["note"] = row.note;
    return j;
}

nlohmann::json to_json(const BoundSummary& s)
{
    return {{"mode", mode_name(s.mode)}, {"total", s.total},     {"filtered", s.filtered},
            {"passed", s.passed},        {"failed", s.failed},   {"unknown", s.unknown},
            {"errors", s.errors},        {"max_ratio", s.max_ratio}};
}

}  // namespace dindex
