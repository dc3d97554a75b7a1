#include <primedist/cli.hpp>
#include <primedist/io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace primedist::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string graph;
    std::string labels;
    std::string mode = "product";
    std::string output = "human";
    std::string gap_rule = "adjacent-pairs";
    std::string emit_dot;
    std::string cycle_base;
    int k = 1;
    Int bound = 100;
    std::uint64_t budget = 10'000'000;
    Int sieve_budget = 1'000'000;
    int jobs = 0;
    int n_max = 9;
    bool deterministic = false;
};

/// Collects both renderings; only one is printed.
struct Report {
    json doc;
    std::ostringstream text;
};

std::string describe_predicate(const Predicate &p)
{
    return std::string(to_string(p.mode)) + "-" + std::to_string(p.k);
}

std::string describe_outcome(const SearchOutcome &o, const std::string &graph)
{
    switch (o.status) {
    case SearchStatus::found:
        return "found a " + describe_predicate(o.predicate) + " labeling of " + graph;
    case SearchStatus::exhausted:
        return "no " + describe_predicate(o.predicate) + " labeling of " + graph +
               " with labels in [-" + std::to_string(o.label_bound) + ", " + std::to_string(o.label_bound) +
               "] up to translation (bounded search, not a proof)";
    case SearchStatus::budget_out:
        return "node budget ran out after " + std::to_string(o.nodes_explored) + " nodes searching for a " +
               describe_predicate(o.predicate) + " labeling of " + graph + " (B = " +
               std::to_string(o.label_bound) + "); no conclusion";
    }
    return "";
}

std::string format_labels(const Labeling &l)
{
    std::string s;
    for (int v = 0; v < l.size(); ++v)
        s += (v ? "," : "") + std::to_string(l[v]);
    return s;
}

int outcome_exit(SearchStatus s)
{
    return s == SearchStatus::found ? Exit::ok : s == SearchStatus::exhausted ? Exit::negative : Exit::budget;
}

SearchConfig search_config(const Options &o)
{
    SearchConfig cfg;
    cfg.label_bound = o.bound;
    cfg.predicate = {parse_mode(o.mode), o.k};
    cfg.gap_rule = parse_gap_rule(o.gap_rule);
    cfg.node_budget = o.budget;
    cfg.deterministic = o.deterministic;
    cfg.jobs = o.jobs;
    cfg.validate();
    return cfg;
}

CycleLabelerTable cycle_table(const Options &o)
{
    auto table = CycleLabelerTable::standard(std::clamp(o.k, 2, 6));
    if (!o.cycle_base.empty()) {
        auto base = parse_label_list(o.cycle_base);
        table.set(o.k, {base.size(), base, "command line"});
    }
    return table;
}

void maybe_emit_dot(const Options &o, const Graph &g, const Labeling &l)
{
    if (o.emit_dot.empty())
        return;
    std::ofstream f(o.emit_dot);
    if (!f)
        throw std::invalid_argument("cannot write " + o.emit_dot);
    write_dot(f, g, l);
}

void describe_graph(Report &r, const GraphSource &src)
{
    r.doc["graph"] = {{"name", src.name}, {"n", src.graph.vertex_count()}, {"edges", src.graph.edge_count()}};
}

// ---- verify -------------------------------------------------------------

int cmd_verify(const Options &o, Report &r)
{
    auto src = load_graph_source(o.graph);
    auto l = load_labeling(o.labels, src.graph.vertex_count());
    const Predicate pred{parse_mode(o.mode), o.k};
    if (pred.k < 1)
        throw std::invalid_argument("--k must be >= 1");
    auto rule = parse_gap_rule(o.gap_rule);
    auto report = verify(src.graph, l, pred, rule);
    describe_graph(r, src);
    r.doc["labeling"] = labeling_to_json(l)["labels"];
    r.doc["gap_rule"] = std::string(to_string(rule));
    r.doc["report"] = report_to_json(report);
    r.text << (report.ok ? "ok" : "NOT ok") << ": " << describe_predicate(pred) << " labeling of " << src.name << "\n";
    for (const auto &v : report.violations)
        r.text << "  (" << v.u << "," << v.v << ") gap " << v.gap << ": " << to_string(v.reason) << "\n";
    maybe_emit_dot(o, src.graph, l);
    return report.ok ? Exit::ok : Exit::negative;
}

// ---- construct ----------------------------------------------------------

struct Built {
    Labeling labeling;
    std::string constructor;
};

/// Sizes of the parts in the given order, if the graph is complete multipartite on them.
std::optional<std::vector<std::size_t>> multipartite_sizes(const GraphSource &src)
{
    if (!src.partition)
        return std::nullopt;
    std::vector<std::size_t> sizes;
    std::size_t pairs = 0, total = 0;
    for (const auto &p : src.partition->parts) {
        pairs += total * p.size();
        total += p.size();
        sizes.push_back(p.size());
    }
    if (pairs != src.graph.edge_count() || !is_proper_partition(src.graph, *src.partition))
        return std::nullopt;
    return sizes;
}

std::optional<Built> special_multipartite(const GraphSource &src, const Options &o)
{
    auto sizes = multipartite_sizes(src);
    if (!sizes || sizes->size() != 3)
        return std::nullopt;
    const auto &parts = src.partition->parts;
    std::vector<std::size_t> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return (*sizes)[a] < (*sizes)[b]; });
    const auto &small = parts[idx[0]], &mid = parts[idx[1]], &large = parts[idx[2]];
    std::vector<Int> labels(static_cast<std::size_t>(src.graph.vertex_count()));
    if (small.size() == 1 && mid.size() == 2 && large.size() == 2) {
        auto base = label_K122();
        labels[small[0]] = base[0];
        labels[mid[0]] = base[1];
        labels[mid[1]] = base[2];
        labels[large[0]] = base[3];
        labels[large[1]] = base[4];
        return Built{Labeling(std::move(labels)), "label_K122"};
    }
    if (small.size() == 1 && mid.size() == 1) {
        auto base = label_K11c(static_cast<int>(large.size()), o.sieve_budget);
        labels[small[0]] = base[0];
        labels[mid[0]] = base[1];
        for (std::size_t i = 0; i < large.size(); ++i)
            labels[large[i]] = base[static_cast<int>(i + 2)];
        return Built{Labeling(std::move(labels)), "label_K11c"};
    }
    return std::nullopt;
}

std::optional<Built> strict_construction(const GraphSource &src, int k, const Options &o)
{
    auto table = cycle_table(o);
    const Graph &g = src.graph;
    if (is_cycle(g)) {
        auto c = label_cycle_strict(g.vertex_count(), k, table, search_config(o));
        if (!c)
            return std::nullopt;
        auto order = cycle_order(g);
        std::vector<Int> labels(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            labels[order[i]] = c->labeling[static_cast<int>(i)];
        return Built{Labeling(std::move(labels)), "label_cycle_strict/" + std::string(to_string(c->method))};
    }
    return Built{label_outerplanar(g, src.blocks, k, table), "label_outerplanar"};
}

std::optional<Built> construct_for(const GraphSource &src, const Predicate &pred, const Options &o)
{
    const Graph &g = src.graph;
    const int n = g.vertex_count();
    switch (pred.mode) {
    case Mode::product:
        if (n >= 3 && is_complete(g))
            return Built{label_complete(n), "label_complete"};
        if (auto b = special_multipartite(src, o))
            return b;
        {
            Partition parts;
            if (src.partition && is_proper_partition(g, *src.partition))
                parts = *src.partition;
            else
                parts = chromatic_number(g).as_partition();
            return Built{label_multipartite_via_ap(g, parts, o.sieve_budget), "label_multipartite_via_ap"};
        }
    case Mode::power:
        if (is_complete(g) && n <= 6)
            return Built{label_complete_power(n).labeling, "complete_power_fixture"};
        if (auto b = special_multipartite(src, o))
            return b;
        return strict_construction(src, pred.k, o);
    case Mode::strict:
        return strict_construction(src, pred.k, o);
    }
    return std::nullopt;
}

int cmd_construct(const Options &o, Report &r)
{
    auto src = load_graph_source(o.graph);
    const Predicate pred{parse_mode(o.mode), o.k};
    if (pred.k < 1)
        throw std::invalid_argument("--k must be >= 1");
    describe_graph(r, src);
    auto built = construct_for(src, pred, o);
    if (!built) {
        r.doc["status"] = "not_obtained";
        r.text << "no " << describe_predicate(pred) << " labeling of " << src.name
               << " obtained (no construction applies and bounded search found none)\n";
        return Exit::negative;
    }
    auto report = verify(src.graph, built->labeling, pred, parse_gap_rule(o.gap_rule));
    r.doc["status"] = report.ok ? "constructed" : "constructed_but_fails_requested_predicate";
    r.doc["constructor"] = built->constructor;
    r.doc["labeling"] = labeling_to_json(built->labeling)["labels"];
    r.doc["report"] = report_to_json(report);
    r.text << built->constructor << ": " << format_labels(built->labeling) << "\n"
           << (report.ok ? "verified " : "does NOT verify as ") << describe_predicate(pred) << "\n";
    maybe_emit_dot(o, src.graph, built->labeling);
    return report.ok ? Exit::ok : Exit::negative;
}

// ---- search -------------------------------------------------------------

int cmd_search(const Options &o, Report &r)
{
    auto src = load_graph_source(o.graph);
    auto cfg = search_config(o);
    auto outcome = search_labeling(src.graph, cfg);
    describe_graph(r, src);
    r.doc["gap_rule"] = std::string(to_string(cfg.gap_rule));
    r.doc["outcome"] = outcome_to_json(outcome);
    r.doc["statement"] = describe_outcome(outcome, src.name);
    r.text << describe_outcome(outcome, src.name) << "\n";
    if (outcome.certificate) {
        auto report = verify(src.graph, *outcome.certificate, cfg.predicate, cfg.gap_rule);
        r.doc["report"] = report_to_json(report);
        r.text << "certificate: " << format_labels(*outcome.certificate) << (report.ok ? " (verified)" : " (FAILS)")
               << "\n";
        maybe_emit_dot(o, src.graph, *outcome.certificate);
    }
    r.text << "nodes: " << outcome.nodes_explored << ", seconds: " << outcome.seconds << "\n";
    return outcome_exit(outcome.status);
}

// ---- ppn ----------------------------------------------------------------

int cmd_ppn(const Options &o, Report &r)
{
    auto src = load_graph_source(o.graph);
    auto cfg = search_config(o);
    auto b = ppn_bounds(src.graph, cfg, o.sieve_budget);
    describe_graph(r, src);
    r.doc["chromatic_number"] = b.chromatic;
    r.doc["lower"] = b.lower;
    r.doc["upper"] = b.upper ? json(*b.upper) : json(nullptr);
    r.doc["certificate_source"] = b.certificate_source;
    if (b.certificate)
        r.doc["certificate"] = labeling_to_json(*b.certificate)["labels"];
    r.doc["searches"] = json::array();
    for (const auto &s : b.searches) {
        auto j = outcome_to_json(s);
        j["statement"] = describe_outcome(s, src.name);
        r.doc["searches"].push_back(j);
    }
    if (!b.note.empty())
        r.doc["note"] = b.note;

    r.text << "chromatic number " << b.chromatic << "; lower bound " << b.lower << "\n";
    for (const auto &s : b.searches)
        r.text << "  " << describe_outcome(s, src.name) << "\n";
    if (b.upper)
        r.text << "upper bound " << *b.upper << " via " << b.certificate_source << ": " << format_labels(*b.certificate)
               << "\n";
    else
        r.text << "no upper bound certificate obtained" << (b.note.empty() ? "" : ": " + b.note) << "\n";
    if (b.upper)
        return Exit::ok;
    return b.note.empty() ? Exit::negative : Exit::budget;
}

// ---- ppc ----------------------------------------------------------------

int cmd_ppc(const Options &o, Report &r)
{
    if (o.k < 1)
        throw std::invalid_argument("--k must be >= 1");
    auto cfg = search_config(o);
    auto table = cycle_table(o);
    auto rows = ppc_scan(o.k, o.n_max, cfg, table);
    r.doc["k"] = o.k;
    r.doc["n_max"] = o.n_max;
    if (table.has(o.k))
        r.doc["table_base_length"] = table.entry(o.k).base_length;
    r.doc["rows"] = json::array();
    r.text << "strict power labelings of cycles C_3..C_" << o.n_max << " with k = " << o.k << "\n";
    for (const auto &row : rows) {
        json j = {{"n", row.n}, {"status", std::string(to_string(row.status))}, {"method", row.method}};
        if (row.certificate)
            j["certificate"] = labeling_to_json(*row.certificate)["labels"];
        std::string line = "C_" + std::to_string(row.n) + ": " + std::string(to_string(row.status)) + " (" +
                           row.method + ")";
        if (row.search) {
            j["search"] = outcome_to_json(*row.search);
            j["statement"] = describe_outcome(*row.search, "C_" + std::to_string(row.n));
            if (row.status == PpcStatus::unknown)
                line += ": " + j["statement"].get<std::string>();
        }
        r.doc["rows"].push_back(j);
        r.text << "  " << line << "\n";
    }
    r.doc["conclusion"] = "no value of ppc(k) is asserted";
    r.text << "no value of ppc(" << o.k << ") is asserted\n";
    return Exit::ok;
}

// ---- twopower-demo ------------------------------------------------------

int cmd_twopower(const Options &o, Report &r)
{
    auto cfg = search_config(o);
    cfg.predicate = {Mode::power, o.k};
    r.doc["k"] = o.k;
    int status = Exit::ok;

    r.doc["fixtures"] = json::array();
    for (int n = 1; n <= 6; ++n) {
        auto f = label_complete_power(n);
        auto report = verify_power(complete_graph(n), f.labeling, f.k);
        r.doc["fixtures"].push_back({{"n", n}, {"k", f.k}, {"labeling", labeling_to_json(f.labeling)["labels"]},
                                     {"ok", report.ok}});
        r.text << "K_" << n << ": " << format_labels(f.labeling) << " power-" << f.k << (report.ok ? " ok" : " FAILS")
               << "\n";
        if (!report.ok)
            status = Exit::negative;
    }

    // Four labels of one parity would need pairwise gaps that are all powers of 2.
    auto parity = cfg;
    parity.even_labels_only = true;
    auto same_parity = search_labeling(complete_graph(4), parity);
    r.doc["k4_same_parity"] = outcome_to_json(same_parity);
    r.doc["k4_same_parity"]["statement"] = describe_outcome(same_parity, "K_4 with all labels even");
    r.text << describe_outcome(same_parity, "K_4 with all labels even") << "\n";

    auto k7 = search_labeling(complete_graph(7), cfg);
    r.doc["k7"] = outcome_to_json(k7);
    r.doc["k7"]["statement"] = describe_outcome(k7, "K_7");
    r.text << describe_outcome(k7, "K_7") << "\n";

    for (const auto &s : {same_parity, k7}) {
        if (s.status == SearchStatus::found)
            status = Exit::negative;
        else if (s.status == SearchStatus::budget_out && status == Exit::ok)
            status = Exit::budget;
    }
    return status;
}

// ---- 2odd ---------------------------------------------------------------

int cmd_2odd(const Options &o, Report &r)
{
    auto src = load_graph_source(o.graph);
    auto w = decide_2odd(src.graph, o.budget);
    describe_graph(r, src);
    r.doc["two_odd"] = w.has_value();
    if (w) {
        r.doc["witness"] = coloring_to_json(*w);
        r.text << src.name << " is 2-odd; red edges:";
        for (auto [u, v] : w->red)
            r.text << " " << u << "-" << v;
        r.text << "\n";
        return Exit::ok;
    }
    r.text << src.name << " is not 2-odd (all parity assignments checked)\n";
    return Exit::negative;
}

using Handler = int (*)(const Options &, Report &);

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Prime distance, prime power and prime product labelings of graphs", "primedist"};
    app.require_subcommand(1);

    auto graph_opt = [&](CLI::App *s) { s->add_option("--graph", o.graph, "Kn, Cn, Pn, K_a_b_... or a JSON file")->required(); };
    auto predicate_opts = [&](CLI::App *s) {
        s->add_option("--mode", o.mode, "product | power | strict")->capture_default_str();
        s->add_option("--k", o.k, "exponent or prime-factor cap")->capture_default_str();
    };
    auto search_opts = [&](CLI::App *s) {
        s->add_option("--bound", o.bound, "label bound B")->capture_default_str();
        s->add_option("--budget", o.budget, "search node budget")->capture_default_str();
        s->add_option("--jobs", o.jobs, "OpenMP threads (0 = default)")->capture_default_str();
        s->add_flag("--deterministic", o.deterministic, "use the serial search");
        s->add_option("--gap-rule", o.gap_rule, "adjacent-pairs | all-pairs (product mode)")->capture_default_str();
    };
    auto common = [&](CLI::App *s) {
        s->add_option("--output", o.output, "human | json")->capture_default_str()->check(CLI::IsMember({"human", "json"}));
    };

    std::map<CLI::App *, Handler> handlers;
    auto add = [&](const char *name, const char *desc, Handler h) {
        auto *s = app.add_subcommand(name, desc);
        common(s);
        handlers[s] = h;
        return s;
    };

    auto *verify_cmd = add("verify", "check a labeling", cmd_verify);
    graph_opt(verify_cmd);
    predicate_opts(verify_cmd);
    verify_cmd->add_option("--labels", o.labels, "comma list in vertex order, or a JSON file")->required();
    verify_cmd->add_option("--gap-rule", o.gap_rule, "adjacent-pairs | all-pairs")->capture_default_str();
    verify_cmd->add_option("--emit-dot", o.emit_dot, "write a Graphviz file");

    auto *construct_cmd = add("construct", "build a labeling from the constructions", cmd_construct);
    graph_opt(construct_cmd);
    predicate_opts(construct_cmd);
    search_opts(construct_cmd);
    construct_cmd->add_option("--sieve-budget", o.sieve_budget, "bound for twin primes and prime progressions")
        ->capture_default_str();
    construct_cmd->add_option("--cycle-base", o.cycle_base, "odd cycle labeling to use as the base for k");
    construct_cmd->add_option("--emit-dot", o.emit_dot, "write a Graphviz file");

    auto *search_cmd = add("search", "bounded exhaustive search", cmd_search);
    graph_opt(search_cmd);
    predicate_opts(search_cmd);
    search_opts(search_cmd);
    search_cmd->add_option("--emit-dot", o.emit_dot, "write a Graphviz file");

    auto *ppn_cmd = add("ppn", "bounds on the prime product number", cmd_ppn);
    graph_opt(ppn_cmd);
    search_opts(ppn_cmd);
    ppn_cmd->add_option("--sieve-budget", o.sieve_budget, "bound for prime progressions")->capture_default_str();

    auto *ppc_cmd = add("ppc", "scan cycles for strict k-th power labelings", cmd_ppc);
    ppc_cmd->add_option("--k", o.k, "exponent")->capture_default_str();
    ppc_cmd->add_option("--nmax", o.n_max, "largest cycle length")->capture_default_str();
    ppc_cmd->add_option("--cycle-base", o.cycle_base, "odd cycle labeling to use as the base for k");
    search_opts(ppc_cmd);

    auto *demo_cmd = add("twopower-demo", "complete graph fixtures and the K_7 bound", cmd_twopower);
    demo_cmd->add_option("--k", o.k, "exponent for the searches")->capture_default_str();
    search_opts(demo_cmd);

    auto *odd_cmd = add("2odd", "decide whether a graph is 2-odd", cmd_2odd);
    graph_opt(odd_cmd);
    odd_cmd->add_option("--budget", o.budget, "parity assignment budget")->capture_default_str();

    std::vector<const char *> argv{"primedist"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    CLI::App *chosen = app.get_subcommands().front();
    Report report;
    report.doc["schema"] = "primedist." + chosen->get_name() + ".v" + std::to_string(schema_version);
    report.doc["command"] = chosen->get_name();
    int code = Exit::ok;
    std::string error;
    try {
        code = handlers.at(chosen)(o, report);
    } catch (const BudgetExhausted &e) {
        code = Exit::budget;
        error = e.what();
    } catch (const std::invalid_argument &e) {
        code = Exit::usage;
        error = e.what();
    } catch (const std::out_of_range &e) {
        code = Exit::usage;
        error = e.what();
    } catch (const std::exception &e) {
        code = Exit::negative;
        error = e.what();
    }

    if (!error.empty()) {
        err << "error: " << error << "\n";
        if (o.output == "json")
            out << json{{"schema", "primedist.error.v" + std::to_string(schema_version)},
                        {"command", chosen->get_name()},
                        {"error", error},
                        {"exit", code}}
                       .dump(2)
                << "\n";
        return code;
    }
    report.doc["exit"] = code;
    if (o.output == "json")
        out << report.doc.dump(2) << "\n";
    else
        out << report.text.str();
    return code;
}

}  // namespace primedist::cli
