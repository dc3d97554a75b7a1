#include <primedist/instruments.hpp>

#include <algorithm>
#include <stdexcept>

namespace primedist {

PpnBounds ppn_bounds(const Graph &g, const SearchConfig &cfg, Int ap_budget)
{
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("ppn_bounds: empty graph");
    PpnBounds out;
    auto colouring = chromatic_number(g);
    out.chromatic = colouring.colors;
    out.lower = std::max(1, ceil_log2(out.chromatic) - 1);

    if (g.edge_count() == 0) {
        std::vector<Int> labels;
        for (Int i = 0; i < n; ++i)
            labels.push_back(2 * i);
        out.upper = 1;
        out.certificate = Labeling(std::move(labels));
        out.certificate_source = "edgeless";
        return out;
    }
    if (n >= 3 && is_complete(g)) {
        out.upper = std::max(1, ceil_log2(n) - 1);
        out.certificate = label_complete(n);
        out.certificate_source = "label_complete";
        return out;
    }

    for (int k : {out.lower, out.lower + 1}) {
        SearchConfig c = cfg;
        c.predicate = {Mode::product, k};
        auto outcome = search_labeling(g, c);
        out.searches.push_back(outcome);
        if (outcome.status == SearchStatus::found) {
            out.upper = k;
            out.certificate = outcome.certificate;
            out.certificate_source = "search";
            return out;
        }
    }

    try {
        out.certificate = label_multipartite_via_ap(g, colouring.as_partition(), ap_budget);
        out.upper = std::max(1, ceil_log2(out.chromatic));
        out.certificate_source = "ap_construction";
    } catch (const BudgetExhausted &e) {
        out.note = e.what();
    } catch (const std::invalid_argument &e) {
        out.note = e.what();
    }
    return out;
}

std::string_view to_string(PpcStatus s)
{
    switch (s) {
    case PpcStatus::constructed:
        return "constructed";
    case PpcStatus::found_by_search:
        return "found_by_search";
    case PpcStatus::unknown:
        return "unknown";
    }
    return "?";
}

std::vector<PpcRow> ppc_scan(int k, int n_max, const SearchConfig &cfg, const CycleLabelerTable &table)
{
    if (k < 1)
        throw std::invalid_argument("ppc_scan: k must be >= 1");
    if (n_max < 3)
        throw std::invalid_argument("ppc_scan: n_max must be >= 3");
    std::vector<PpcRow> rows;
    for (int n = 3; n <= n_max; ++n) {
        PpcRow row;
        row.n = n;
        const bool constructible = n % 2 == 0 || (table.has(k) && n >= table.entry(k).base_length);
        if (constructible) {
            auto c = label_cycle_strict(n, k, table);
            row.status = PpcStatus::constructed;
            row.method = std::string(to_string(c->method));
            row.certificate = c->labeling;
        } else {
            SearchConfig c = cfg;
            c.predicate = {Mode::strict, k};
            auto outcome = search_labeling(cycle_graph(n), c);
            row.method = "search";
            if (outcome.status == SearchStatus::found) {
                row.status = PpcStatus::found_by_search;
                row.certificate = outcome.certificate;
            }
            row.search = std::move(outcome);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace primedist
