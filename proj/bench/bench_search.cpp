// Serial reference vs OpenMP search on a few fixed instances.
// Usage: bench_search [repeats] [threads]

#include <primedist/search.hpp>

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace primedist;

namespace {

struct Case {
    std::string name;
    Graph graph;
    SearchConfig cfg;
};

double best_seconds(int repeats, const std::function<void()> &f)
{
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char **argv)
{
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();

    std::vector<Case> cases;
    auto add = [&](std::string name, Graph g, Predicate pred, Int bound) {
        SearchConfig cfg;
        cfg.predicate = pred;
        cfg.label_bound = bound;
        cfg.jobs = threads;
        cases.push_back({std::move(name), std::move(g), cfg});
    };
    const int k123[] = {1, 2, 3}, k222[] = {2, 2, 2}, k1112[] = {1, 1, 1, 2};
    add("K_1_2_3 product-1 B=50", complete_multipartite(k123).graph, {Mode::product, 1}, 50);
    add("K_2_2_2 product-1 B=50", complete_multipartite(k222).graph, {Mode::product, 1}, 50);
    add("K_1_1_1_2 product-1 B=50", complete_multipartite(k1112).graph, {Mode::product, 1}, 50);
    add("K_7 power-2 B=100", complete_graph(7), {Mode::power, 2}, 100);
    add("C_5 strict-2 B=3000", cycle_graph(5), {Mode::strict, 2}, 3000);
    add("C_3 strict-2 B=10000", cycle_graph(3), {Mode::strict, 2}, 10000);

    std::printf("threads=%d repeats=%d\n", threads, repeats);
    std::printf("%-28s %10s %12s %12s %8s %s\n", "instance", "status", "serial s", "parallel s", "speedup", "same");
    int mismatches = 0;
    for (const auto &c : cases) {
        SearchOutcome serial, parallel;
        double ts = best_seconds(repeats, [&] { serial = search_labeling_serial(c.graph, c.cfg); });
        double tp = best_seconds(repeats, [&] { parallel = search_labeling_parallel(c.graph, c.cfg); });
        bool same = serial.status == parallel.status && serial.certificate == parallel.certificate;
        mismatches += !same;
        std::printf("%-28s %10s %12.6f %12.6f %8.2f %s\n", c.name.c_str(), std::string(to_string(serial.status)).c_str(),
                    ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    }

    Graph g(18);
    for (int v = 0; v < 18; ++v) {
        g.add_edge(v, (v + 1) % 18);
        if (v % 3 == 0)
            g.add_edge(v, (v + 7) % 18);
    }
    std::optional<RedBlueColoring> ws, wp;
    double ts = best_seconds(repeats, [&] { ws = decide_2odd_serial(g); });
    double tp = best_seconds(repeats, [&] { wp = decide_2odd(g); });
    bool same = ws.has_value() == wp.has_value() && (!ws || ws->parity == wp->parity);
    mismatches += !same;
    std::printf("%-28s %10s %12.6f %12.6f %8.2f %s\n", "2-odd, 18 vertices", ws ? "2-odd" : "not", ts, tp,
                tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    return mismatches == 0 ? 0 : 1;
}
