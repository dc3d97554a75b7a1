#include <primedist/io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace primedist {

using nlohmann::json;

FormatError::FormatError(std::string origin_, std::string path_, int line_, const std::string &message)
    : std::invalid_argument(origin_ + (line_ > 0 ? ":" + std::to_string(line_) : std::string()) + ": " +
                            (path_.empty() ? std::string("/") : path_) + ": " + message),
      origin(std::move(origin_)),
      path(std::move(path_)),
      line(line_)
{
}

namespace {

// ---- line-aware parsing -------------------------------------------------

struct LineCounter {
    int line = 1;
    int token_line = 1;  ///< line of the last non-blank character read
};

/// Feeds the parser while counting lines, so callbacks know where they are.
class CountingIterator {
public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char *;
    using reference = const char &;

    CountingIterator() = default;
    CountingIterator(const char *p, LineCounter *c) : p_(p), c_(c) {}

    reference operator*() const { return *p_; }
    CountingIterator &operator++()
    {
        if (c_) {
            if (*p_ == '\n')
                ++c_->line;
            else if (!std::isspace(static_cast<unsigned char>(*p_)))
                c_->token_line = c_->line;
        }
        ++p_;
        return *this;
    }
    CountingIterator operator++(int)
    {
        auto old = *this;
        ++*this;
        return old;
    }
    bool operator==(const CountingIterator &o) const { return p_ == o.p_; }
    bool operator!=(const CountingIterator &o) const { return p_ != o.p_; }

private:
    const char *p_ = nullptr;
    LineCounter *c_ = nullptr;
};

class Document {
public:
    Document(std::string_view text, std::string origin) : origin_(std::move(origin))
    {
        struct Frame {
            bool array;
            std::string key;
            int index;
        };
        LineCounter counter;
        std::vector<Frame> stack;
        auto path = [&] {
            std::string p;
            for (const auto &f : stack)
                p += "/" + (f.array ? std::to_string(f.index) : f.key);
            return p;
        };
        auto enter_value = [&] {
            if (!stack.empty() && stack.back().array)
                ++stack.back().index;
            lines_.emplace(path(), counter.token_line);
        };
        json::parser_callback_t cb = [&](int, json::parse_event_t event, json &parsed) {
            switch (event) {
            case json::parse_event_t::object_start:
                enter_value();
                stack.push_back({false, "", -1});
                break;
            case json::parse_event_t::array_start:
                enter_value();
                stack.push_back({true, "", -1});
                break;
            case json::parse_event_t::key:
                stack.back().key = parsed.get<std::string>();
                break;
            case json::parse_event_t::value:
                enter_value();
                break;
            case json::parse_event_t::object_end:
            case json::parse_event_t::array_end:
                stack.pop_back();
                break;
            }
            return true;
        };
        try {
            root_ = json::parse(CountingIterator(text.data(), &counter),
                                CountingIterator(text.data() + text.size(), nullptr), cb);
        } catch (const json::parse_error &e) {
            auto upto = std::min<std::size_t>(e.byte, text.size());
            int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
            throw FormatError(origin_, "", line, std::string("malformed JSON: ") + e.what());
        }
    }

    const json &root() const { return root_; }

    int line_of(const std::string &path) const
    {
        for (std::string p = path;; p = p.substr(0, p.rfind('/'))) {
            if (auto it = lines_.find(p); it != lines_.end())
                return it->second;
            if (p.empty())
                return 0;
        }
    }

    [[noreturn]] void fail(const std::string &path, const std::string &message) const
    {
        throw FormatError(origin_, path, line_of(path), message);
    }

    Int integer(const json &v, const std::string &path) const
    {
        if (!v.is_number_integer())
            fail(path, "expected an integer");
        if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
            fail(path, "integer out of range");
        return v.get<Int>();
    }

    int vertex(const json &v, const std::string &path, int n) const
    {
        Int x = integer(v, path);
        if (x < 0 || x >= n)
            fail(path, "vertex " + std::to_string(x) + " out of range [0, " + std::to_string(n) + ")");
        return static_cast<int>(x);
    }

    const json &array(const json &v, const std::string &path) const
    {
        if (!v.is_array())
            fail(path, "expected an array");
        return v;
    }

    Edge pair(const json &v, const std::string &path, int n) const
    {
        if (!v.is_array() || v.size() != 2)
            fail(path, "expected a pair [u, v]");
        int a = vertex(v[0], path + "/0", n), b = vertex(v[1], path + "/1", n);
        if (a == b)
            fail(path, "loop at vertex " + std::to_string(a));
        return make_edge(a, b);
    }

private:
    std::string origin_;
    json root_;
    std::map<std::string, int> lines_;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<int> parse_positive(std::string_view s)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
        return std::nullopt;
    return v;
}

}  // namespace

// ---- graphs -------------------------------------------------------------

GraphSource parse_graph_expression(std::string_view expr)
{
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("unknown graph expression '" + std::string(expr) +
                                     "' (expected Kn, Cn, Pn or K_a_b_...)");
    };
    if (expr.size() < 2)
        throw bad();
    const char family = expr[0];
    std::string_view rest = expr.substr(1);
    std::vector<int> numbers;
    if (rest.front() == '_') {
        rest.remove_prefix(1);
        while (true) {
            auto cut = rest.find('_');
            auto v = parse_positive(rest.substr(0, cut));
            if (!v)
                throw bad();
            numbers.push_back(*v);
            if (cut == std::string_view::npos)
                break;
            rest.remove_prefix(cut + 1);
        }
    } else {
        auto v = parse_positive(rest);
        if (!v)
            throw bad();
        numbers.push_back(*v);
    }

    GraphSource out;
    out.name = std::string(expr);
    if (family == 'K' && numbers.size() >= 2) {
        auto mp = complete_multipartite(numbers);
        out.graph = std::move(mp.graph);
        out.partition = std::move(mp.partition);
        return out;
    }
    if (numbers.size() != 1)
        throw bad();
    const int n = numbers.front();
    switch (family) {
    case 'K':
        out.graph = complete_graph(n);
        break;
    case 'C':
        out.graph = cycle_graph(n);
        break;
    case 'P':
        out.graph = path_graph(n);
        break;
    default:
        throw bad();
    }
    return out;
}

GraphSource parse_graph_json(std::string_view text, std::string origin)
{
    Document doc(text, origin);
    const json &root = doc.root();
    if (!root.is_object())
        doc.fail("", "expected an object with \"n\" and \"edges\"");
    for (auto it = root.begin(); it != root.end(); ++it)
        if (it.key() != "n" && it.key() != "edges" && it.key() != "partition" && it.key() != "blocks" &&
            it.key() != "name")
            doc.fail("/" + it.key(), "unknown field");
    if (!root.contains("n"))
        doc.fail("", "missing field \"n\"");
    if (!root.contains("edges"))
        doc.fail("", "missing field \"edges\"");
    Int n = doc.integer(root["n"], "/n");
    if (n < 0 || n > 1'000'000)
        doc.fail("/n", "vertex count out of range");

    GraphSource out;
    out.name = root.contains("name") && root["name"].is_string() ? root["name"].get<std::string>() : origin;
    out.graph = Graph(static_cast<int>(n));
    std::set<Edge> seen;
    const auto &edges = doc.array(root["edges"], "/edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = "/edges/" + std::to_string(i);
        Edge e = doc.pair(edges[i], path, static_cast<int>(n));
        if (!seen.insert(e).second)
            doc.fail(path, "duplicate edge");
        out.graph.add_edge(e.first, e.second);
    }

    if (root.contains("partition")) {
        const auto &parts = doc.array(root["partition"], "/partition");
        Partition p;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const std::string path = "/partition/" + std::to_string(i);
            std::vector<int> part;
            for (std::size_t j = 0; j < doc.array(parts[i], path).size(); ++j)
                part.push_back(doc.vertex(parts[i][j], path + "/" + std::to_string(j), static_cast<int>(n)));
            p.parts.push_back(std::move(part));
        }
        try {
            validate_partition(out.graph, p);
        } catch (const std::invalid_argument &e) {
            doc.fail("/partition", e.what());
        }
        out.partition = std::move(p);
    }

    if (root.contains("blocks")) {
        const auto &blocks = doc.array(root["blocks"], "/blocks");
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const std::string path = "/blocks/" + std::to_string(i);
            if (!blocks[i].is_object() || !blocks[i].contains("outer"))
                doc.fail(path, "expected an object with \"outer\"");
            OuterplanarEmbedding emb;
            const auto &outer = doc.array(blocks[i]["outer"], path + "/outer");
            for (std::size_t j = 0; j < outer.size(); ++j)
                emb.outer_cycle.push_back(doc.vertex(outer[j], path + "/outer/" + std::to_string(j), static_cast<int>(n)));
            if (blocks[i].contains("chords")) {
                const auto &chords = doc.array(blocks[i]["chords"], path + "/chords");
                for (std::size_t j = 0; j < chords.size(); ++j)
                    emb.chords.push_back(doc.pair(chords[j], path + "/chords/" + std::to_string(j), static_cast<int>(n)));
            }
            try {
                emb.validate_against(out.graph);
            } catch (const std::invalid_argument &e) {
                doc.fail(path, e.what());
            }
            out.blocks.push_back(std::move(emb));
        }
    }
    return out;
}

GraphSource load_graph_source(const std::string &arg)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec))
        return parse_graph_json(read_file(arg), arg);
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json")
        throw std::invalid_argument("cannot open " + arg);
    return parse_graph_expression(arg);
}

json graph_to_json(const GraphSource &g)
{
    json out;
    out["n"] = g.graph.vertex_count();
    out["edges"] = json::array();
    for (auto [u, v] : g.graph.edges())
        out["edges"].push_back({u, v});
    if (g.partition)
        out["partition"] = g.partition->parts;
    if (!g.blocks.empty()) {
        out["blocks"] = json::array();
        for (const auto &b : g.blocks) {
            json chords = json::array();
            for (auto [u, v] : b.chords)
                chords.push_back({u, v});
            out["blocks"].push_back({{"outer", b.outer_cycle}, {"chords", chords}});
        }
    }
    return out;
}

// ---- labelings ----------------------------------------------------------

Labeling parse_labeling_json(std::string_view text, int n, std::string origin)
{
    Document doc(text, std::move(origin));
    const json &root = doc.root();
    if (!root.is_object() || !root.contains("labels"))
        doc.fail("", "expected an object with \"labels\"");
    const json &labels = root["labels"];
    if (!labels.is_object())
        doc.fail("/labels", "expected an object mapping vertex ids to integers");
    std::vector<std::optional<Int>> values(static_cast<std::size_t>(n));
    for (auto it = labels.begin(); it != labels.end(); ++it) {
        const std::string path = "/labels/" + it.key();
        auto v = parse_positive(it.key());
        int vertex = it.key() == "0" ? 0 : v ? *v : -1;
        if (vertex < 0 || vertex >= n)
            doc.fail(path, "unknown vertex '" + it.key() + "'");
        values[vertex] = doc.integer(it.value(), path);
    }
    std::vector<Int> out;
    for (int v = 0; v < n; ++v) {
        if (!values[v])
            doc.fail("/labels", "no label for vertex " + std::to_string(v));
        out.push_back(*values[v]);
    }
    return Labeling(std::move(out));
}

Labeling parse_label_list(std::string_view text)
{
    std::vector<Int> out;
    while (!text.empty()) {
        auto cut = text.find(',');
        auto item = text.substr(0, cut);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.remove_suffix(1);
        Int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw std::invalid_argument("bad label '" + std::string(item) + "' in label list");
        out.push_back(v);
        if (cut == std::string_view::npos)
            break;
        text.remove_prefix(cut + 1);
    }
    if (out.empty())
        throw std::invalid_argument("empty label list");
    return Labeling(std::move(out));
}

Labeling load_labeling(const std::string &arg, int n)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec))
        return parse_labeling_json(read_file(arg), n, arg);
    auto l = parse_label_list(arg);
    if (l.size() != n)
        throw std::invalid_argument("label list has " + std::to_string(l.size()) + " entries, graph has " +
                                    std::to_string(n) + " vertices");
    return l;
}

json labeling_to_json(const Labeling &l)
{
    json labels = json::object();
    for (int v = 0; v < l.size(); ++v)
        labels[std::to_string(v)] = l[v];
    return {{"labels", labels}};
}

json predicate_to_json(const Predicate &p) { return {{"mode", std::string(to_string(p.mode))}, {"k", p.k}}; }

json report_to_json(const VerificationReport &r)
{
    json violations = json::array();
    for (const auto &v : r.violations)
        violations.push_back({{"u", v.u}, {"v", v.v}, {"gap", v.gap}, {"reason", std::string(to_string(v.reason))}});
    return {{"predicate", predicate_to_json(r.predicate)}, {"ok", r.ok}, {"violations", violations}};
}

json outcome_to_json(const SearchOutcome &o)
{
    json out = {{"status", std::string(to_string(o.status))},
                {"predicate", predicate_to_json(o.predicate)},
                {"label_bound", o.label_bound},
                {"nodes_explored", o.nodes_explored},
                {"seconds", o.seconds}};
    if (o.certificate)
        out["certificate"] = labeling_to_json(*o.certificate)["labels"];
    return out;
}

json coloring_to_json(const RedBlueColoring &c)
{
    auto edges = [](const std::vector<Edge> &es) {
        json a = json::array();
        for (auto [u, v] : es)
            a.push_back({u, v});
        return a;
    };
    json out = {{"red", edges(c.red)}, {"blue", edges(c.blue)}};
    if (!c.parity.empty())
        out["parity"] = c.parity;
    return out;
}

void write_dot(std::ostream &os, const Graph &g, const Labeling &l)
{
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << v << ": " << l[v] << "\"];\n";
    for (auto [u, v] : g.edges())
        os << "  " << u << " -- " << v << " [label=\"" << abs_diff(l[u], l[v]) << "\"];\n";
    os << "}\n";
}

}  // namespace primedist
