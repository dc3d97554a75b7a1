#pragma once

#include <primedist/instruments.hpp>
#include <primedist/labeling.hpp>
#include <primedist/outerplanar.hpp>
#include <primedist/search.hpp>

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace primedist {

/// Malformed graph or labeling document. `path` is a JSON pointer into the
/// document, `line` is 1-based (0 when unknown).
class FormatError : public std::invalid_argument {
public:
    FormatError(std::string origin, std::string path, int line, const std::string &message);
    std::string origin;
    std::string path;
    int line;
};

struct GraphSource {
    Graph graph;
    std::optional<Partition> partition;
    std::vector<OuterplanarEmbedding> blocks;
    std::string name;
};

/// `K6`, `C9`, `P5`, `K_1_2_2` (complete multipartite, with partition).
/// Throws std::invalid_argument for anything else.
GraphSource parse_graph_expression(std::string_view expr);

/// {"n": int, "edges": [[u,v],...], "partition": [[...],...]?,
///  "blocks": [{"outer": [...], "chords": [[a,b],...]},...]?}
GraphSource parse_graph_json(std::string_view text, std::string origin = "<input>");

/// A path to an existing file is read as JSON; anything else is an expression.
GraphSource load_graph_source(const std::string &arg);

nlohmann::json graph_to_json(const GraphSource &g);

/// {"labels": {"0": int, "1": int, ...}}; every vertex of an n-vertex graph
/// must appear exactly once.
Labeling parse_labeling_json(std::string_view text, int n, std::string origin = "<input>");
/// "0,4,3485" in vertex order.
Labeling parse_label_list(std::string_view text);
/// A file path (JSON) or a comma-separated list.
Labeling load_labeling(const std::string &arg, int n);

nlohmann::json labeling_to_json(const Labeling &l);
nlohmann::json predicate_to_json(const Predicate &p);
nlohmann::json report_to_json(const VerificationReport &r);
nlohmann::json outcome_to_json(const SearchOutcome &o);
nlohmann::json coloring_to_json(const RedBlueColoring &c);

/// Graphviz rendering with labels on vertices and gaps on edges.
void write_dot(std::ostream &os, const Graph &g, const Labeling &l);

/// Current version of every JSON document the CLI writes.
inline constexpr int schema_version = 1;

}  // namespace primedist
