#pragma once

/**
 * Graph kernel: directed graphs with tagged vertices, reachability closure,
 * bipartite matching (generic rank), weighted matching, and vertex-disjoint
 * linkings via unit-capacity max-flow. All operations are pure and
 * deterministic (lowest vertex id wins ties).
 */

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tempnet/errors.hpp"
#include "tempnet/model.hpp"

namespace tempnet {

enum class VertexKind { state, input };

struct VertexTag {
    VertexKind kind = VertexKind::state;
    int subsystem = 0; // 1-based subsystem/copy index, 0 when not applicable
    int node = 0;      // 1-based state or input index within the subsystem
    int layer = -1;    // time/layer index, -1 when not applicable

    bool operator==(const VertexTag&) const = default;
};

// Human-readable label, e.g. "v^1_2[3]" for states, "u^1_1[0]" for inputs.
std::string tag_label(const VertexTag& tag);

class Digraph {
  public:
    int add_vertex(const VertexTag& tag);
    void add_edge(int u, int v); // duplicates collapse

    int vertex_count() const { return static_cast<int>(tags_.size()); }
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;

    const VertexTag& tag(int v) const { return tags_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& successors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw UnknownVertex("vertex id " + std::to_string(v) + " out of range");
    }

  private:
    std::vector<VertexTag> tags_;
    std::vector<std::vector<int>> adj_; // kept sorted
};

struct BipartiteGraph {
    int left_size = 0;
    int right_size = 0;
    // edge list with weights; weight defaults to 1 for the unweighted ops
    std::vector<std::pair<std::pair<int, int>, double>> edges;

    BipartiteGraph() = default;
    BipartiteGraph(int l, int r) : left_size(l), right_size(r) {}

    void add_edge(int l, int r, double w = 1.0);
};

struct Linking {
    std::vector<std::vector<int>> paths; // vertex sequences, pairwise disjoint

    int size() const { return static_cast<int>(paths.size()); }
};

// Vertices with a directed path (length >= 0) from some source.
std::set<int> reachable_from(const Digraph& g, const std::set<int>& sources);

struct MatchingResult {
    int size = 0;
    std::vector<std::pair<int, int>> edges; // (left, right)
};

// Maximum-cardinality bipartite matching (Hopcroft-Karp).
MatchingResult max_matching(const BipartiteGraph& g);

// grank of a pattern = maximum matching size of its bipartite graph B(M).
int generic_rank(const SparsityPattern& m);

// Bipartite graph B(M) of a pattern: rows on the left, columns on the right.
BipartiteGraph pattern_bipartite(const SparsityPattern& m);

struct WeightedMatchingResult {
    double weight = 0.0;
    std::vector<std::pair<int, int>> edges;
};

// Maximum-weight bipartite matching (vertices may stay unmatched). Weights
// must be nonnegative; throws NegativeWeight otherwise.
WeightedMatchingResult max_weighted_matching(const BipartiteGraph& g);

struct LinkingResult {
    int size = 0;
    Linking witness;
};

// Maximum number of pairwise vertex-disjoint source-to-sink paths (Menger,
// via vertex splitting and unit-capacity max-flow). A vertex that is both
// source and sink yields a length-0 path.
LinkingResult max_disjoint_linking(const Digraph& g, const std::set<int>& sources,
                                   const std::set<int>& sinks);

struct DotOptions {
    std::string name = "G";
    bool rank_layers = false; // group vertices of equal tag.layer
    std::set<std::pair<int, int>> dashed_edges;
    std::set<std::pair<int, int>> bold_edges;
    std::set<int> bold_vertices;
};

// Byte-stable DOT rendering (vertices and edges in id order).
std::string to_dot(const Digraph& g, const DotOptions& opts = {});
std::string to_dot(const BipartiteGraph& g, const std::string& name = "B");

} // namespace tempnet
