#pragma once

/**
 * Cascaded dynamic graph (CDG): per-subsystem dynamic graphs over n time
 * steps chained by path-existence edges between last time layers. The
 * maximum vertex-disjoint linking from the input copies to the last
 * subsystem's last layer upper-bounds the generic reachable-subspace
 * dimension on one temporal sequence.
 */

#include <optional>
#include <set>
#include <vector>

#include "tempnet/graph.hpp"
#include "tempnet/model.hpp"

namespace tempnet {

struct SystemDigraph {
    Digraph g;
    int subsystem = 1; // 1-based
    int n = 0;
    int m = 0;

    int state_vertex(int j) const { return j; }          // j in [0, n)
    int input_vertex(int k) const { return n + k; }      // k in [0, m)
};

SystemDigraph build_system_digraph(const StructuredPair& pair, int subsystem_index);

struct Cdg {
    Digraph g;
    int n = 0;
    std::vector<int> m;               // per-subsystem input counts
    std::set<int> sources;            // all input-vertex copies
    std::set<int> sinks;              // states of the last subsystem at t = n
    std::set<std::pair<int, int>> cross_edges;

    // i: 1-based subsystem, j: 1-based state, t in [1, n]
    int state_vertex(int i, int j, int t) const;
    // i: 1-based subsystem, k: 1-based input, t in [0, n-1]
    int input_vertex(int i, int k, int t) const;

  private:
    friend struct CdgBuilder;
    std::vector<int> block_offset_; // vertex id of each subsystem block
};

Cdg build_cdg(const TemporalNetwork& net);

struct CdgBound {
    int bound = 0;
    Linking witness;
    // For N = 2 only: min of the standard bound and the variant whose cross
    // edges are restricted to same-index pairs (valid because for N = 2 the
    // reachability matrix ranks at h = 0 and h > 0 agree generically).
    std::optional<int> bound_n2_refined;
};

CdgBound cdg_upper_bound(const TemporalNetwork& net);

// CDG of the temporal network whose k-th pair is a fresh structural copy of
// pair path[k] (1-based entries). Throws BadIndex on bad entries.
Cdg build_cdg_for_path(const TemporalNetwork& net, const std::vector<int>& path);

struct CrpCheck {
    bool passes = false;
    int linking_size = 0;
};

// Necessary condition for the switching path to realize a full-dimensional
// reachable subspace: the path CDG has a source-sink linking of size n.
CrpCheck crp_check(const TemporalNetwork& net, const std::vector<int>& path);

// DOT rendering with time layers ranked and cross edges dashed; an optional
// witness linking is drawn bold.
std::string cdg_to_dot(const Cdg& cdg, const Linking* witness = nullptr);

} // namespace tempnet
