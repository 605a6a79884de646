#pragma once

/**
 * Cactus-cover lower bounds. A cactus configuration in a system digraph is a
 * collection of vertex-disjoint stems (simple paths from input vertices) and
 * cycles; the input-reachable states it touches are "covered". The maximum
 * covered-set size equals the generic reachable-subspace dimension of a
 * single pair, and greedy unions of per-subsystem covers lower-bound the
 * temporal-sequence dimension. Temporal cactus configurations on the
 * switching digraph lower-bound the overall generic dimension.
 */

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tempnet/graph.hpp"
#include "tempnet/model.hpp"

namespace tempnet {

struct CactusCover {
    std::set<int> covered;                  // 0-based state indices
    std::vector<std::vector<int>> stems;    // vertex id sequences, input first
    std::vector<std::vector<int>> cycles;   // vertex id sequences, closing edge implied
};

// Maximum-cardinality subset of `allowed` (0-based state indices) coverable
// by a cactus configuration in the pair's system digraph. Exact (solved as a
// min-cost circulation).
CactusCover max_cactus_cover(const StructuredPair& pair, const std::set<int>& allowed);

struct GreedyUnionResult {
    int bound = 0;
    std::vector<std::set<int>> step_covers; // cover picked at each iteration
    std::vector<int> picked_subsystems;     // 1-based, parallel to step_covers
};

// Greedy union of per-subsystem cactus covers: repeatedly picks the
// subsystem covering the most not-yet-covered states (lowest index on ties)
// until no subsystem remains or the last pick added nothing.
GreedyUnionResult greedy_union_lower_bound(const TemporalNetwork& net);

struct GuaranteeValues {
    double ratio_bound = 0.0;  // (2N-3)/(N(N-1)) * opt
    std::vector<double> f;     // f(t) for t = 0..N-2
};

// Approximation guarantees of the greedy union given the optimum of the
// union problem and the size of the first greedy pick. Throws BadN if N < 2.
GuaranteeValues greedy_guarantee(int N, int opt_size, int first_pick_size);

struct SwitchingDigraph {
    Digraph raw;     // union of system digraphs plus switching edges
    Digraph pruned;  // input-unreachable vertices removed
    std::set<std::pair<int, int>> switching_edges;        // ids in raw
    std::set<std::pair<int, int>> switching_edges_pruned; // ids in pruned
    std::vector<int> pruned_to_raw;    // vertex id map
    std::vector<int> raw_to_pruned;    // -1 when removed
    int n = 0;
    std::vector<int> m;

    int state_vertex_raw(int i, int j) const;  // i: 1-based subsystem, j in [0, n)
    int input_vertex_raw(int i, int k) const;  // k in [0, m_i)

  private:
    friend SwitchingDigraph build_switching_digraph(const TemporalNetwork& net);
    std::vector<int> block_offset_;
};

SwitchingDigraph build_switching_digraph(const TemporalNetwork& net);

struct TemporalCactus {
    std::vector<std::vector<int>> stems;  // vertex ids in the raw switching digraph
    std::vector<std::vector<int>> cycles;
    std::map<int, int> covered;           // state index (0-based) -> covering copy (1-based)

    int covered_states() const { return static_cast<int>(covered.size()); }
};

struct TemporalCactusBound {
    int bound = 0;
    TemporalCactus witness;
};

// Heuristic lower bound on the overall generic dimension: seed a candidate
// copy set from a maximum matching of the pruned concatenated pattern, then
// solve the exact cover restricted to those copies; repeated over randomized
// matching orders, best result kept.
TemporalCactusBound temporal_cactus_lower_bound(const TemporalNetwork& net, int restarts = 8,
                                                std::uint64_t seed = 42);

struct CactusVerdict {
    bool ok = true;
    std::vector<std::string> violations;
    std::map<int, int> recomputed_covered;
};

// Independently re-checks a temporal cactus configuration: edges exist in
// the pruned switching digraph, stems start at inputs, components are
// vertex-disjoint, and the covered map matches the recomputed one (heads of
// non-switching edges only).
CactusVerdict verify_temporal_cactus(const TemporalNetwork& net, const TemporalCactus& candidate);

// max(greedy union bound, largest single-subsystem cover).
int omega_h_lower_bound(const TemporalNetwork& net);

// DOT rendering of the pruned switching digraph, switching edges dashed; an
// optional witness configuration is drawn bold.
std::string switching_digraph_to_dot(const SwitchingDigraph& sw,
                                     const TemporalCactus* witness = nullptr);

} // namespace tempnet
