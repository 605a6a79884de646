#pragma once

/**
 * Multi-layer dynamic graph (MDG): l_0 = N(n-1) layers above a merged layer
 * 0 encode the recursion Gamma_{ij} = A_j [Gamma_{i-1,1}, ..., Gamma_{i-1,j}]
 * whose accumulated column space is the minimal subspace containing the
 * overall reachable set. The maximum linking from the input vertices to the
 * layer-0 states upper-bounds its generic dimension.
 */

#include <set>
#include <vector>

#include "tempnet/graph.hpp"
#include "tempnet/model.hpp"

namespace tempnet {

struct Mdg {
    Digraph g;
    int n = 0;
    int l0 = 0;                 // number of layers above layer 0
    std::set<int> sources;      // all input vertices, every layer
    std::set<int> sinks;        // merged layer-0 state vertices
    std::set<std::pair<int, int>> between_layer_edges;

    // layer 0 accessors
    int state_vertex_l0(int p) const;          // p in [0, n)
    int input_vertex_l0(int j, int k) const;   // subsystem j (1-based), k in [0, m_j)
    // layers i >= 1
    int state_vertex(int copy, int p, int layer) const;          // copy 1-based, p in [0, n)
    int input_vertex(int copy, int t, int k, int layer) const;   // inputs of subsystem t <= copy

  private:
    friend Mdg build_mdg(const TemporalNetwork& net);
    std::vector<int> m_;
    std::vector<int> layer_offset_;
    std::vector<int> input_block_;  // per copy, offset of subsystem t's inputs
};

Mdg build_mdg(const TemporalNetwork& net);

struct MdgBound {
    int bound = 0;
    Linking witness;
};

MdgBound mdg_upper_bound(const TemporalNetwork& net);

struct NecessaryCheck {
    bool passes = false;
    int grank = 0;
};

// Necessary condition for the overall generic dimension to reach n: the
// concatenation [A'_1, ..., A'_N, B_1, ..., B_N] has generic rank n, where
// A'_i zeroes rows and columns of input-unreachable vertices.
NecessaryCheck full_dim_necessary_check(const TemporalNetwork& net);

// DOT rendering with layers ranked and between-layer edges dashed.
std::string mdg_to_dot(const Mdg& mdg, const Linking* witness = nullptr);

} // namespace tempnet
