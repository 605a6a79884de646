#pragma once

/**
 * Independent reference implementations used as test oracles. Everything in
 * here favors obviousness over speed: structures are enumerated exhaustively
 * and matrices are materialized densely, so results are only trusted on
 * small instances. Enumeration limits are reported through `feasible` flags
 * or empty optionals instead of silently truncating.
 *
 * Nothing in this namespace may call the bound or cover routines under test;
 * the only library code reused is the model layer (patterns, realizations)
 * and the rank tolerance convention.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tempnet/model.hpp"

namespace bruteforce {

// Matrix exponential of a*h via scaling and squaring of a plain Taylor sum,
// independent of the Pade-based implementation under test.
Eigen::MatrixXd expm_taylor(const Eigen::MatrixXd& a, double h);

// [B, AB, ..., A^{n-1}B], materialized locally.
Eigen::MatrixXd ctrb(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// Dense block-row matrix [A_N^{jN} A_{N-1}^{j(N-1)} ... A_k^{jk} B_k] over
// k = 1..N with every exponent ranging independently over 0..n-1. Its rank
// equals the dimension of the minimal subspace containing the overall
// reachable set.
Eigen::MatrixXd explicit_omegabar_matrix(const tempnet::Realization& r);

// Reachability matrix of a switching path (1-based subsystem indices),
// materialized directly with expm_taylor; repeated subsystems reuse the
// realization's duration for that subsystem.
Eigen::MatrixXd explicit_path_matrix(const tempnet::Realization& r, const std::vector<int>& path);

// Count of singular values above tol * sigma_max, recomputed locally.
int svd_rank(const Eigen::MatrixXd& m, double tol = 1e-8);

// Exhaustive cactus-cover search on a small digraph. A stem is a simple path
// starting at a root vertex; a cycle is a closed walk with distinct
// vertices; a family is a vertex-disjoint collection of stems and cycles.
// The head of every family edge outside `non_covering` marks the head's
// cover class; the objective is the number of distinct classes marked.
struct CoverProblem {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> roots;
    std::vector<int> cover_class;                // per vertex; -1 never counts
    std::set<std::pair<int, int>> non_covering;  // heads of these stay uncovered
    bool collect_sets = false;                   // gather maximal class masks
    std::size_t structure_limit = 50000;
    std::size_t family_limit = 4000000;
};

struct CoverOutcome {
    bool feasible = false;
    int best = 0;
    std::vector<std::uint64_t> maximal_sets;  // populated when collect_sets
};

CoverOutcome enumerate_covers(const CoverProblem& p);

// Maximum plain cactus cover of a structured pair, counting covered states
// inside `allowed` (0-based); the input-reachability requirement is enforced
// by restricting the digraph before enumeration.
std::optional<int> pair_cover_max(const tempnet::StructuredPair& pair, const std::set<int>& allowed);

// All maximal state sets (bitmasks over 0..n-1) coverable by a cactus
// configuration in the pair's digraph.
std::optional<std::vector<std::uint64_t>> pair_cover_sets(const tempnet::StructuredPair& pair);

// Optimum of the union problem behind the greedy heuristic: each subsystem
// contributes one coverable set and the union size is maximized.
std::optional<int> union_problem_opt(const tempnet::TemporalNetwork& net);

// Maximum state set coverable by a temporal cactus configuration on the
// input-reachable part of the switching digraph (states counted once no
// matter which copy covers them; switching-edge heads never count).
std::optional<int> temporal_cover_max(const tempnet::TemporalNetwork& net);

// Maximum number of vertex-disjoint source-to-sink paths, found by
// enumerating every simple path and searching disjoint families. A vertex
// lying in both sets contributes a zero-length path.
std::optional<int> max_linking_brute(int vertex_count,
                                     const std::vector<std::pair<int, int>>& edges,
                                     const std::set<int>& sources, const std::set<int>& sinks,
                                     std::size_t path_limit = 20000);

} // namespace bruteforce
