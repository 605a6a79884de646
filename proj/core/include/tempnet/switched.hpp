#pragma once

/**
 * Switched-system applications: minimal switching-path search for realizing
 * a full-dimensional reachable subspace (the linking condition is necessary,
 * so the found length lower-bounds the true one), and a lower bound on the
 * switched controllable-subspace generic dimension via subsystem
 * permutations.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tempnet/model.hpp"
#include "tempnet/oracle.hpp"

namespace tempnet {

struct SwitchingPath {
    std::vector<int> indices; // 1-based subsystem indices, length >= 1
};

struct CrpSearchResult {
    std::optional<SwitchingPath> path;      // shortest passing path, if any
    std::vector<int> per_length_best;       // best linking size per length 1..examined
};

// Breadth-first over lengths, lexicographic within a length; stops at the
// first path whose CDG linking reaches n.
CrpSearchResult crp_min_length_search(const TemporalNetwork& net, int l_max);

nlohmann::json crp_search_to_json(const CrpSearchResult& r);

struct SwitchedDimResult {
    int bound = 0;
    std::vector<int> best_permutation;  // 1-based subsystem order
    int permutations_evaluated = 0;
    bool exhaustive = false;
};

// max over evaluated permutations sigma of the overall-dimension oracle on
// the permuted network; all N! permutations when N! <= budget, otherwise
// `budget` seeded random permutations.
SwitchedDimResult switched_dim_lower_bound(const TemporalNetwork& net, std::uint64_t budget,
                                           int trials = 5, std::uint64_t seed = 42,
                                           double tol = kDefaultRankTol);

nlohmann::json switched_dim_to_json(const SwitchedDimResult& r);

} // namespace tempnet
