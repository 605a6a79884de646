#pragma once

/**
 * Temporal network model: zero-nonzero sparsity patterns for subsystem pairs
 * (A_i, B_i), ordered lists of such pairs, numeric realizations sampled from
 * them, and the structural transformations used by the bound machinery.
 *
 * Indexing is 0-based internally; JSON I/O and printed labels are 1-based.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tempnet/errors.hpp"

namespace tempnet {

struct SparsityPattern {
    int rows = 0;
    int cols = 0;
    std::set<std::pair<int, int>> nonzeros; // (row, col), 0-based

    SparsityPattern() = default;
    SparsityPattern(int r, int c) : rows(r), cols(c) {}

    static SparsityPattern zero(int r, int c) { return SparsityPattern(r, c); }

    // Columns of the n x n identity indexed by `support` (in the given order
    // identity columns are placed left to right).
    static SparsityPattern identity_columns(int n, const std::vector<int>& support);

    bool has(int r, int c) const { return nonzeros.count({r, c}) != 0; }

    void insert(int r, int c) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw BadIndex("nonzero position out of bounds");
        nonzeros.insert({r, c});
    }

    bool empty() const { return cols == 0 || nonzeros.empty(); }
};

// Horizontal concatenation [lhs, rhs]; row counts must agree.
SparsityPattern hcat(const SparsityPattern& lhs, const SparsityPattern& rhs);

struct StructuredPair {
    SparsityPattern a; // n x n
    SparsityPattern b; // n x m, m >= 0

    int n() const { return a.rows; }
    int m() const { return b.cols; }
};

struct TemporalNetwork {
    int n = 0;
    std::vector<StructuredPair> pairs;  // temporal order: index 0 active first
    std::vector<std::string> labels;    // optional, empty or one per pair

    int N() const { return static_cast<int>(pairs.size()); }
};

struct Realization {
    std::vector<Eigen::MatrixXd> a_mats;
    std::vector<Eigen::MatrixXd> b_mats;
    std::vector<double> durations;
    std::uint64_t phi_seed = 0;

    int n() const { return a_mats.empty() ? 0 : static_cast<int>(a_mats[0].rows()); }
    int N() const { return static_cast<int>(a_mats.size()); }
};

struct TargetSpec {
    std::set<int> target; // 0-based state indices

    static TargetSpec from_one_based(const std::vector<int>& idx);
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationResult validate_network(const TemporalNetwork& net);

// Reverses the activation order; applying twice is the identity.
TemporalNetwork reverse_temporal_order(const TemporalNetwork& net);

// For dedicated-input networks (every B_i column actuates exactly one state),
// replaces B_k by the column blocks [I_{S_1}, ..., I_{S_k}] with fresh
// independent nonzeros. Throws NotDedicated otherwise.
TemporalNetwork augment_dedicated_inputs(const TemporalNetwork& net);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Samples a numeric realization of the pattern. Nonzero magnitudes are drawn
// uniformly from value_range with an independent fair sign flip (default
// support [-1,-0.1] u [0.1,1]); durations uniformly from duration_range.
// Deterministic given the seed.
Realization sample_realization(const TemporalNetwork& net, std::uint64_t seed,
                               Interval value_range = {0.1, 1.0},
                               Interval duration_range = {0.5, 1.5});

// Embedding of a target-controllability instance into a temporal network:
// subsystem 1 is `pair`; subsystems 2..N have A = 0 and B = identity columns
// over a contiguous partition of the complement of the target set. Throws
// BadN when N is outside [2, n - |T| + 1].
TemporalNetwork stcp_embedding(const StructuredPair& pair, const TargetSpec& target, int N);

} // namespace tempnet
