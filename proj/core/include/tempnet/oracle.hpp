#pragma once

/**
 * Monte Carlo numeric oracle. Generic dimensions are measured by sampling
 * random realizations and taking the maximum numerical rank over trials
 * (the generic value is attained with probability one, so the max over a
 * few trials realizes it while degenerate samples stay visible in the
 * per-trial list).
 */

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "tempnet/model.hpp"

namespace tempnet {

inline constexpr double kDefaultRankTol = 1e-8;

struct RankReport {
    std::string quantity;
    int value = 0;               // max of per_trial
    int trials = 0;
    std::vector<int> per_trial;
    std::uint64_t seed = 0;
    double tol = kDefaultRankTol;
};

nlohmann::json rank_report_to_json(const RankReport& r);

// e^{A h}; throws NonSquare.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& a, double h);

// [B, AB, ..., A^{n-1}B]; throws NonSquare / NonConformable.
Eigen::MatrixXd controllability_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// Number of singular values above tol * sigma_max; 0 for empty or zero input.
int numeric_rank(const Eigen::MatrixXd& m, double tol = kDefaultRankTol);

// Reachability matrix [C_N, e^{A_N h_N} C_{N-1}, ..., e^{A_N h_N} ... e^{A_2 h_2} C_1].
Eigen::MatrixXd reachability_matrix(const Realization& r);

// [C_N, ..., C_1] (the h -> 0 limit pattern).
Eigen::MatrixXd reachability_matrix_low(const Realization& r);

RankReport oracle_gdim_omega_h(const TemporalNetwork& net, int trials = 5,
                               std::uint64_t seed = 42, double tol = kDefaultRankTol);

RankReport oracle_gdim_clow(const TemporalNetwork& net, int trials = 5,
                            std::uint64_t seed = 42, double tol = kDefaultRankTol);

// Generic dimension of the minimal subspace containing the overall reachable
// set, via the Gamma recursion run for l_0 = N(n-1) steps with per-step
// orthonormal column compression (span-preserving).
RankReport oracle_gdim_omegabar(const TemporalNetwork& net, int trials = 5,
                                std::uint64_t seed = 42, double tol = kDefaultRankTol);

struct EzzineHaddadReport {
    RankReport c_rank;
    RankReport clow_rank;
    std::vector<bool> per_trial_equal;
    bool differs = false; // true when any trial shows c_rank != clow_rank
};

// Side-by-side ranks of the reachability matrix and its h -> 0 variant,
// flagging instances where they differ (possible for N >= 3 only).
EzzineHaddadReport ezzine_haddad_report(const TemporalNetwork& net, int trials = 5,
                                        std::uint64_t seed = 42, double tol = kDefaultRankTol);

nlohmann::json ezzine_haddad_to_json(const EzzineHaddadReport& r);

// Orthonormal basis of the column space of the (path-ordered) reachability
// matrix. Path entries are 1-based subsystem indices; repeated entries reuse
// the realization's duration for that subsystem. Defaults to (1..N).
Eigen::MatrixXd reachable_subspace_basis(const Realization& r,
                                         const std::vector<int>& path = {},
                                         double tol = kDefaultRankTol);

} // namespace tempnet
