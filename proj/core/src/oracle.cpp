#include "tempnet/oracle.hpp"

#include <algorithm>
#include <functional>

#include <nlohmann/json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "tempnet/errors.hpp"
#include "tempnet/rng.hpp"

namespace tempnet {

namespace {

Eigen::MatrixXd hcat_blocks(const std::vector<Eigen::MatrixXd>& blocks, int rows) {
    Eigen::Index cols = 0;
    for (const auto& b : blocks)
        cols += b.cols();
    Eigen::MatrixXd out(rows, cols);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    return out;
}

// Orthonormal basis of the column space, with the same relative singular
// value cutoff as numeric_rank. `noise_floor` is an absolute lower cutoff:
// a block whose entries are rounding residue of earlier compressions would
// otherwise be normalized into a spurious unit direction, since the relative
// cutoff is measured against the residue itself.
Eigen::MatrixXd orth_basis(const Eigen::MatrixXd& m, double tol, double noise_floor = 0.0) {
    if (m.size() == 0)
        return Eigen::MatrixXd(m.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = std::max(tol * sv(0), noise_floor);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff && sv(rank) > 0.0)
        ++rank;
    return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXd absorb(const Eigen::MatrixXd& basis, const Eigen::MatrixXd& extra, double tol) {
    if (extra.cols() == 0)
        return basis;
    return orth_basis(hcat_blocks({basis, extra}, static_cast<int>(basis.rows())), tol);
}

RankReport run_trials(const TemporalNetwork& net, const std::string& quantity, int trials,
                      std::uint64_t seed, double tol,
                      const std::function<int(const Realization&)>& measure) {
    RankReport report;
    report.quantity = quantity;
    report.trials = trials;
    report.seed = seed;
    report.tol = tol;
    for (int t = 0; t < trials; ++t) {
        const Realization r = sample_realization(net, derive_seed(seed, static_cast<std::uint64_t>(t)));
        report.per_trial.push_back(measure(r));
    }
    report.value = report.per_trial.empty()
                       ? 0
                       : *std::max_element(report.per_trial.begin(), report.per_trial.end());
    return report;
}

} // namespace

nlohmann::json rank_report_to_json(const RankReport& r) {
    return nlohmann::json{{"quantity", r.quantity}, {"value", r.value},   {"trials", r.trials},
                          {"per_trial", r.per_trial}, {"seed", r.seed},    {"tol", r.tol}};
}

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& a, double h) {
    if (a.rows() != a.cols())
        throw NonSquare("matrix exponential needs a square matrix");
    return (a * h).exp();
}

Eigen::MatrixXd controllability_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != a.cols())
        throw NonSquare("controllability matrix needs a square A");
    if (b.rows() != a.rows())
        throw NonConformable("B row count does not match A");
    const Eigen::Index n = a.rows();
    const Eigen::Index m = b.cols();
    Eigen::MatrixXd out(n, n * m);
    Eigen::MatrixXd cur = b;
    for (Eigen::Index j = 0; j < n; ++j) {
        out.middleCols(j * m, m) = cur;
        cur = a * cur;
    }
    return out;
}

int numeric_rank(const Eigen::MatrixXd& m, double tol) {
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0)
        return 0;
    const double cutoff = tol * sv(0);
    int rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff)
        ++rank;
    return rank;
}

namespace {

Eigen::MatrixXd path_reachability_matrix(const Realization& r, const std::vector<int>& path) {
    const int n = r.n();
    std::vector<Eigen::MatrixXd> blocks;
    Eigen::MatrixXd prefix = Eigen::MatrixXd::Identity(n, n);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const std::size_t k = static_cast<std::size_t>(*it - 1);
        blocks.push_back(prefix * controllability_matrix(r.a_mats[k], r.b_mats[k]));
        prefix *= matrix_exponential(r.a_mats[k], r.durations[k]);
    }
    return hcat_blocks(blocks, n);
}

std::vector<int> default_path(int N) {
    std::vector<int> path(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        path[static_cast<std::size_t>(i)] = i + 1;
    return path;
}

} // namespace

Eigen::MatrixXd reachability_matrix(const Realization& r) {
    return path_reachability_matrix(r, default_path(r.N()));
}

Eigen::MatrixXd reachability_matrix_low(const Realization& r) {
    const int n = r.n();
    std::vector<Eigen::MatrixXd> blocks;
    for (int k = r.N(); k >= 1; --k)
        blocks.push_back(controllability_matrix(r.a_mats[static_cast<std::size_t>(k - 1)],
                                                r.b_mats[static_cast<std::size_t>(k - 1)]));
    return hcat_blocks(blocks, n);
}

RankReport oracle_gdim_omega_h(const TemporalNetwork& net, int trials, std::uint64_t seed,
                               double tol) {
    return run_trials(net, "gdim_omega_h", trials, seed, tol, [&](const Realization& r) {
        return numeric_rank(reachability_matrix(r), tol);
    });
}

RankReport oracle_gdim_clow(const TemporalNetwork& net, int trials, std::uint64_t seed,
                            double tol) {
    return run_trials(net, "gdim_clow", trials, seed, tol, [&](const Realization& r) {
        return numeric_rank(reachability_matrix_low(r), tol);
    });
}

RankReport oracle_gdim_omegabar(const TemporalNetwork& net, int trials, std::uint64_t seed,
                                double tol) {
    const int n = net.n;
    const int N = net.N();
    const int steps = N * (n - 1);
    return run_trials(net, "gdim_omegabar", trials, seed, tol, [&](const Realization& r) {
        // Gamma recursion with per-step compression: reps[j] spans the columns
        // of Gamma_{i,j+1}; the accumulator spans everything emitted so far.
        std::vector<Eigen::MatrixXd> reps;
        Eigen::MatrixXd acc(n, 0);
        for (int j = 0; j < N; ++j) {
            reps.push_back(orth_basis(r.b_mats[static_cast<std::size_t>(j)], tol));
            acc = absorb(acc, reps.back(), tol);
        }
        for (int i = 1; i <= steps; ++i) {
            std::vector<Eigen::MatrixXd> next;
            Eigen::MatrixXd prefix(n, 0);
            for (int j = 0; j < N; ++j) {
                prefix = absorb(prefix, reps[static_cast<std::size_t>(j)], tol);
                const Eigen::MatrixXd& a = r.a_mats[static_cast<std::size_t>(j)];
                // prefix is orthonormal, so tol * ||A_j|| separates genuine
                // directions of A_j * prefix from compression residue.
                next.push_back(orth_basis(a * prefix, tol, tol * a.norm()));
                acc = absorb(acc, next.back(), tol);
            }
            reps = std::move(next);
        }
        return static_cast<int>(acc.cols());
    });
}

EzzineHaddadReport ezzine_haddad_report(const TemporalNetwork& net, int trials,
                                        std::uint64_t seed, double tol) {
    EzzineHaddadReport out;
    out.c_rank.quantity = "rank_c";
    out.clow_rank.quantity = "rank_clow";
    for (RankReport* r : {&out.c_rank, &out.clow_rank}) {
        r->trials = trials;
        r->seed = seed;
        r->tol = tol;
    }
    for (int t = 0; t < trials; ++t) {
        const Realization r = sample_realization(net, derive_seed(seed, static_cast<std::uint64_t>(t)));
        const int rc = numeric_rank(reachability_matrix(r), tol);
        const int rlow = numeric_rank(reachability_matrix_low(r), tol);
        out.c_rank.per_trial.push_back(rc);
        out.clow_rank.per_trial.push_back(rlow);
        out.per_trial_equal.push_back(rc == rlow);
        if (rc != rlow)
            out.differs = true;
    }
    auto max_of = [](const std::vector<int>& v) {
        return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
    };
    out.c_rank.value = max_of(out.c_rank.per_trial);
    out.clow_rank.value = max_of(out.clow_rank.per_trial);
    return out;
}

nlohmann::json ezzine_haddad_to_json(const EzzineHaddadReport& r) {
    return nlohmann::json{{"c", rank_report_to_json(r.c_rank)},
                          {"c_low", rank_report_to_json(r.clow_rank)},
                          {"per_trial_equal", r.per_trial_equal},
                          {"differs", r.differs}};
}

Eigen::MatrixXd reachable_subspace_basis(const Realization& r, const std::vector<int>& path,
                                         double tol) {
    std::vector<int> p = path.empty() ? default_path(r.N()) : path;
    for (int i : p)
        if (i < 1 || i > r.N())
            throw BadIndex("path entry " + std::to_string(i) + " outside [1, " +
                           std::to_string(r.N()) + "]");
    return orth_basis(path_reachability_matrix(r, p), tol);
}

} // namespace tempnet
