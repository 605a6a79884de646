#include "tempnet/switched.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "tempnet/cdg.hpp"
#include "tempnet/rng.hpp"

namespace tempnet {

CrpSearchResult crp_min_length_search(const TemporalNetwork& net, int l_max) {
    CrpSearchResult out;
    const int N = net.N();
    if (N < 1)
        return out;
    for (int len = 1; len <= l_max; ++len) {
        int best = 0;
        std::vector<int> path(static_cast<std::size_t>(len), 1);
        while (true) {
            const CrpCheck check = crp_check(net, path);
            best = std::max(best, check.linking_size);
            if (check.passes) {
                // n is the largest possible linking, so this length's best is
                // settled and the lexicographically first hit is the answer
                out.per_length_best.push_back(best);
                out.path = SwitchingPath{path};
                return out;
            }
            int pos = len - 1;
            while (pos >= 0 && path[static_cast<std::size_t>(pos)] == N) {
                path[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0)
                break;
            ++path[static_cast<std::size_t>(pos)];
        }
        out.per_length_best.push_back(best);
    }
    return out;
}

nlohmann::json crp_search_to_json(const CrpSearchResult& r) {
    nlohmann::json out;
    out["found"] = r.path.has_value();
    if (r.path.has_value()) {
        out["witness_path"] = r.path->indices;
        out["min_length_lower_bound"] = static_cast<int>(r.path->indices.size());
    } else {
        out["witness_path"] = nullptr;
        // every shorter length failed the necessary condition
        out["min_length_lower_bound"] = static_cast<int>(r.per_length_best.size()) + 1;
    }
    out["per_length"] = r.per_length_best;
    return out;
}

SwitchedDimResult switched_dim_lower_bound(const TemporalNetwork& net, std::uint64_t budget,
                                           int trials, std::uint64_t seed, double tol) {
    const int N = net.N();
    SwitchedDimResult out;
    if (N < 1 || budget == 0)
        return out;

    std::uint64_t factorial = 1;
    bool fits = true;
    for (int i = 2; i <= N && fits; ++i) {
        if (factorial > budget / static_cast<std::uint64_t>(i))
            fits = false;
        else
            factorial *= static_cast<std::uint64_t>(i);
    }
    out.exhaustive = fits && factorial <= budget;

    auto evaluate = [&](const std::vector<int>& perm) {
        TemporalNetwork permuted;
        permuted.n = net.n;
        for (int i : perm) {
            permuted.pairs.push_back(net.pairs[static_cast<std::size_t>(i - 1)]);
            if (!net.labels.empty())
                permuted.labels.push_back(net.labels[static_cast<std::size_t>(i - 1)]);
        }
        const int value = oracle_gdim_omegabar(permuted, trials, seed, tol).value;
        ++out.permutations_evaluated;
        if (out.best_permutation.empty() || value > out.bound) {
            out.bound = value;
            out.best_permutation = perm;
        }
    };

    std::vector<int> identity(static_cast<std::size_t>(N));
    std::iota(identity.begin(), identity.end(), 1);
    if (out.exhaustive) {
        std::vector<int> perm = identity;
        do {
            evaluate(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        evaluate(identity);
        Rng rng(seed);
        for (std::uint64_t pass = 1; pass < budget; ++pass) {
            std::vector<int> perm = identity;
            rng.shuffle(perm);
            evaluate(perm);
        }
    }
    return out;
}

nlohmann::json switched_dim_to_json(const SwitchedDimResult& r) {
    return nlohmann::json{{"switched_dim_lower_bound", r.bound},
                          {"best_permutation", r.best_permutation},
                          {"permutations_evaluated", r.permutations_evaluated},
                          {"exhaustive", r.exhaustive}};
}

} // namespace tempnet
