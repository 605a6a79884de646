#include "tempnet/model.hpp"

#include <algorithm>

#include "tempnet/rng.hpp"

namespace tempnet {

SparsityPattern SparsityPattern::identity_columns(int n, const std::vector<int>& support) {
    SparsityPattern p(n, static_cast<int>(support.size()));
    for (int c = 0; c < p.cols; ++c)
        p.insert(support[static_cast<std::size_t>(c)], c);
    return p;
}

SparsityPattern hcat(const SparsityPattern& lhs, const SparsityPattern& rhs) {
    if (lhs.rows != rhs.rows)
        throw NonConformable("hcat: row counts differ");
    SparsityPattern out(lhs.rows, lhs.cols + rhs.cols);
    out.nonzeros = lhs.nonzeros;
    for (const auto& [r, c] : rhs.nonzeros)
        out.nonzeros.insert({r, lhs.cols + c});
    return out;
}

TargetSpec TargetSpec::from_one_based(const std::vector<int>& idx) {
    TargetSpec t;
    for (int i : idx)
        t.target.insert(i - 1);
    return t;
}

namespace {

void check_pattern(const SparsityPattern& p, const std::string& what, int pair_index,
                   ValidationResult& out) {
    for (const auto& [r, c] : p.nonzeros) {
        if (r < 0 || r >= p.rows || c < 0 || c >= p.cols) {
            out.ok = false;
            out.violations.push_back("pair " + std::to_string(pair_index + 1) + ": " + what +
                                     " nonzero (" + std::to_string(r + 1) + "," +
                                     std::to_string(c + 1) + ") out of bounds");
        }
    }
}

} // namespace

ValidationResult validate_network(const TemporalNetwork& net) {
    ValidationResult out;
    if (net.N() < 1) {
        out.ok = false;
        out.violations.push_back("N >= 1 required");
        return out;
    }
    if (net.n < 1) {
        out.ok = false;
        out.violations.push_back("state dimension n >= 1 required");
    }
    if (!net.labels.empty() && static_cast<int>(net.labels.size()) != net.N()) {
        out.ok = false;
        out.violations.push_back("labels must be empty or one per subsystem");
    }
    for (int i = 0; i < net.N(); ++i) {
        const StructuredPair& p = net.pairs[static_cast<std::size_t>(i)];
        if (p.a.rows != p.a.cols) {
            out.ok = false;
            out.violations.push_back("pair " + std::to_string(i + 1) + ": A not square");
        }
        if (p.a.rows != net.n) {
            out.ok = false;
            out.violations.push_back("pair " + std::to_string(i + 1) + ": state dim " +
                                     std::to_string(p.a.rows) + " != " + std::to_string(net.n));
        }
        if (p.b.rows != p.a.rows) {
            out.ok = false;
            out.violations.push_back("pair " + std::to_string(i + 1) +
                                     ": B row count differs from A");
        }
        if (p.b.cols < 0) {
            out.ok = false;
            out.violations.push_back("pair " + std::to_string(i + 1) + ": negative input count");
        }
        check_pattern(p.a, "A", i, out);
        check_pattern(p.b, "B", i, out);
    }
    return out;
}

TemporalNetwork reverse_temporal_order(const TemporalNetwork& net) {
    TemporalNetwork out = net;
    std::reverse(out.pairs.begin(), out.pairs.end());
    std::reverse(out.labels.begin(), out.labels.end());
    return out;
}

TemporalNetwork augment_dedicated_inputs(const TemporalNetwork& net) {
    // S_i = actuated states of B_i, in column order
    std::vector<std::vector<int>> supports;
    supports.reserve(static_cast<std::size_t>(net.N()));
    for (int i = 0; i < net.N(); ++i) {
        const SparsityPattern& b = net.pairs[static_cast<std::size_t>(i)].b;
        std::vector<int> rows_by_col(static_cast<std::size_t>(b.cols), -1);
        std::vector<int> hits(static_cast<std::size_t>(b.cols), 0);
        for (const auto& [r, c] : b.nonzeros) {
            ++hits[static_cast<std::size_t>(c)];
            rows_by_col[static_cast<std::size_t>(c)] = r;
        }
        for (int c = 0; c < b.cols; ++c) {
            if (hits[static_cast<std::size_t>(c)] != 1)
                throw NotDedicated("pair " + std::to_string(i + 1) + ": column " +
                                   std::to_string(c + 1) + " has " +
                                   std::to_string(hits[static_cast<std::size_t>(c)]) +
                                   " nonzeros, expected 1");
        }
        supports.push_back(std::move(rows_by_col));
    }

    TemporalNetwork out = net;
    for (int k = 0; k < net.N(); ++k) {
        SparsityPattern b(net.n, 0);
        for (int i = 0; i <= k; ++i)
            b = hcat(b, SparsityPattern::identity_columns(net.n, supports[static_cast<std::size_t>(i)]));
        out.pairs[static_cast<std::size_t>(k)].b = std::move(b);
    }
    return out;
}

Realization sample_realization(const TemporalNetwork& net, std::uint64_t seed,
                               Interval value_range, Interval duration_range) {
    Rng rng(seed);
    Realization r;
    r.phi_seed = seed;
    r.a_mats.reserve(static_cast<std::size_t>(net.N()));
    r.b_mats.reserve(static_cast<std::size_t>(net.N()));
    auto draw = [&]() {
        double mag = rng.uniform(value_range.lo, value_range.hi);
        return rng.coin() ? mag : -mag;
    };
    for (const StructuredPair& p : net.pairs) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(p.a.rows, p.a.cols);
        for (const auto& [row, col] : p.a.nonzeros)
            a(row, col) = draw();
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(p.b.rows, p.b.cols);
        for (const auto& [row, col] : p.b.nonzeros)
            b(row, col) = draw();
        r.a_mats.push_back(std::move(a));
        r.b_mats.push_back(std::move(b));
    }
    r.durations.reserve(static_cast<std::size_t>(net.N()));
    for (int i = 0; i < net.N(); ++i)
        r.durations.push_back(rng.uniform(duration_range.lo, duration_range.hi));
    return r;
}

TemporalNetwork stcp_embedding(const StructuredPair& pair, const TargetSpec& target, int N) {
    const int n = pair.n();
    for (int j : target.target)
        if (j < 0 || j >= n)
            throw BadIndex("target state " + std::to_string(j + 1) + " outside [1, " +
                           std::to_string(n) + "]");
    std::vector<int> complement;
    for (int j = 0; j < n; ++j)
        if (target.target.count(j) == 0)
            complement.push_back(j);
    const int c = static_cast<int>(complement.size());
    if (N < 2 || N > c + 1)
        throw BadN("N must lie in [2, n - |T| + 1] = [2, " + std::to_string(c + 1) + "], got " +
                   std::to_string(N));

    TemporalNetwork out;
    out.n = n;
    out.pairs.push_back(pair);

    // contiguous partition of the complement into N-1 nonempty runs
    const int parts = N - 1;
    const int base = c / parts;
    const int rem = c % parts;
    int pos = 0;
    for (int p = 0; p < parts; ++p) {
        const int len = base + (p < rem ? 1 : 0);
        std::vector<int> chunk(complement.begin() + pos, complement.begin() + pos + len);
        pos += len;
        StructuredPair sp;
        sp.a = SparsityPattern::zero(n, n);
        sp.b = SparsityPattern::identity_columns(n, chunk);
        out.pairs.push_back(std::move(sp));
    }
    return out;
}

} // namespace tempnet
