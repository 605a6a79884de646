#include "tempnet/cdg.hpp"

#include <algorithm>
#include <string>

namespace tempnet {

SystemDigraph build_system_digraph(const StructuredPair& pair, int subsystem_index) {
    SystemDigraph out;
    out.subsystem = subsystem_index;
    out.n = pair.n();
    out.m = pair.m();
    for (int j = 0; j < out.n; ++j)
        out.g.add_vertex({VertexKind::state, subsystem_index, j + 1, -1});
    for (int k = 0; k < out.m; ++k)
        out.g.add_vertex({VertexKind::input, subsystem_index, k + 1, -1});
    for (const auto& [r, c] : pair.a.nonzeros)
        out.g.add_edge(out.state_vertex(c), out.state_vertex(r));
    for (const auto& [r, c] : pair.b.nonzeros)
        out.g.add_edge(out.input_vertex(c), out.state_vertex(r));
    return out;
}

int Cdg::state_vertex(int i, int j, int t) const {
    return block_offset_[static_cast<std::size_t>(i - 1)] + (t - 1) * n + (j - 1);
}

int Cdg::input_vertex(int i, int k, int t) const {
    return block_offset_[static_cast<std::size_t>(i - 1)] + n * n +
           t * m[static_cast<std::size_t>(i - 1)] + (k - 1);
}

namespace {

// Reachability closure of each state in G(A) (length 0 included), used for
// the cross edges between consecutive subsystem blocks.
std::vector<std::set<int>> state_reachability(const SparsityPattern& a) {
    Digraph g;
    for (int j = 0; j < a.rows; ++j)
        g.add_vertex({VertexKind::state, 0, j + 1, -1});
    for (const auto& [r, c] : a.nonzeros)
        g.add_edge(c, r);
    std::vector<std::set<int>> out;
    for (int j = 0; j < a.rows; ++j)
        out.push_back(reachable_from(g, {j}));
    return out;
}

} // namespace

struct CdgBuilder {
    static Cdg build(const TemporalNetwork& net, bool self_pairs_only);
};

Cdg CdgBuilder::build(const TemporalNetwork& net, bool self_pairs_only) {
    const int n = net.n;
    const int N = net.N();
    Cdg cdg;
    cdg.n = n;
    for (const auto& pair : net.pairs)
        cdg.m.push_back(pair.m());

    for (int i = 1; i <= N; ++i) {
        cdg.block_offset_.push_back(cdg.g.vertex_count());
        for (int t = 1; t <= n; ++t)
            for (int j = 1; j <= n; ++j)
                cdg.g.add_vertex({VertexKind::state, i, j, t});
        const int mi = cdg.m[static_cast<std::size_t>(i - 1)];
        for (int t = 0; t <= n - 1; ++t)
            for (int k = 1; k <= mi; ++k)
                cdg.g.add_vertex({VertexKind::input, i, k, t});
    }

    for (int i = 1; i <= N; ++i) {
        const auto& pair = net.pairs[static_cast<std::size_t>(i - 1)];
        for (const auto& [r, c] : pair.a.nonzeros)
            for (int t = 1; t <= n - 1; ++t)
                cdg.g.add_edge(cdg.state_vertex(i, c + 1, t), cdg.state_vertex(i, r + 1, t + 1));
        for (const auto& [r, c] : pair.b.nonzeros)
            for (int t = 0; t <= n - 1; ++t)
                cdg.g.add_edge(cdg.input_vertex(i, c + 1, t), cdg.state_vertex(i, r + 1, t + 1));
        for (int t = 0; t <= n - 1; ++t)
            for (int k = 1; k <= cdg.m[static_cast<std::size_t>(i - 1)]; ++k)
                cdg.sources.insert(cdg.input_vertex(i, k, t));
    }

    for (int i = 2; i <= N; ++i) {
        const auto reach = state_reachability(net.pairs[static_cast<std::size_t>(i - 1)].a);
        for (int k = 1; k <= n; ++k) {
            const int from = cdg.state_vertex(i - 1, k, n);
            if (self_pairs_only) {
                const int to = cdg.state_vertex(i, k, n);
                cdg.g.add_edge(from, to);
                cdg.cross_edges.insert({from, to});
                continue;
            }
            for (int j : reach[static_cast<std::size_t>(k - 1)]) {
                const int to = cdg.state_vertex(i, j + 1, n);
                cdg.g.add_edge(from, to);
                cdg.cross_edges.insert({from, to});
            }
        }
    }

    for (int j = 1; j <= n; ++j)
        cdg.sinks.insert(cdg.state_vertex(N, j, n));
    return cdg;
}

Cdg build_cdg(const TemporalNetwork& net) { return CdgBuilder::build(net, false); }

CdgBound cdg_upper_bound(const TemporalNetwork& net) {
    const Cdg cdg = build_cdg(net);
    const LinkingResult linking = max_disjoint_linking(cdg.g, cdg.sources, cdg.sinks);
    CdgBound out;
    out.bound = linking.size;
    out.witness = linking.witness;
    if (net.N() == 2) {
        const Cdg refined = CdgBuilder::build(net, true);
        const LinkingResult alt = max_disjoint_linking(refined.g, refined.sources, refined.sinks);
        out.bound_n2_refined = std::min(out.bound, alt.size);
    }
    return out;
}

Cdg build_cdg_for_path(const TemporalNetwork& net, const std::vector<int>& path) {
    if (path.empty())
        throw BadIndex("switching path must have length >= 1");
    TemporalNetwork seq;
    seq.n = net.n;
    for (int i : path) {
        if (i < 1 || i > net.N())
            throw BadIndex("path entry " + std::to_string(i) + " outside [1, " +
                           std::to_string(net.N()) + "]");
        seq.pairs.push_back(net.pairs[static_cast<std::size_t>(i - 1)]);
        if (!net.labels.empty())
            seq.labels.push_back(net.labels[static_cast<std::size_t>(i - 1)]);
    }
    return build_cdg(seq);
}

CrpCheck crp_check(const TemporalNetwork& net, const std::vector<int>& path) {
    const Cdg cdg = build_cdg_for_path(net, path);
    CrpCheck out;
    out.linking_size = max_disjoint_linking(cdg.g, cdg.sources, cdg.sinks).size;
    out.passes = out.linking_size == net.n;
    return out;
}

std::string cdg_to_dot(const Cdg& cdg, const Linking* witness) {
    DotOptions opts;
    opts.name = "CDG";
    opts.rank_layers = true;
    opts.dashed_edges = cdg.cross_edges;
    if (witness != nullptr) {
        for (const auto& path : witness->paths) {
            for (std::size_t i = 0; i < path.size(); ++i) {
                opts.bold_vertices.insert(path[i]);
                if (i + 1 < path.size())
                    opts.bold_edges.insert({path[i], path[i + 1]});
            }
        }
    }
    return to_dot(cdg.g, opts);
}

} // namespace tempnet
