#include "tempnet/mdg.hpp"

#include <string>

#include "tempnet/cactus.hpp"

namespace tempnet {

int Mdg::state_vertex_l0(int p) const { return layer_offset_[0] + p; }

int Mdg::input_vertex_l0(int j, int k) const {
    int offset = n;
    for (int t = 1; t < j; ++t)
        offset += m_[static_cast<std::size_t>(t - 1)];
    return layer_offset_[0] + offset + k;
}

int Mdg::state_vertex(int copy, int p, int layer) const {
    return layer_offset_[static_cast<std::size_t>(layer)] + (copy - 1) * n + p;
}

int Mdg::input_vertex(int copy, int t, int k, int layer) const {
    const int N = static_cast<int>(m_.size());
    return layer_offset_[static_cast<std::size_t>(layer)] +
           input_block_[static_cast<std::size_t>((copy - 1) * N + (t - 1))] + k;
}

Mdg build_mdg(const TemporalNetwork& net) {
    const int n = net.n;
    const int N = net.N();
    Mdg mdg;
    mdg.n = n;
    mdg.l0 = N * (n - 1);
    for (const auto& pair : net.pairs)
        mdg.m_.push_back(pair.m());

    // layer-relative offsets of the input blocks: copy j carries the inputs
    // of subsystems t <= j, placed after the N * n state vertices
    mdg.input_block_.assign(static_cast<std::size_t>(N * N), -1);
    int at = N * n;
    for (int copy = 1; copy <= N; ++copy)
        for (int t = 1; t <= copy; ++t) {
            mdg.input_block_[static_cast<std::size_t>((copy - 1) * N + (t - 1))] = at;
            at += mdg.m_[static_cast<std::size_t>(t - 1)];
        }

    // layer 0: merged states plus one input block per subsystem
    mdg.layer_offset_.push_back(0);
    for (int p = 0; p < n; ++p)
        mdg.g.add_vertex({VertexKind::state, 0, p + 1, 0});
    for (int t = 1; t <= N; ++t)
        for (int k = 0; k < mdg.m_[static_cast<std::size_t>(t - 1)]; ++k)
            mdg.g.add_vertex({VertexKind::input, t, k + 1, 0});

    for (int layer = 1; layer <= mdg.l0; ++layer) {
        mdg.layer_offset_.push_back(mdg.g.vertex_count());
        for (int copy = 1; copy <= N; ++copy)
            for (int p = 0; p < n; ++p)
                mdg.g.add_vertex({VertexKind::state, copy, p + 1, layer});
        for (int copy = 1; copy <= N; ++copy)
            for (int t = 1; t <= copy; ++t)
                for (int k = 0; k < mdg.m_[static_cast<std::size_t>(t - 1)]; ++k)
                    mdg.g.add_vertex({VertexKind::input, t, k + 1, layer});
    }

    // within-layer edges: inputs act through their subsystem's B pattern
    for (int t = 1; t <= N; ++t)
        for (const auto& [q, k] : net.pairs[static_cast<std::size_t>(t - 1)].b.nonzeros)
            mdg.g.add_edge(mdg.input_vertex_l0(t, k), mdg.state_vertex_l0(q));
    for (int layer = 1; layer <= mdg.l0; ++layer)
        for (int copy = 1; copy <= N; ++copy)
            for (int t = 1; t <= copy; ++t)
                for (const auto& [q, k] : net.pairs[static_cast<std::size_t>(t - 1)].b.nonzeros)
                    mdg.g.add_edge(mdg.input_vertex(copy, t, k, layer),
                                   mdg.state_vertex(copy, q, layer));

    // between-layer edges: copy k acts through A_k and feeds copies q >= k
    for (int layer = 1; layer <= mdg.l0; ++layer)
        for (int k = 1; k <= N; ++k)
            for (const auto& [p, j] : net.pairs[static_cast<std::size_t>(k - 1)].a.nonzeros) {
                const int from = mdg.state_vertex(k, j, layer);
                if (layer == 1) {
                    const int to = mdg.state_vertex_l0(p);
                    mdg.g.add_edge(from, to);
                    mdg.between_layer_edges.insert({from, to});
                    continue;
                }
                for (int q = k; q <= N; ++q) {
                    const int to = mdg.state_vertex(q, p, layer - 1);
                    mdg.g.add_edge(from, to);
                    mdg.between_layer_edges.insert({from, to});
                }
            }

    for (int t = 1; t <= N; ++t)
        for (int k = 0; k < mdg.m_[static_cast<std::size_t>(t - 1)]; ++k)
            mdg.sources.insert(mdg.input_vertex_l0(t, k));
    for (int layer = 1; layer <= mdg.l0; ++layer)
        for (int copy = 1; copy <= N; ++copy)
            for (int t = 1; t <= copy; ++t)
                for (int k = 0; k < mdg.m_[static_cast<std::size_t>(t - 1)]; ++k)
                    mdg.sources.insert(mdg.input_vertex(copy, t, k, layer));
    for (int p = 0; p < n; ++p)
        mdg.sinks.insert(mdg.state_vertex_l0(p));
    return mdg;
}

MdgBound mdg_upper_bound(const TemporalNetwork& net) {
    const Mdg mdg = build_mdg(net);
    const LinkingResult linking = max_disjoint_linking(mdg.g, mdg.sources, mdg.sinks);
    return {linking.size, linking.witness};
}

NecessaryCheck full_dim_necessary_check(const TemporalNetwork& net) {
    const SwitchingDigraph sw = build_switching_digraph(net);
    const int n = net.n;
    const int N = net.N();
    auto present = [&](int copy, int j) {
        return sw.raw_to_pruned[static_cast<std::size_t>(sw.state_vertex_raw(copy, j))] >= 0;
    };

    int cols = 0;
    for (const auto& pair : net.pairs)
        cols += n + pair.m();
    SparsityPattern concat(n, cols);
    int offset = 0;
    for (int i = 1; i <= N; ++i) {
        const auto& a = net.pairs[static_cast<std::size_t>(i - 1)].a;
        for (const auto& [r, c] : a.nonzeros)
            if (present(i, r) && present(i, c))
                concat.insert(r, offset + c);
        offset += n;
    }
    for (int i = 1; i <= N; ++i) {
        const auto& b = net.pairs[static_cast<std::size_t>(i - 1)].b;
        for (const auto& [r, c] : b.nonzeros)
            concat.insert(r, offset + c);
        offset += b.cols;
    }

    NecessaryCheck out;
    out.grank = generic_rank(concat);
    out.passes = out.grank == n;
    return out;
}

std::string mdg_to_dot(const Mdg& mdg, const Linking* witness) {
    DotOptions opts;
    opts.name = "MDG";
    opts.rank_layers = true;
    opts.dashed_edges = mdg.between_layer_edges;
    if (witness != nullptr) {
        for (const auto& path : witness->paths) {
            for (std::size_t i = 0; i < path.size(); ++i) {
                opts.bold_vertices.insert(path[i]);
                if (i + 1 < path.size())
                    opts.bold_edges.insert({path[i], path[i + 1]});
            }
        }
    }
    return to_dot(mdg.g, opts);
}

} // namespace tempnet
