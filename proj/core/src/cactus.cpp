#include "tempnet/cactus.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "tempnet/cdg.hpp"
#include "tempnet/rng.hpp"

namespace tempnet {

namespace {

// Residual network for a min-cost circulation solved by canceling negative
// cycles (Bellman-Ford). Unit costs and capacities keep this exact.
class Circulation {
  public:
    explicit Circulation(int nodes) : arcs_(static_cast<std::size_t>(nodes)) {}

    int add(int from, int to, int cap, int cost) {
        arcs_[static_cast<std::size_t>(from)].push_back(
            {to, cap, cost, static_cast<int>(arcs_[static_cast<std::size_t>(to)].size())});
        arcs_[static_cast<std::size_t>(to)].push_back(
            {from, 0, -cost, static_cast<int>(arcs_[static_cast<std::size_t>(from)].size()) - 1});
        return static_cast<int>(arcs_[static_cast<std::size_t>(from)].size()) - 1;
    }

    int flow(int from, int handle) const {
        const Arc& a = arcs_[static_cast<std::size_t>(from)][static_cast<std::size_t>(handle)];
        return arcs_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap;
    }

    void consume(int from, int handle) {
        const Arc& a = arcs_[static_cast<std::size_t>(from)][static_cast<std::size_t>(handle)];
        arcs_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap -= 1;
    }

    void minimize() {
        while (cancel_one()) {
        }
    }

  private:
    struct Arc {
        int to;
        int cap;
        int cost;
        int rev;
    };

    bool cancel_one() {
        const int V = static_cast<int>(arcs_.size());
        std::vector<long long> dist(static_cast<std::size_t>(V), 0);
        std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(V), {-1, -1});
        int last_updated = -1;
        for (int iter = 0; iter < V; ++iter) {
            last_updated = -1;
            for (int u = 0; u < V; ++u) {
                const auto& row = arcs_[static_cast<std::size_t>(u)];
                for (int k = 0; k < static_cast<int>(row.size()); ++k) {
                    const Arc& a = row[static_cast<std::size_t>(k)];
                    if (a.cap > 0 && dist[static_cast<std::size_t>(u)] + a.cost <
                                         dist[static_cast<std::size_t>(a.to)]) {
                        dist[static_cast<std::size_t>(a.to)] =
                            dist[static_cast<std::size_t>(u)] + a.cost;
                        parent[static_cast<std::size_t>(a.to)] = {u, k};
                        last_updated = a.to;
                    }
                }
            }
            if (last_updated < 0)
                return false;
        }
        // a vertex updated in round V sits downstream of a negative cycle;
        // V parent hops land inside it
        int x = last_updated;
        for (int i = 0; i < V; ++i)
            x = parent[static_cast<std::size_t>(x)].first;
        std::vector<std::pair<int, int>> cycle;
        long long cost = 0;
        int delta = std::numeric_limits<int>::max();
        int cur = x;
        do {
            const auto [pu, pk] = parent[static_cast<std::size_t>(cur)];
            const Arc& a = arcs_[static_cast<std::size_t>(pu)][static_cast<std::size_t>(pk)];
            cycle.push_back({pu, pk});
            cost += a.cost;
            delta = std::min(delta, a.cap);
            cur = pu;
        } while (cur != x);
        if (cost >= 0 || delta <= 0)
            return false;
        for (const auto& [u, k] : cycle) {
            Arc& a = arcs_[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
            a.cap -= delta;
            arcs_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += delta;
        }
        return true;
    }

    std::vector<std::vector<Arc>> arcs_;
};

struct RootedCover {
    std::vector<std::vector<int>> stems;  // vertex id sequences, root first
    std::vector<std::vector<int>> cycles;
    std::set<int> covered_allowed;        // heads of counted covering edges
};

// Exact maximum rooted cover: vertex-disjoint stems (paths starting at the
// given roots) and cycles maximizing the number of edge heads that lie in
// `allowed_heads` and are entered over a covering edge (one not listed in
// `non_covering`). Reduction: split every input-reachable vertex with unit
// capacity, give counted edge arcs cost -1, and take a min-cost circulation
// (source -> root, anywhere -> sink, sink -> source return arc).
RootedCover max_rooted_cover(const Digraph& g, const std::set<int>& roots,
                             const std::set<int>& allowed_heads,
                             const std::set<std::pair<int, int>>& non_covering) {
    const std::set<int> reach = reachable_from(g, roots);
    std::vector<int> verts(reach.begin(), reach.end());
    std::map<int, int> idx;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        idx[verts[static_cast<std::size_t>(i)]] = i;

    const int V = static_cast<int>(verts.size());
    const int S = 2 * V;
    const int T = 2 * V + 1;
    Circulation net(2 * V + 2);

    struct EdgeArc {
        int handle;
        int head;     // original vertex id
        bool counted;
    };
    std::vector<int> split(static_cast<std::size_t>(V));
    std::vector<std::vector<EdgeArc>> out_edges(static_cast<std::size_t>(V));
    std::map<int, int> root_arc; // original root id -> handle at S

    for (int i = 0; i < V; ++i)
        split[static_cast<std::size_t>(i)] = net.add(2 * i, 2 * i + 1, 1, 0);
    for (int r : roots)
        root_arc[r] = net.add(S, 2 * idx[r], 1, 0);
    for (int i = 0; i < V; ++i) {
        const int u = verts[static_cast<std::size_t>(i)];
        for (int v : g.successors(u)) {
            auto it = idx.find(v);
            if (it == idx.end())
                continue;
            const bool counted =
                allowed_heads.count(v) != 0 && non_covering.count({u, v}) == 0;
            const int h = net.add(2 * i + 1, 2 * it->second, 1, counted ? -1 : 0);
            out_edges[static_cast<std::size_t>(i)].push_back({h, v, counted});
        }
        net.add(2 * i + 1, T, 1, 0);
    }
    net.add(T, S, V + 2, 0);
    net.minimize();

    RootedCover out;
    std::vector<char> done(static_cast<std::size_t>(V), 0);
    // one unit crosses each vertex at most once, so the flowing out-arc is
    // unique; consuming it as we walk keeps the decode linear
    auto step = [&](int i) -> const EdgeArc* {
        for (const auto& e : out_edges[static_cast<std::size_t>(i)])
            if (net.flow(2 * i + 1, e.handle) > 0) {
                net.consume(2 * i + 1, e.handle);
                if (e.counted)
                    out.covered_allowed.insert(e.head);
                return &e;
            }
        return nullptr;
    };

    for (const auto& [r, h] : root_arc) {
        if (net.flow(S, h) == 0)
            continue;
        std::vector<int> path{r};
        int cur = idx[r];
        done[static_cast<std::size_t>(cur)] = 1;
        while (const EdgeArc* e = step(cur)) {
            path.push_back(e->head);
            cur = idx[e->head];
            done[static_cast<std::size_t>(cur)] = 1;
        }
        out.stems.push_back(std::move(path));
    }
    for (int i = 0; i < V; ++i) {
        if (done[static_cast<std::size_t>(i)] || net.flow(2 * i, split[static_cast<std::size_t>(i)]) == 0)
            continue;
        std::vector<int> cyc;
        int cur = i;
        do {
            cyc.push_back(verts[static_cast<std::size_t>(cur)]);
            done[static_cast<std::size_t>(cur)] = 1;
            const EdgeArc* e = step(cur);
            if (e == nullptr)
                break;
            cur = idx[e->head];
        } while (cur != i);
        out.cycles.push_back(std::move(cyc));
    }
    return out;
}

// true when some non-root vertex of the component carries a counted head
bool contributes(const std::vector<int>& component, bool is_stem, const std::set<int>& covered) {
    for (std::size_t i = is_stem ? 1 : 0; i < component.size(); ++i)
        if (covered.count(component[i]) != 0)
            return true;
    return false;
}

} // namespace

CactusCover max_cactus_cover(const StructuredPair& pair, const std::set<int>& allowed) {
    const SystemDigraph sys = build_system_digraph(pair, 1);
    std::set<int> roots;
    for (int k = 0; k < sys.m; ++k)
        roots.insert(sys.input_vertex(k));
    RootedCover rc = max_rooted_cover(sys.g, roots, allowed, {});

    CactusCover out;
    out.covered = rc.covered_allowed; // state vertex ids coincide with state indices
    for (auto& s : rc.stems)
        if (contributes(s, true, rc.covered_allowed))
            out.stems.push_back(std::move(s));
    for (auto& c : rc.cycles)
        if (contributes(c, false, rc.covered_allowed))
            out.cycles.push_back(std::move(c));
    return out;
}

GreedyUnionResult greedy_union_lower_bound(const TemporalNetwork& net) {
    GreedyUnionResult out;
    std::set<int> remaining;
    for (int j = 0; j < net.n; ++j)
        remaining.insert(j);
    std::vector<int> candidates;
    for (int i = 1; i <= net.N(); ++i)
        candidates.push_back(i);

    bool progressed = true;
    while (!candidates.empty() && progressed) {
        int best_i = -1;
        std::set<int> best_cover;
        for (int i : candidates) {
            std::set<int> cover =
                max_cactus_cover(net.pairs[static_cast<std::size_t>(i - 1)], remaining).covered;
            if (best_i < 0 || cover.size() > best_cover.size()) {
                best_i = i;
                best_cover = std::move(cover);
            }
        }
        progressed = !best_cover.empty();
        out.bound += static_cast<int>(best_cover.size());
        for (int v : best_cover)
            remaining.erase(v);
        out.step_covers.push_back(std::move(best_cover));
        out.picked_subsystems.push_back(best_i);
        candidates.erase(std::find(candidates.begin(), candidates.end(), best_i));
    }
    return out;
}

GuaranteeValues greedy_guarantee(int N, int opt_size, int first_pick_size) {
    if (N < 2)
        throw BadN("guarantee values need N >= 2, got " + std::to_string(N));
    GuaranteeValues out;
    out.ratio_bound =
        static_cast<double>(2 * N - 3) / static_cast<double>(N * (N - 1)) * opt_size;
    for (int t = 0; t <= N - 2; ++t) {
        double coef = static_cast<double>(N - t - 1) / static_cast<double>(N - 1) - t;
        for (int j = 1; j <= t; ++j)
            coef += static_cast<double>(N - t - 1) / static_cast<double>(N - j);
        out.f.push_back(static_cast<double>(t) / static_cast<double>(N - 1) * opt_size +
                        coef * first_pick_size);
    }
    return out;
}

int SwitchingDigraph::state_vertex_raw(int i, int j) const {
    return block_offset_[static_cast<std::size_t>(i - 1)] + j;
}

int SwitchingDigraph::input_vertex_raw(int i, int k) const {
    return block_offset_[static_cast<std::size_t>(i - 1)] + n + k;
}

SwitchingDigraph build_switching_digraph(const TemporalNetwork& net) {
    const int n = net.n;
    const int N = net.N();
    SwitchingDigraph sw;
    sw.n = n;
    for (const auto& pair : net.pairs)
        sw.m.push_back(pair.m());

    for (int i = 1; i <= N; ++i) {
        sw.block_offset_.push_back(sw.raw.vertex_count());
        for (int j = 1; j <= n; ++j)
            sw.raw.add_vertex({VertexKind::state, i, j, -1});
        for (int k = 1; k <= sw.m[static_cast<std::size_t>(i - 1)]; ++k)
            sw.raw.add_vertex({VertexKind::input, i, k, -1});
    }
    for (int i = 1; i <= N; ++i) {
        const auto& pair = net.pairs[static_cast<std::size_t>(i - 1)];
        for (const auto& [r, c] : pair.a.nonzeros)
            sw.raw.add_edge(sw.state_vertex_raw(i, c), sw.state_vertex_raw(i, r));
        for (const auto& [r, c] : pair.b.nonzeros)
            sw.raw.add_edge(sw.input_vertex_raw(i, c), sw.state_vertex_raw(i, r));
    }
    // switching edges connect every copy of a state to all later copies
    for (int j = 0; j < n; ++j)
        for (int i = 1; i <= N; ++i)
            for (int k = i + 1; k <= N; ++k) {
                const int from = sw.state_vertex_raw(i, j);
                const int to = sw.state_vertex_raw(k, j);
                sw.raw.add_edge(from, to);
                sw.switching_edges.insert({from, to});
            }

    std::set<int> inputs;
    for (int i = 1; i <= N; ++i)
        for (int k = 0; k < sw.m[static_cast<std::size_t>(i - 1)]; ++k)
            inputs.insert(sw.input_vertex_raw(i, k));
    const std::set<int> reach = reachable_from(sw.raw, inputs);

    sw.raw_to_pruned.assign(static_cast<std::size_t>(sw.raw.vertex_count()), -1);
    for (int v : reach) {
        sw.raw_to_pruned[static_cast<std::size_t>(v)] = sw.pruned.add_vertex(sw.raw.tag(v));
        sw.pruned_to_raw.push_back(v);
    }
    for (int u : reach) {
        const int pu = sw.raw_to_pruned[static_cast<std::size_t>(u)];
        for (int v : sw.raw.successors(u)) {
            const int pv = sw.raw_to_pruned[static_cast<std::size_t>(v)];
            if (pv < 0)
                continue;
            sw.pruned.add_edge(pu, pv);
            if (sw.switching_edges.count({u, v}) != 0)
                sw.switching_edges_pruned.insert({pu, pv});
        }
    }
    return sw;
}

namespace {

// Heads of the component's covering (non-switching) edges, in traversal order.
std::vector<int> covering_heads(const std::vector<int>& component, bool closed,
                                const std::set<std::pair<int, int>>& switching) {
    std::vector<int> heads;
    if (component.empty())
        return heads;
    const std::size_t edges = closed ? component.size() : component.size() - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        const int u = component[i];
        const int v = component[(i + 1) % component.size()];
        if (switching.count({u, v}) == 0)
            heads.push_back(v);
    }
    return heads;
}

// Canonical witness: components kept in traversal order when they add at
// least one state not covered yet; the map records the first covering copy.
TemporalCactus canonicalize(const SwitchingDigraph& sw, const RootedCover& rc) {
    TemporalCactus out;
    auto to_raw = [&](const std::vector<int>& seq) {
        std::vector<int> raw;
        raw.reserve(seq.size());
        for (int v : seq)
            raw.push_back(sw.pruned_to_raw[static_cast<std::size_t>(v)]);
        return raw;
    };
    auto absorb = [&](const std::vector<int>& component, bool closed) {
        const auto heads = covering_heads(component, closed, sw.switching_edges_pruned);
        bool added = false;
        std::map<int, int> updates;
        for (int h : heads) {
            const VertexTag& tag = sw.pruned.tag(h);
            if (out.covered.count(tag.node - 1) == 0 &&
                updates.try_emplace(tag.node - 1, tag.subsystem).second)
                added = true;
        }
        if (!added)
            return;
        out.covered.insert(updates.begin(), updates.end());
        if (closed)
            out.cycles.push_back(to_raw(component));
        else
            out.stems.push_back(to_raw(component));
    };
    for (const auto& s : rc.stems)
        absorb(s, false);
    for (const auto& c : rc.cycles)
        absorb(c, true);
    return out;
}

} // namespace

TemporalCactusBound temporal_cactus_lower_bound(const TemporalNetwork& net, int restarts,
                                                std::uint64_t seed) {
    const SwitchingDigraph sw = build_switching_digraph(net);
    const int n = net.n;
    const int N = net.N();

    auto present = [&](int copy, int j) {
        return sw.raw_to_pruned[static_cast<std::size_t>(sw.state_vertex_raw(copy, j))] >= 0;
    };

    // columns of the pruned concatenated pattern [A'_1..A'_N, B_1..B_N]
    struct Col {
        int copy;
        bool is_b;
        int col;
    };
    std::vector<Col> cols;
    std::vector<std::pair<int, int>> entries; // (row, column index)
    for (int i = 1; i <= N; ++i)
        for (int c = 0; c < n; ++c)
            cols.push_back({i, false, c});
    for (int i = 1; i <= N; ++i)
        for (int c = 0; c < sw.m[static_cast<std::size_t>(i - 1)]; ++c)
            cols.push_back({i, true, c});
    for (int ci = 0; ci < static_cast<int>(cols.size()); ++ci) {
        const Col& col = cols[static_cast<std::size_t>(ci)];
        const auto& pair = net.pairs[static_cast<std::size_t>(col.copy - 1)];
        const SparsityPattern& pat = col.is_b ? pair.b : pair.a;
        for (int r = 0; r < n; ++r) {
            if (!pat.has(r, col.col) || !present(col.copy, r))
                continue;
            if (!col.is_b && !present(col.copy, col.col))
                continue;
            entries.push_back({r, ci});
        }
    }

    std::set<int> roots;
    for (int i = 1; i <= N; ++i)
        for (int k = 0; k < sw.m[static_cast<std::size_t>(i - 1)]; ++k)
            roots.insert(sw.raw_to_pruned[static_cast<std::size_t>(sw.input_vertex_raw(i, k))]);

    TemporalCactusBound best;
    const int passes = std::max(restarts, 1);
    for (int pass = 0; pass < passes; ++pass) {
        std::vector<int> row_perm(static_cast<std::size_t>(n));
        std::vector<int> col_perm(cols.size());
        for (int r = 0; r < n; ++r)
            row_perm[static_cast<std::size_t>(r)] = r;
        for (int c = 0; c < static_cast<int>(cols.size()); ++c)
            col_perm[static_cast<std::size_t>(c)] = c;
        if (pass > 0) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(pass)));
            rng.shuffle(row_perm);
            rng.shuffle(col_perm);
        }
        std::vector<int> inv_row(static_cast<std::size_t>(n));
        std::vector<int> inv_col(cols.size());
        for (int r = 0; r < n; ++r)
            inv_row[static_cast<std::size_t>(row_perm[static_cast<std::size_t>(r)])] = r;
        for (int c = 0; c < static_cast<int>(cols.size()); ++c)
            inv_col[static_cast<std::size_t>(col_perm[static_cast<std::size_t>(c)])] = c;

        BipartiteGraph b(n, static_cast<int>(cols.size()));
        for (const auto& [r, ci] : entries)
            b.add_edge(row_perm[static_cast<std::size_t>(r)],
                       col_perm[static_cast<std::size_t>(ci)]);

        // matched (state, column) entries nominate one copy per state
        std::set<int> allowed;
        for (const auto& [l, rr] : max_matching(b).edges) {
            const int r = inv_row[static_cast<std::size_t>(l)];
            const Col& col = cols[static_cast<std::size_t>(inv_col[static_cast<std::size_t>(rr)])];
            allowed.insert(
                sw.raw_to_pruned[static_cast<std::size_t>(sw.state_vertex_raw(col.copy, r))]);
        }

        const RootedCover rc =
            max_rooted_cover(sw.pruned, roots, allowed, sw.switching_edges_pruned);
        TemporalCactus cand = canonicalize(sw, rc);
        if (cand.covered_states() > best.bound) {
            best.bound = cand.covered_states();
            best.witness = std::move(cand);
        }
    }
    return best;
}

CactusVerdict verify_temporal_cactus(const TemporalNetwork& net, const TemporalCactus& candidate) {
    const SwitchingDigraph sw = build_switching_digraph(net);
    CactusVerdict verdict;
    auto fail = [&](std::string msg) {
        verdict.ok = false;
        verdict.violations.push_back(std::move(msg));
    };

    std::set<int> used;
    auto check_component = [&](const std::vector<int>& component, bool closed, std::size_t index) {
        const std::string what = closed ? "cycle " : "stem ";
        if (component.empty()) {
            fail(what + std::to_string(index + 1) + " is empty");
            return false;
        }
        for (int v : component) {
            if (v < 0 || v >= sw.raw.vertex_count()) {
                fail(what + std::to_string(index + 1) + ": vertex id " + std::to_string(v) +
                     " out of range");
                return false;
            }
            if (sw.raw_to_pruned[static_cast<std::size_t>(v)] < 0)
                fail(what + std::to_string(index + 1) + ": vertex " + tag_label(sw.raw.tag(v)) +
                     " is not input-reachable");
            if (!used.insert(v).second)
                fail(what + std::to_string(index + 1) + ": vertex " + tag_label(sw.raw.tag(v)) +
                     " appears in more than one position");
        }
        if (!closed && sw.raw.tag(component.front()).kind != VertexKind::input)
            fail(what + std::to_string(index + 1) + " does not start at an input vertex");
        const std::size_t edges = closed ? component.size() : component.size() - 1;
        for (std::size_t i = 0; i < edges; ++i) {
            const int u = component[i];
            const int v = component[(i + 1) % component.size()];
            if (!sw.raw.has_edge(u, v))
                fail(what + std::to_string(index + 1) + ": missing edge " +
                     tag_label(sw.raw.tag(u)) + " -> " + tag_label(sw.raw.tag(v)));
        }
        return true;
    };

    std::vector<std::pair<const std::vector<int>*, bool>> components;
    for (std::size_t i = 0; i < candidate.stems.size(); ++i)
        if (check_component(candidate.stems[i], false, i))
            components.push_back({&candidate.stems[i], false});
    for (std::size_t i = 0; i < candidate.cycles.size(); ++i)
        if (check_component(candidate.cycles[i], true, i))
            components.push_back({&candidate.cycles[i], true});

    for (const auto& [component, closed] : components)
        for (int h : covering_heads(*component, closed, sw.switching_edges)) {
            const VertexTag& tag = sw.raw.tag(h);
            if (tag.kind == VertexKind::state)
                verdict.recomputed_covered.try_emplace(tag.node - 1, tag.subsystem);
        }
    if (verdict.ok && verdict.recomputed_covered != candidate.covered)
        fail("covered map does not match the recomputed covering heads");
    return verdict;
}

int omega_h_lower_bound(const TemporalNetwork& net) {
    int best = greedy_union_lower_bound(net).bound;
    std::set<int> all_states;
    for (int j = 0; j < net.n; ++j)
        all_states.insert(j);
    for (const auto& pair : net.pairs)
        best = std::max(best,
                        static_cast<int>(max_cactus_cover(pair, all_states).covered.size()));
    return best;
}

std::string switching_digraph_to_dot(const SwitchingDigraph& sw, const TemporalCactus* witness) {
    DotOptions opts;
    opts.name = "SW";
    opts.dashed_edges = sw.switching_edges_pruned;
    if (witness != nullptr) {
        auto mark = [&](const std::vector<int>& component, bool closed) {
            if (component.empty())
                return;
            std::vector<int> pruned;
            for (int v : component) {
                if (v < 0 || v >= static_cast<int>(sw.raw_to_pruned.size()))
                    return;
                const int p = sw.raw_to_pruned[static_cast<std::size_t>(v)];
                if (p < 0)
                    return;
                pruned.push_back(p);
            }
            const std::size_t edges = closed ? pruned.size() : pruned.size() - 1;
            for (std::size_t i = 0; i < pruned.size(); ++i)
                opts.bold_vertices.insert(pruned[i]);
            for (std::size_t i = 0; i < edges; ++i)
                opts.bold_edges.insert({pruned[i], pruned[(i + 1) % pruned.size()]});
        };
        for (const auto& s : witness->stems)
            mark(s, false);
        for (const auto& c : witness->cycles)
            mark(c, true);
    }
    return to_dot(sw.pruned, opts);
}

} // namespace tempnet
