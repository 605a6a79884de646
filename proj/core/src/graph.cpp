#include "tempnet/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace tempnet {

std::string tag_label(const VertexTag& tag) {
    std::ostringstream out;
    out << (tag.kind == VertexKind::state ? "v" : "u");
    if (tag.subsystem > 0)
        out << "^" << tag.subsystem;
    out << "_" << tag.node;
    if (tag.layer >= 0)
        out << "[" << tag.layer << "]";
    return out.str();
}

int Digraph::add_vertex(const VertexTag& tag) {
    tags_.push_back(tag);
    adj_.emplace_back();
    return vertex_count() - 1;
}

void Digraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    auto& row = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v)
        row.insert(it, v);
}

std::size_t Digraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adj_)
        total += row.size();
    return total;
}

bool Digraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

void BipartiteGraph::add_edge(int l, int r, double w) {
    if (l < 0 || l >= left_size || r < 0 || r >= right_size)
        throw UnknownVertex("bipartite edge endpoint out of range");
    edges.push_back({{l, r}, w});
}

std::set<int> reachable_from(const Digraph& g, const std::set<int>& sources) {
    for (int s : sources)
        g.check_vertex(s);
    std::set<int> seen(sources.begin(), sources.end());
    std::queue<int> frontier;
    for (int s : sources)
        frontier.push(s);
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : g.successors(u))
            if (seen.insert(v).second)
                frontier.push(v);
    }
    return seen;
}

MatchingResult max_matching(const BipartiteGraph& g) {
    const int L = g.left_size;
    const int R = g.right_size;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(L));
    for (const auto& [e, w] : g.edges)
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    const int kInf = std::numeric_limits<int>::max();
    std::vector<int> match_l(static_cast<std::size_t>(L), -1);
    std::vector<int> match_r(static_cast<std::size_t>(R), -1);
    std::vector<int> dist(static_cast<std::size_t>(L));

    auto bfs = [&]() {
        std::queue<int> q;
        for (int u = 0; u < L; ++u) {
            if (match_l[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = 0;
                q.push(u);
            } else {
                dist[static_cast<std::size_t>(u)] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                int w = match_r[static_cast<std::size_t>(v)];
                if (w < 0) {
                    found = true;
                } else if (dist[static_cast<std::size_t>(w)] == kInf) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            int w = match_r[static_cast<std::size_t>(v)];
            if (w < 0 || (dist[static_cast<std::size_t>(w)] ==
                              dist[static_cast<std::size_t>(u)] + 1 &&
                          dfs(w))) {
                match_l[static_cast<std::size_t>(u)] = v;
                match_r[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist[static_cast<std::size_t>(u)] = kInf;
        return false;
    };

    MatchingResult out;
    while (bfs())
        for (int u = 0; u < L; ++u)
            if (match_l[static_cast<std::size_t>(u)] < 0 && dfs(u))
                ++out.size;
    for (int u = 0; u < L; ++u)
        if (match_l[static_cast<std::size_t>(u)] >= 0)
            out.edges.push_back({u, match_l[static_cast<std::size_t>(u)]});
    return out;
}

BipartiteGraph pattern_bipartite(const SparsityPattern& m) {
    BipartiteGraph g(m.rows, m.cols);
    for (const auto& [r, c] : m.nonzeros)
        g.add_edge(r, c);
    return g;
}

int generic_rank(const SparsityPattern& m) {
    return max_matching(pattern_bipartite(m)).size;
}

WeightedMatchingResult max_weighted_matching(const BipartiteGraph& g) {
    for (const auto& [e, w] : g.edges)
        if (w < 0.0)
            throw NegativeWeight("edge weights must be nonnegative");

    // Hungarian algorithm on a square cost matrix, padded with zero-cost
    // cells so that leaving a vertex unmatched is always available.
    const int K = std::max(g.left_size, g.right_size);
    WeightedMatchingResult out;
    if (K == 0)
        return out;
    std::vector<std::vector<double>> cost(static_cast<std::size_t>(K + 1),
                                          std::vector<double>(static_cast<std::size_t>(K + 1), 0.0));
    std::map<std::pair<int, int>, double> weight_of;
    for (const auto& [e, w] : g.edges) {
        auto [it, inserted] = weight_of.try_emplace(e, w);
        if (!inserted)
            it->second = std::max(it->second, w);
        auto& cell = cost[static_cast<std::size_t>(e.first + 1)][static_cast<std::size_t>(e.second + 1)];
        cell = std::min(cell, -w);
    }

    const double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(static_cast<std::size_t>(K + 1), 0.0);
    std::vector<double> v(static_cast<std::size_t>(K + 1), 0.0);
    std::vector<int> p(static_cast<std::size_t>(K + 1), 0);
    std::vector<int> way(static_cast<std::size_t>(K + 1), 0);
    for (int i = 1; i <= K; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(K + 1), kInf);
        std::vector<char> used(static_cast<std::size_t>(K + 1), 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            double delta = kInf;
            int j1 = -1;
            for (int j = 1; j <= K; ++j) {
                if (used[static_cast<std::size_t>(j)])
                    continue;
                const double cur = cost[static_cast<std::size_t>(i0)][static_cast<std::size_t>(j)] -
                                   u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= K; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    for (int j = 1; j <= K; ++j) {
        const int i = p[static_cast<std::size_t>(j)];
        if (i < 1 || i > g.left_size || j > g.right_size)
            continue;
        auto it = weight_of.find({i - 1, j - 1});
        if (it != weight_of.end()) {
            out.edges.push_back({i - 1, j - 1});
            out.weight += it->second;
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

namespace {

// unit-capacity max-flow network used by the Menger reduction
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNetwork(int nodes) : arcs(static_cast<std::size_t>(nodes)) {}

    void add(int from, int to, int cap) {
        arcs[static_cast<std::size_t>(from)].push_back(
            {to, cap, static_cast<int>(arcs[static_cast<std::size_t>(to)].size())});
        arcs[static_cast<std::size_t>(to)].push_back(
            {from, 0, static_cast<int>(arcs[static_cast<std::size_t>(from)].size()) - 1});
    }

    // one BFS augmentation of a single unit; returns false when saturated
    bool augment(int s, int t) {
        const int V = static_cast<int>(arcs.size());
        std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(V), {-1, -1});
        std::vector<char> seen(static_cast<std::size_t>(V), 0);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty() && !seen[static_cast<std::size_t>(t)]) {
            int u = q.front();
            q.pop();
            for (int k = 0; k < static_cast<int>(arcs[static_cast<std::size_t>(u)].size()); ++k) {
                const Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
                if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    parent[static_cast<std::size_t>(a.to)] = {u, k};
                    q.push(a.to);
                }
            }
        }
        if (!seen[static_cast<std::size_t>(t)])
            return false;
        int v = t;
        while (v != s) {
            auto [u, k] = parent[static_cast<std::size_t>(v)];
            Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
            a.cap -= 1;
            arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
            v = u;
        }
        return true;
    }
};

} // namespace

LinkingResult max_disjoint_linking(const Digraph& g, const std::set<int>& sources,
                                   const std::set<int>& sinks) {
    for (int s : sources)
        g.check_vertex(s);
    for (int t : sinks)
        g.check_vertex(t);

    // vertex split: v_in = 2v, v_out = 2v + 1; super source S, super sink T
    const int V = g.vertex_count();
    const int S = 2 * V;
    const int T = 2 * V + 1;
    FlowNetwork net(2 * V + 2);
    for (int v = 0; v < V; ++v)
        net.add(2 * v, 2 * v + 1, 1);
    for (int u = 0; u < V; ++u)
        for (int v : g.successors(u))
            net.add(2 * u + 1, 2 * v, 1);
    for (int s : sources)
        net.add(S, 2 * s, 1);
    for (int t : sinks)
        net.add(2 * t + 1, T, 1);

    LinkingResult out;
    while (net.augment(S, T))
        ++out.size;

    // decode: follow saturated arcs from each used source
    auto flow_successor = [&](int out_node) {
        for (const auto& a : net.arcs[static_cast<std::size_t>(out_node)])
            if (a.to != out_node - 1 && a.cap == 0 && (a.to % 2 == 0 || a.to == T)) {
                // a saturated forward arc out of an out-vertex
                if (a.to == T || g.has_edge(out_node / 2, a.to / 2))
                    return a.to;
            }
        return -1;
    };
    for (const auto& a : net.arcs[static_cast<std::size_t>(S)]) {
        if (a.cap != 0)
            continue; // source arc unused
        std::vector<int> path;
        int node = a.to; // an in-vertex
        while (true) {
            path.push_back(node / 2);
            const int next = flow_successor(node + 1);
            if (next == T || next < 0)
                break;
            // consume the arc so parallel paths cannot reuse it
            for (auto& arc : net.arcs[static_cast<std::size_t>(node + 1)])
                if (arc.to == next && arc.cap == 0) {
                    arc.cap = -1;
                    break;
                }
            node = next;
        }
        out.witness.paths.push_back(std::move(path));
    }
    return out;
}

namespace {

void append_edge(std::ostringstream& out, int u, int v, const DotOptions& opts) {
    out << "  n" << u << " -> n" << v;
    const bool dashed = opts.dashed_edges.count({u, v}) != 0;
    const bool bold = opts.bold_edges.count({u, v}) != 0;
    if (dashed && bold)
        out << " [style=\"dashed,bold\"]";
    else if (dashed)
        out << " [style=dashed]";
    else if (bold)
        out << " [style=bold]";
    out << ";\n";
}

} // namespace

std::string to_dot(const Digraph& g, const DotOptions& opts) {
    std::ostringstream out;
    out << "digraph " << opts.name << " {\n";
    out << "  rankdir=LR;\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  n" << v << " [label=\"" << tag_label(g.tag(v)) << "\"";
        if (opts.bold_vertices.count(v) != 0)
            out << ", style=bold";
        out << "];\n";
    }
    if (opts.rank_layers) {
        std::map<int, std::vector<int>> by_layer;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.tag(v).layer >= 0)
                by_layer[g.tag(v).layer].push_back(v);
        for (const auto& [layer, vs] : by_layer) {
            out << "  { rank=same;";
            for (int v : vs)
                out << " n" << v << ";";
            out << " }\n";
        }
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.successors(u))
            append_edge(out, u, v, opts);
    out << "}\n";
    return out.str();
}

std::string to_dot(const BipartiteGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    for (int l = 0; l < g.left_size; ++l)
        out << "  l" << l << " [label=\"r" << (l + 1) << "\"];\n";
    for (int r = 0; r < g.right_size; ++r)
        out << "  r" << r << " [label=\"c" << (r + 1) << "\"];\n";
    out << "  { rank=same;";
    for (int l = 0; l < g.left_size; ++l)
        out << " l" << l << ";";
    out << " }\n";
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& [e, w] : g.edges)
        edges.push_back(e);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [l, r] : edges)
        out << "  l" << l << " -> r" << r << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace tempnet
