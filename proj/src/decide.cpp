#include "eden/decide.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace eden {

SoficPresentation determinize(const SoficPresentation& s) {
    SoficPresentation out;
    out.alphabet = s.alphabet;
    if (s.empty()) return out;

    SubsetAutomaton run(s.vertex_count, s.edges, s.alphabet.size());
    out.vertex_count = run.state_count();
    for (int st = 0; st < run.state_count(); ++st)
        for (const auto& [sym, to] : run.transitions(st)) out.edges.push_back({st, to, sym});
    std::sort(out.edges.begin(), out.edges.end());

    // Trim to the states on bi-infinite paths; the presented subshift is
    // unchanged.
    std::vector<bool> alive(static_cast<size_t>(out.vertex_count), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> indeg(static_cast<size_t>(out.vertex_count), 0),
            outdeg(static_cast<size_t>(out.vertex_count), 0);
        for (const Edge& e : out.edges)
            if (alive[static_cast<size_t>(e.src)] && alive[static_cast<size_t>(e.dst)]) {
                ++outdeg[static_cast<size_t>(e.src)];
                ++indeg[static_cast<size_t>(e.dst)];
            }
        for (int v = 0; v < out.vertex_count; ++v)
            if (alive[static_cast<size_t>(v)] &&
                (indeg[static_cast<size_t>(v)] == 0 || outdeg[static_cast<size_t>(v)] == 0)) {
                alive[static_cast<size_t>(v)] = false;
                changed = true;
            }
    }
    SoficPresentation trimmed;
    trimmed.alphabet = out.alphabet;
    std::vector<int> remap(static_cast<size_t>(out.vertex_count), -1);
    for (int v = 0; v < out.vertex_count; ++v)
        if (alive[static_cast<size_t>(v)]) remap[static_cast<size_t>(v)] = trimmed.vertex_count++;
    for (const Edge& e : out.edges) {
        int a = remap[static_cast<size_t>(e.src)], b = remap[static_cast<size_t>(e.dst)];
        if (a >= 0 && b >= 0) trimmed.edges.push_back({a, b, e.sym});
    }
    return trimmed;
}

ContainmentResult subshift_contains(const SoficPresentation& s1, const SoficPresentation& s2) {
    ContainmentResult result;
    if (s1.empty()) return result;
    if (s2.empty()) {
        result.contained = false;
        // Shortest witness: the lex-least single symbol read by s1.
        Symbol best = -1;
        for (const Edge& e : s1.edges) best = best < 0 ? e.sym : std::min(best, e.sym);
        result.counterexample = {best};
        return result;
    }

    SubsetAutomaton tracker(s2.vertex_count, s2.edges, s2.alphabet.size());

    std::vector<std::vector<const Edge*>> succ(static_cast<size_t>(s1.vertex_count));
    for (const Edge& e : s1.edges) succ[static_cast<size_t>(e.src)].push_back(&e);

    // Shortest-lex search over product states (s1 vertex, tracker state).
    // The frontier is ordered by (length, word); items sharing a word are
    // expanded together so the sink symbol chosen is the least one.
    struct Item {
        Word word;
        int v1;
        int state;
        bool operator<(const Item& o) const {
            if (word.size() != o.word.size()) return word.size() < o.word.size();
            if (word != o.word) return word < o.word;
            if (v1 != o.v1) return v1 < o.v1;
            return state < o.state;
        }
    };
    std::set<Item> frontier;
    std::set<std::pair<int, int>> visited;
    for (int v = 0; v < s1.vertex_count; ++v) {
        frontier.insert({{}, v, tracker.start()});
        visited.insert({v, tracker.start()});
    }
    while (!frontier.empty()) {
        std::vector<Item> batch{*frontier.begin()};
        frontier.erase(frontier.begin());
        while (!frontier.empty() && frontier.begin()->word == batch.front().word) {
            batch.push_back(*frontier.begin());
            frontier.erase(frontier.begin());
        }
        Symbol sink_sym = -1;
        for (const Item& cur : batch)
            for (const Edge* e : succ[static_cast<size_t>(cur.v1)])
                if (tracker.step(cur.state, e->sym) < 0 && (sink_sym < 0 || e->sym < sink_sym))
                    sink_sym = e->sym;
        if (sink_sym >= 0) {
            result.contained = false;
            result.counterexample = batch.front().word;
            result.counterexample.push_back(sink_sym);
            return result;
        }
        for (const Item& cur : batch) {
            for (const Edge* e : succ[static_cast<size_t>(cur.v1)]) {
                int nxt = tracker.step(cur.state, e->sym);
                if (visited.insert({e->dst, nxt}).second) {
                    Word w = cur.word;
                    w.push_back(e->sym);
                    frontier.insert({std::move(w), e->dst, nxt});
                }
            }
        }
    }
    return result;
}

namespace {

double entropy_of_sofic(const SoficPresentation& s) {
    if (s.empty()) throw Error("entropy: empty presentation");
    EdgePresentation p;
    p.alphabet = s.alphabet;
    p.step = 1;
    p.vertex_words.assign(static_cast<size_t>(s.vertex_count), Word{});
    p.edges = s.edges;
    std::sort(p.edges.begin(), p.edges.end());
    return entropy(p).value;
}

// ---- pair graph -----------------------------------------------------------

struct PairGraph {
    const SoficPresentation* base = nullptr;
    std::vector<std::pair<int, int>> verts;   // sorted
    struct PEdge {
        int src, dst;   // indices into verts
        int e1, e2;     // indices into base->edges
    };
    std::vector<PEdge> edges;

    int id_of(std::pair<int, int> v) const {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || *it != v) return -1;
        return static_cast<int>(it - verts.begin());
    }
    bool diagonal(int id) const {
        return verts[static_cast<size_t>(id)].first == verts[static_cast<size_t>(id)].second;
    }
};

PairGraph build_pair_graph(const SoficPresentation& base) {
    PairGraph g;
    g.base = &base;
    std::set<std::pair<int, int>> verts;
    std::vector<std::vector<int>> by_label(static_cast<size_t>(base.alphabet.size()));
    for (size_t i = 0; i < base.edges.size(); ++i)
        by_label[static_cast<size_t>(base.edges[i].sym)].push_back(static_cast<int>(i));

    std::vector<std::tuple<std::pair<int, int>, std::pair<int, int>, int, int>> raw_edges;
    for (const auto& group : by_label)
        for (int i : group)
            for (int j : group) {
                const Edge& a = base.edges[static_cast<size_t>(i)];
                const Edge& b = base.edges[static_cast<size_t>(j)];
                verts.insert({a.src, b.src});
                verts.insert({a.dst, b.dst});
                raw_edges.emplace_back(std::make_pair(a.src, b.src), std::make_pair(a.dst, b.dst),
                                       i, j);
            }
    g.verts.assign(verts.begin(), verts.end());
    for (const auto& [s, d, e1, e2] : raw_edges)
        g.edges.push_back({g.id_of(s), g.id_of(d), e1, e2});
    std::sort(g.edges.begin(), g.edges.end(), [](const PairGraph::PEdge& a, const PairGraph::PEdge& b) {
        return std::tie(a.src, a.dst, a.e1, a.e2) < std::tie(b.src, b.dst, b.e1, b.e2);
    });
    return g;
}

PairGraph trim_pair_graph(const PairGraph& g) {
    std::vector<bool> alive(g.verts.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> indeg(g.verts.size(), 0), outdeg(g.verts.size(), 0);
        for (const auto& e : g.edges)
            if (alive[static_cast<size_t>(e.src)] && alive[static_cast<size_t>(e.dst)]) {
                ++outdeg[static_cast<size_t>(e.src)];
                ++indeg[static_cast<size_t>(e.dst)];
            }
        for (size_t v = 0; v < g.verts.size(); ++v)
            if (alive[v] && (indeg[v] == 0 || outdeg[v] == 0)) {
                alive[v] = false;
                changed = true;
            }
    }
    PairGraph out;
    out.base = g.base;
    std::vector<int> remap(g.verts.size(), -1);
    for (size_t v = 0; v < g.verts.size(); ++v)
        if (alive[v]) {
            remap[v] = static_cast<int>(out.verts.size());
            out.verts.push_back(g.verts[v]);
        }
    for (const auto& e : g.edges) {
        int a = remap[static_cast<size_t>(e.src)], b = remap[static_cast<size_t>(e.dst)];
        if (a >= 0 && b >= 0) out.edges.push_back({a, b, e.e1, e.e2});
    }
    return out;
}

// The new source symbol contributed by a base edge (last symbol of its
// source word).
Symbol source_symbol(const SoficPresentation& base, int edge_index) {
    return base.edge_words.at(static_cast<size_t>(edge_index)).back();
}

struct PairPathParts {
    std::vector<int> left_cycle;    // base-edge index pairs flattened below
    std::vector<int> left_cycle2;
    std::vector<int> bridge1, bridge2;
    std::vector<int> right_cycle1, right_cycle2;
};

// Assemble the witness pair from pair-edge sequences. Each list holds
// pair-graph edges; the x side reads e1, the y side e2. Offsets put the
// first bridge symbol at coordinate 0.
WitnessPair assemble_witness(const SoficPresentation& base,
                             const std::vector<PairGraph::PEdge>& left_cycle,
                             const std::vector<PairGraph::PEdge>& bridge,
                             const std::vector<PairGraph::PEdge>& right_cycle) {
    WitnessPair w;
    auto build = [&](auto pick) {
        EpConfig c;
        for (const auto& e : left_cycle) c.left.push_back(source_symbol(base, pick(e)));
        for (const auto& e : bridge) c.bridge.push_back(source_symbol(base, pick(e)));
        for (const auto& e : right_cycle) c.right.push_back(source_symbol(base, pick(e)));
        c.offset = 0;
        return c;
    };
    w.x = build([](const PairGraph::PEdge& e) { return e.e1; });
    w.y = build([](const PairGraph::PEdge& e) { return e.e2; });
    return w;
}

// Deterministic successor/predecessor edge lists of a pair graph.
struct PairAdjacency {
    std::vector<std::vector<int>> out_edges, in_edges;   // edge indices
    explicit PairAdjacency(const PairGraph& g)
        : out_edges(g.verts.size()), in_edges(g.verts.size()) {
        for (size_t i = 0; i < g.edges.size(); ++i) {
            out_edges[static_cast<size_t>(g.edges[i].src)].push_back(static_cast<int>(i));
            in_edges[static_cast<size_t>(g.edges[i].dst)].push_back(static_cast<int>(i));
        }
    }
};

// Recurrent pair vertices (inside a strongly connected subgraph with an edge).
std::vector<bool> recurrent_flags(const PairGraph& g) {
    // Tarjan on the pair graph, iterative.
    const int n = static_cast<int>(g.verts.size());
    std::vector<std::vector<int>> succ(static_cast<size_t>(n));
    for (const auto& e : g.edges) succ[static_cast<size_t>(e.src)].push_back(e.dst);

    std::vector<int> comp(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        num(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    std::vector<bool> on_stack(static_cast<size_t>(n), false);
    int counter = 0, comp_count = 0;
    struct Frame {
        int v;
        size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (num[static_cast<size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        num[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto& children = succ[static_cast<size_t>(f.v)];
            if (f.child < children.size()) {
                int w = children[f.child++];
                if (num[static_cast<size_t>(w)] == -1) {
                    num[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(f.v)] =
                        std::min(low[static_cast<size_t>(f.v)], num[static_cast<size_t>(w)]);
                }
            } else {
                if (low[static_cast<size_t>(f.v)] == num[static_cast<size_t>(f.v)]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(w)] = false;
                        comp[static_cast<size_t>(w)] = comp_count;
                        if (w == f.v) break;
                    }
                    ++comp_count;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().v;
                    low[static_cast<size_t>(parent)] =
                        std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
                }
            }
        }
    }
    std::vector<bool> recurrent(static_cast<size_t>(n), false);
    for (const auto& e : g.edges)
        if (comp[static_cast<size_t>(e.src)] == comp[static_cast<size_t>(e.dst)])
            recurrent[static_cast<size_t>(e.src)] = true;
    // recurrent component => every member lies on a cycle
    for (int v = 0; v < n; ++v) {
        if (recurrent[static_cast<size_t>(v)]) {
            for (int w = 0; w < n; ++w)
                if (comp[static_cast<size_t>(w)] == comp[static_cast<size_t>(v)])
                    recurrent[static_cast<size_t>(w)] = true;
        }
    }
    return recurrent;
}

// Shortest path from `from` into `targets` along pair edges, as edge indices.
// `restrict_to`, when given, limits the vertices the path may use.
std::optional<std::vector<int>> shortest_pair_path(const PairGraph& g, const PairAdjacency& adj,
                                                   const std::vector<int>& from,
                                                   const std::vector<bool>& targets,
                                                   const std::vector<bool>* restrict_to,
                                                   bool backwards) {
    const auto& lists = backwards ? adj.in_edges : adj.out_edges;
    std::vector<int> parent_edge(g.verts.size(), -1);
    std::vector<bool> seen(g.verts.size(), false);
    std::deque<int> queue;
    for (int v : from) {
        if (restrict_to && !(*restrict_to)[static_cast<size_t>(v)]) continue;
        if (seen[static_cast<size_t>(v)]) continue;
        seen[static_cast<size_t>(v)] = true;
        if (targets[static_cast<size_t>(v)]) return std::vector<int>{};
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int ei : lists[static_cast<size_t>(v)]) {
            const auto& e = g.edges[static_cast<size_t>(ei)];
            int w = backwards ? e.src : e.dst;
            if (restrict_to && !(*restrict_to)[static_cast<size_t>(w)]) continue;
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = true;
            parent_edge[static_cast<size_t>(w)] = ei;
            if (targets[static_cast<size_t>(w)]) {
                std::vector<int> path;
                int cur = w;
                while (parent_edge[static_cast<size_t>(cur)] != -1) {
                    int pe = parent_edge[static_cast<size_t>(cur)];
                    path.push_back(pe);
                    cur = backwards ? g.edges[static_cast<size_t>(pe)].dst
                                    : g.edges[static_cast<size_t>(pe)].src;
                }
                if (!backwards) std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

// Shortest cycle through `v` (which must be recurrent), as edge indices.
std::vector<int> shortest_pair_cycle(const PairGraph& g, const PairAdjacency& adj, int v,
                                     const std::vector<bool>* restrict_to) {
    std::vector<int> parent_edge(g.verts.size(), -1);
    std::vector<bool> seen(g.verts.size(), false);
    std::deque<int> queue;
    for (int ei : adj.out_edges[static_cast<size_t>(v)]) {
        const auto& e = g.edges[static_cast<size_t>(ei)];
        if (restrict_to && !(*restrict_to)[static_cast<size_t>(e.dst)]) continue;
        if (e.dst == v) return {ei};
        if (!seen[static_cast<size_t>(e.dst)]) {
            seen[static_cast<size_t>(e.dst)] = true;
            parent_edge[static_cast<size_t>(e.dst)] = ei;
            queue.push_back(e.dst);
        }
    }
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int ei : adj.out_edges[static_cast<size_t>(cur)]) {
            const auto& e = g.edges[static_cast<size_t>(ei)];
            if (e.dst == v) {
                std::vector<int> cycle{ei};
                int walk = cur;
                while (walk != v) {
                    int pe = parent_edge[static_cast<size_t>(walk)];
                    cycle.push_back(pe);
                    walk = g.edges[static_cast<size_t>(pe)].src;
                }
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (restrict_to && !(*restrict_to)[static_cast<size_t>(e.dst)]) continue;
            if (!seen[static_cast<size_t>(e.dst)]) {
                seen[static_cast<size_t>(e.dst)] = true;
                parent_edge[static_cast<size_t>(e.dst)] = ei;
                queue.push_back(e.dst);
            }
        }
    }
    throw InternalError("shortest_pair_cycle: vertex is not on a cycle");
}

std::vector<PairGraph::PEdge> pick_edges(const PairGraph& g, const std::vector<int>& indices) {
    std::vector<PairGraph::PEdge> out;
    for (int i : indices) out.push_back(g.edges[static_cast<size_t>(i)]);
    return out;
}

// Extend a pair-vertex path bi-infinitely: walk backwards to the nearest
// recurrent vertex and close a shortest cycle there, and symmetrically
// forwards. `restrict_to` confines the extension (used to stay on the
// diagonal for homoclinic witnesses).
struct Extension {
    std::vector<int> left_cycle, left_path;    // edge indices
    std::vector<int> right_path, right_cycle;
};

Extension extend_biinfinite(const PairGraph& g, const PairAdjacency& adj, int front_vertex,
                            int back_vertex, const std::vector<bool>& recurrent,
                            const std::vector<bool>* restrict_to) {
    Extension ext;
    auto back = shortest_pair_path(g, adj, {front_vertex}, recurrent, restrict_to, true);
    if (!back) throw InternalError("extend_biinfinite: no recurrent ancestor");
    ext.left_path = *back;
    int left_anchor = ext.left_path.empty() ? front_vertex
                                            : g.edges[static_cast<size_t>(ext.left_path.front())].src;
    ext.left_cycle = shortest_pair_cycle(g, adj, left_anchor, restrict_to);

    auto fwd = shortest_pair_path(g, adj, {back_vertex}, recurrent, restrict_to, false);
    if (!fwd) throw InternalError("extend_biinfinite: no recurrent descendant");
    ext.right_path = *fwd;
    int right_anchor = ext.right_path.empty()
                           ? back_vertex
                           : g.edges[static_cast<size_t>(ext.right_path.back())].dst;
    ext.right_cycle = shortest_pair_cycle(g, adj, right_anchor, restrict_to);
    return ext;
}

}  // namespace

SurjectivityResult is_surjective(const SlidingBlockCode& c, const EdgePresentation& p) {
    SurjectivityResult result;
    SoficPresentation image = image_sofic(c, p);
    SoficPresentation det = determinize(image);
    ContainmentResult contained = subshift_contains(as_sofic(p), det);
    result.surjective = contained.contained;
    if (!contained.contained) result.missing_word = contained.counterexample;

    if (!p.empty() && is_irreducible(p)) {
        // Independent cross-check: on an irreducible ambient shift a proper
        // subshift has strictly smaller entropy, so surjectivity is entropy
        // equality. Advisory only; containment stays authoritative.
        double ambient_entropy = entropy(p).value;
        double image_entropy = det.empty() ? -1.0 : entropy_of_sofic(det);
        bool entropy_equal = std::fabs(ambient_entropy - image_entropy) <= 1e-9;
        if (entropy_equal != result.surjective)
            throw InternalError("entropy cross-check disagrees with containment surjectivity");
    }
    return result;
}

InjectivityResult is_injective(const SlidingBlockCode& c, const EdgePresentation& p) {
    InjectivityResult result;
    SoficPresentation image = image_sofic(c, p);
    PairGraph g = trim_pair_graph(build_pair_graph(image));

    int q = -1;
    for (size_t v = 0; v < g.verts.size(); ++v)
        if (!g.diagonal(static_cast<int>(v))) {
            q = static_cast<int>(v);
            break;
        }
    if (q < 0) return result;

    result.injective = false;
    PairAdjacency adj(g);
    auto recurrent = recurrent_flags(g);
    Extension ext = extend_biinfinite(g, adj, q, q, recurrent, nullptr);
    std::vector<int> bridge = ext.left_path;
    bridge.insert(bridge.end(), ext.right_path.begin(), ext.right_path.end());
    result.witness = assemble_witness(image, pick_edges(g, ext.left_cycle), pick_edges(g, bridge),
                                      pick_edges(g, ext.right_cycle));
    return result;
}

PreInjectivityResult is_pre_injective(const SlidingBlockCode& c, const EdgePresentation& p) {
    PreInjectivityResult result;
    SoficPresentation image = image_sofic(c, p);
    PairGraph g = build_pair_graph(image);
    PairAdjacency adj(g);

    const size_t n = g.verts.size();
    std::vector<bool> diag(n, false);
    for (size_t v = 0; v < n; ++v) diag[v] = g.diagonal(static_cast<int>(v));

    // Forward reachability from the diagonal and backward reachability to it.
    auto reach = [&](bool backwards) {
        std::vector<bool> seen(n, false);
        std::deque<int> queue;
        for (size_t v = 0; v < n; ++v)
            if (diag[v]) {
                seen[v] = true;
                queue.push_back(static_cast<int>(v));
            }
        const auto& lists = backwards ? adj.in_edges : adj.out_edges;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int ei : lists[static_cast<size_t>(v)]) {
                const auto& e = g.edges[static_cast<size_t>(ei)];
                int w = backwards ? e.src : e.dst;
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    queue.push_back(w);
                }
            }
        }
        return seen;
    };
    auto from_diag = reach(false);
    auto to_diag = reach(true);

    // A pre-injectivity failure is a diamond: a path that leaves the
    // diagonal, passes an off-diagonal vertex, and returns. By pigeonhole an
    // off-diagonal excursion of length > (number of off-diagonal vertices)
    // repeats a vertex, so reachability alone decides existence.
    int q = -1;
    for (size_t v = 0; v < n; ++v)
        if (!diag[v] && from_diag[v] && to_diag[v]) {
            q = static_cast<int>(v);
            break;
        }
    if (q < 0) return result;

    result.pre_injective = false;

    std::vector<int> diag_list;
    for (size_t v = 0; v < n; ++v)
        if (diag[v]) diag_list.push_back(static_cast<int>(v));

    auto path_from_d = shortest_pair_path(g, adj, diag_list, [&] {
        std::vector<bool> t(n, false);
        t[static_cast<size_t>(q)] = true;
        return t;
    }(), nullptr, false);
    auto path_to_d = shortest_pair_path(g, adj, {q}, diag, nullptr, false);
    if (!path_from_d || !path_to_d)
        throw InternalError("is_pre_injective: lost the diamond paths");

    std::vector<int> mid = *path_from_d;
    mid.insert(mid.end(), path_to_d->begin(), path_to_d->end());
    int d0 = g.edges[static_cast<size_t>(mid.front())].src;
    int d1 = g.edges[static_cast<size_t>(mid.back())].dst;

    // Extend through the diagonal only, so the pair stays homoclinic. The
    // diagonal subgraph mirrors the trimmed image construction, so every
    // diagonal vertex has recurrent ancestors and descendants inside it.
    PairGraph diag_graph;
    diag_graph.base = g.base;
    diag_graph.verts = g.verts;
    for (const auto& e : g.edges)
        if (e.e1 == e.e2) diag_graph.edges.push_back(e);
    PairAdjacency diag_adj(diag_graph);
    std::vector<bool> diag_recurrent = recurrent_flags(diag_graph);
    for (size_t v = 0; v < n; ++v) diag_recurrent[v] = diag_recurrent[v] && diag[v];
    Extension ext =
        extend_biinfinite(diag_graph, diag_adj, d0, d1, diag_recurrent, &diag);

    std::vector<PairGraph::PEdge> bridge_edges;
    for (int i : ext.left_path) bridge_edges.push_back(diag_graph.edges[static_cast<size_t>(i)]);
    for (int i : mid) bridge_edges.push_back(g.edges[static_cast<size_t>(i)]);
    for (int i : ext.right_path) bridge_edges.push_back(diag_graph.edges[static_cast<size_t>(i)]);

    std::vector<PairGraph::PEdge> left_cycle, right_cycle;
    for (int i : ext.left_cycle) left_cycle.push_back(diag_graph.edges[static_cast<size_t>(i)]);
    for (int i : ext.right_cycle) right_cycle.push_back(diag_graph.edges[static_cast<size_t>(i)]);

    result.witness = assemble_witness(image, left_cycle, bridge_edges, right_cycle);
    return result;
}

DecisionReport goe_verdict(const SlidingBlockCode& c, const EdgePresentation& p) {
    DecisionReport report;
    report.ambient_irreducible = !p.empty() && is_irreducible(p);
    report.ambient_nonwandering = is_nonwandering(p);

    auto surj = is_surjective(c, p);
    auto inj = is_injective(c, p);
    auto preinj = is_pre_injective(c, p);

    report.surjective = surj.surjective;
    report.injective = inj.injective;
    report.pre_injective = preinj.pre_injective;
    if (!surj.surjective) report.non_surjective_witness = surj.missing_word;
    if (inj.witness) report.non_injective_witness = inj.witness;
    if (preinj.witness) report.non_pre_injective_witness = preinj.witness;

    if (report.ambient_irreducible) {
        report.moore_consistent = !(report.surjective && !report.pre_injective);
        report.myhill_consistent = !(report.pre_injective && !report.surjective);
        report.surjunctive_consistent = !(report.injective && !report.surjective);
    } else if (report.ambient_nonwandering) {
        report.moore_consistent = !(report.surjective && !report.pre_injective);
        report.surjunctive_consistent = !(report.injective && !report.surjective);
    }
    return report;
}

}  // namespace eden
