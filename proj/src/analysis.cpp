#include "eden/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace eden {

namespace {

std::vector<std::vector<int>> successor_lists(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> out(static_cast<size_t>(n));
    for (const Edge& e : edges) out[static_cast<size_t>(e.src)].push_back(e.dst);
    return out;
}

// Tarjan with an explicit stack.
std::vector<int> tarjan_components(int n, const std::vector<std::vector<int>>& succ,
                                   int& component_count) {
    std::vector<int> comp(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        num(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    std::vector<bool> on_stack(static_cast<size_t>(n), false);
    int counter = 0;
    component_count = 0;

    struct Frame {
        int v;
        size_t next_child;
    };
    for (int root = 0; root < n; ++root) {
        if (num[static_cast<size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        num[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& children = succ[static_cast<size_t>(f.v)];
            if (f.next_child < children.size()) {
                int w = children[f.next_child++];
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
                        comp[static_cast<size_t>(w)] = component_count;
                        if (w == f.v) break;
                    }
                    ++component_count;
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
    return comp;
}

}  // namespace

SccDecomposition scc_decompose(const EdgePresentation& p) {
    const int n = p.vertex_count();
    auto succ = successor_lists(n, p.edges);
    int count = 0;
    auto raw = tarjan_components(n, succ, count);

    // Canonical order: components sorted by their smallest vertex.
    std::vector<std::vector<int>> grouped(static_cast<size_t>(count));
    for (int v = 0; v < n; ++v) grouped[static_cast<size_t>(raw[static_cast<size_t>(v)])].push_back(v);
    std::sort(grouped.begin(), grouped.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    SccDecomposition out;
    out.components = std::move(grouped);
    out.component_of.assign(static_cast<size_t>(n), -1);
    out.recurrent.assign(out.components.size(), false);
    for (size_t c = 0; c < out.components.size(); ++c)
        for (int v : out.components[c]) out.component_of[static_cast<size_t>(v)] = static_cast<int>(c);
    for (const Edge& e : p.edges) {
        int cs = out.component_of[static_cast<size_t>(e.src)];
        if (cs == out.component_of[static_cast<size_t>(e.dst)]) out.recurrent[static_cast<size_t>(cs)] = true;
    }
    return out;
}

bool is_irreducible(const EdgePresentation& p) {
    if (p.empty()) throw Error("is_irreducible: empty presentation");
    auto scc = scc_decompose(p);
    return scc.components.size() == 1 && scc.recurrent[0];
}

int period(const EdgePresentation& p) {
    if (!is_irreducible(p)) throw Error("period: presentation is not irreducible");
    const int n = p.vertex_count();
    auto succ = successor_lists(n, p.edges);
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::deque<int> queue{0};
    dist[0] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : succ[static_cast<size_t>(v)]) {
            if (dist[static_cast<size_t>(w)] == -1) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    long long g = 0;
    for (const Edge& e : p.edges)
        g = std::gcd(g, static_cast<long long>(dist[static_cast<size_t>(e.src)]) + 1 -
                            dist[static_cast<size_t>(e.dst)]);
    return static_cast<int>(g == 0 ? 1 : std::llabs(g));
}

bool is_mixing(const EdgePresentation& p) {
    if (p.empty()) return false;
    return is_irreducible(p) && period(p) == 1;
}

std::vector<Edge> wandering_edges(const EdgePresentation& p) {
    auto scc = scc_decompose(p);
    std::vector<Edge> out;
    for (const Edge& e : p.edges) {
        int cs = scc.component_of[static_cast<size_t>(e.src)];
        int cd = scc.component_of[static_cast<size_t>(e.dst)];
        if (cs != cd || !scc.recurrent[static_cast<size_t>(cs)]) out.push_back(e);
    }
    return out;
}

bool is_nonwandering(const EdgePresentation& p) { return wandering_edges(p).empty(); }

EdgePresentation nonwandering_part(const EdgePresentation& p) {
    auto scc = scc_decompose(p);
    EdgePresentation out;
    out.alphabet = p.alphabet;
    out.step = p.step;
    std::vector<int> remap(static_cast<size_t>(p.vertex_count()), -1);
    for (int v = 0; v < p.vertex_count(); ++v) {
        if (scc.recurrent[static_cast<size_t>(scc.component_of[static_cast<size_t>(v)])]) {
            remap[static_cast<size_t>(v)] = out.vertex_count();
            out.vertex_words.push_back(p.vertex_words[static_cast<size_t>(v)]);
        }
    }
    for (const Edge& e : p.edges) {
        if (scc.component_of[static_cast<size_t>(e.src)] != scc.component_of[static_cast<size_t>(e.dst)])
            continue;
        int s = remap[static_cast<size_t>(e.src)], d = remap[static_cast<size_t>(e.dst)];
        if (s >= 0 && d >= 0) out.edges.push_back({s, d, e.sym});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix adjacency(const EdgePresentation& p) {
    size_t n = static_cast<size_t>(p.vertex_count());
    Matrix a(n, std::vector<BigInt>(n, 0));
    for (const Edge& e : p.edges) ++a[static_cast<size_t>(e.src)][static_cast<size_t>(e.dst)];
    return a;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix out(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace

BigInt count_periodic(const EdgePresentation& p, int n) {
    if (n < 1) throw Error("count_periodic: n must be >= 1");
    if (p.empty()) return 0;
    Matrix a = adjacency(p);
    Matrix pow = a;
    for (int i = 1; i < n; ++i) pow = multiply(pow, a);
    BigInt trace = 0;
    for (size_t i = 0; i < pow.size(); ++i) trace += pow[i][i];
    return trace;
}

namespace {

int moebius(int n) {
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace

BigInt count_least_period(const EdgePresentation& p, int n) {
    if (n < 1) throw Error("count_least_period: n must be >= 1");
    BigInt total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        total += moebius(n / d) * count_periodic(p, d);
    }
    return total;
}

namespace {

// Certified enclosure of the Perron root of an irreducible non-negative
// integer matrix via Collatz-Wielandt bounds on I + A (primitive whenever A
// is irreducible, so the bounds converge even for periodic graphs).
std::pair<double, double> perron_enclosure(const std::vector<std::vector<long long>>& a) {
    const size_t n = a.size();
    std::vector<double> x(n, 1.0), y(n, 0.0);
    double lo = 0.0, hi = 0.0;
    const double target = 5e-10;   // enclosure half-width for ln(rho)
    for (int iter = 0; iter < 2000000; ++iter) {
        for (size_t i = 0; i < n; ++i) {
            double acc = x[i];  // the I part
            for (size_t j = 0; j < n; ++j) acc += static_cast<double>(a[i][j]) * x[j];
            y[i] = acc;
        }
        lo = y[0] / x[0];
        hi = lo;
        for (size_t i = 1; i < n; ++i) {
            double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (iter == 0 && lo == hi) {
            // The all-ones vector is an exact eigenvector and the ratio was
            // computed from plain integer sums: rho equals it exactly.
            return {lo - 1.0, hi - 1.0};
        }
        double norm = 0.0;
        for (size_t i = 0; i < n; ++i) norm = std::max(norm, y[i]);
        for (size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (lo > 1.0 && std::log(hi - 1.0) - std::log(lo - 1.0) <= target) {
            // Small inflation absorbs double-precision rounding in the bound
            // computation itself.
            return {std::max(1.0, (lo - 1.0) * (1 - 1e-13)), (hi - 1.0) * (1 + 1e-13)};
        }
    }
    throw InternalError("entropy: power iteration failed to converge");
}

}  // namespace

EntropyResult entropy(const EdgePresentation& p) {
    if (p.empty()) throw Error("entropy: empty presentation");
    auto scc = scc_decompose(p);
    double lo = 1.0, hi = 1.0;  // spectral radius of the recurrent part is >= 1
    for (size_t c = 0; c < scc.components.size(); ++c) {
        if (!scc.recurrent[c]) continue;
        const auto& verts = scc.components[c];
        std::vector<int> pos(static_cast<size_t>(p.vertex_count()), -1);
        for (size_t i = 0; i < verts.size(); ++i) pos[static_cast<size_t>(verts[i])] = static_cast<int>(i);
        std::vector<std::vector<long long>> a(verts.size(), std::vector<long long>(verts.size(), 0));
        for (const Edge& e : p.edges) {
            int s = pos[static_cast<size_t>(e.src)], d = pos[static_cast<size_t>(e.dst)];
            if (s >= 0 && d >= 0 &&
                scc.component_of[static_cast<size_t>(e.src)] == static_cast<int>(c) &&
                scc.component_of[static_cast<size_t>(e.dst)] == static_cast<int>(c))
                ++a[static_cast<size_t>(s)][static_cast<size_t>(d)];
        }
        auto [l, h] = perron_enclosure(a);
        if (l > lo) {
            lo = l;
            hi = std::max(hi, h);
        }
        hi = std::max(hi, h);
    }
    EntropyResult out;
    out.lower = std::log(lo);
    out.upper = std::log(hi);
    out.value = (out.lower + out.upper) / 2;
    return out;
}

int SpectralDecomposition::total_classes() const {
    int total = 0;
    for (const auto& c : components) total += c.cycle_period;
    return total;
}

int SpectralDecomposition::class_id_of(int vertex) const {
    int base = 0;
    for (const auto& c : components) {
        for (int k = 0; k < c.cycle_period; ++k)
            for (int v : c.classes[static_cast<size_t>(k)])
                if (v == vertex) return base + k;
        base += c.cycle_period;
    }
    return -1;
}

int SpectralDecomposition::component_of(int vertex) const {
    for (size_t c = 0; c < components.size(); ++c)
        for (int v : components[c].vertices)
            if (v == vertex) return static_cast<int>(c);
    return -1;
}

std::pair<int, int> SpectralDecomposition::class_coords(int class_id) const {
    int base = 0;
    for (size_t c = 0; c < components.size(); ++c) {
        if (class_id < base + components[c].cycle_period)
            return {static_cast<int>(c), class_id - base};
        base += components[c].cycle_period;
    }
    throw Error("class_coords: bad class id");
}

int SpectralDecomposition::flat_id(int component, int cls) const {
    int base = 0;
    for (int c = 0; c < component; ++c) base += components[static_cast<size_t>(c)].cycle_period;
    return base + cls;
}

SpectralDecomposition spectral_decomposition(const EdgePresentation& p) {
    if (!is_nonwandering(p))
        throw Error("spectral_decomposition: presentation is not non-wandering");
    auto scc = scc_decompose(p);
    auto succ = successor_lists(p.vertex_count(), p.edges);

    SpectralDecomposition out;
    for (size_t c = 0; c < scc.components.size(); ++c) {
        if (!scc.recurrent[c]) {
            for (int v : scc.components[c]) out.wandering_vertices.push_back(v);
            continue;
        }
        SpectralComponent comp;
        comp.vertices = scc.components[c];

        // BFS levels inside the component; the class of v is level(v) mod k
        // where k is the gcd of level defects over internal edges.
        std::vector<long long> level(static_cast<size_t>(p.vertex_count()), -1);
        std::deque<int> queue{comp.vertices.front()};
        level[static_cast<size_t>(comp.vertices.front())] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : succ[static_cast<size_t>(v)]) {
                if (scc.component_of[static_cast<size_t>(w)] != static_cast<int>(c)) continue;
                if (level[static_cast<size_t>(w)] == -1) {
                    level[static_cast<size_t>(w)] = level[static_cast<size_t>(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
        long long g = 0;
        for (const Edge& e : p.edges) {
            if (scc.component_of[static_cast<size_t>(e.src)] != static_cast<int>(c)) continue;
            if (scc.component_of[static_cast<size_t>(e.dst)] != static_cast<int>(c)) continue;
            g = std::gcd(g, level[static_cast<size_t>(e.src)] + 1 - level[static_cast<size_t>(e.dst)]);
        }
        int k = static_cast<int>(g == 0 ? 1 : std::llabs(g));
        comp.cycle_period = k;
        comp.classes.assign(static_cast<size_t>(k), {});
        for (int v : comp.vertices) {
            long long cls = ((level[static_cast<size_t>(v)]) % k + k) % k;
            comp.classes[static_cast<size_t>(cls)].push_back(v);
        }
        out.components.push_back(std::move(comp));
    }
    std::sort(out.wandering_vertices.begin(), out.wandering_vertices.end());
    return out;
}

int mixing_gap(const EdgePresentation& p) {
    if (!is_mixing(p)) throw Error("mixing_gap: presentation is not mixing");
    const size_t n = static_cast<size_t>(p.vertex_count());
    const long long bound = static_cast<long long>(n) * static_cast<long long>(n) + 1;

    using BoolMatrix = std::vector<std::vector<bool>>;
    auto all_positive = [n](const BoolMatrix& m) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!m[i][j]) return false;
        return true;
    };
    auto bool_multiply = [n](const BoolMatrix& a, const BoolMatrix& b) {
        BoolMatrix out(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                if (!a[i][k]) continue;
                for (size_t j = 0; j < n; ++j)
                    if (b[k][j]) out[i][j] = true;
            }
        return out;
    };

    BoolMatrix base(n, std::vector<bool>(n, false));
    for (const Edge& e : p.edges) base[static_cast<size_t>(e.src)][static_cast<size_t>(e.dst)] = true;

    // Repeated squaring up to a positive power, then binary search on the
    // least positive exponent (positivity is monotone once every vertex has
    // positive in- and out-degree, which trimmedness guarantees).
    std::vector<BoolMatrix> squares{base};   // squares[i] = A^(2^i)
    std::vector<long long> exponents{1};
    while (!all_positive(squares.back())) {
        if (exponents.back() > bound)
            throw InternalError("mixing_gap: exceeded primitivity bound");
        squares.push_back(bool_multiply(squares.back(), squares.back()));
        exponents.push_back(exponents.back() * 2);
    }

    auto power = [&](long long e) {
        BoolMatrix acc;
        bool have = false;
        for (size_t bit = 0; bit < exponents.size(); ++bit) {
            if (e & (1LL << bit)) {
                acc = have ? bool_multiply(acc, squares[bit]) : squares[bit];
                have = true;
            }
        }
        return acc;
    };

    long long lo = 1, hi = exponents.back();
    while (lo < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (all_positive(power(mid)))
            hi = mid;
        else
            lo = mid + 1;
    }
    return static_cast<int>(lo);
}

std::vector<Symbol> shortest_cycle_symbols(const EdgePresentation& p, int v0) {
    const size_t n = static_cast<size_t>(p.vertex_count());
    std::vector<int> parent(n, -1), parent_sym(n, -1);
    std::vector<bool> visited(n, false);
    std::vector<int> queue;
    auto close = [&](int last, Symbol sym) {
        std::vector<Symbol> syms{sym};
        for (int v = last; v != v0; v = parent[static_cast<size_t>(v)])
            syms.push_back(parent_sym[static_cast<size_t>(v)]);
        std::reverse(syms.begin(), syms.end());
        return syms;
    };
    for (const Edge& e : p.edges) {
        if (e.src != v0) continue;
        if (e.dst == v0) return {e.sym};
        if (!visited[static_cast<size_t>(e.dst)]) {
            visited[static_cast<size_t>(e.dst)] = true;
            parent[static_cast<size_t>(e.dst)] = v0;
            parent_sym[static_cast<size_t>(e.dst)] = e.sym;
            queue.push_back(e.dst);
        }
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (const Edge& e : p.edges) {
            if (e.src != v) continue;
            if (e.dst == v0) return close(v, e.sym);
            if (!visited[static_cast<size_t>(e.dst)]) {
                visited[static_cast<size_t>(e.dst)] = true;
                parent[static_cast<size_t>(e.dst)] = v;
                parent_sym[static_cast<size_t>(e.dst)] = e.sym;
                queue.push_back(e.dst);
            }
        }
    }
    throw InternalError("shortest_cycle_symbols: vertex is not on a cycle");
}

BiInfiniteExtension extend_to_biinfinite(const EdgePresentation& p, int start_vertex,
                                         int end_vertex) {
    auto scc = scc_decompose(p);
    auto recurrent = [&](int v) {
        return scc.recurrent[static_cast<size_t>(scc.component_of[static_cast<size_t>(v)])];
    };

    BiInfiniteExtension ext;
    {
        // Backward BFS from the start vertex to the nearest recurrent vertex.
        const size_t n = static_cast<size_t>(p.vertex_count());
        std::vector<int> next(n, -1), next_sym(n, -1);
        std::vector<bool> seen(n, false);
        std::vector<int> queue{start_vertex};
        seen[static_cast<size_t>(start_vertex)] = true;
        int anchor = recurrent(start_vertex) ? start_vertex : -1;
        for (size_t head = 0; head < queue.size() && anchor < 0; ++head) {
            int v = queue[head];
            for (const Edge& e : p.edges) {
                if (e.dst != v || seen[static_cast<size_t>(e.src)]) continue;
                seen[static_cast<size_t>(e.src)] = true;
                next[static_cast<size_t>(e.src)] = v;
                next_sym[static_cast<size_t>(e.src)] = e.sym;
                if (recurrent(e.src)) {
                    anchor = e.src;
                    break;
                }
                queue.push_back(e.src);
            }
        }
        if (anchor < 0) throw InternalError("extend_to_biinfinite: no recurrent ancestor");
        for (int v = anchor; v != start_vertex; v = next[static_cast<size_t>(v)])
            ext.left_connector.push_back(next_sym[static_cast<size_t>(v)]);
        ext.left_cycle = shortest_cycle_symbols(p, anchor);
    }
    {
        const size_t n = static_cast<size_t>(p.vertex_count());
        std::vector<int> prev(n, -1), prev_sym(n, -1);
        std::vector<bool> seen(n, false);
        std::vector<int> queue{end_vertex};
        seen[static_cast<size_t>(end_vertex)] = true;
        int anchor = recurrent(end_vertex) ? end_vertex : -1;
        for (size_t head = 0; head < queue.size() && anchor < 0; ++head) {
            int v = queue[head];
            for (const Edge& e : p.edges) {
                if (e.src != v || seen[static_cast<size_t>(e.dst)]) continue;
                seen[static_cast<size_t>(e.dst)] = true;
                prev[static_cast<size_t>(e.dst)] = v;
                prev_sym[static_cast<size_t>(e.dst)] = e.sym;
                if (recurrent(e.dst)) {
                    anchor = e.dst;
                    break;
                }
                queue.push_back(e.dst);
            }
        }
        if (anchor < 0) throw InternalError("extend_to_biinfinite: no recurrent descendant");
        Word back;
        for (int v = anchor; v != end_vertex; v = prev[static_cast<size_t>(v)])
            back.push_back(prev_sym[static_cast<size_t>(v)]);
        ext.right_connector.assign(back.rbegin(), back.rend());
        ext.right_cycle = shortest_cycle_symbols(p, anchor);
    }
    return ext;
}

EdgePresentation power_subgraph(const EdgePresentation& p, const std::vector<int>& vertices,
                                int k) {
    if (k < 1) throw Error("power_subgraph: k must be >= 1");
    std::vector<int> pos(static_cast<size_t>(p.vertex_count()), -1);
    for (size_t i = 0; i < vertices.size(); ++i) pos[static_cast<size_t>(vertices[i])] = static_cast<int>(i);

    // Path counts of length k between the chosen vertices.
    size_t n = static_cast<size_t>(p.vertex_count());
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
    for (const Edge& e : p.edges) ++a[static_cast<size_t>(e.src)][static_cast<size_t>(e.dst)];
    std::vector<std::vector<BigInt>> pw = a;
    for (int i = 1; i < k; ++i) pw = multiply(pw, a);

    EdgePresentation out;
    out.alphabet = p.alphabet;
    out.step = p.step;
    for (int v : vertices) out.vertex_words.push_back(p.vertex_words[static_cast<size_t>(v)]);
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = 0; j < vertices.size(); ++j)
            if (pw[static_cast<size_t>(vertices[i])][static_cast<size_t>(vertices[j])] > 0)
                out.edges.push_back({static_cast<int>(i), static_cast<int>(j), 0});
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace eden
