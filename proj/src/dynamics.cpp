#include "eden/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eden {

MetricValue MetricValue::pow2(int k) {
    if (k < 0) throw Error("metric values live in [0,1]");
    MetricValue m;
    m.is_zero = false;
    m.exponent = k;
    return m;
}

double MetricValue::as_double() const { return is_zero ? 0.0 : std::ldexp(1.0, -exponent); }

std::string MetricValue::str() const {
    if (is_zero) return "0";
    if (exponent == 0) return "1";
    return "2^-" + std::to_string(exponent);
}

MetricValue MetricValue::parse(const std::string& text, int line) {
    if (text == "0") return zero();
    if (text == "1") return pow2(0);
    if (text.rfind("2^-", 0) == 0) {
        try {
            int k = std::stoi(text.substr(3));
            if (k >= 0) return pow2(k);
        } catch (const std::exception&) {
        }
    }
    throw ParseError("bad dyadic value '" + text + "' (want 0, 1, or 2^-k)", line);
}

bool operator<(const MetricValue& a, const MetricValue& b) {
    if (a.is_zero) return !b.is_zero;
    if (b.is_zero) return false;
    return a.exponent > b.exponent;
}

MetricValue MetricValue::halved() const {
    if (is_zero) return zero();
    return pow2(exponent + 1);
}

MetricValue MetricValue::doubled() const {
    if (is_zero) return zero();
    return pow2(std::max(0, exponent - 1));
}

MetricValue metric(const EpConfig& u, const EpConfig& v) {
    if (ep_equal(u, v)) return MetricValue::zero();
    long long span = 1;
    span = std::max(span, std::llabs(u.bridge_begin()) + static_cast<long long>(u.left.size()));
    span = std::max(span, std::llabs(v.bridge_begin()) + static_cast<long long>(v.left.size()));
    long long lcm_l = std::lcm(static_cast<long long>(u.left.size()),
                               static_cast<long long>(v.left.size()));
    long long lcm_r = std::lcm(static_cast<long long>(u.right.size()),
                               static_cast<long long>(v.right.size()));
    span = std::max(span, std::llabs(u.bridge_end()) + lcm_r);
    span = std::max(span, std::llabs(v.bridge_end()) + lcm_r);
    span += lcm_l + lcm_r + 1;
    for (long long n = 0; n <= span; ++n) {
        if (u.at(n) != v.at(n) || u.at(-n) != v.at(-n))
            return MetricValue::pow2(static_cast<int>(n));
    }
    throw InternalError("metric: unequal points with no disagreement in range");
}

MetricValue expansivity_constant(const EdgePresentation&) { return MetricValue::pow2(1); }

bool are_stably_equivalent(const EpConfig& u, const EpConfig& v) {
    return !difference_profile(u, v).right_tail_differs;
}

bool are_unstably_equivalent(const EpConfig& u, const EpConfig& v) {
    return !difference_profile(u, v).left_tail_differs;
}

bool are_homoclinic(const EpConfig& u, const EpConfig& v) {
    return difference_profile(u, v).finite();
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return r != 0 && ((r < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

std::pair<bool, bool> homoclinic_f_fk_check(const EpConfig& u, const EpConfig& v, int k) {
    if (k < 1) throw Error("homoclinic_f_fk_check: k must be >= 1");
    bool direct = are_homoclinic(u, v);

    // Power route: group coordinates into k-blocks and decide finiteness of
    // the block differences through the blocked tails.
    long long left_span = std::lcm(std::lcm(static_cast<long long>(u.left.size()),
                                            static_cast<long long>(v.left.size())),
                                   static_cast<long long>(k));
    long long right_span = std::lcm(std::lcm(static_cast<long long>(u.right.size()),
                                             static_cast<long long>(v.right.size())),
                                    static_cast<long long>(k));
    long long bl = std::min(u.bridge_begin(), v.bridge_begin());
    long long br = std::max(u.bridge_end(), v.bridge_end());

    auto block_differs = [&](long long block) {
        for (int j = 0; j < k; ++j)
            if (u.at(block * k + j) != v.at(block * k + j)) return true;
        return false;
    };

    long long lo_block = floor_div(bl - left_span, k);
    long long hi_block = floor_div(br + right_span + k - 1, k);
    bool left_tail = false, right_tail = false;
    for (long long b = lo_block; b < lo_block + left_span / k; ++b)
        if (block_differs(b)) left_tail = true;
    for (long long b = hi_block - right_span / k; b < hi_block; ++b)
        if (block_differs(b)) right_tail = true;

    return {direct, !left_tail && !right_tail};
}

ShadowError::ShadowError(const std::string& msg, MetricValue achievable_eps)
    : Error(msg), achievable(achievable_eps) {}

void validate_pseudo_orbit(const SftSpec& spec, const EdgePresentation& p,
                           const FinitePseudoOrbit& po) {
    if (po.entries.empty()) throw ParseError("pseudo-orbit has no entries");
    for (size_t i = 0; i < po.entries.size(); ++i) {
        if (!is_allowed(spec, po.entries[i]))
            throw ParseError("pseudo-orbit entry " + std::to_string(i) +
                             " is not a point of the shift");
    }
    (void)p;
    for (size_t i = 0; i + 1 < po.entries.size(); ++i) {
        MetricValue d = metric(po.entries[i + 1], po.entries[i].shifted(1));
        if (!(d <= po.delta))
            throw ParseError("pseudo-orbit defect " + d.str() + " at index " + std::to_string(i) +
                             " exceeds delta " + po.delta.str());
    }
}

ShadowResult shadow(const SftSpec& spec, const EdgePresentation& p, const FinitePseudoOrbit& po,
                    MetricValue epsilon) {
    if (spec.step > 1) throw Error("shadow: needs a 1-step (or 0-step) presentation");
    if (p.empty()) throw Error("shadow: empty shift");
    if (epsilon.is_zero) throw ShadowError("shadow: epsilon must be positive", MetricValue::pow2(0));
    validate_pseudo_orbit(spec, p, po);

    const long long count = static_cast<long long>(po.entries.size());
    ShadowResult result;
    result.epsilon = epsilon;

    auto finish = [&](EpConfig x) {
        for (long long n = 0; n < count; ++n) {
            MetricValue d = metric(po.entries[static_cast<size_t>(n)], x.shifted(n));
            if (!(d <= epsilon))
                throw InternalError("shadow: tracing point misses entry " + std::to_string(n));
            result.distances.push_back(d);
        }
        result.point = std::move(x);
        return result;
    };

    const int K = epsilon.exponent;
    if (K == 0) {
        // Distances never exceed 1: any point of the shift traces.
        Word cycle = shortest_cycle_symbols(p, 0);
        EpConfig x{cycle, {}, cycle, 0};
        return finish(std::move(x));
    }

    if (!(po.delta <= epsilon.halved()))
        throw ShadowError("shadow: delta " + po.delta.str() + " too large for epsilon " +
                              epsilon.str() + " (needs delta <= " + epsilon.halved().str() + ")",
                          po.delta.doubled());

    // d(u_{n+1}, sigma(u_n)) <= 2^-(K+1) pins agreement on the coordinate
    // window [-K, K], so the constraints "sigma^n(x) agrees with u_n on
    // [-K, K]" overlap consistently and assemble into one pinned word on
    // [-T-K, K].
    const long long lo = -(count - 1) - K, hi = K;
    Word pinned;
    for (long long i = lo; i <= hi; ++i) pinned.push_back(-1);
    for (long long n = 0; n < count; ++n) {
        const EpConfig& u = po.entries[static_cast<size_t>(n)];
        for (long long c = -K; c <= K; ++c) {
            long long i = c - n;   // sigma^n(x) reads x at i = c - n
            if (i < lo || i > hi) continue;
            Symbol s = u.at(c);
            Symbol& slot = pinned[static_cast<size_t>(i - lo)];
            if (slot != -1 && slot != s)
                throw InternalError("shadow: inconsistent pins despite a valid pseudo-orbit");
            slot = s;
        }
    }
    for (Symbol s : pinned)
        if (s == -1) throw InternalError("shadow: pin gap");

    // The pinned word is a path: each window sits inside some entry.
    auto vertex_of = [&](long long i) {
        if (spec.step == 0) return 0;
        int v = p.find_vertex({pinned[static_cast<size_t>(i - lo)]});
        if (v < 0) throw InternalError("shadow: pinned symbol lost its vertex");
        return v;
    };
    BiInfiniteExtension ext = extend_to_biinfinite(p, vertex_of(lo), vertex_of(hi));

    // The pinned word's first symbol is emitted by the edge arriving at its
    // start vertex, so the left tail contributes the anchor's own symbol
    // (the cycle's last label) and drops the connector label that would
    // re-emit pinned[0]; the left cycle rotates by one to stay aligned.
    EpConfig x;
    x.left.push_back(ext.left_cycle.back());
    x.left.insert(x.left.end(), ext.left_cycle.begin(), ext.left_cycle.end() - 1);
    if (!ext.left_connector.empty()) {
        x.bridge.push_back(ext.left_cycle.back());
        x.bridge.insert(x.bridge.end(), ext.left_connector.begin(), ext.left_connector.end() - 1);
    }
    x.bridge.insert(x.bridge.end(), pinned.begin(), pinned.end());
    x.bridge.insert(x.bridge.end(), ext.right_connector.begin(), ext.right_connector.end());
    x.right = ext.right_cycle;
    x.offset = lo - static_cast<long long>(ext.left_connector.size());
    return finish(std::move(x));
}

}  // namespace eden
