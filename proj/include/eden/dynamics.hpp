// dynamics.hpp -- the shift metric made exact on finitely presented points,
// the orbit-equivalence relations (stable, unstable, homoclinic), and
// pseudo-orbit tracing on 1-step presentations.

#ifndef EDEN_DYNAMICS_HPP
#define EDEN_DYNAMICS_HPP

#include "eden/analysis.hpp"
#include "eden/shift.hpp"

namespace eden {

/// Exact dyadic distance value: 0 or 2^-exponent with exponent >= 0.
struct MetricValue {
    bool is_zero = true;
    int exponent = 0;

    static MetricValue zero() { return {}; }
    static MetricValue pow2(int k);

    double as_double() const;
    std::string str() const;                 // "0", "1", or "2^-k"
    static MetricValue parse(const std::string& text, int line = 0);

    friend bool operator==(const MetricValue& a, const MetricValue& b) {
        return a.is_zero == b.is_zero && (a.is_zero || a.exponent == b.exponent);
    }
    // Numeric order: 0 < 2^-k < 2^-j for k > j.
    friend bool operator<(const MetricValue& a, const MetricValue& b);
    friend bool operator<=(const MetricValue& a, const MetricValue& b) {
        return a < b || a == b;
    }

    MetricValue halved() const;
    MetricValue doubled() const;   // saturates at 1
};

/// d(u,v) = 2^-inf{ n >= 0 : (u(-n),u(n)) != (v(-n),v(n)) }, 0 when u = v.
MetricValue metric(const EpConfig& u, const EpConfig& v);

/// 1/2 works for every subshift under this metric.
MetricValue expansivity_constant(const EdgePresentation& p);

bool are_homoclinic(const EpConfig& u, const EpConfig& v);
bool are_stably_equivalent(const EpConfig& u, const EpConfig& v);
bool are_unstably_equivalent(const EpConfig& u, const EpConfig& v);

/// (homoclinic for the shift, homoclinic for its k-th power); the second
/// flag is computed independently by regrouping both points into k-blocks.
std::pair<bool, bool> homoclinic_f_fk_check(const EpConfig& u, const EpConfig& v, int k);

struct FinitePseudoOrbit {
    std::vector<EpConfig> entries;   // u_0 .. u_T
    MetricValue delta;
};

/// Checks the entries are points of the shift and consecutive defects stay
/// within delta; throws ParseError otherwise.
void validate_pseudo_orbit(const SftSpec& spec, const EdgePresentation& p,
                           const FinitePseudoOrbit& po);

/// Raised when delta is too coarse for the requested epsilon; carries the
/// epsilon that the given delta can guarantee.
class ShadowError : public Error {
public:
    ShadowError(const std::string& msg, MetricValue achievable_eps);
    MetricValue achievable;
};

struct ShadowResult {
    EpConfig point;
    MetricValue epsilon;
    std::vector<MetricValue> distances;   // d(u_n, sigma^n(point)) per index
};

/// Finds a point whose orbit epsilon-traces the pseudo-orbit. Requires a
/// 1-step (or 0-step) presentation and delta <= epsilon/2; tracing with
/// epsilon = 1 is vacuous and always succeeds.
ShadowResult shadow(const SftSpec& spec, const EdgePresentation& p, const FinitePseudoOrbit& po,
                    MetricValue epsilon);

}  // namespace eden

#endif  // EDEN_DYNAMICS_HPP
