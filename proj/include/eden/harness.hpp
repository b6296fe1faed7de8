// harness.hpp -- exhaustive enumeration of sliding block codes of bounded
// window, whole-space verdict scans against the structure theorems, and the
// named example shifts and codes with their expected verdicts.

#ifndef EDEN_HARNESS_HPP
#define EDEN_HARNESS_HPP

#include <functional>
#include <optional>

#include "eden/decide.hpp"

namespace eden {

struct ScanConfig {
    int memory_max = 1;
    int anticipation_max = 1;
    int window_min = 1;
    int window_max = -1;             // -1: memory_max + anticipation_max + 1
    long long table_cap = 10000000;  // candidate rule tables across all blocks
    int workers = 1;
    bool only_valid = false;         // emit only validated endomorphisms

    int effective_window_max() const {
        return window_max < 0 ? memory_max + anticipation_max + 1 : window_max;
    }
};

/// Total number of candidate rule tables the config enumerates.
long long count_candidates(const SftSpec& spec, const EdgePresentation& p, const ScanConfig& cfg);

/// Stream every rule table (memory <= memory_max, anticipation <=
/// anticipation_max, window within bounds) in canonical order: blocks by
/// (memory, anticipation), tables lexicographically with the first window as
/// the most significant digit. The callback receives the global table index.
void enumerate_codes(const SftSpec& spec, const EdgePresentation& p, const ScanConfig& cfg,
                     const std::function<void(long long, const SlidingBlockCode&)>& fn);

struct TheoremViolation {
    long long code_index = 0;
    std::string kind;   // "moore", "myhill", "surjunctivity"
    std::string sbc;    // the offending code, replayable
};

struct MyhillFailureExample {
    long long code_index = 0;
    std::string sbc;
    Word missing_word;
};

struct ScanResult {
    long long candidates = 0;
    long long valid = 0;
    long long injective = 0;
    long long surjective = 0;
    long long pre_injective = 0;
    long long entropy_cross_checks = 0;
    bool ambient_irreducible = false;
    bool ambient_nonwandering = false;
    std::vector<TheoremViolation> violations;   // must stay empty
    std::optional<MyhillFailureExample> myhill_failure;   // first pre-injective non-surjective
};

/// Run goe_verdict over every valid endomorphism the config enumerates and
/// record violations of the theorems that apply to the ambient shift.
ScanResult scan_theorems(const SftSpec& spec, const ScanConfig& cfg);

struct ExpectedVerdicts {
    std::optional<bool> injective, surjective, pre_injective;
};

struct Builtin {
    std::string name;
    std::string ambient_name;        // equals name for plain shifts
    std::string sft;
    std::string sbc;                 // empty for plain shifts
    ExpectedVerdicts expected;

    bool is_code() const { return !sbc.empty(); }
};

const std::vector<Builtin>& builtins();
const Builtin& builtin(const std::string& name);   // throws Error on unknown name

}  // namespace eden

#endif  // EDEN_HARNESS_HPP
