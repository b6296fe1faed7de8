// decide.hpp -- exact decision procedures for endomorphisms of an SFT:
// injectivity and pre-injectivity through the pair graph of the image
// presentation, surjectivity through sofic-language containment with an
// entropy cross-check, assembled into a verdict with machine-checkable
// witnesses.

#ifndef EDEN_DECIDE_HPP
#define EDEN_DECIDE_HPP

#include <optional>
#include <utility>

#include "eden/code.hpp"

namespace eden {

/// Right-resolving presentation of the same subshift (subset construction
/// from the full vertex set, trimmed).
SoficPresentation determinize(const SoficPresentation& s);

struct ContainmentResult {
    bool contained = true;
    Word counterexample;   // shortest-lex word of L(s1) outside L(s2)
};

/// Decides L(s1) subset-of L(s2). s1 must be trimmed so that every finite
/// path word extends bi-infinitely; s2 may be any presentation (determinize
/// first to keep the subset tracker small).
ContainmentResult subshift_contains(const SoficPresentation& s1, const SoficPresentation& s2);

struct SurjectivityResult {
    bool surjective = true;
    Word missing_word;   // shortest-lex word of the ambient language not in the image
};

struct WitnessPair {
    EpConfig x, y;
};

struct InjectivityResult {
    bool injective = true;
    std::optional<WitnessPair> witness;   // distinct points with equal images
};

struct PreInjectivityResult {
    bool pre_injective = true;
    std::optional<WitnessPair> witness;   // homoclinic pair with equal images
};

SurjectivityResult is_surjective(const SlidingBlockCode& c, const EdgePresentation& p);
InjectivityResult is_injective(const SlidingBlockCode& c, const EdgePresentation& p);
PreInjectivityResult is_pre_injective(const SlidingBlockCode& c, const EdgePresentation& p);

struct DecisionReport {
    bool injective = false;
    bool surjective = false;
    bool pre_injective = false;

    std::optional<Word> non_surjective_witness;
    std::optional<WitnessPair> non_injective_witness;
    std::optional<WitnessPair> non_pre_injective_witness;

    bool ambient_irreducible = false;
    bool ambient_nonwandering = false;

    // Consistency with the structure theorems for the ambient class; a false
    // flag indicates an implementation bug, not mathematics.
    bool moore_consistent = true;
    bool myhill_consistent = true;
    bool surjunctive_consistent = true;

    bool violation() const {
        return !(moore_consistent && myhill_consistent && surjunctive_consistent);
    }
};

DecisionReport goe_verdict(const SlidingBlockCode& c, const EdgePresentation& p);

}  // namespace eden

#endif  // EDEN_DECIDE_HPP
