// code.hpp -- sliding block codes: the endomorphisms of a subshift, given by
// a local rule over windows of the ambient language, plus the labeled-graph
// presentation of their images and the induced action on cyclic classes.

#ifndef EDEN_CODE_HPP
#define EDEN_CODE_HPP

#include <map>
#include <optional>

#include "eden/analysis.hpp"
#include "eden/shift.hpp"

namespace eden {

struct SlidingBlockCode {
    SftSpec ambient;
    int memory = 0;
    int anticipation = 0;
    std::map<Word, Symbol> rule;   // total on the allowed windows

    int window_length() const { return memory + anticipation + 1; }
    Symbol output(const Word& window) const;
};

/// Parse a `.sbc` file against its ambient spec. The rule must cover every
/// window of the ambient language exactly once; rules on words outside the
/// language are collected as warnings and ignored.
SlidingBlockCode parse_code(const std::string& text, const SftSpec& ambient,
                            std::vector<std::string>* warnings = nullptr);

std::string emit_code(const SlidingBlockCode& c);

/// Slide the rule across a word; the output is shorter by memory+anticipation.
Word apply_to_word(const SlidingBlockCode& c, const Word& w);

struct EndomorphismCheck {
    bool ok = true;
    Word violating_source;   // shortest (lex-least) source word with a bad image
    Word forbidden_image;
};

/// Does the image of every configuration stay inside the ambient shift?
EndomorphismCheck validate_endomorphism(const SlidingBlockCode& c, const EdgePresentation& p);

PeriodicConfiguration apply_to_periodic(const SlidingBlockCode& c,
                                        const PeriodicConfiguration& x);

EpConfig apply_to_ep(const SlidingBlockCode& c, const EpConfig& x);

/// outer after inner; memories and anticipations add.
SlidingBlockCode compose(const SlidingBlockCode& outer, const SlidingBlockCode& inner,
                         const EdgePresentation& p);

SlidingBlockCode power(const SlidingBlockCode& c, int k, const EdgePresentation& p);

/// A labeled directed multigraph recognizing the bi-infinite label sequences
/// of its paths. May be non-deterministic. `edge_words`, when present, carry
/// the source-shift words the edges were built from.
struct SoficPresentation {
    Alphabet alphabet;
    int vertex_count = 0;
    std::vector<Word> vertex_words;   // optional provenance (may be empty)
    std::vector<Edge> edges;
    std::vector<Word> edge_words;     // parallel to edges when non-empty

    bool empty() const { return vertex_count == 0; }
};

SoficPresentation as_sofic(const EdgePresentation& p);

/// Presentation of the image subshift tau(Sigma): vertices are source words
/// of length max(memory+anticipation, step), edges their one-symbol
/// extensions, labeled by the rule output anchored at the window start.
SoficPresentation image_sofic(const SlidingBlockCode& c, const EdgePresentation& p);

struct ComponentAction {
    std::vector<int> class_image;   // flattened class id -> flattened class id
    bool is_permutation = false;
};

/// Where the code sends each cyclic class of a non-wandering presentation.
ComponentAction component_action(const SlidingBlockCode& c, const EdgePresentation& p,
                                 const SpectralDecomposition& d);

}  // namespace eden

#endif  // EDEN_CODE_HPP
