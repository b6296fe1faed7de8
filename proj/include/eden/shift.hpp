// shift.hpp -- alphabets, words, SFT specifications, and edge presentations.

#ifndef EDEN_SHIFT_HPP
#define EDEN_SHIFT_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eden {

using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised on malformed input files; carries a 1-based line number (0 if n/a).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0);
    int line;
};

// Raised when an internal consistency check fails (a bug, not bad input).
class InternalError : public Error {
public:
    using Error::Error;
};

using Symbol = int;
using Word = std::vector<Symbol>;

/// Finite ordered set of symbol tokens. Token order is the canonical
/// iteration order everywhere downstream.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(Symbol s) const { return tokens_.at(static_cast<size_t>(s)); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    // Returns -1 when the token is not in the alphabet.
    Symbol index_of(const std::string& token) const;

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    static bool valid_token(const std::string& token);

private:
    std::vector<std::string> tokens_;
    std::map<std::string, Symbol> index_;
};

// Words print as '.'-joined tokens; the empty word prints as "".
std::string format_word(const Alphabet& a, const Word& w);
Word parse_dotted_word(const Alphabet& a, const std::string& text, int line = 0);

/// An m-step SFT: all bi-infinite sequences whose length-(m+1) windows all
/// belong to `allowed`. `allowed` may be empty (the empty shift).
struct SftSpec {
    Alphabet alphabet;
    int step = 0;
    std::set<Word> allowed;

    bool trivially_empty() const { return allowed.empty(); }
    bool window_allowed(const Word& w) const { return allowed.count(w) != 0; }
};

SftSpec parse_spec(const std::string& text);
std::string emit_spec(const SftSpec& spec);

struct Edge {
    int src = 0;
    int dst = 0;
    Symbol sym = 0;

    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.sym != b.sym) return a.sym < b.sym;
        return a.dst < b.dst;
    }
    friend bool operator==(const Edge& a, const Edge& b) {
        return a.src == b.src && a.dst == b.dst && a.sym == b.sym;
    }
};

/// A directed multigraph presenting a shift: points are bi-infinite edge
/// paths, read through the edge symbols. Vertices carry the window words
/// they came from (length step for step >= 1, the empty word for step 0).
struct EdgePresentation {
    Alphabet alphabet;
    int step = 0;
    std::vector<Word> vertex_words;
    std::vector<Edge> edges;

    int vertex_count() const { return static_cast<int>(vertex_words.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool empty() const { return vertex_words.empty(); }

    // Index of the vertex carrying `w`, or -1.
    int find_vertex(const Word& w) const;
};

/// Recode an m-step spec to a conjugate 1-step edge presentation, trimmed.
EdgePresentation higher_block_recode(const SftSpec& spec);

/// Iteratively delete vertices with in-degree or out-degree zero. The set of
/// bi-infinite paths, and hence the presented shift, is unchanged.
EdgePresentation trim_essential(const EdgePresentation& p);

/// All length-n symbol words read along paths of p, i.e. L_n of the shift.
std::set<Word> language(const EdgePresentation& p, int n);

/// |L_n| without materializing the set (exact integer count).
BigInt language_count(const EdgePresentation& p, int n);

/// Membership of a single word in the language of the presented shift.
bool language_contains(const EdgePresentation& p, const Word& w);

/// Deterministic subset automaton of a labeled graph, started from the set
/// of all vertices. Reading a word leads to the set of endpoints of all
/// paths carrying that label word; a word is a path word iff the reached
/// state is non-empty (encoded as -1, the dead sink).
class SubsetAutomaton {
public:
    SubsetAutomaton(int vertex_count, const std::vector<Edge>& edges, int alphabet_size);

    int start() const { return 0; }
    int step(int state, Symbol s) const;
    int state_count() const { return static_cast<int>(states_.size()); }
    const std::vector<int>& members(int state) const { return states_.at(static_cast<size_t>(state)); }
    const std::map<Symbol, int>& transitions(int state) const {
        return delta_.at(static_cast<size_t>(state));
    }

private:
    std::vector<std::vector<int>> states_;
    std::vector<std::map<Symbol, int>> delta_;
};

/// A point of period n, given as its repeating word of length n.
struct PeriodicConfiguration {
    Word repeating;

    int period() const { return static_cast<int>(repeating.size()); }
    Symbol at(long long n) const;
};

bool is_allowed(const SftSpec& spec, const PeriodicConfiguration& x);

/// A point that is eventually periodic in both directions:
///   ... left left | bridge | right right ...
/// `offset` is the coordinate of the first bridge symbol; the last symbol of
/// a `left` copy sits at coordinate offset-1 and the first symbol of a
/// `right` copy at coordinate offset+len(bridge). Both cycles are non-empty.
struct EventuallyPeriodicConfiguration {
    Word left;
    Word bridge;
    Word right;
    long long offset = 0;

    Symbol at(long long n) const;
    EventuallyPeriodicConfiguration shifted(long long k) const;   // sigma^k

    long long bridge_begin() const { return offset; }
    long long bridge_end() const { return offset + static_cast<long long>(bridge.size()); }
};

using EpConfig = EventuallyPeriodicConfiguration;

EpConfig make_constant_ep(Symbol s);
EpConfig ep_from_periodic(const PeriodicConfiguration& x);

bool ep_equal(const EpConfig& u, const EpConfig& v);
bool is_allowed(const SftSpec& spec, const EpConfig& x);

/// Coordinates where u and v disagree. When a periodic tail disagrees the
/// finite list is meaningless on that side and the corresponding flag is set.
struct DifferenceProfile {
    bool left_tail_differs = false;
    bool right_tail_differs = false;
    std::vector<long long> finite_positions;   // sorted; valid when both flags false

    bool any() const {
        return left_tail_differs || right_tail_differs || !finite_positions.empty();
    }
    bool finite() const { return !left_tail_differs && !right_tail_differs; }
};

DifferenceProfile difference_profile(const EpConfig& u, const EpConfig& v);

std::string format_ep(const Alphabet& a, const EpConfig& x);
EpConfig parse_ep(const Alphabet& a, const std::string& text, int line = 0);

}  // namespace eden

#endif  // EDEN_SHIFT_HPP
