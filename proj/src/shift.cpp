#include "eden/shift.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace eden {

ParseError::ParseError(const std::string& msg, int line_no)
    : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
      line(line_no) {}

bool Alphabet::valid_token(const std::string& token) {
    if (token.empty()) return false;
    for (char c : token) {
        if (c == '.' || c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw ParseError("alphabet must be non-empty");
    for (size_t i = 0; i < tokens_.size(); ++i) {
        if (!valid_token(tokens_[i]))
            throw ParseError("invalid symbol token '" + tokens_[i] + "'");
        auto [it, fresh] = index_.emplace(tokens_[i], static_cast<Symbol>(i));
        (void)it;
        if (!fresh) throw ParseError("duplicate symbol token '" + tokens_[i] + "'");
    }
}

Symbol Alphabet::index_of(const std::string& token) const {
    auto it = index_.find(token);
    return it == index_.end() ? -1 : it->second;
}

std::string format_word(const Alphabet& a, const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        out += a.token(w[i]);
    }
    return out;
}

Word parse_dotted_word(const Alphabet& a, const std::string& text, int line) {
    Word w;
    if (text.empty()) return w;
    size_t start = 0;
    while (true) {
        size_t dot = text.find('.', start);
        std::string tok = text.substr(start, dot == std::string::npos ? dot : dot - start);
        Symbol s = a.index_of(tok);
        if (s < 0) throw ParseError("unknown symbol '" + tok + "' in word '" + text + "'", line);
        w.push_back(s);
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return w;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

// Enumerates all |A|^n words of length n in lexicographic order.
void for_each_full_word(int alphabet_size, int n, const std::function<void(const Word&)>& fn) {
    Word w(static_cast<size_t>(n), 0);
    while (true) {
        fn(w);
        int i = n - 1;
        while (i >= 0 && w[static_cast<size_t>(i)] == alphabet_size - 1) {
            w[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++w[static_cast<size_t>(i)];
    }
}

}  // namespace

SftSpec parse_spec(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    bool saw_alphabet = false, saw_step = false;
    std::vector<std::string> tokens;
    int step = 0;
    std::vector<std::pair<std::string, int>> allowed_words, forbidden_words;

    while (std::getline(in, raw)) {
        ++line_no;
        auto parts = tokenize(strip_comment(raw));
        if (parts.empty()) continue;
        const std::string& directive = parts[0];
        if (directive == "alphabet") {
            if (saw_alphabet) throw ParseError("duplicate 'alphabet' directive", line_no);
            saw_alphabet = true;
            tokens.assign(parts.begin() + 1, parts.end());
            if (tokens.empty()) throw ParseError("'alphabet' needs at least one symbol", line_no);
        } else if (directive == "step") {
            if (saw_step) throw ParseError("duplicate 'step' directive", line_no);
            saw_step = true;
            if (parts.size() != 2) throw ParseError("'step' takes exactly one integer", line_no);
            try {
                step = std::stoi(parts[1]);
            } catch (const std::exception&) {
                throw ParseError("bad step value '" + parts[1] + "'", line_no);
            }
            if (step < 0) throw ParseError("step must be >= 0", line_no);
        } else if (directive == "allowed" || directive == "forbidden") {
            auto& dest = directive == "allowed" ? allowed_words : forbidden_words;
            for (size_t i = 1; i < parts.size(); ++i) dest.emplace_back(parts[i], line_no);
        } else {
            throw ParseError("unknown directive '" + directive + "'", line_no);
        }
    }

    if (!saw_alphabet) throw ParseError("missing 'alphabet' directive");
    if (!saw_step) throw ParseError("missing 'step' directive");
    if (!allowed_words.empty() && !forbidden_words.empty())
        throw ParseError("'allowed' and 'forbidden' cannot both be given");
    if (allowed_words.empty() && forbidden_words.empty())
        throw ParseError("one of 'allowed' or 'forbidden' is required");

    SftSpec spec;
    spec.alphabet = Alphabet(tokens);
    spec.step = step;

    auto parse_window = [&](const std::pair<std::string, int>& entry) {
        Word w = parse_dotted_word(spec.alphabet, entry.first, entry.second);
        if (static_cast<int>(w.size()) != step + 1)
            throw ParseError("word '" + entry.first + "' has length " +
                                 std::to_string(w.size()) + ", expected " +
                                 std::to_string(step + 1),
                             entry.second);
        return w;
    };

    if (!allowed_words.empty()) {
        for (const auto& entry : allowed_words) spec.allowed.insert(parse_window(entry));
    } else {
        std::set<Word> forbidden;
        for (const auto& entry : forbidden_words) forbidden.insert(parse_window(entry));
        for_each_full_word(spec.alphabet.size(), step + 1, [&](const Word& w) {
            if (!forbidden.count(w)) spec.allowed.insert(w);
        });
    }
    return spec;
}

std::string emit_spec(const SftSpec& spec) {
    std::ostringstream out;
    out << "alphabet";
    for (const auto& tok : spec.alphabet.tokens()) out << ' ' << tok;
    out << "\nstep " << spec.step << "\nallowed";
    for (const auto& w : spec.allowed) out << ' ' << format_word(spec.alphabet, w);
    out << '\n';
    return out.str();
}

int EdgePresentation::find_vertex(const Word& w) const {
    auto it = std::lower_bound(vertex_words.begin(), vertex_words.end(), w);
    if (it == vertex_words.end() || *it != w) return -1;
    return static_cast<int>(it - vertex_words.begin());
}

EdgePresentation higher_block_recode(const SftSpec& spec) {
    EdgePresentation p;
    p.alphabet = spec.alphabet;
    p.step = spec.step;

    if (spec.step == 0) {
        p.vertex_words.push_back({});
        for (const Word& w : spec.allowed) p.edges.push_back({0, 0, w[0]});
        std::sort(p.edges.begin(), p.edges.end());
        return trim_essential(p);
    }

    const int m = spec.step;
    std::set<Word> verts;
    for (const Word& w : spec.allowed) {
        verts.insert(Word(w.begin(), w.begin() + m));
        verts.insert(Word(w.begin() + 1, w.end()));
    }
    p.vertex_words.assign(verts.begin(), verts.end());
    for (const Word& w : spec.allowed) {
        Word src(w.begin(), w.begin() + m);
        Word dst(w.begin() + 1, w.end());
        p.edges.push_back({p.find_vertex(src), p.find_vertex(dst), w.back()});
    }
    std::sort(p.edges.begin(), p.edges.end());
    return trim_essential(p);
}

EdgePresentation trim_essential(const EdgePresentation& p) {
    int n = p.vertex_count();
    std::vector<bool> alive(static_cast<size_t>(n), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> indeg(static_cast<size_t>(n), 0), outdeg(static_cast<size_t>(n), 0);
        for (const Edge& e : p.edges) {
            if (alive[static_cast<size_t>(e.src)] && alive[static_cast<size_t>(e.dst)]) {
                ++outdeg[static_cast<size_t>(e.src)];
                ++indeg[static_cast<size_t>(e.dst)];
            }
        }
        for (int v = 0; v < n; ++v) {
            if (alive[static_cast<size_t>(v)] &&
                (indeg[static_cast<size_t>(v)] == 0 || outdeg[static_cast<size_t>(v)] == 0)) {
                alive[static_cast<size_t>(v)] = false;
                changed = true;
            }
        }
    }

    EdgePresentation out;
    out.alphabet = p.alphabet;
    out.step = p.step;
    std::vector<int> remap(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (alive[static_cast<size_t>(v)]) {
            remap[static_cast<size_t>(v)] = out.vertex_count();
            out.vertex_words.push_back(p.vertex_words[static_cast<size_t>(v)]);
        }
    }
    for (const Edge& e : p.edges) {
        int s = remap[static_cast<size_t>(e.src)], d = remap[static_cast<size_t>(e.dst)];
        if (s >= 0 && d >= 0) out.edges.push_back({s, d, e.sym});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::set<Word> language(const EdgePresentation& p, int n) {
    std::set<Word> out;
    if (p.empty()) return out;
    if (n < 0) throw Error("language: negative length");

    // frontier: word read so far -> set of possible end vertices
    std::map<Word, std::set<int>> frontier;
    std::set<int> all;
    for (int v = 0; v < p.vertex_count(); ++v) all.insert(v);
    frontier.emplace(Word{}, all);

    for (int k = 0; k < n; ++k) {
        std::map<Word, std::set<int>> next;
        for (const auto& [w, ends] : frontier) {
            for (const Edge& e : p.edges) {
                if (!ends.count(e.src)) continue;
                Word w2 = w;
                w2.push_back(e.sym);
                next[w2].insert(e.dst);
            }
        }
        frontier = std::move(next);
    }
    for (const auto& [w, ends] : frontier) {
        (void)ends;
        out.insert(w);
    }
    return out;
}

SubsetAutomaton::SubsetAutomaton(int vertex_count, const std::vector<Edge>& edges,
                                 int alphabet_size) {
    std::vector<std::vector<std::vector<int>>> targets(
        static_cast<size_t>(vertex_count),
        std::vector<std::vector<int>>(static_cast<size_t>(alphabet_size)));
    for (const Edge& e : edges)
        targets[static_cast<size_t>(e.src)][static_cast<size_t>(e.sym)].push_back(e.dst);

    std::map<std::vector<int>, int> state_id;
    std::vector<int> full(static_cast<size_t>(vertex_count));
    std::iota(full.begin(), full.end(), 0);
    state_id.emplace(full, 0);
    states_.push_back(full);
    delta_.emplace_back();
    for (size_t cur = 0; cur < states_.size(); ++cur) {
        for (Symbol s = 0; s < alphabet_size; ++s) {
            std::set<int> nxt;
            for (int v : states_[cur])
                for (int t : targets[static_cast<size_t>(v)][static_cast<size_t>(s)])
                    nxt.insert(t);
            if (nxt.empty()) continue;
            std::vector<int> key(nxt.begin(), nxt.end());
            auto [it, fresh] = state_id.emplace(key, static_cast<int>(states_.size()));
            if (fresh) {
                states_.push_back(key);
                delta_.emplace_back();
            }
            delta_[cur][s] = it->second;
        }
        if (states_.size() > (1u << 20))
            throw InternalError("subset construction exceeded the state cap");
    }
}

int SubsetAutomaton::step(int state, Symbol s) const {
    if (state < 0) return -1;
    auto it = delta_[static_cast<size_t>(state)].find(s);
    return it == delta_[static_cast<size_t>(state)].end() ? -1 : it->second;
}

BigInt language_count(const EdgePresentation& p, int n) {
    if (p.empty()) return 0;
    if (n == 0) return 1;
    SubsetAutomaton run(p.vertex_count(), p.edges, p.alphabet.size());
    // Count length-n paths from the start state; determinism makes paths and
    // words coincide.
    std::vector<BigInt> cnt(static_cast<size_t>(run.state_count()), 0);
    cnt[0] = 1;
    for (int k = 0; k < n; ++k) {
        std::vector<BigInt> nxt(static_cast<size_t>(run.state_count()), 0);
        for (size_t st = 0; st < cnt.size(); ++st) {
            if (cnt[st] == 0) continue;
            for (const auto& [sym, to] : run.transitions(static_cast<int>(st))) {
                (void)sym;
                nxt[static_cast<size_t>(to)] += cnt[st];
            }
        }
        cnt = std::move(nxt);
    }
    BigInt total = 0;
    for (const BigInt& c : cnt) total += c;
    return total;
}

bool language_contains(const EdgePresentation& p, const Word& w) {
    if (p.empty()) return false;
    SubsetAutomaton run(p.vertex_count(), p.edges, p.alphabet.size());
    int state = run.start();
    for (Symbol s : w) {
        state = run.step(state, s);
        if (state < 0) return false;
    }
    return true;
}

Symbol PeriodicConfiguration::at(long long n) const {
    auto size = static_cast<long long>(repeating.size());
    long long i = ((n % size) + size) % size;
    return repeating[static_cast<size_t>(i)];
}

bool is_allowed(const SftSpec& spec, const PeriodicConfiguration& x) {
    if (x.repeating.empty()) return false;
    const int window = spec.step + 1;
    for (int start = 0; start < x.period(); ++start) {
        Word w;
        for (int j = 0; j < window; ++j) w.push_back(x.at(start + j));
        if (!spec.window_allowed(w)) return false;
    }
    return true;
}

Symbol EpConfig::at(long long n) const {
    if (n >= bridge_end()) {
        auto size = static_cast<long long>(right.size());
        long long i = (n - bridge_end()) % size;
        return right[static_cast<size_t>(i)];
    }
    if (n >= offset) return bridge[static_cast<size_t>(n - offset)];
    auto size = static_cast<long long>(left.size());
    long long i = ((n - offset) % size + size) % size;
    return left[static_cast<size_t>(i)];
}

EpConfig EpConfig::shifted(long long k) const {
    EpConfig out = *this;
    out.offset += k;
    return out;
}

EpConfig make_constant_ep(Symbol s) {
    return EpConfig{{s}, {}, {s}, 0};
}

EpConfig ep_from_periodic(const PeriodicConfiguration& x) {
    return EpConfig{x.repeating, {}, x.repeating, 0};
}

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

struct CompareWindow {
    long long lo, hi;       // coordinates to compare directly
    long long tail_l, tail_r;  // combined tail periods
};

CompareWindow compare_window(const EpConfig& u, const EpConfig& v) {
    CompareWindow w;
    w.tail_l = lcm_ll(static_cast<long long>(u.left.size()), static_cast<long long>(v.left.size()));
    w.tail_r = lcm_ll(static_cast<long long>(u.right.size()), static_cast<long long>(v.right.size()));
    long long bl = std::min(u.bridge_begin(), v.bridge_begin());
    long long br = std::max(u.bridge_end(), v.bridge_end());
    w.lo = bl - w.tail_l;
    w.hi = br + w.tail_r - 1;
    return w;
}

}  // namespace

bool ep_equal(const EpConfig& u, const EpConfig& v) {
    CompareWindow w = compare_window(u, v);
    // Beyond the window both configurations are purely periodic with periods
    // dividing tail_l / tail_r, so agreement on the window is agreement
    // everywhere.
    for (long long n = w.lo; n <= w.hi; ++n)
        if (u.at(n) != v.at(n)) return false;
    return true;
}

DifferenceProfile difference_profile(const EpConfig& u, const EpConfig& v) {
    CompareWindow w = compare_window(u, v);
    DifferenceProfile out;
    long long bl = std::min(u.bridge_begin(), v.bridge_begin());
    long long br = std::max(u.bridge_end(), v.bridge_end());
    for (long long n = w.lo; n < bl; ++n)
        if (u.at(n) != v.at(n)) out.left_tail_differs = true;
    for (long long n = br; n <= w.hi; ++n)
        if (u.at(n) != v.at(n)) out.right_tail_differs = true;
    if (out.left_tail_differs || out.right_tail_differs) return out;
    for (long long n = bl; n < br; ++n)
        if (u.at(n) != v.at(n)) out.finite_positions.push_back(n);
    return out;
}

bool is_allowed(const SftSpec& spec, const EpConfig& x) {
    if (x.left.empty() || x.right.empty()) return false;
    const int window = spec.step + 1;
    long long lo = x.bridge_begin() - static_cast<long long>(x.left.size()) - window;
    long long hi = x.bridge_end() + static_cast<long long>(x.right.size()) + window;
    for (long long n = lo; n <= hi; ++n) {
        Word w;
        for (int j = 0; j < window; ++j) w.push_back(x.at(n + j));
        if (!spec.window_allowed(w)) return false;
    }
    return true;
}

std::string format_ep(const Alphabet& a, const EpConfig& x) {
    std::ostringstream out;
    out << "left=" << format_word(a, x.left) << " bridge=" << format_word(a, x.bridge)
        << " right=" << format_word(a, x.right) << " offset=" << x.offset;
    return out.str();
}

EpConfig parse_ep(const Alphabet& a, const std::string& text, int line) {
    EpConfig x;
    bool saw_left = false, saw_bridge = false, saw_right = false, saw_offset = false;
    for (const std::string& field : tokenize(text)) {
        size_t eq = field.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad field '" + field + "' in configuration", line);
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "left") {
            x.left = parse_dotted_word(a, value, line);
            saw_left = true;
        } else if (key == "bridge") {
            x.bridge = parse_dotted_word(a, value, line);
            saw_bridge = true;
        } else if (key == "right") {
            x.right = parse_dotted_word(a, value, line);
            saw_right = true;
        } else if (key == "offset") {
            try {
                x.offset = std::stoll(value);
            } catch (const std::exception&) {
                throw ParseError("bad offset '" + value + "'", line);
            }
            saw_offset = true;
        } else {
            throw ParseError("unknown field '" + key + "' in configuration", line);
        }
    }
    if (!saw_left || !saw_bridge || !saw_right || !saw_offset)
        throw ParseError("configuration needs left=, bridge=, right=, offset=", line);
    if (x.left.empty() || x.right.empty())
        throw ParseError("configuration cycles must be non-empty", line);
    return x;
}

}  // namespace eden
