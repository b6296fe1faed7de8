#include "eden/code.hpp"

#include <algorithm>
#include <sstream>

namespace eden {

Symbol SlidingBlockCode::output(const Word& window) const {
    auto it = rule.find(window);
    if (it == rule.end())
        throw InternalError("rule lookup failed for window '" + format_word(ambient.alphabet, window) + "'");
    return it->second;
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

}  // namespace

SlidingBlockCode parse_code(const std::string& text, const SftSpec& ambient,
                            std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    std::optional<int> memory, anticipation;
    std::vector<std::tuple<std::string, std::string, int>> rule_lines;

    while (std::getline(in, raw)) {
        ++line_no;
        auto parts = tokenize(strip_comment(raw));
        if (parts.empty()) continue;
        const std::string& directive = parts[0];
        if (directive == "memory" || directive == "anticipation") {
            auto& slot = directive == "memory" ? memory : anticipation;
            if (slot) throw ParseError("duplicate '" + directive + "' directive", line_no);
            if (parts.size() != 2) throw ParseError("'" + directive + "' takes one integer", line_no);
            int value;
            try {
                value = std::stoi(parts[1]);
            } catch (const std::exception&) {
                throw ParseError("bad value '" + parts[1] + "'", line_no);
            }
            if (value < 0) throw ParseError("'" + directive + "' must be >= 0", line_no);
            slot = value;
        } else if (directive == "rule") {
            if (parts.size() != 3) throw ParseError("'rule' takes a window and a symbol", line_no);
            rule_lines.emplace_back(parts[1], parts[2], line_no);
        } else {
            throw ParseError("unknown directive '" + directive + "'", line_no);
        }
    }
    if (!memory) throw ParseError("missing 'memory' directive");
    if (!anticipation) throw ParseError("missing 'anticipation' directive");

    SlidingBlockCode c;
    c.ambient = ambient;
    c.memory = *memory;
    c.anticipation = *anticipation;

    EdgePresentation p = higher_block_recode(ambient);
    std::set<Word> windows = language(p, c.window_length());
    if (windows.empty()) throw ParseError("cannot define a code on the empty shift");

    for (const auto& [window_text, sym_text, line] : rule_lines) {
        Word w = parse_dotted_word(ambient.alphabet, window_text, line);
        Symbol s = ambient.alphabet.index_of(sym_text);
        if (s < 0) throw ParseError("unknown symbol '" + sym_text + "'", line);
        if (static_cast<int>(w.size()) != c.window_length())
            throw ParseError("window '" + window_text + "' has length " + std::to_string(w.size()) +
                                 ", expected " + std::to_string(c.window_length()),
                             line);
        if (!windows.count(w)) {
            if (warnings)
                warnings->push_back("line " + std::to_string(line) + ": window '" + window_text +
                                    "' is not in the shift language; ignored");
            continue;
        }
        if (c.rule.count(w))
            throw ParseError("duplicate rule for window '" + window_text + "'", line);
        c.rule[w] = s;
    }
    for (const Word& w : windows) {
        if (!c.rule.count(w))
            throw ParseError("missing rule for window '" + format_word(ambient.alphabet, w) + "'");
    }
    return c;
}

std::string emit_code(const SlidingBlockCode& c) {
    std::ostringstream out;
    out << "memory " << c.memory << "\nanticipation " << c.anticipation << '\n';
    for (const auto& [w, s] : c.rule)
        out << "rule " << format_word(c.ambient.alphabet, w) << ' ' << c.ambient.alphabet.token(s)
            << '\n';
    return out.str();
}

Word apply_to_word(const SlidingBlockCode& c, const Word& w) {
    const int window = c.window_length();
    if (static_cast<int>(w.size()) < window)
        throw Error("apply_to_word: word shorter than the code window");
    Word out;
    for (size_t i = 0; i + static_cast<size_t>(window) <= w.size(); ++i)
        out.push_back(c.output(Word(w.begin() + static_cast<long>(i),
                                    w.begin() + static_cast<long>(i) + window)));
    return out;
}

EndomorphismCheck validate_endomorphism(const SlidingBlockCode& c, const EdgePresentation& p) {
    EndomorphismCheck result;
    const int source_len = c.window_length() + c.ambient.step;
    for (const Word& w : language(p, source_len)) {
        Word image = apply_to_word(c, w);   // length step+1
        if (!c.ambient.window_allowed(image)) {
            result.ok = false;
            result.violating_source = w;
            result.forbidden_image = image;
            return result;   // language() iterates lex order: first hit is lex-least
        }
    }
    return result;
}

PeriodicConfiguration apply_to_periodic(const SlidingBlockCode& c,
                                        const PeriodicConfiguration& x) {
    PeriodicConfiguration out;
    for (int i = 0; i < x.period(); ++i) {
        Word window;
        for (int j = -c.memory; j <= c.anticipation; ++j) window.push_back(x.at(i + j));
        out.repeating.push_back(c.output(window));
    }
    return out;
}

EpConfig apply_to_ep(const SlidingBlockCode& c, const EpConfig& x) {
    const long long mem = c.memory, ant = c.anticipation;
    const long long left_len = static_cast<long long>(x.left.size());
    const long long right_len = static_cast<long long>(x.right.size());

    auto image_at = [&](long long n) {
        Word window;
        for (long long j = n - mem; j <= n + ant; ++j) window.push_back(x.at(j));
        return c.output(window);
    };

    // The image is purely left-periodic where the whole window sits in the
    // left tail, and right-periodic symmetrically.
    const long long start = x.bridge_begin() - ant - left_len;
    const long long end = x.bridge_end() + mem + right_len;   // exclusive

    EpConfig out;
    out.offset = start;
    for (long long n = start; n < end; ++n) out.bridge.push_back(image_at(n));
    for (long long j = 0; j < left_len; ++j) out.left.push_back(image_at(start - left_len + j));
    for (long long j = 0; j < right_len; ++j) out.right.push_back(image_at(end + j));
    return out;
}

SlidingBlockCode compose(const SlidingBlockCode& outer, const SlidingBlockCode& inner,
                         const EdgePresentation& p) {
    if (!(outer.ambient.alphabet == inner.ambient.alphabet) ||
        outer.ambient.step != inner.ambient.step || outer.ambient.allowed != inner.ambient.allowed)
        throw Error("compose: codes live on different shifts");
    SlidingBlockCode out;
    out.ambient = inner.ambient;
    out.memory = inner.memory + outer.memory;
    out.anticipation = inner.anticipation + outer.anticipation;
    for (const Word& w : language(p, out.window_length())) {
        Word mid = apply_to_word(inner, w);
        out.rule[w] = outer.output(mid);
    }
    return out;
}

SlidingBlockCode power(const SlidingBlockCode& c, int k, const EdgePresentation& p) {
    if (k < 1) throw Error("power: exponent must be >= 1");
    SlidingBlockCode out = c;
    for (int i = 1; i < k; ++i) out = compose(c, out, p);
    return out;
}

SoficPresentation as_sofic(const EdgePresentation& p) {
    SoficPresentation s;
    s.alphabet = p.alphabet;
    s.vertex_count = p.vertex_count();
    s.vertex_words = p.vertex_words;
    s.edges = p.edges;
    return s;
}

SoficPresentation image_sofic(const SlidingBlockCode& c, const EdgePresentation& p) {
    // Vertex words must be long enough both to carry the code window and to
    // glue into genuine points of the ambient shift.
    const int vertex_len = std::max(c.memory + c.anticipation, c.ambient.step);
    const int edge_len = vertex_len + 1;

    std::set<Word> verts_set;
    std::set<Word> edge_source_words = language(p, edge_len);
    for (const Word& w : edge_source_words) {
        verts_set.insert(Word(w.begin(), w.end() - 1));
        verts_set.insert(Word(w.begin() + 1, w.end()));
    }
    std::vector<Word> verts(verts_set.begin(), verts_set.end());
    auto vertex_id = [&](const Word& w) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), w) - verts.begin());
    };

    SoficPresentation s;
    s.alphabet = p.alphabet;
    s.vertex_count = static_cast<int>(verts.size());
    s.vertex_words = verts;
    for (const Word& w : edge_source_words) {
        Word window(w.begin(), w.begin() + c.window_length());
        Edge e;
        e.src = vertex_id(Word(w.begin(), w.end() - 1));
        e.dst = vertex_id(Word(w.begin() + 1, w.end()));
        e.sym = c.output(window);
        s.edges.push_back(e);
        s.edge_words.push_back(w);
    }

    // Trim vertices off bi-infinite paths (keeps edge_words aligned).
    std::vector<bool> alive(static_cast<size_t>(s.vertex_count), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> indeg(static_cast<size_t>(s.vertex_count), 0),
            outdeg(static_cast<size_t>(s.vertex_count), 0);
        for (const Edge& e : s.edges)
            if (alive[static_cast<size_t>(e.src)] && alive[static_cast<size_t>(e.dst)]) {
                ++outdeg[static_cast<size_t>(e.src)];
                ++indeg[static_cast<size_t>(e.dst)];
            }
        for (int v = 0; v < s.vertex_count; ++v)
            if (alive[static_cast<size_t>(v)] &&
                (indeg[static_cast<size_t>(v)] == 0 || outdeg[static_cast<size_t>(v)] == 0)) {
                alive[static_cast<size_t>(v)] = false;
                changed = true;
            }
    }
    SoficPresentation out;
    out.alphabet = s.alphabet;
    std::vector<int> remap(static_cast<size_t>(s.vertex_count), -1);
    for (int v = 0; v < s.vertex_count; ++v)
        if (alive[static_cast<size_t>(v)]) {
            remap[static_cast<size_t>(v)] = out.vertex_count++;
            out.vertex_words.push_back(s.vertex_words[static_cast<size_t>(v)]);
        }
    for (size_t i = 0; i < s.edges.size(); ++i) {
        const Edge& e = s.edges[i];
        int a = remap[static_cast<size_t>(e.src)], b = remap[static_cast<size_t>(e.dst)];
        if (a >= 0 && b >= 0) {
            out.edges.push_back({a, b, e.sym});
            out.edge_words.push_back(s.edge_words[i]);
        }
    }
    return out;
}

ComponentAction component_action(const SlidingBlockCode& c, const EdgePresentation& p,
                                 const SpectralDecomposition& d) {
    if (!is_nonwandering(p))
        throw Error("component_action: ambient presentation is not non-wandering");

    // Map a periodic point to the flattened class of its time-0 vertex.
    auto class_of_point = [&](const PeriodicConfiguration& x) {
        Word vertex_word;
        for (int j = -p.step + 1; j <= 0; ++j) vertex_word.push_back(x.at(j));
        int v = p.find_vertex(vertex_word);
        if (v < 0) throw InternalError("component_action: image point left the presentation");
        int cls = d.class_id_of(v);
        if (cls < 0) throw InternalError("component_action: image point in a wandering vertex");
        return cls;
    };

    ComponentAction action;
    action.class_image.assign(static_cast<size_t>(d.total_classes()), -1);

    for (size_t comp = 0; comp < d.components.size(); ++comp) {
        const auto& component = d.components[comp];
        for (int cls = 0; cls < component.cycle_period; ++cls) {
            int flat = d.flat_id(static_cast<int>(comp), cls);
            int image_class = -1;
            for (int v : component.classes[static_cast<size_t>(cls)]) {
                // Symbols along the cycle are x_1..x_p for a point whose
                // time-0 vertex is v; rotate right by one to get x_0..x_{p-1}.
                std::vector<Symbol> syms = shortest_cycle_symbols(p, v);
                PeriodicConfiguration x;
                x.repeating.push_back(syms.back());
                x.repeating.insert(x.repeating.end(), syms.begin(), syms.end() - 1);
                PeriodicConfiguration y = apply_to_periodic(c, x);
                int got = class_of_point(y);
                if (image_class == -1)
                    image_class = got;
                else if (image_class != got)
                    throw InternalError("component_action: class image is not a single class");
            }
            action.class_image[static_cast<size_t>(flat)] = image_class;
        }
    }

    std::vector<int> sorted = action.class_image;
    std::sort(sorted.begin(), sorted.end());
    action.is_permutation = true;
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i)) action.is_permutation = false;
    return action;
}

}  // namespace eden
