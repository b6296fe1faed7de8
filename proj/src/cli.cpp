#include "eden/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eden/dynamics.hpp"
#include "eden/harness.hpp"
#include "eden/report.hpp"

namespace eden {

namespace {

constexpr int kStatusOk = 0;
constexpr int kStatusUsage = 1;
constexpr int kStatusInvalidCode = 2;
constexpr int kStatusViolation = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fmt_double(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

std::string pad2(int n) {
    std::string s = std::to_string(n);
    return s.size() < 2 ? "0" + s : s;
}

std::string pad3(int n) {
    std::string s = std::to_string(n);
    while (s.size() < 3) s = "0" + s;
    return s;
}

std::string vertex_label(const Alphabet& a, const Word& w) {
    return w.empty() ? "-" : format_word(a, w);
}

std::string edge_label(const EdgePresentation& p, const Edge& e) {
    return vertex_label(p.alphabet, p.vertex_words[static_cast<size_t>(e.src)]) + ">" +
           vertex_label(p.alphabet, p.vertex_words[static_cast<size_t>(e.dst)]) + ":" +
           p.alphabet.token(e.sym);
}

void emit(const Report& report, const std::string& format, std::ostream& out) {
    out << (format == "canonical" ? report.canonical() : report.human());
}

int cmd_analyze(const std::string& shift_path, const std::string& format, std::ostream& out) {
    std::string text = read_file(shift_path);
    SftSpec spec = parse_spec(text);
    EdgePresentation p = higher_block_recode(spec);

    Report r;
    r.set("command", std::string("analyze"));
    r.set("input.shift.digest", content_digest(text));
    r.set("alphabet", format_word(spec.alphabet,
                                  [&] {
                                      Word w;
                                      for (int s = 0; s < spec.alphabet.size(); ++s) w.push_back(s);
                                      return w;
                                  }()));
    r.set("step", static_cast<long long>(spec.step));
    r.set("empty", p.empty());
    if (p.empty()) {
        r.set("status", static_cast<long long>(kStatusOk));
        emit(r, format, out);
        return kStatusOk;
    }

    r.set("vertices", static_cast<long long>(p.vertex_count()));
    r.set("edges", static_cast<long long>(p.edge_count()));
    for (int v = 0; v < p.vertex_count(); ++v)
        r.set("vertex." + pad2(v), vertex_label(p.alphabet, p.vertex_words[static_cast<size_t>(v)]));

    bool irreducible = is_irreducible(p);
    bool mixing = is_mixing(p);
    bool nonwandering = is_nonwandering(p);
    r.set("irreducible", irreducible);
    r.set("mixing", mixing);
    r.set("nonwandering", nonwandering);
    if (irreducible) r.set("period", static_cast<long long>(period(p)));
    if (mixing) r.set("mixing_gap", static_cast<long long>(mixing_gap(p)));

    EntropyResult h = entropy(p);
    r.set("entropy", fmt_double(h.value));
    r.set("entropy.radius", fmt_double(h.radius()));

    for (int n = 1; n <= 10; ++n) {
        r.set("periodic." + pad2(n), count_periodic(p, n).str());
        r.set("periodic_least." + pad2(n), count_least_period(p, n).str());
    }

    auto wandering = wandering_edges(p);
    r.set("wandering.edge_count", static_cast<long long>(wandering.size()));
    if (!wandering.empty()) {
        std::string joined;
        for (size_t i = 0; i < wandering.size(); ++i) {
            if (i) joined += ",";
            joined += edge_label(p, wandering[i]);
        }
        r.set("wandering.edges", joined);
    }

    EdgePresentation nwp = nonwandering_part(p);
    SpectralDecomposition d = spectral_decomposition(nwp);
    r.set("nw.vertices", static_cast<long long>(nwp.vertex_count()));
    r.set("nw.components", static_cast<long long>(d.components.size()));
    for (size_t ci = 0; ci < d.components.size(); ++ci) {
        const auto& comp = d.components[ci];
        std::string prefix = "nw.component." + pad2(static_cast<int>(ci));
        r.set(prefix + ".period", static_cast<long long>(comp.cycle_period));
        for (int k = 0; k < comp.cycle_period; ++k) {
            std::string members;
            for (size_t j = 0; j < comp.classes[static_cast<size_t>(k)].size(); ++j) {
                if (j) members += ",";
                members += vertex_label(
                    nwp.alphabet,
                    nwp.vertex_words[static_cast<size_t>(comp.classes[static_cast<size_t>(k)][j])]);
            }
            r.set(prefix + ".class." + pad2(k), members);
        }
    }

    r.set("status", static_cast<long long>(kStatusOk));
    emit(r, format, out);
    return kStatusOk;
}

int cmd_decide(const std::string& shift_path, const std::string& code_path,
               const std::string& format, std::ostream& out) {
    std::string sft_text = read_file(shift_path);
    std::string sbc_text = read_file(code_path);
    SftSpec spec = parse_spec(sft_text);
    EdgePresentation p = higher_block_recode(spec);
    if (p.empty()) throw ParseError("the shift is empty; nothing to decide");

    Report r;
    r.set("command", std::string("decide"));
    r.set("input.shift.digest", content_digest(sft_text));
    r.set("input.code.digest", content_digest(sbc_text));

    std::vector<std::string> warnings;
    SlidingBlockCode code = parse_code(sbc_text, spec, &warnings);
    for (size_t i = 0; i < warnings.size(); ++i)
        r.set("warning." + pad2(static_cast<int>(i)), warnings[i]);
    r.set("code.memory", static_cast<long long>(code.memory));
    r.set("code.anticipation", static_cast<long long>(code.anticipation));

    EndomorphismCheck check = validate_endomorphism(code, p);
    if (!check.ok) {
        r.set("endomorphism", false);
        r.set("endomorphism.violating_word", format_word(spec.alphabet, check.violating_source));
        r.set("endomorphism.forbidden_image", format_word(spec.alphabet, check.forbidden_image));
        r.set("status", static_cast<long long>(kStatusInvalidCode));
        emit(r, format, out);
        return kStatusInvalidCode;
    }
    r.set("endomorphism", true);

    DecisionReport verdict = goe_verdict(code, p);
    r.set("ambient.irreducible", verdict.ambient_irreducible);
    r.set("ambient.nonwandering", verdict.ambient_nonwandering);
    if (!verdict.ambient_nonwandering) {
        auto wandering = wandering_edges(p);
        std::string joined;
        for (size_t i = 0; i < wandering.size(); ++i) {
            if (i) joined += ",";
            joined += edge_label(p, wandering[i]);
        }
        r.set("ambient.wandering_edges", joined);
    }
    r.set("injective", verdict.injective);
    r.set("surjective", verdict.surjective);
    r.set("pre_injective", verdict.pre_injective);
    r.set("moore_consistent", verdict.moore_consistent);
    r.set("myhill_consistent", verdict.myhill_consistent);
    r.set("surjunctive_consistent", verdict.surjunctive_consistent);
    r.set("violation", verdict.violation());
    if (verdict.non_surjective_witness)
        r.set("witness.non_surjective", format_word(spec.alphabet, *verdict.non_surjective_witness));
    if (verdict.non_injective_witness) {
        r.set("witness.non_injective.x", format_ep(spec.alphabet, verdict.non_injective_witness->x));
        r.set("witness.non_injective.y", format_ep(spec.alphabet, verdict.non_injective_witness->y));
    }
    if (verdict.non_pre_injective_witness) {
        r.set("witness.non_pre_injective.x",
              format_ep(spec.alphabet, verdict.non_pre_injective_witness->x));
        r.set("witness.non_pre_injective.y",
              format_ep(spec.alphabet, verdict.non_pre_injective_witness->y));
    }

    int status = verdict.violation() ? kStatusViolation : kStatusOk;
    r.set("status", static_cast<long long>(status));
    emit(r, format, out);
    return status;
}

int cmd_scan(const std::string& shift_path, const ScanConfig& cfg, const std::string& format,
             std::ostream& out) {
    std::string text = read_file(shift_path);
    SftSpec spec = parse_spec(text);

    ScanResult result = scan_theorems(spec, cfg);

    Report r;
    r.set("command", std::string("scan"));
    r.set("input.shift.digest", content_digest(text));
    r.set("config.memory_max", static_cast<long long>(cfg.memory_max));
    r.set("config.anticipation_max", static_cast<long long>(cfg.anticipation_max));
    r.set("config.window_min", static_cast<long long>(cfg.window_min));
    r.set("config.window_max", static_cast<long long>(cfg.effective_window_max()));
    r.set("scan.ambient.irreducible", result.ambient_irreducible);
    r.set("scan.ambient.nonwandering", result.ambient_nonwandering);
    r.set("scan.candidates", result.candidates);
    r.set("scan.valid", result.valid);
    r.set("scan.injective", result.injective);
    r.set("scan.surjective", result.surjective);
    r.set("scan.pre_injective", result.pre_injective);
    r.set("scan.entropy_cross_checks", result.entropy_cross_checks);
    r.set("scan.violations", static_cast<long long>(result.violations.size()));
    if (result.myhill_failure) {
        r.set("scan.myhill_failure.index", result.myhill_failure->code_index);
        r.set("scan.myhill_failure.missing_word",
              format_word(spec.alphabet, result.myhill_failure->missing_word));
        r.set("scan.myhill_failure.sbc", result.myhill_failure->sbc);
    }
    for (size_t i = 0; i < result.violations.size(); ++i) {
        std::string prefix = "violation." + pad3(static_cast<int>(i));
        r.set(prefix + ".index", result.violations[i].code_index);
        r.set(prefix + ".kind", result.violations[i].kind);
        r.set(prefix + ".sbc", result.violations[i].sbc);
    }

    int status = result.violations.empty() ? kStatusOk : kStatusViolation;
    r.set("status", static_cast<long long>(status));
    emit(r, format, out);
    return status;
}

FinitePseudoOrbit parse_orbit_file(const std::string& text, const Alphabet& alphabet) {
    FinitePseudoOrbit po;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool saw_delta = false;
    while (std::getline(in, raw)) {
        ++line_no;
        size_t hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first)) continue;
        if (first == "delta") {
            if (saw_delta) throw ParseError("duplicate 'delta' line", line_no);
            std::string value;
            if (!(probe >> value)) throw ParseError("'delta' needs a dyadic value", line_no);
            po.delta = MetricValue::parse(value, line_no);
            saw_delta = true;
        } else {
            po.entries.push_back(parse_ep(alphabet, line, line_no));
        }
    }
    if (!saw_delta) throw ParseError("pseudo-orbit file is missing the 'delta' line");
    if (po.entries.empty()) throw ParseError("pseudo-orbit file has no entries");
    return po;
}

int cmd_trace(const std::string& shift_path, const std::string& orbit_path,
              const std::string& epsilon_text, const std::string& format, std::ostream& out) {
    std::string sft_text = read_file(shift_path);
    std::string orbit_text = read_file(orbit_path);
    SftSpec spec = parse_spec(sft_text);
    EdgePresentation p = higher_block_recode(spec);
    FinitePseudoOrbit po = parse_orbit_file(orbit_text, spec.alphabet);
    MetricValue epsilon = MetricValue::parse(epsilon_text);

    Report r;
    r.set("command", std::string("trace"));
    r.set("input.shift.digest", content_digest(sft_text));
    r.set("input.orbit.digest", content_digest(orbit_text));
    r.set("trace.entries", static_cast<long long>(po.entries.size()));
    r.set("trace.delta", po.delta.str());
    r.set("trace.epsilon", epsilon.str());

    ShadowResult traced;
    try {
        traced = shadow(spec, p, po, epsilon);
    } catch (const ShadowError& e) {
        r.set("trace.ok", false);
        r.set("trace.error", std::string(e.what()));
        r.set("trace.achievable_epsilon", e.achievable.str());
        r.set("status", static_cast<long long>(kStatusUsage));
        emit(r, format, out);
        return kStatusUsage;
    }

    r.set("trace.ok", true);
    r.set("trace.point", format_ep(spec.alphabet, traced.point));
    MetricValue worst = MetricValue::zero();
    for (size_t n = 0; n < traced.distances.size(); ++n) {
        r.set("trace.distance." + pad3(static_cast<int>(n)), traced.distances[n].str());
        if (worst < traced.distances[n]) worst = traced.distances[n];
    }
    r.set("trace.max_distance", worst.str());
    r.set("status", static_cast<long long>(kStatusOk));
    emit(r, format, out);
    return kStatusOk;
}

int cmd_examples(const std::string& name, const std::string& write_dir, const std::string& format,
                 std::ostream& out) {
    Report r;
    r.set("command", std::string("examples"));
    if (name.empty()) {
        const auto& all = builtins();
        for (size_t i = 0; i < all.size(); ++i) {
            std::string prefix = "builtin." + pad2(static_cast<int>(i));
            r.set(prefix + ".name", all[i].name);
            r.set(prefix + ".type", std::string(all[i].is_code() ? "code" : "shift"));
            if (all[i].is_code()) r.set(prefix + ".ambient", all[i].ambient_name);
        }
        r.set("status", static_cast<long long>(kStatusOk));
        emit(r, format, out);
        return kStatusOk;
    }

    const Builtin& b = builtin(name);
    r.set("example.name", b.name);
    r.set("example.ambient", b.ambient_name);
    r.set("example.sft", b.sft);
    if (b.is_code()) {
        r.set("example.sbc", b.sbc);
        if (b.expected.injective) r.set("example.expected.injective", *b.expected.injective);
        if (b.expected.surjective) r.set("example.expected.surjective", *b.expected.surjective);
        if (b.expected.pre_injective)
            r.set("example.expected.pre_injective", *b.expected.pre_injective);
    }

    if (!write_dir.empty()) {
        std::filesystem::create_directories(write_dir);
        int written = 0;
        auto write_one = [&](const std::string& filename, const std::string& content) {
            std::filesystem::path path = std::filesystem::path(write_dir) / filename;
            std::ofstream f(path, std::ios::binary);
            if (!f) throw ParseError("cannot write '" + path.string() + "'");
            f << content;
            r.set("written." + pad2(written++), path.string());
        };
        write_one(b.ambient_name + ".sft", b.sft);
        if (b.is_code()) write_one(b.name + ".sbc", b.sbc);
    }

    r.set("status", static_cast<long long>(kStatusOk));
    emit(r, format, out);
    return kStatusOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"decision procedures for endomorphisms of subshifts of finite type"};
    app.require_subcommand(1);

    std::string format = "human";
    int workers = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "canonical"}));
    app.add_option("--workers", workers, "worker threads for scans");

    std::string shift_path, code_path, orbit_path, epsilon_text, example_name, write_dir;
    ScanConfig cfg;
    int window_min = 1, window_max = -1;
    long long cap = 10000000;

    auto* analyze = app.add_subcommand("analyze", "structural analysis of a shift");
    analyze->add_option("shift", shift_path, ".sft file")->required();

    auto* decide = app.add_subcommand("decide", "injectivity / surjectivity / pre-injectivity");
    decide->add_option("shift", shift_path, ".sft file")->required();
    decide->add_option("code", code_path, ".sbc file")->required();

    auto* scan = app.add_subcommand("scan", "verdicts for every code of bounded window");
    scan->add_option("shift", shift_path, ".sft file")->required();
    scan->add_option("--max-memory", cfg.memory_max, "largest memory");
    scan->add_option("--max-anticipation", cfg.anticipation_max, "largest anticipation");
    scan->add_option("--min-window", window_min, "smallest window length");
    scan->add_option("--max-window", window_max, "largest window length");
    scan->add_option("--cap", cap, "candidate table cap");

    auto* trace = app.add_subcommand("trace", "shadow a pseudo-orbit");
    trace->add_option("shift", shift_path, ".sft file")->required();
    trace->add_option("orbit", orbit_path, "pseudo-orbit file")->required();
    trace->add_option("--epsilon", epsilon_text, "tracing distance (2^-k)")->required();

    auto* examples = app.add_subcommand("examples", "named example shifts and codes");
    examples->add_option("name", example_name, "builtin name");
    examples->add_option("--write-dir", write_dir, "write the files into this directory");

    for (auto* sub : {analyze, decide, scan, trace, examples}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kStatusUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(shift_path, format, out);
        if (decide->parsed()) return cmd_decide(shift_path, code_path, format, out);
        if (scan->parsed()) {
            cfg.window_min = window_min;
            cfg.window_max = window_max;
            cfg.table_cap = cap;
            cfg.workers = workers;
            return cmd_scan(shift_path, cfg, format, out);
        }
        if (trace->parsed()) return cmd_trace(shift_path, orbit_path, epsilon_text, format, out);
        if (examples->parsed()) return cmd_examples(example_name, write_dir, format, out);
        err << "error: no command\n";
        return kStatusUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kStatusViolation;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kStatusUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kStatusUsage;
    }
}

}  // namespace eden
