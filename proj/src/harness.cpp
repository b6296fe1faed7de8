#include "eden/harness.hpp"

#include <algorithm>
#include <thread>

namespace eden {

namespace {

struct Block {
    int memory;
    int anticipation;
    std::vector<Word> windows;   // sorted
    long long tables;            // |A|^windows
};

std::vector<Block> enumeration_blocks(const SftSpec& spec, const EdgePresentation& p,
                                      const ScanConfig& cfg) {
    std::vector<Block> blocks;
    long long total = 0;
    for (int mem = 0; mem <= cfg.memory_max; ++mem) {
        for (int ant = 0; ant <= cfg.anticipation_max; ++ant) {
            int window = mem + ant + 1;
            if (window < cfg.window_min || window > cfg.effective_window_max()) continue;
            Block b;
            b.memory = mem;
            b.anticipation = ant;
            auto words = language(p, window);
            b.windows.assign(words.begin(), words.end());
            b.tables = 1;
            for (size_t i = 0; i < b.windows.size(); ++i) {
                b.tables *= spec.alphabet.size();
                if (b.tables > cfg.table_cap || total + b.tables > cfg.table_cap)
                    throw Error("enumeration cap exceeded (" + std::to_string(cfg.table_cap) +
                                " candidate tables)");
            }
            if (b.windows.empty()) b.tables = 0;   // empty shift: nothing to enumerate
            total += b.tables;
            blocks.push_back(std::move(b));
        }
    }
    return blocks;
}

SlidingBlockCode table_to_code(const SftSpec& spec, const Block& b, long long table) {
    SlidingBlockCode c;
    c.ambient = spec;
    c.memory = b.memory;
    c.anticipation = b.anticipation;
    // First window = most significant digit in base |A|.
    long long rest = table;
    for (size_t i = b.windows.size(); i-- > 0;) {
        c.rule[b.windows[i]] = static_cast<Symbol>(rest % spec.alphabet.size());
        rest /= spec.alphabet.size();
    }
    return c;
}

}  // namespace

long long count_candidates(const SftSpec& spec, const EdgePresentation& p,
                           const ScanConfig& cfg) {
    long long total = 0;
    for (const Block& b : enumeration_blocks(spec, p, cfg)) total += b.tables;
    return total;
}

void enumerate_codes(const SftSpec& spec, const EdgePresentation& p, const ScanConfig& cfg,
                     const std::function<void(long long, const SlidingBlockCode&)>& fn) {
    long long index = 0;
    for (const Block& b : enumeration_blocks(spec, p, cfg)) {
        for (long long t = 0; t < b.tables; ++t, ++index) {
            SlidingBlockCode c = table_to_code(spec, b, t);
            if (cfg.only_valid && !validate_endomorphism(c, p).ok) continue;
            fn(index, c);
        }
    }
}

ScanResult scan_theorems(const SftSpec& spec, const ScanConfig& cfg) {
    EdgePresentation p = higher_block_recode(spec);
    ScanResult result;
    result.ambient_irreducible = !p.empty() && is_irreducible(p);
    result.ambient_nonwandering = is_nonwandering(p);

    auto blocks = enumeration_blocks(spec, p, cfg);
    long long total = 0;
    for (const Block& b : blocks) total += b.tables;
    result.candidates = total;

    struct ShardResult {
        long long valid = 0, injective = 0, surjective = 0, pre_injective = 0, entropy = 0;
        std::vector<TheoremViolation> violations;
        std::optional<MyhillFailureExample> myhill_failure;
    };

    auto run_shard = [&](long long begin, long long end, ShardResult& out) {
        long long index = 0;
        for (const Block& b : blocks) {
            if (index + b.tables <= begin || index >= end) {
                index += b.tables;
                continue;
            }
            long long t_lo = std::max<long long>(0, begin - index);
            long long t_hi = std::min<long long>(b.tables, end - index);
            for (long long t = t_lo; t < t_hi; ++t) {
                long long code_index = index + t;
                SlidingBlockCode c = table_to_code(spec, b, t);
                if (!validate_endomorphism(c, p).ok) continue;
                ++out.valid;
                DecisionReport report = goe_verdict(c, p);
                if (result.ambient_irreducible) ++out.entropy;
                if (report.injective) ++out.injective;
                if (report.surjective) ++out.surjective;
                if (report.pre_injective) ++out.pre_injective;
                if (report.pre_injective && !report.surjective && !out.myhill_failure) {
                    MyhillFailureExample ex;
                    ex.code_index = code_index;
                    ex.sbc = emit_code(c);
                    if (report.non_surjective_witness) ex.missing_word = *report.non_surjective_witness;
                    out.myhill_failure = std::move(ex);
                }
                auto record = [&](const char* kind) {
                    out.violations.push_back({code_index, kind, emit_code(c)});
                };
                if (!report.moore_consistent) record("moore");
                if (!report.myhill_consistent) record("myhill");
                if (!report.surjunctive_consistent) record("surjunctivity");
            }
            index += b.tables;
        }
    };

    int workers = std::max(1, cfg.workers);
    std::vector<ShardResult> shards(static_cast<size_t>(workers));
    if (workers == 1) {
        run_shard(0, total, shards[0]);
    } else {
        std::vector<std::thread> threads;
        long long chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            long long begin = w * chunk, end = std::min(total, begin + chunk);
            threads.emplace_back(run_shard, begin, end, std::ref(shards[static_cast<size_t>(w)]));
        }
        for (auto& th : threads) th.join();
    }

    for (const ShardResult& s : shards) {
        result.valid += s.valid;
        result.injective += s.injective;
        result.surjective += s.surjective;
        result.pre_injective += s.pre_injective;
        result.entropy_cross_checks += s.entropy;
        result.violations.insert(result.violations.end(), s.violations.begin(),
                                 s.violations.end());
        if (s.myhill_failure &&
            (!result.myhill_failure ||
             s.myhill_failure->code_index < result.myhill_failure->code_index))
            result.myhill_failure = s.myhill_failure;
    }
    std::sort(result.violations.begin(), result.violations.end(),
              [](const TheoremViolation& a, const TheoremViolation& b) {
                  return std::tie(a.code_index, a.kind) < std::tie(b.code_index, b.kind);
              });
    return result;
}

namespace {

std::vector<Builtin> make_builtins() {
    std::vector<Builtin> all;

    auto add_shift = [&](const std::string& name, const std::string& sft) {
        Builtin b;
        b.name = name;
        b.ambient_name = name;
        b.sft = sft;
        all.push_back(std::move(b));
    };
    auto add_code = [&](const std::string& name, const std::string& ambient,
                        const std::string& sbc, ExpectedVerdicts expected) {
        Builtin b;
        b.name = name;
        b.ambient_name = ambient;
        for (const Builtin& s : all)
            if (s.name == ambient) b.sft = s.sft;
        if (b.sft.empty()) throw InternalError("builtin code without ambient: " + name);
        b.sbc = sbc;
        b.expected = expected;
        all.push_back(std::move(b));
    };

    add_shift("full2",
              "# full shift on two symbols\n"
              "alphabet 0 1\n"
              "step 0\n"
              "allowed 0 1\n");
    add_shift("golden_mean",
              "# golden mean shift: no two consecutive 1s\n"
              "alphabet 0 1\n"
              "step 1\n"
              "forbidden 1.1\n");
    add_shift("two_point",
              "# two fixed points\n"
              "alphabet 0 1\n"
              "step 1\n"
              "allowed 0.0 1.1\n");
    add_shift("two_cycle",
              "# a single orbit of period two\n"
              "alphabet a b\n"
              "step 1\n"
              "allowed a.b b.a\n");
    add_shift("weiss",
              "# monotone 0->1->2 shift; 12 occurs at most once per point\n"
              "alphabet 0 1 2\n"
              "step 1\n"
              "allowed 0.0 1.1 2.2 0.1 1.2\n");
    add_shift("golden_mean_pair",
              "# disjoint union of two golden mean copies\n"
              "alphabet 0 1 2 3\n"
              "step 1\n"
              "allowed 0.0 0.1 1.0 2.2 2.3 3.2\n");
    add_shift("cyclic3",
              "# three cyclic classes, mixing under the cube of the shift\n"
              "alphabet a1 a2 b c\n"
              "step 1\n"
              "allowed a1.b a2.b b.c c.a1 c.a2\n");

    {
        ExpectedVerdicts e;
        e.injective = false;
        e.surjective = true;
        e.pre_injective = true;
        add_code("xor", "full2",
                 "# adds each symbol to its right neighbour mod 2\n"
                 "memory 0\n"
                 "anticipation 1\n"
                 "rule 0.0 0\n"
                 "rule 0.1 1\n"
                 "rule 1.0 1\n"
                 "rule 1.1 0\n",
                 e);
    }
    {
        ExpectedVerdicts e;
        e.injective = true;
        e.surjective = false;
        e.pre_injective = true;
        add_code("weiss_tau", "weiss",
                 "# rewrites the single occurrence of 12 to 11\n"
                 "memory 1\n"
                 "anticipation 0\n"
                 "rule 0.0 0\n"
                 "rule 0.1 1\n"
                 "rule 1.1 1\n"
                 "rule 1.2 1\n"
                 "rule 2.2 2\n",
                 e);
    }
    {
        ExpectedVerdicts e;
        e.injective = false;
        e.surjective = true;
        e.pre_injective = false;
        add_code("moore_fail", "weiss",
                 "# rewrites the single occurrence of 112 to 122\n"
                 "memory 1\n"
                 "anticipation 1\n"
                 "rule 0.0.0 0\n"
                 "rule 0.0.1 0\n"
                 "rule 0.1.1 1\n"
                 "rule 0.1.2 1\n"
                 "rule 1.1.1 1\n"
                 "rule 1.1.2 2\n"
                 "rule 1.2.2 2\n"
                 "rule 2.2.2 2\n",
                 e);
    }
    {
        ExpectedVerdicts e;
        e.injective = false;
        e.surjective = false;
        e.pre_injective = true;
        add_code("collapse", "two_point",
                 "# sends both fixed points to the zero point\n"
                 "memory 0\n"
                 "anticipation 0\n"
                 "rule 0 0\n"
                 "rule 1 0\n",
                 e);
    }
    {
        ExpectedVerdicts e;
        e.injective = true;
        e.surjective = true;
        e.pre_injective = true;
        add_code("identity", "golden_mean",
                 "# copies the centre symbol\n"
                 "memory 0\n"
                 "anticipation 0\n"
                 "rule 0 0\n"
                 "rule 1 1\n",
                 e);
    }
    return all;
}

}  // namespace

const std::vector<Builtin>& builtins() {
    static const std::vector<Builtin> all = make_builtins();
    return all;
}

const Builtin& builtin(const std::string& name) {
    for (const Builtin& b : builtins())
        if (b.name == name) return b;
    throw Error("unknown builtin '" + name + "'");
}

}  // namespace eden
