#include <doctest.h>

#include <functional>

#include "eden/code.hpp"
#include "eden/harness.hpp"

using namespace eden;

namespace {

SftSpec spec_of(const char* name) { return parse_spec(builtin(name).sft); }
SlidingBlockCode code_of(const char* name) {
    const Builtin& b = builtin(name);
    return parse_code(b.sbc, parse_spec(b.sft));
}
Word w(const SftSpec& s, const std::string& text) { return parse_dotted_word(s.alphabet, text); }

SlidingBlockCode shift_code(const SftSpec& spec, const EdgePresentation& p) {
    // memory 1, anticipation 0, output = the left symbol: this is the shift
    // map itself as a block code.
    SlidingBlockCode c;
    c.ambient = spec;
    c.memory = 1;
    c.anticipation = 0;
    for (const Word& window : language(p, 2)) c.rule[window] = window[0];
    return c;
}

// Direct windowed application at one coordinate of an ep configuration.
Symbol image_at(const SlidingBlockCode& c, const EpConfig& x, long long n) {
    Word window;
    for (long long j = n - c.memory; j <= n + c.anticipation; ++j) window.push_back(x.at(j));
    return c.output(window);
}

}  // namespace

TEST_CASE("parse_code accepts the named examples") {
    SlidingBlockCode x = code_of("xor");
    CHECK(x.memory == 0);
    CHECK(x.anticipation == 1);
    CHECK(x.rule.size() == 4);

    SlidingBlockCode tau = code_of("weiss_tau");
    CHECK(tau.memory == 1);
    CHECK(tau.anticipation == 0);
    CHECK(tau.rule.size() == 5);

    SlidingBlockCode id = code_of("identity");
    CHECK(id.window_length() == 1);
}

TEST_CASE("parse_code rejects partial or conflicting rules") {
    SftSpec golden = spec_of("golden_mean");
    // missing the rule for window 1
    CHECK_THROWS_AS(parse_code("memory 0\nanticipation 0\nrule 0 0\n", golden), ParseError);
    // duplicate
    CHECK_THROWS_AS(parse_code("memory 0\nanticipation 0\nrule 0 0\nrule 0 1\nrule 1 1\n", golden),
                    ParseError);
    // unknown output symbol
    CHECK_THROWS_AS(parse_code("memory 0\nanticipation 0\nrule 0 7\nrule 1 1\n", golden),
                    ParseError);
    // wrong window length
    CHECK_THROWS_AS(parse_code("memory 0\nanticipation 0\nrule 0.0 0\nrule 1 1\n", golden),
                    ParseError);
    // missing directives
    CHECK_THROWS_AS(parse_code("anticipation 0\nrule 0 0\nrule 1 1\n", golden), ParseError);
    CHECK_THROWS_AS(parse_code("memory 0\nrule 0 0\nrule 1 1\n", golden), ParseError);
}

TEST_CASE("rules on windows outside the language warn and are ignored") {
    SftSpec golden = spec_of("golden_mean");
    std::vector<std::string> warnings;
    SlidingBlockCode c = parse_code(
        "memory 0\nanticipation 1\nrule 0.0 0\nrule 0.1 1\nrule 1.0 1\nrule 1.1 0\n", golden,
        &warnings);
    REQUIRE(warnings.size() == 1);   // 1.1 is not a golden-mean window
    CHECK(c.rule.size() == 3);
}

TEST_CASE("parse_code refuses the empty shift") {
    SftSpec empty = parse_spec("alphabet a\nstep 1\nforbidden a.a\n");
    CHECK_THROWS_AS(parse_code("memory 0\nanticipation 0\nrule a a\n", empty), ParseError);
}

TEST_CASE("endomorphism validation") {
    SftSpec golden = spec_of("golden_mean");
    EdgePresentation p = higher_block_recode(golden);

    CHECK(validate_endomorphism(code_of("xor"), higher_block_recode(spec_of("full2"))).ok);
    CHECK(validate_endomorphism(code_of("identity"), p).ok);

    // every window maps to 1: the image hits the forbidden word 11
    SlidingBlockCode bad;
    bad.ambient = golden;
    bad.memory = 0;
    bad.anticipation = 0;
    bad.rule[{0}] = 1;
    bad.rule[{1}] = 1;
    auto check = validate_endomorphism(bad, p);
    CHECK_FALSE(check.ok);
    CHECK(check.violating_source == w(golden, "0.0"));
    CHECK(check.forbidden_image == w(golden, "1.1"));
}

TEST_CASE("apply_to_periodic matches the stated examples") {
    SftSpec full = spec_of("full2");
    SlidingBlockCode x = code_of("xor");
    PeriodicConfiguration ones{w(full, "1")};
    CHECK(apply_to_periodic(x, ones).repeating == w(full, "0"));

    SftSpec weiss = spec_of("weiss");
    SlidingBlockCode tau = code_of("weiss_tau");
    PeriodicConfiguration twos{w(weiss, "2")};
    CHECK(apply_to_periodic(tau, twos).repeating == w(weiss, "2"));

    SftSpec golden = spec_of("golden_mean");
    SlidingBlockCode id = code_of("identity");
    PeriodicConfiguration orbit{w(golden, "0.1")};
    CHECK(apply_to_periodic(id, orbit).repeating == orbit.repeating);
}

TEST_CASE("sliding application agrees with the rule at every coordinate") {
    SftSpec full = spec_of("full2");
    SlidingBlockCode x = code_of("xor");
    PeriodicConfiguration src{w(full, "0.1.1.0.1")};
    PeriodicConfiguration img = apply_to_periodic(x, src);
    for (int i = -7; i <= 7; ++i) {
        Symbol direct = static_cast<Symbol>((src.at(i) + src.at(i + 1)) % 2);
        CHECK(img.at(i) == direct);
    }
}

TEST_CASE("apply_to_ep reproduces the homoclinic image collapse") {
    SftSpec weiss = spec_of("weiss");
    SlidingBlockCode tau = code_of("moore_fail");
    // v = ...000 1 1 2 2 2..., u = ...000 1 2 2 2...
    EpConfig v{w(weiss, "0"), w(weiss, "1.1"), w(weiss, "2"), 1};
    EpConfig u{w(weiss, "0"), w(weiss, "1"), w(weiss, "2"), 1};
    CHECK(ep_equal(apply_to_ep(tau, v), u));
    CHECK(ep_equal(apply_to_ep(tau, u), u));

    SlidingBlockCode id = code_of("identity");
    SftSpec golden = spec_of("golden_mean");
    EpConfig point{w(golden, "0"), w(golden, "1.0.1"), w(golden, "0.1"), -2};
    CHECK(ep_equal(apply_to_ep(id, point), point));
}

TEST_CASE("apply_to_ep agrees with direct evaluation coordinate by coordinate") {
    SftSpec weiss = spec_of("weiss");
    for (const char* name : {"weiss_tau", "moore_fail"}) {
        SlidingBlockCode c = code_of(name);
        EpConfig x{w(weiss, "0"), w(weiss, "0.1.1.1.2"), w(weiss, "2"), -2};
        REQUIRE(is_allowed(weiss, x));
        EpConfig y = apply_to_ep(c, x);
        for (long long n = -30; n <= 30; ++n) CHECK(y.at(n) == image_at(c, x, n));
    }
    SftSpec full = spec_of("full2");
    SlidingBlockCode x = code_of("xor");
    EpConfig p{w(full, "1.0"), w(full, "0.0.1"), w(full, "1"), 5};
    EpConfig y = apply_to_ep(x, p);
    for (long long n = -20; n <= 30; ++n) CHECK(y.at(n) == image_at(x, p, n));
}

TEST_CASE("composition: xor with itself gives the distance-two parity rule") {
    SftSpec full = spec_of("full2");
    EdgePresentation p = higher_block_recode(full);
    SlidingBlockCode x = code_of("xor");
    SlidingBlockCode xx = compose(x, x, p);
    CHECK(xx.memory == 0);
    CHECK(xx.anticipation == 2);
    REQUIRE(xx.rule.size() == 8);
    for (const auto& [window, out] : xx.rule)
        CHECK(out == static_cast<Symbol>((window[0] + window[2]) % 2));
    // power agrees with compose
    SlidingBlockCode sq = power(x, 2, p);
    CHECK(sq.rule == xx.rule);
    CHECK(sq.memory == xx.memory);
}

TEST_CASE("identity composes neutrally and its powers stay the identity") {
    SftSpec golden = spec_of("golden_mean");
    EdgePresentation p = higher_block_recode(golden);
    SlidingBlockCode id = code_of("identity");
    SlidingBlockCode id5 = power(id, 5, p);
    CHECK(id5.rule == id.rule);

    SlidingBlockCode sigma = shift_code(golden, p);
    SlidingBlockCode left = compose(id, sigma, p);
    // extensionally equal to sigma on periodic points
    for (const Word& word : {w(golden, "0"), w(golden, "0.1"), w(golden, "0.0.1")}) {
        PeriodicConfiguration pt{word};
        CHECK(apply_to_periodic(left, pt).repeating == apply_to_periodic(sigma, pt).repeating);
    }
    SlidingBlockCode tau1 = power(code_of("weiss_tau"), 1, higher_block_recode(spec_of("weiss")));
    CHECK(tau1.rule == code_of("weiss_tau").rule);
}

TEST_CASE("powers agree with repeated application on periodic points") {
    SftSpec full = spec_of("full2");
    EdgePresentation p = higher_block_recode(full);
    SlidingBlockCode x = code_of("xor");
    for (int k = 1; k <= 3; ++k) {
        SlidingBlockCode xk = power(x, k, p);
        for (const Word& word : {w(full, "0.1"), w(full, "1.1.0"), w(full, "1.0.0.1")}) {
            PeriodicConfiguration pt{word};
            PeriodicConfiguration iterated = pt;
            for (int i = 0; i < k; ++i) iterated = apply_to_periodic(x, iterated);
            CHECK(apply_to_periodic(xk, pt).repeating == iterated.repeating);
        }
    }
    CHECK_THROWS_AS(power(x, 0, p), Error);
}

TEST_CASE("composition is extensionally associative on short periodic points") {
    SftSpec full = spec_of("full2");
    EdgePresentation p = higher_block_recode(full);
    SlidingBlockCode x = code_of("xor");
    SlidingBlockCode sigma = shift_code(full, p);
    SlidingBlockCode a = compose(compose(x, sigma, p), x, p);
    SlidingBlockCode b = compose(x, compose(sigma, x, p), p);
    for (int len = 1; len <= 4; ++len) {
        Word word(static_cast<size_t>(len), 0);
        for (int code = 0; code < (1 << len); ++code) {
            for (int i = 0; i < len; ++i) word[static_cast<size_t>(i)] = (code >> i) & 1;
            PeriodicConfiguration pt{word};
            CHECK(apply_to_periodic(a, pt).repeating == apply_to_periodic(b, pt).repeating);
        }
    }
}

TEST_CASE("images of period-n points stay period-n points") {
    SftSpec golden = spec_of("golden_mean");
    EdgePresentation p = higher_block_recode(golden);
    ScanConfig cfg;
    cfg.memory_max = 1;
    cfg.anticipation_max = 1;
    cfg.window_max = 2;
    cfg.only_valid = true;
    enumerate_codes(golden, p, cfg, [&](long long, const SlidingBlockCode& c) {
        for (int n = 1; n <= 4; ++n) {
            for (const Word& word : language(p, n)) {
                PeriodicConfiguration pt{word};
                if (!is_allowed(golden, pt)) continue;
                PeriodicConfiguration img = apply_to_periodic(c, pt);
                CHECK(is_allowed(golden, img));
                // sigma^n-fixed: the ep route gives the same point
                EpConfig via_ep = apply_to_ep(c, ep_from_periodic(pt));
                CHECK(ep_equal(via_ep, ep_from_periodic(img)));
                CHECK(ep_equal(via_ep.shifted(n), via_ep));
            }
        }
    });
}

TEST_CASE("homoclinic pairs map to homoclinic pairs") {
    SftSpec weiss = spec_of("weiss");
    SlidingBlockCode tau = code_of("moore_fail");
    EpConfig v{w(weiss, "0"), w(weiss, "1.1"), w(weiss, "2"), 1};
    EpConfig u{w(weiss, "0"), w(weiss, "1"), w(weiss, "2"), 1};
    REQUIRE(difference_profile(u, v).finite());
    CHECK(difference_profile(apply_to_ep(tau, u), apply_to_ep(tau, v)).finite());

    SftSpec full = spec_of("full2");
    SlidingBlockCode x = code_of("xor");
    EpConfig a = make_constant_ep(0);
    EpConfig b{{0}, {1, 1, 0, 1}, {0}, -1};
    CHECK(difference_profile(apply_to_ep(x, a), apply_to_ep(x, b)).finite());
}

TEST_CASE("image presentations recognize the image language") {
    SftSpec weiss = spec_of("weiss");
    EdgePresentation pw = higher_block_recode(weiss);
    SoficPresentation image = image_sofic(code_of("weiss_tau"), pw);
    // 012 never appears in an image
    for (const Word& word : language(pw, 3)) {
        bool readable = false;
        for (int v = 0; v < image.vertex_count && !readable; ++v) {
            std::function<bool(int, size_t)> run = [&](int at, size_t i) {
                if (i == word.size()) return true;
                for (const Edge& e : image.edges)
                    if (e.src == at && e.sym == word[i] && run(e.dst, i + 1)) return true;
                return false;
            };
            readable = run(v, 0);
        }
        CHECK(readable == (word != parse_dotted_word(weiss.alphabet, "0.1.2")));
    }
}

TEST_CASE("component action on the named examples") {
    // collapse: both fixed points land in the class of 0^inf
    SftSpec two = spec_of("two_point");
    EdgePresentation p2 = higher_block_recode(two);
    auto d2 = spectral_decomposition(p2);
    auto act = component_action(code_of("collapse"), p2, d2);
    REQUIRE(act.class_image.size() == 2);
    CHECK(act.class_image[0] == act.class_image[1]);
    CHECK_FALSE(act.is_permutation);

    // identity: the identity permutation on the pair of golden means
    SftSpec pair = spec_of("golden_mean_pair");
    EdgePresentation pp = higher_block_recode(pair);
    auto dp = spectral_decomposition(pp);
    SlidingBlockCode idp;
    idp.ambient = pair;
    idp.memory = 0;
    idp.anticipation = 0;
    for (int s = 0; s < pair.alphabet.size(); ++s) idp.rule[{s}] = s;
    auto actp = component_action(idp, pp, dp);
    CHECK(actp.is_permutation);
    for (size_t i = 0; i < actp.class_image.size(); ++i)
        CHECK(actp.class_image[i] == static_cast<int>(i));

    // the shift itself swaps the two classes of the period-two orbit
    SftSpec cyc = spec_of("two_cycle");
    EdgePresentation pc = higher_block_recode(cyc);
    auto dc = spectral_decomposition(pc);
    auto acts = component_action(shift_code(cyc, pc), pc, dc);
    REQUIRE(acts.class_image.size() == 2);
    CHECK(acts.class_image[0] == 1);
    CHECK(acts.class_image[1] == 0);
    CHECK(acts.is_permutation);
}

TEST_CASE("component action advances coherently with the class cycle") {
    SftSpec cyc = spec_of("cyclic3");
    EdgePresentation p = higher_block_recode(cyc);
    auto d = spectral_decomposition(p);
    auto act = component_action(shift_code(cyc, p), p, d);
    REQUIRE(d.components.size() == 1);
    int k = d.components[0].cycle_period;
    REQUIRE(k == 3);
    CHECK(act.is_permutation);
    for (int i = 0; i < k; ++i) {
        int succ = (i + 1) % k;
        CHECK(act.class_image[static_cast<size_t>(succ)] ==
              (act.class_image[static_cast<size_t>(i)] + 1) % k);
    }
}

TEST_CASE("emit_code round trips through parse_code") {
    for (const char* name : {"xor", "weiss_tau", "moore_fail", "collapse", "identity"}) {
        const Builtin& b = builtin(name);
        SftSpec spec = parse_spec(b.sft);
        SlidingBlockCode c = parse_code(b.sbc, spec);
        SlidingBlockCode again = parse_code(emit_code(c), spec);
        CHECK(again.rule == c.rule);
        CHECK(again.memory == c.memory);
        CHECK(again.anticipation == c.anticipation);
    }
}
