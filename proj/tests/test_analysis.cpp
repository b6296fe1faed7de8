#include <doctest.h>

#include <cmath>
#include <functional>

#include "eden/analysis.hpp"
#include "eden/harness.hpp"

using namespace eden;

namespace {

SftSpec spec_of(const char* name) { return parse_spec(builtin(name).sft); }
EdgePresentation pres_of(const char* name) { return higher_block_recode(spec_of(name)); }

// Oracle: count closed edge paths of length n by depth-first walking.
long long closed_path_count(const EdgePresentation& p, int n) {
    long long count = 0;
    std::function<void(int, int, int)> walk = [&](int start, int at, int remaining) {
        if (remaining == 0) {
            if (at == start) ++count;
            return;
        }
        for (const Edge& e : p.edges)
            if (e.src == at) walk(start, e.dst, remaining - 1);
    };
    for (int v = 0; v < p.vertex_count(); ++v) walk(v, v, n);
    return count;
}

// Second oracle: periodic label words (valid when labels determine paths,
// which holds for every higher-block recoding).
long long periodic_word_count(const SftSpec& spec, int n) {
    const int a = spec.alphabet.size();
    Word word(static_cast<size_t>(n), 0);
    long long count = 0;
    while (true) {
        PeriodicConfiguration x{word};
        if (is_allowed(spec, x)) ++count;
        int i = n - 1;
        while (i >= 0 && word[static_cast<size_t>(i)] == a - 1) word[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++word[static_cast<size_t>(i)];
    }
    return count;
}

// Independent boolean matrix power positivity, for the mixing gap invariant.
bool power_all_positive(const EdgePresentation& p, int n) {
    const size_t count = static_cast<size_t>(p.vertex_count());
    std::vector<std::vector<bool>> m(count, std::vector<bool>(count, false)), acc;
    for (const Edge& e : p.edges) m[static_cast<size_t>(e.src)][static_cast<size_t>(e.dst)] = true;
    acc = m;
    for (int k = 1; k < n; ++k) {
        std::vector<std::vector<bool>> nxt(count, std::vector<bool>(count, false));
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < count; ++j)
                for (size_t t = 0; t < count; ++t)
                    if (acc[i][t] && m[t][j]) nxt[i][j] = true;
        acc = nxt;
    }
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j)
            if (!acc[i][j]) return false;
    return true;
}

}  // namespace

TEST_CASE("scc decomposition") {
    auto weiss = scc_decompose(pres_of("weiss"));
    REQUIRE(weiss.components.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(weiss.components[i].size() == 1);
        CHECK(weiss.recurrent[i]);
    }

    auto golden = scc_decompose(pres_of("golden_mean"));
    CHECK(golden.components.size() == 1);
    CHECK(golden.recurrent[0]);

    CHECK(scc_decompose(pres_of("full2")).components.size() == 1);
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(pres_of("golden_mean")));
    CHECK_FALSE(is_irreducible(pres_of("weiss")));
    CHECK_FALSE(is_irreducible(pres_of("two_point")));
    CHECK(is_irreducible(pres_of("cyclic3")));
    CHECK_THROWS_AS(is_irreducible(EdgePresentation{}), Error);
}

TEST_CASE("period") {
    CHECK(period(pres_of("full2")) == 1);
    CHECK(period(pres_of("two_cycle")) == 2);
    CHECK(period(pres_of("golden_mean")) == 1);
    CHECK(period(pres_of("cyclic3")) == 3);
    CHECK_THROWS_AS(period(pres_of("weiss")), Error);
}

TEST_CASE("mixing") {
    CHECK(is_mixing(pres_of("golden_mean")));
    CHECK(is_mixing(pres_of("full2")));
    CHECK_FALSE(is_mixing(pres_of("two_cycle")));
    CHECK_FALSE(is_mixing(pres_of("weiss")));
    CHECK_FALSE(is_mixing(pres_of("cyclic3")));
}

TEST_CASE("non-wandering detection and restriction") {
    CHECK_FALSE(is_nonwandering(pres_of("weiss")));
    CHECK(is_nonwandering(pres_of("golden_mean_pair")));
    CHECK(is_nonwandering(pres_of("golden_mean")));   // irreducible implies non-wandering

    auto wandering = wandering_edges(pres_of("weiss"));
    REQUIRE(wandering.size() == 2);
    CHECK(wandering[0] == Edge{0, 1, 1});
    CHECK(wandering[1] == Edge{1, 2, 2});

    EdgePresentation nw = nonwandering_part(pres_of("weiss"));
    CHECK(nw.vertex_count() == 3);
    CHECK(nw.edge_count() == 3);
    for (const Edge& e : nw.edges) CHECK(e.src == e.dst);

    EdgePresentation golden = pres_of("golden_mean");
    EdgePresentation same = nonwandering_part(golden);
    CHECK(same.edges == golden.edges);
}

TEST_CASE("a two-cycle with a pendant loop loses its connecting edge") {
    // a->b->a plus c->c, with a wandering edge b->c.
    SftSpec s = parse_spec("alphabet a b c\nstep 1\nallowed a.b b.a c.c b.c\n");
    EdgePresentation p = higher_block_recode(s);
    CHECK(p.vertex_count() == 3);
    CHECK_FALSE(is_nonwandering(p));
    EdgePresentation nw = nonwandering_part(p);
    CHECK(nw.vertex_count() == 3);
    CHECK(nw.edge_count() == 3);
    CHECK(is_nonwandering(nw));
}

TEST_CASE("periodic point counts match the stated examples") {
    CHECK(count_periodic(pres_of("weiss"), 1) == 3);
    CHECK(count_periodic(pres_of("golden_mean"), 2) == 3);
    for (int n = 1; n <= 10; ++n)
        CHECK(count_periodic(pres_of("full2"), n) == BigInt(1) << n);
}

TEST_CASE("periodic point counts match both brute-force oracles up to n=8") {
    for (const char* name : {"weiss", "golden_mean", "full2", "two_cycle", "cyclic3"}) {
        SftSpec spec = spec_of(name);
        EdgePresentation p = higher_block_recode(spec);
        for (int n = 1; n <= 8; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            CHECK(count_periodic(p, n) == BigInt(closed_path_count(p, n)));
            CHECK(count_periodic(p, n) == BigInt(periodic_word_count(spec, n)));
        }
    }
}

TEST_CASE("least-period counts invert the divisor sums") {
    EdgePresentation golden = pres_of("golden_mean");
    CHECK(count_least_period(golden, 1) == 1);   // only 0^inf
    CHECK(count_least_period(golden, 2) == 2);   // the 01 orbit
    EdgePresentation full = pres_of("full2");
    CHECK(count_least_period(full, 4) == 12);    // 16 - 4
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) total += count_least_period(full, d);
        CHECK(total == count_periodic(full, n));
    }
}

TEST_CASE("entropy matches the known values with a certified enclosure") {
    EntropyResult full = entropy(pres_of("full2"));
    CHECK(std::fabs(full.value - std::log(2.0)) <= 1e-9);
    CHECK(full.upper - full.lower <= 1e-9);
    CHECK(full.lower <= std::log(2.0) + 1e-12);
    CHECK(full.upper >= std::log(2.0) - 1e-12);

    EntropyResult golden = entropy(pres_of("golden_mean"));
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::fabs(golden.value - std::log(phi)) <= 1e-9);
    CHECK(golden.upper - golden.lower <= 1e-9);

    CHECK(entropy(pres_of("weiss")).value == 0.0);
    CHECK(entropy(pres_of("two_cycle")).value == 0.0);
    CHECK_THROWS_AS(entropy(EdgePresentation{}), Error);
}

TEST_CASE("entropy equals the growth slope of the language at n=30") {
    for (const char* name : {"golden_mean", "full2"}) {
        EdgePresentation p = pres_of(name);
        double h30 = std::log(static_cast<double>(language_count(p, 31))) -
                     std::log(static_cast<double>(language_count(p, 30)));
        CHECK(std::fabs(entropy(p).value - h30) <= 1e-3);
    }
}

TEST_CASE("entropy bounds: non-negative and at most log of the edge count") {
    for (const char* name :
         {"weiss", "golden_mean", "full2", "two_cycle", "cyclic3", "golden_mean_pair"}) {
        EdgePresentation p = pres_of(name);
        EntropyResult h = entropy(p);
        CHECK(h.value >= 0.0);
        CHECK(h.value <= std::log(static_cast<double>(p.edge_count())) + 1e-12);
    }
}

TEST_CASE("spectral decomposition splits cyclic classes") {
    auto two = spectral_decomposition(pres_of("two_cycle"));
    REQUIRE(two.components.size() == 1);
    CHECK(two.components[0].cycle_period == 2);
    CHECK(two.components[0].classes[0].size() == 1);
    CHECK(two.components[0].classes[1].size() == 1);

    auto golden = spectral_decomposition(pres_of("golden_mean"));
    REQUIRE(golden.components.size() == 1);
    CHECK(golden.components[0].cycle_period == 1);

    // disjoint 3-cycle plus a fixed point
    SftSpec s = parse_spec("alphabet a b c d\nstep 1\nallowed a.b b.c c.a d.d\n");
    auto mix = spectral_decomposition(higher_block_recode(s));
    REQUIRE(mix.components.size() == 2);
    CHECK(mix.components[0].cycle_period == 3);
    CHECK(mix.components[1].cycle_period == 1);

    CHECK_THROWS_AS(spectral_decomposition(pres_of("weiss")), Error);
}

TEST_CASE("spectral classes advance by one along every edge") {
    for (const char* name : {"two_cycle", "golden_mean", "cyclic3", "golden_mean_pair"}) {
        EdgePresentation p = pres_of(name);
        auto d = spectral_decomposition(p);
        for (const Edge& e : p.edges) {
            auto [comp_s, cls_s] = d.class_coords(d.class_id_of(e.src));
            auto [comp_d, cls_d] = d.class_coords(d.class_id_of(e.dst));
            CHECK(comp_s == comp_d);
            int k = d.components[static_cast<size_t>(comp_s)].cycle_period;
            CHECK((cls_s + 1) % k == cls_d);
        }
    }
}

TEST_CASE("each cyclic class is mixing under the return power") {
    EdgePresentation p = pres_of("cyclic3");
    auto d = spectral_decomposition(p);
    REQUIRE(d.components.size() == 1);
    const auto& comp = d.components[0];
    REQUIRE(comp.cycle_period == 3);
    for (int cls = 0; cls < 3; ++cls) {
        EdgePresentation sub = power_subgraph(p, comp.classes[static_cast<size_t>(cls)], 3);
        CHECK(is_mixing(sub));
    }
}

TEST_CASE("mixing gap on the stated examples") {
    CHECK(mixing_gap(pres_of("full2")) == 1);
    CHECK(mixing_gap(pres_of("golden_mean")) == 2);

    // A^3 strictly positive, A^2 not.
    SftSpec s = parse_spec("alphabet a b c\nstep 1\nallowed a.a a.b b.c c.a c.b\n");
    EdgePresentation p = higher_block_recode(s);
    REQUIRE(is_mixing(p));
    CHECK(mixing_gap(p) == 3);

    CHECK_THROWS_AS(mixing_gap(pres_of("two_cycle")), Error);
}

TEST_CASE("mixing gap certifies positivity exactly at its value") {
    for (const char* name : {"full2", "golden_mean"}) {
        EdgePresentation p = pres_of(name);
        int gap = mixing_gap(p);
        CHECK(power_all_positive(p, gap));
        if (gap > 1) CHECK_FALSE(power_all_positive(p, gap - 1));
    }
    SftSpec s = parse_spec("alphabet a b c\nstep 1\nallowed a.a a.b b.c c.a c.b\n");
    EdgePresentation p = higher_block_recode(s);
    CHECK(power_all_positive(p, 3));
    CHECK_FALSE(power_all_positive(p, 2));
}

TEST_CASE("implication chain: mixing -> irreducible -> non-wandering") {
    for (const char* name :
         {"weiss", "golden_mean", "full2", "two_cycle", "two_point", "cyclic3",
          "golden_mean_pair"}) {
        EdgePresentation p = pres_of(name);
        bool mixing = is_mixing(p);
        bool irreducible = !p.empty() && is_irreducible(p);
        bool nonwandering = is_nonwandering(p);
        if (mixing) CHECK(irreducible);
        if (irreducible) CHECK(nonwandering);
    }
}

TEST_CASE("cycle and extension helpers produce real paths") {
    EdgePresentation p = pres_of("golden_mean");
    auto cycle = shortest_cycle_symbols(p, 0);
    CHECK(cycle == Word{0});   // the 0 self-loop
    auto cycle1 = shortest_cycle_symbols(p, 1);
    CHECK(cycle1.size() == 2);   // 1 -> 0 -> 1

    auto ext = extend_to_biinfinite(p, 1, 1);
    CHECK(ext.left_cycle.size() >= 1);
    CHECK(ext.right_cycle.size() >= 1);
}
