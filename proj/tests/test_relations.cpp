#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "wheeler/wheeler.hpp"

using namespace wheeler;

namespace {

std::vector<State> all_states(std::size_t n) {
    std::vector<State> v(n);
    for (State i = 0; i < n; ++i) v[i] = i;
    return v;
}

/// Every relation between two automata with at most 3 x 3 states.
template <class F>
void for_each_relation(std::size_t l, std::size_t r, F&& f) {
    const std::size_t cells = l * r;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        std::vector<StatePair> p;
        for (std::size_t c = 0; c < cells; ++c) {
            if (mask >> c & 1) p.emplace_back(static_cast<State>(c / r), static_cast<State>(c % r));
        }
        f(Relation(l, r, std::move(p)));
    }
}

/// All automata used as small exhaustive inputs.
std::vector<WheelerNfa> tiny_automata() {
    std::vector<WheelerNfa> out{fixtures::loop_first(), fixtures::loop_last(), fixtures::single_state(), gen_chain(3)};
    for (std::uint64_t s = 0; s < 30; ++s) out.push_back(gen_random_wheeler(1 + s % 3, 1 + s % 2, 1 + s % 2, s));
    return out;
}

} // namespace

TEST_CASE("inverse") {
    CHECK(inverse(Relation(2, 3, {{0, 1}})) == Relation(3, 2, {{1, 0}}));
    const Relation r = fixtures::convex_pairs();
    CHECK(inverse(r) == Relation(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {1, 3}}));
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        const Relation x = fixtures::random_relation(rng, 1 + rng() % 6, 1 + rng() % 6, 0.3);
        REQUIRE(inverse(inverse(x)) == x);
    }
}

TEST_CASE("compose") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 300; ++k) {
        const std::size_t a = 1 + rng() % 5, b = 1 + rng() % 5, c = 1 + rng() % 5, d = 1 + rng() % 5;
        const Relation r1 = fixtures::random_relation(rng, a, b, 0.35);
        const Relation r2 = fixtures::random_relation(rng, b, c, 0.35);
        const Relation r3 = fixtures::random_relation(rng, c, d, 0.35);
        REQUIRE(compose(Relation::identity(b), r1) == r1);
        REQUIRE(compose(r1, Relation::identity(a)) == r1);
        REQUIRE(compose(compose(r3, r2), r1) == compose(r3, compose(r2, r1)));
        REQUIRE(inverse(compose(r2, r1)) == compose(inverse(r1), inverse(r2)));
        // Pointwise definition.
        const Relation c21 = compose(r2, r1);
        for (State i = 0; i < a; ++i) {
            for (State kk = 0; kk < c; ++kk) {
                bool expect = false;
                for (State j = 0; j < b; ++j) expect |= r1.contains(i, j) && r2.contains(j, kk);
                REQUIRE(c21.contains(i, kk) == expect);
            }
        }
    }
    CHECK_THROWS_AS(compose(Relation(2, 2), Relation(2, 3)), std::invalid_argument);
}

TEST_CASE("unite") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 300; ++k) {
        const std::size_t l = 1 + rng() % 6, r = 1 + rng() % 6;
        const Relation r1 = fixtures::random_relation(rng, l, r, 0.3);
        const Relation r2 = fixtures::random_relation(rng, l, r, 0.3);
        REQUIRE(unite(r1, r1) == r1);
        REQUIRE(unite(r1, Relation(l, r)) == r1);
        const State u = static_cast<State>(rng() % l);
        const std::vector<State> one{u};
        std::vector<State> expect = r1.image(one);
        for (State x : r2.image(one)) expect.push_back(x);
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        REQUIRE(unite(r1, r2).image(one) == expect);
    }
    CHECK_THROWS_AS(unite(Relation(2, 2), Relation(2, 3)), std::invalid_argument);
}

TEST_CASE("Relation construction") {
    CHECK_THROWS_AS(Relation(2, 2, {{2, 0}}), std::invalid_argument);
    const Relation r(3, 3, {{2, 1}, {0, 0}, {2, 1}});
    CHECK(r.size() == 2);
    CHECK(r.pairs().front() == StatePair{0, 0});
    const std::vector<State> map{0, 0, 1};
    CHECK(Relation::from_map(map, 2) == Relation(3, 2, {{0, 0}, {1, 0}, {2, 1}}));
}

TEST_CASE("is_convex and interval unions") {
    CHECK(is_convex(std::vector<State>{}));
    CHECK(is_convex(std::vector<State>{3, 4, 5}));
    CHECK_FALSE(is_convex(std::vector<State>{1, 3}));
    for (State n = 1; n <= 7; ++n) {
        for (State a = 0; a < n; ++a) {
            for (State b = a; b < n; ++b) {
                for (State c = 0; c < n; ++c) {
                    for (State d = c; d < n; ++d) {
                        if (b < c || d < a) continue;
                        std::vector<State> u;
                        for (State x = std::min(a, c); x <= std::max(b, d); ++x) {
                            if ((x >= a && x <= b) || (x >= c && x <= d)) u.push_back(x);
                        }
                        REQUIRE(is_convex(u));
                    }
                }
            }
        }
    }
}

TEST_CASE("Partition and BoundaryBits") {
    BoundaryBits b(4);
    b.set_split_before(1);
    b.set_split_before(3);
    CHECK(b.to_string() == "101");
    const Partition p = equivalence_from_bits(b);
    CHECK(p.classes() == std::vector<std::vector<State>>{{0}, {1, 2}, {3}});
    CHECK(equivalence_from_bits(BoundaryBits(4, true)).num_classes() == 4);
    CHECK(equivalence_from_bits(BoundaryBits(4, false)).num_classes() == 1);
    CHECK(bits_from_partition(p) == b);
    CHECK_FALSE(bits_from_partition(Partition({0, 1, 0})).has_value());
    CHECK(Partition({5, 5, 2}).class_map() == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(BoundaryBits(1).to_string().empty());
    CHECK(equivalence_from_bits(BoundaryBits(1)).num_classes() == 1);
}

TEST_CASE("is_bisimulation on the hand examples") {
    SECTION("five-pair relation between the convex pair") {
        CHECK(is_bisimulation(fixtures::convex_left(), fixtures::convex_right(), fixtures::convex_pairs()).ok());
    }
    SECTION("loop placement differs") {
        const auto v = is_bisimulation(fixtures::loop_first(), fixtures::loop_last(), Relation::identity(2));
        REQUIRE_FALSE(v.ok());
        CHECK(v.witness->kind == BisimFailure::Forward);
        CHECK(v.witness->pair == StatePair{0, 0});
        CHECK(v.witness->edge == Edge{0, 0, 0});
    }
    SECTION("identity") {
        for (const auto& a : {fixtures::four_state(), fixtures::two_diamonds(), fixtures::convex_left()}) {
            CHECK(is_bisimulation(a, a, Relation::identity(a.num_states())).ok());
            CHECK(is_wheeler_bisimulation(a, a, Relation::identity(a.num_states())).ok());
        }
    }
    SECTION("initial and finality") {
        const auto a = gen_chain(3);
        const auto v = is_bisimulation(a, a, Relation(3, 3));
        REQUIRE(v.witness);
        CHECK(v.witness->kind == BisimFailure::Initial);
        const auto w = is_bisimulation(fixtures::single_state(), fixtures::single_state(),
                                       Relation(1, 1, {{0, 0}}));
        CHECK(w.ok());
        const WheelerNfa nonfinal(OrderedAlphabet({"a"}), 1, {}, {});
        CHECK(is_bisimulation(fixtures::single_state(), nonfinal, Relation(1, 1, {{0, 0}})).witness->kind ==
              BisimFailure::Finality);
    }
    CHECK_THROWS_AS(is_bisimulation(gen_chain(3), gen_chain(3), Relation(2, 3)), std::invalid_argument);
}

TEST_CASE("is_wheeler_bisimulation convexity witness") {
    const auto a = fixtures::convex_left(), b = fixtures::convex_right();
    const auto v = is_wheeler_bisimulation(a, b, fixtures::convex_pairs());
    REQUIRE(v.witness);
    CHECK(v.witness->kind == BisimFailure::ImageNotConvex);
    CHECK(v.witness->interval == StatePair{3, 3});
    CHECK(v.witness->image == std::vector<State>{1, 3});
    CHECK(describe(a, b, *v.witness) == "image-not-convex interval [4,4] image {2,4}");
}

TEST_CASE("checkers agree with the definitions on every relation between tiny automata") {
    const auto autos = tiny_automata();
    std::size_t passed = 0, wheeler_passed = 0;
    for (const auto& a : autos) {
        for (const auto& b : autos) {
            for_each_relation(a.num_states(), b.num_states(), [&](const Relation& r) {
                const bool bis = is_bisimulation(a, b, r).ok();
                const bool wb = is_wheeler_bisimulation(a, b, r).ok();
                REQUIRE(bis == fixtures::bisimulation_by_definition(a, b, r));
                REQUIRE(wb == fixtures::wheeler_bisimulation_by_definition(a, b, r));
                passed += bis;
                wheeler_passed += wb;
                if (wb) {
                    // Accepted relations are total on both sides and preserve the language.
                    REQUIRE(r.image(all_states(a.num_states())).size() == b.num_states());
                    REQUIRE(r.preimage(all_states(b.num_states())).size() == a.num_states());
                    REQUIRE(language_sample_equal(a, b, 8));
                    REQUIRE(is_wheeler_bisimulation(b, a, inverse(r)).ok());
                }
            });
        }
    }
    CHECK(passed > 0);
    CHECK(wheeler_passed > 0);
}

TEST_CASE("no relation is a Wheeler bisimulation between the two loop placements") {
    for_each_relation(2, 2, [&](const Relation& r) {
        REQUIRE_FALSE(is_wheeler_bisimulation(fixtures::loop_first(), fixtures::loop_last(), r).ok());
    });
}

TEST_CASE("composition of quotient maps is a Wheeler bisimulation") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto a = gen_random_wheeler(2 + s % 10, 1 + s % 3, 1 + s % 3, s);
        const auto q1 = minimize(a);
        const auto b = random_splits(gen_random_wheeler_dfa(2 + s % 8, 1 + s % 3, s), 2, s);
        const auto q2 = minimize(b);
        // a -> quotient -> a (inverse) and b -> quotient.
        const Relation r1 = q1.as_relation();
        REQUIRE(is_wheeler_bisimulation(a, q1.quotient, compose(Relation::identity(q1.quotient.num_states()), r1)).ok());
        REQUIRE(is_wheeler_bisimulation(a, a, compose(inverse(r1), r1)).ok());
        REQUIRE(is_wheeler_bisimulation(b, q2.quotient, q2.as_relation()).ok());
    }
}

TEST_CASE("max_standard_autobisimulation") {
    CHECK(max_standard_autobisimulation(fixtures::two_diamonds()).classes() ==
          std::vector<std::vector<State>>{{0}, {1, 2}, {3, 5}, {4, 6}, {7}});
    CHECK(max_standard_autobisimulation(fixtures::single_state()).num_classes() == 1);
    CHECK(max_standard_autobisimulation(fixtures::convex_left()).classes() ==
          std::vector<std::vector<State>>{{0}, {1, 3}, {2}});
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto a = gen_random_wheeler(1 + s % 12, 1 + s % 3, 1 + s % 4, s);
        const Partition p = max_standard_autobisimulation(a);
        REQUIRE(is_bisimulation(a, a, p.to_relation()).ok());
        // Coarser than the Wheeler maximum.
        const Partition w = equivalence_from_bits(boundary_bits(a));
        for (State u = 1; u < a.num_states(); ++u) {
            if (w.class_of(u) == w.class_of(u - 1)) REQUIRE(p.class_of(u) == p.class_of(u - 1));
        }
    }
}

TEST_CASE("oracle_max_wheeler_autobisimulation") {
    CHECK(oracle_max_wheeler_autobisimulation(fixtures::two_diamonds()) == BoundaryBits(8, true));
    CHECK(oracle_max_wheeler_autobisimulation(gen_distinctness("abb")).to_string() == "1101");
    CHECK(oracle_max_wheeler_autobisimulation(fixtures::single_state()).to_string().empty());
    CHECK_THROWS_AS(oracle_max_wheeler_autobisimulation(gen_chain(17)), std::invalid_argument);
    CHECK_NOTHROW(oracle_max_wheeler_autobisimulation(gen_chain(5), 5));
}

TEST_CASE("oracle is the maximum and accepted autobisimulations are closed under union") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const auto a = gen_random_wheeler(1 + s % 8, 1 + s % 3, 1 + s % 3, s);
        const std::size_t n = a.num_states();
        const BoundaryBits best = oracle_max_wheeler_autobisimulation(a);
        std::vector<Relation> accepted;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            BoundaryBits b(n);
            for (State k = 1; k < n; ++k) b.set_split_before(k, mask >> (k - 1) & 1);
            const Relation r = equivalence_from_bits(b).to_relation();
            if (!is_wheeler_bisimulation(a, a, r).ok()) continue;
            REQUIRE((b & best) == best);
            accepted.push_back(r);
        }
        for (const auto& r1 : accepted) {
            for (const auto& r2 : accepted) REQUIRE(is_wheeler_bisimulation(a, a, unite(r1, r2)).ok());
        }
    }
}
