#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cygon;

namespace {

GonMapping gon_of(long long gon, std::vector<long long> weight, std::vector<long long> position) {
    GonMapping m;
    m.gon = gon;
    m.weight = std::move(weight);
    m.position = std::move(position);
    return m;
}

CircleMapping circle_of(Rational d, std::vector<Rational> position, WindowMode mode) {
    CircleMapping c;
    c.circumference = std::move(d);
    c.position = std::move(position);
    c.mode = mode;
    return c;
}

}  // namespace

TEST_CASE("gon verifier pinpoints the first dependent window") {
    Matroid c3 = Matroid::graphic(support::triangle());

    // (3, 2, 1) is the layout the engine produces; it is clean.
    REQUIRE_FALSE(verify_gon_mapping(c3, gon_of(3, {2, 2, 2}, {3, 2, 1})).has_value());

    // Nudging element 1 onto element 0 piles all three intervals onto point 1.
    auto failure = verify_gon_mapping(c3, gon_of(3, {2, 2, 2}, {3, 3, 1}));
    REQUIRE(failure.has_value());
    REQUIRE(failure->point == 1);
    REQUIRE(failure->window == 0b111);
}

TEST_CASE("gon verifier in spanning mode flags empty points") {
    Matroid c3 = Matroid::graphic(support::triangle());
    auto failure = verify_gon_mapping(c3, gon_of(3, {1, 1, 1}, {1, 1, 1}), WindowMode::Spanning);
    REQUIRE(failure.has_value());
    REQUIRE(failure->point == 2);
    REQUIRE(failure->window == kEmptySet);
}

TEST_CASE("gon verifier rejects malformed mappings outright") {
    Matroid c3 = Matroid::graphic(support::triangle());
    REQUIRE_THROWS_AS(verify_gon_mapping(c3, gon_of(3, {2, 2}, {1, 2})), PreconditionError);
    REQUIRE_THROWS_AS(verify_gon_mapping(c3, gon_of(3, {2, 2, 2}, {0, 2, 1})), PreconditionError);
    REQUIRE_THROWS_AS(verify_gon_mapping(c3, gon_of(3, {2, 2, 2}, {4, 2, 1})), PreconditionError);
    REQUIRE_THROWS_AS(verify_gon_mapping(c3, gon_of(3, {-1, 2, 2}, {1, 2, 3})), PreconditionError);
    REQUIRE_THROWS_AS(verify_gon_mapping(c3, gon_of(0, {2, 2, 2}, {1, 2, 3})), PreconditionError);
}

TEST_CASE("circle verifier accepts a hand-built layout and rejects a pile-up") {
    Matroid c3 = Matroid::graphic(support::triangle());

    auto spread = circle_of(Rational(3, 2), {Rational(0), Rational(1, 2), Rational(1)},
                            WindowMode::Independent);
    REQUIRE_FALSE(verify_circle_mapping(c3, spread).has_value());

    auto piled = circle_of(Rational(3, 2), {Rational(0), Rational(0), Rational(0)},
                           WindowMode::Independent);
    auto failure = verify_circle_mapping(c3, piled);
    REQUIRE(failure.has_value());
    REQUIRE(failure->point == Rational(0));
    REQUIRE(failure->window == 0b111);
}

TEST_CASE("circle verifier enforces the position range") {
    Matroid c3 = Matroid::graphic(support::triangle());
    REQUIRE_THROWS_AS(
        verify_circle_mapping(c3, circle_of(Rational(3, 2), {Rational(0), Rational(0), Rational(3, 2)},
                                            WindowMode::Independent)),
        PreconditionError);
    REQUIRE_THROWS_AS(
        verify_circle_mapping(c3, circle_of(Rational(3, 2), {Rational(-1, 2), Rational(0), Rational(1)},
                                            WindowMode::Independent)),
        PreconditionError);
    REQUIRE_THROWS_AS(verify_circle_mapping(c3, circle_of(Rational(0), {}, WindowMode::Independent)),
                      PreconditionError);
}

TEST_CASE("cyclic ordering verifier walks every window") {
    Matroid c3 = Matroid::graphic(support::triangle());
    CyclicOrdering good{{2, 1, 0}};
    REQUIRE_FALSE(verify_cyclic_ordering(c3, good, 2, OrderingMode::Base).has_value());

    // The triangle inside this graph makes the first length-3 window dependent.
    Matroid twp = Matroid::graphic(support::triangle_with_pendant());
    auto failure = verify_cyclic_ordering(twp, CyclicOrdering{{0, 1, 2, 3}}, 3, OrderingMode::Base);
    REQUIRE(failure.has_value());
    REQUIRE(failure->start == 0);
    REQUIRE(failure->window == 0b0111);

    Matroid u24 = Matroid::uniform(2, 4);
    REQUIRE_FALSE(
        verify_cyclic_ordering(u24, CyclicOrdering{{0, 1, 2, 3}}, 2, OrderingMode::Independent)
            .has_value());
    auto too_long =
        verify_cyclic_ordering(u24, CyclicOrdering{{0, 1, 2, 3}}, 3, OrderingMode::Independent);
    REQUIRE(too_long.has_value());
    REQUIRE(too_long->start == 0);
    REQUIRE(too_long->window == 0b0111);
}

TEST_CASE("cyclic ordering verifier rejects non-permutations and bad windows") {
    Matroid c3 = Matroid::graphic(support::triangle());
    REQUIRE_THROWS_AS(verify_cyclic_ordering(c3, CyclicOrdering{{0, 0, 2}}, 2, OrderingMode::Base),
                      PreconditionError);
    REQUIRE_THROWS_AS(verify_cyclic_ordering(c3, CyclicOrdering{{0, 1, 3}}, 2, OrderingMode::Base),
                      PreconditionError);
    REQUIRE_THROWS_AS(verify_cyclic_ordering(c3, CyclicOrdering{{0, 1}}, 2, OrderingMode::Base),
                      PreconditionError);
    REQUIRE_THROWS_AS(verify_cyclic_ordering(c3, CyclicOrdering{{0, 1, 2}}, 0, OrderingMode::Base),
                      PreconditionError);
    REQUIRE_THROWS_AS(verify_cyclic_ordering(c3, CyclicOrdering{{0, 1, 2}}, 4, OrderingMode::Base),
                      PreconditionError);
}

TEST_CASE("linear base sequence verifier checks all r + 1 windows") {
    Matroid c3 = Matroid::graphic(support::triangle());
    REQUIRE_FALSE(verify_linear_base_sequence(c3, {1, 0, 1, 2}).has_value());

    // Repeating element 1 collapses the middle window to a single element.
    auto failure = verify_linear_base_sequence(c3, {0, 1, 1, 2});
    REQUIRE(failure.has_value());
    REQUIRE(failure->start == 1);
    REQUIRE(failure->window == 0b010);

    REQUIRE_THROWS_AS(verify_linear_base_sequence(c3, {0, 1, 2}), PreconditionError);
    REQUIRE_THROWS_AS(verify_linear_base_sequence(c3, {0, 1, 2, 5}), PreconditionError);
}

TEST_CASE("cover verifier reports non-bases and uncovered elements") {
    Matroid c3 = Matroid::graphic(support::triangle());

    BaseCover good;
    good.bases = {0b110, 0b011};
    REQUIRE_FALSE(verify_cover(c3, good).has_value());

    BaseCover undersized;
    undersized.bases = {0b011, 0b010};
    auto failure = verify_cover(c3, undersized);
    REQUIRE(failure.has_value());
    REQUIRE(failure->reason.find("is not a base") != std::string::npos);

    BaseCover partial;
    partial.bases = {0b011};
    failure = verify_cover(c3, partial);
    REQUIRE(failure.has_value());
    REQUIRE(failure->reason.find("not covered") != std::string::npos);

    BaseCover dependent;
    dependent.bases = {0b111};
    REQUIRE(verify_cover(c3, dependent)->reason.find("entry 0") != std::string::npos);
}

TEST_CASE("fractional verifier checks totals and coverage exactly") {
    Matroid c3 = Matroid::graphic(support::triangle());

    FractionalWeights good;
    good.entries = {{0b011, Rational(1, 2)}, {0b101, Rational(1, 2)}, {0b110, Rational(1, 2)}};
    REQUIRE_FALSE(verify_fractional(c3, good, Rational(3, 2)).has_value());

    FractionalWeights thin;
    thin.entries = {{0b011, Rational(1, 2)}};
    auto failure = verify_fractional(c3, thin, Rational(1, 2));
    REQUIRE(failure.has_value());
    REQUIRE(failure->reason.find("coverage") != std::string::npos);

    FractionalWeights off_total;
    off_total.entries = {{0b011, Rational(1)}, {0b110, Rational(1)}};
    failure = verify_fractional(c3, off_total, Rational(3, 2));
    REQUIRE(failure.has_value());
    REQUIRE(failure->reason.find("total") != std::string::npos);

    FractionalWeights non_base;
    non_base.entries = {{0b111, Rational(1)}};
    REQUIRE(verify_fractional(c3, non_base, Rational(1))->reason.find("non-base") !=
            std::string::npos);

    FractionalWeights negative;
    negative.entries = {{0b011, Rational(-1, 2)}};
    REQUIRE(verify_fractional(c3, negative, Rational(-1, 2))->reason.find("negative") !=
            std::string::npos);
}

TEST_CASE("brute-force assignment finds the lexicographically first mapping") {
    Matroid u12 = Matroid::uniform(1, 2);
    auto mapping = brute_force_assign(u12, {1, 1}, 2);
    REQUIRE(mapping.has_value());
    REQUIRE(mapping->position == std::vector<long long>{1, 2});
    REQUIRE_FALSE(verify_gon_mapping(u12, *mapping).has_value());

    // The search and the push engine answer the same question by different
    // routes; they may well land on different valid layouts.
    Matroid c3 = Matroid::graphic(support::triangle());
    WeightedInstance inst{c3, {2, 2, 2}, 3};
    auto brute = brute_force_assign(c3, inst.weights, inst.gon);
    REQUIRE(brute.has_value());
    REQUIRE(brute->position == std::vector<long long>{1, 2, 3});
    auto engine = assign_intervals(inst);
    REQUIRE(std::holds_alternative<GonMapping>(engine));
    REQUIRE(std::get<GonMapping>(engine).position == std::vector<long long>{3, 2, 1});
    REQUIRE_FALSE(verify_gon_mapping(c3, *brute).has_value());
    REQUIRE_FALSE(verify_gon_mapping(c3, std::get<GonMapping>(engine)).has_value());
}

TEST_CASE("brute-force assignment reports infeasibility as absence") {
    Matroid c3 = Matroid::graphic(support::triangle());
    REQUIRE_FALSE(brute_force_assign(c3, {1, 1, 1}, 1).has_value());
    REQUIRE_FALSE(brute_force_assign(Matroid::uniform(1, 2), {2, 2}, 2).has_value());
}

TEST_CASE("brute-force assignment enforces its search budget") {
    Matroid u26 = Matroid::uniform(2, 6);
    REQUIRE_THROWS_AS(brute_force_assign(u26, {1, 1, 1, 1, 1, 1}, 20), PreconditionError);
    REQUIRE_THROWS_AS(brute_force_assign(u26, {1, 1, 1}, 2), PreconditionError);
    REQUIRE_THROWS_AS(brute_force_assign(u26, {1, 1, 1, 1, 1, 1}, 0), PreconditionError);
}

TEST_CASE("brute-force minimum cover sizes") {
    REQUIRE(brute_force_min_cover(Matroid::graphic(support::triangle())) == 2);
    REQUIRE(brute_force_min_cover(Matroid::graphic(support::k4())) == 2);
    REQUIRE(brute_force_min_cover(Matroid::graphic(support::path_graph(4))) == 1);
    REQUIRE(brute_force_min_cover(Matroid::uniform(1, 3)) == 3);
    REQUIRE(brute_force_min_cover(Matroid::uniform(2, 5)) == 3);

    REQUIRE_THROWS_AS(brute_force_min_cover(Matroid::uniform(1, 9)), PreconditionError);
    REQUIRE_THROWS_AS(brute_force_min_cover(Matroid::uniform(0, 0)), PreconditionError);
    // A free matroid's dual is all loops; no independent set covers those.
    REQUIRE_THROWS_AS(brute_force_min_cover(dual(Matroid::uniform(2, 2))), PreconditionError);
}
