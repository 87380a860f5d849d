#include <stdexcept>
#include <string>

#include "doctest.h"
#include "homrep/freegroup.hpp"
#include "homrep/recipe.hpp"

using namespace homrep::freegroup;
using homrep::cli::parse_element;

namespace {

bool same_action(const Automorphism& a, const Automorphism& b, int rank) {
    for (int i = 1; i <= rank; ++i) {
        Word g{i};
        if (a.apply(g) != b.apply(g)) return false;
    }
    return true;
}

// Returns the exception message so tests can pin exact positions.
std::string error_of(const std::string& text, int rank = 3) {
    try {
        parse_element(text, rank);
    } catch (const std::invalid_argument& ex) {
        return ex.what();
    }
    return "(no error)";
}

Automorphism rt(int i, int j, int rank = 3) {
    return nielsen(NielsenMove{NielsenKind::RightTransvection, i, j}, rank);
}

}  // namespace

TEST_SUITE("recipe") {

TEST_CASE("id is a bare name") {
    CHECK(same_action(parse_element("id", 3), Automorphism::identity(3), 3));
    CHECK(same_action(parse_element("  id  ", 5), Automorphism::identity(5), 5));
    CHECK(error_of("id()") == "recipe error at position 2: trailing input");
}

TEST_CASE("named constructors match direct construction") {
    CHECK(same_action(parse_element("conj(1,2)", 3), ia_conjugation(3, 1, 2), 3));
    CHECK(same_action(parse_element("conj(3,1)", 4), ia_conjugation(4, 3, 1), 4));
    CHECK(same_action(parse_element("comm(1,2,3)", 3), ia_commutator_move(3, 1, 2, 3), 3));
    CHECK(same_action(parse_element("comm(2,3,1)", 3), ia_commutator_move(3, 2, 3, 1), 3));
    CHECK(same_action(parse_element("ctrans(2)", 3), commutator_transvection(3, 2), 3));
    CHECK(same_action(parse_element("rt(1,2)", 3), rt(1, 2), 3));
    CHECK(same_action(parse_element("lt(2,3)", 3),
                      nielsen(NielsenMove{NielsenKind::LeftTransvection, 2, 3}, 3), 3));
    CHECK(same_action(parse_element("swap(1,3)", 3),
                      nielsen(NielsenMove{NielsenKind::Swap, 1, 3}, 3), 3));
    CHECK(same_action(parse_element("inv(2)", 3),
                      nielsen(NielsenMove{NielsenKind::Inversion, 2, 0}, 3), 3));
}

TEST_CASE("spot images") {
    CHECK(parse_element("conj(1,2)", 3).apply(Word{1}) == Word{-2, 1, 2});
    CHECK(parse_element("ctrans(1)", 3).apply(Word{1}) == Word{1, 2, 3, -2, -3});
    CHECK(parse_element("inv(2)", 3).apply(Word{2}) == Word{-2});
    CHECK(parse_element("swap(1,3)", 3).apply(Word{1}) == Word{3});
    CHECK(parse_element("rt(2,1)", 3).apply(Word{2}) == Word{2, 1});
}

TEST_CASE("compose applies its right factor first") {
    CHECK(parse_element("compose(rt(1,2), inv(1))", 3).apply(Word{1}) == Word{-2, -1});
    CHECK(parse_element("compose(inv(1), rt(1,2))", 3).apply(Word{1}) == Word{-1, 2});
    auto chained = parse_element("compose(compose(rt(1,2), rt(2,3)), rt(1,3))", 3);
    auto direct = compose(compose(rt(1, 2), rt(2, 3)), rt(1, 3));
    CHECK(same_action(chained, direct, 3));
}

TEST_CASE("commutator, inverse, power") {
    CHECK(same_action(parse_element("commutator(rt(1,2), rt(2,3))", 3),
                      commutator(rt(1, 2), rt(2, 3)), 3));
    CHECK(same_action(parse_element("inverse(rt(1,2))", 3), inverse(rt(1, 2)), 3));
    CHECK(parse_element("inverse(rt(1,2))", 3).apply(Word{1}) == Word{1, -2});

    CHECK(parse_element("power(rt(1,2), 3)", 3).apply(Word{1}) == Word{1, 2, 2, 2});
    CHECK(same_action(parse_element("power(rt(1,2), -2)", 3), power(rt(1, 2), -2), 3));
    CHECK(same_action(parse_element("power(swap(1,2), 0)", 3), Automorphism::identity(3), 3));
    // exponent bound is inclusive
    CHECK(parse_element("power(rt(1,2), 64)", 3).apply(Word{1}).size() == 65);
    CHECK(parse_element("power(rt(1,2), -64)", 3).apply(Word{1}).size() == 65);
}

TEST_CASE("nesting and whitespace") {
    auto parsed = parse_element("commutator(compose(rt(1,2),rt(2,3)),inverse(swap(1,3)))", 3);
    auto direct = commutator(compose(rt(1, 2), rt(2, 3)),
                             inverse(nielsen(NielsenMove{NielsenKind::Swap, 1, 3}, 3)));
    CHECK(same_action(parsed, direct, 3));
    CHECK(verify_automorphism(parsed.forward(), parsed.backward()));

    auto spaced = parse_element(" compose ( rt ( +1 , 2 ) , inv ( 1 ) ) ", 3);
    auto inv1 = nielsen(NielsenMove{NielsenKind::Inversion, 1, 0}, 3);
    CHECK(same_action(spaced, compose(rt(1, 2), inv1), 3));

    auto deep = parse_element("power(commutator(conj(1,2), comm(2,3,1)), 2)", 3);
    CHECK(same_action(deep, power(commutator(ia_conjugation(3, 1, 2),
                                             ia_commutator_move(3, 2, 3, 1)), 2), 3));
}

TEST_CASE("error positions and messages") {
    CHECK(error_of("") == "recipe error at position 0: expected a name");
    CHECK(error_of("42") == "recipe error at position 0: expected a name");
    CHECK(error_of("nope(1)") == "recipe error at position 5: unknown element constructor 'nope'");
    CHECK(error_of("conj 1,2") == "recipe error at position 5: expected '('");
    CHECK(error_of("rt(1 2)") == "recipe error at position 5: expected ','");
    CHECK(error_of("rt(1,2") == "recipe error at position 6: expected ')'");
    CHECK(error_of("id x") == "recipe error at position 3: trailing input");
    CHECK(error_of("rt(1,2)rt(1,3)") == "recipe error at position 7: trailing input");
    CHECK(error_of("rt(,2)") == "recipe error at position 3: expected an integer");
    CHECK(error_of("rt(1000001,2)") == "recipe error at position 10: integer out of range");
    CHECK(error_of("power(id,65)") == "recipe error at position 11: power exponent out of range");
    CHECK(error_of("power(id,-65)") == "recipe error at position 12: power exponent out of range");
}

TEST_CASE("constructor preconditions surface as invalid_argument") {
    CHECK_THROWS_AS(parse_element("ctrans(2)", 2), std::invalid_argument);  // needs rank >= 3
    CHECK_THROWS_AS(parse_element("ctrans(0)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("conj(1,1)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("comm(1,2,2)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("rt(1,4)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("swap(0,2)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("inv(4)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("id", 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("id", -2), std::invalid_argument);
}

TEST_CASE("parsed elements are genuine automorphisms") {
    const char* samples[] = {
        "ctrans(3)",
        "commutator(ctrans(1), conj(2,3))",
        "compose(power(rt(1,2), 5), inverse(lt(3,1)))",
        "power(compose(swap(1,2), inv(1)), 7)",
    };
    for (const char* s : samples) {
        auto f = parse_element(s, 3);
        CHECK(verify_automorphism(f.forward(), f.backward()));
        auto round = compose(f, inverse(f));
        CHECK(same_action(round, Automorphism::identity(3), 3));
    }
}

}  // TEST_SUITE
