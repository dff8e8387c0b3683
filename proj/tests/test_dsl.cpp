#include <doctest.h>

#include "lattice_forge/dsl.hpp"

using namespace lattice_forge;

TEST_CASE("atoms") {
    CHECK(parse_lattice_expr("U").gram() == IntMat{{0, 1}, {1, 0}});
    CHECK(parse_lattice_expr("A2").gram() == IntMat{{-2, 1}, {1, -2}});
    CHECK(parse_lattice_expr("<6>").gram() == IntMat{{6}});
    CHECK(parse_lattice_expr("<-2>").gram() == IntMat{{-2}});
    CHECK(parse_lattice_expr("[0,1;1,0]").gram() == IntMat{{0, 1}, {1, 0}});
    CHECK(parse_lattice_expr(" [ -2 , 3 ; 3 , -2 ] ").gram() == IntMat{{-2, 3}, {3, -2}});
}

TEST_CASE("OG6 lattice from the DSL") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    CHECK(og6.rank() == 8);
    IntMat g = og6.gram();
    CHECK(g.at(0, 1) == 1);
    CHECK(g.at(2, 3) == 1);
    CHECK(g.at(4, 5) == 1);
    CHECK(g.at(6, 6) == -2);
    CHECK(g.at(7, 7) == -2);
    CHECK(og6.det() == -4);
}

TEST_CASE("rescale binds to the preceding term") {
    CHECK(parse_lattice_expr("U(2)").gram() == IntMat{{0, 2}, {2, 0}});
    CHECK(parse_lattice_expr("U^2(3)").gram() ==
          IntMat{{0, 3, 0, 0}, {3, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, 3, 0}});
    CHECK(parse_lattice_expr("A1(-1)").gram() == IntMat{{2}});
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_lattice_expr("U^0"), ParseError);
    CHECK_THROWS_AS(parse_lattice_expr(""), ParseError);
    CHECK_THROWS_AS(parse_lattice_expr("U +"), ParseError);
    CHECK_THROWS_AS(parse_lattice_expr("<3>"), ParseError);      // odd diagonal
    CHECK_THROWS_AS(parse_lattice_expr("[1,0;0,1]"), ParseError);  // odd diagonal
    CHECK_THROWS_AS(parse_lattice_expr("[0,1;1,0;0,0]"), ParseError);
    CHECK_THROWS_AS(parse_lattice_expr("Q"), ParseError);
    CHECK_THROWS_AS(parse_lattice_expr("U junk"), ParseError);
    CHECK_THROWS_AS(parse_lattice_expr("E5"), ParseError);
    CHECK_THROWS_AS(parse_lattice_expr("U(0)"), ParseError);
    try {
        parse_lattice_expr("U + <3>");
    } catch (const ParseError& e) {
        CHECK(e.position >= 4);
    }
}

TEST_CASE("E8 node layout matches the chain-with-branch convention") {
    // e2-e3-...-e8 chain, e1 attached to e4.
    Lattice e8 = ade_lattice('E', 8);
    const IntMat& g = e8.gram();
    CHECK(g.at(0, 3) == 1);
    CHECK(g.at(0, 1) == 0);
    CHECK(g.at(1, 2) == 1);
    CHECK(g.at(6, 7) == 1);
    CHECK(abs(e8.det()) == 1);
    CHECK(abs(ade_lattice('E', 7).det()) == 2);
    CHECK(abs(ade_lattice('E', 6).det()) == 3);
    CHECK(abs(ade_lattice('D', 4).det()) == 4);
    CHECK(abs(ade_lattice('A', 3).det()) == 4);
}
