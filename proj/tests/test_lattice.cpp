#include <doctest.h>

#include <random>

#include "lattice_forge/discform.hpp"
#include "lattice_forge/dsl.hpp"

using namespace lattice_forge;

namespace {

IVec vec(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("lattice invariants enforced") {
    CHECK_THROWS_AS(Lattice(IntMat{{1}}), domain_error);          // odd diagonal
    CHECK_THROWS_AS(Lattice(IntMat{{0, 1}, {2, 0}}), domain_error);  // asymmetric
    CHECK_THROWS_AS(Lattice(IntMat{{2, 2}, {2, 2}}), domain_error);  // degenerate
}

TEST_CASE("inner products") {
    Lattice u = hyperbolic_plane();
    CHECK(inner(u, vec({1, 0}), vec({0, 1})) == 1);
    Lattice a2 = ade_lattice('A', 2);
    CHECK(inner(a2, vec({1, 2}), vec({1, 2})) == -6);
    CHECK(inner(a2, vec({1, 2}), vec({0, 0})) == 0);
    CHECK_THROWS_AS(inner(u, vec({1}), vec({0, 1})), domain_error);
}

TEST_CASE("signatures of the standard lattices") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    Signature s = signature(og6);
    CHECK(s.plus == 3);
    CHECK(s.minus == 5);

    Lattice og10 = parse_lattice_expr("U^3 + E8^2 + A2");
    s = signature(og10);
    CHECK(s.plus == 3);
    CHECK(s.minus == 21);

    s = signature(parse_lattice_expr("<6>"));
    CHECK(s.plus == 1);
    CHECK(s.minus == 0);

    // E8 is negative definite and unimodular in this convention.
    Lattice e8 = ade_lattice('E', 8);
    CHECK(abs(e8.det()) == 1);
    s = signature(e8);
    CHECK(s.plus == 0);
    CHECK(s.minus == 8);
}

TEST_CASE("signature is additive over direct sums") {
    std::mt19937 rng(42);
    std::vector<std::string> atoms{"U", "A2", "<4>", "<-6>", "D4", "U(2)"};
    for (int trial = 0; trial < 50; ++trial) {
        const std::string& e1 = atoms[rng() % atoms.size()];
        const std::string& e2 = atoms[rng() % atoms.size()];
        Lattice l1 = parse_lattice_expr(e1), l2 = parse_lattice_expr(e2);
        Signature s = signature(direct_sum({l1, l2}));
        Signature s1 = signature(l1), s2 = signature(l2);
        CHECK(s.plus == s1.plus + s2.plus);
        CHECK(s.minus == s1.minus + s2.minus);
    }
}

TEST_CASE("divisibility in the OG6 lattice") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    // generator a of one <-2> summand has divisibility 2
    CHECK(divisibility(og6, vec({0, 0, 0, 0, 0, 0, 1, 0})) == 2);
    // u1 - u2 has divisibility 1
    CHECK(divisibility(og6, vec({1, -1, 0, 0, 0, 0, 0, 0})) == 1);
    CHECK_THROWS_AS(divisibility(og6, vec({0, 0, 0, 0, 0, 0, 2, 0})), domain_error);
    CHECK_THROWS_AS(divisibility(og6, vec({0, 0, 0, 0, 0, 0, 0, 0})), domain_error);
}

TEST_CASE("divisibility in the OG10 lattice") {
    Lattice og10 = parse_lattice_expr("U^3 + E8^2 + A2");
    IVec v(24, Int(0));
    v[0] = 1;
    v[1] = -3;  // u1 - 3u2: square -6, divisibility 1
    CHECK(inner(og10, v, v) == -6);
    CHECK(divisibility(og10, v) == 1);
    IVec w(24, Int(0));
    w[22] = 1;
    w[23] = 2;  // a1 + 2a2: square -6, divisibility 3
    CHECK(inner(og10, w, w) == -6);
    CHECK(divisibility(og10, w) == 3);
}

TEST_CASE("divisibility divides the square") {
    std::mt19937 rng(99);
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    std::uniform_int_distribution<int> dist(-4, 4);
    int done = 0;
    while (done < 200) {
        IVec v(8);
        for (auto& c : v) c = dist(rng);
        if (gcd_all(v) != 1) continue;
        ++done;
        Int d = divisibility(og6, v);
        CHECK(divides(d, inner(og6, v, v)));
    }
}

TEST_CASE("orthogonal complements from the OG6 examples") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");

    // <u1,u2,v1,v2,a+b> has complement U + <-4>
    std::vector<IVec> span{vec({1, 0, 0, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0, 0, 0}),
                           vec({0, 0, 1, 0, 0, 0, 0, 0}), vec({0, 0, 0, 1, 0, 0, 0, 0}),
                           vec({0, 0, 0, 0, 0, 0, 1, 1})};
    Complement c = orthogonal_complement(og6, span);
    CHECK(c.lattice.rank() == 3);
    Lattice expected = parse_lattice_expr("U + <-4>");
    CHECK(signature(c.lattice) == signature(expected));
    CHECK(forms_equivalent(discriminant_form(c.lattice), discriminant_form(expected)));

    // <u1,u2,2(v1+v2)+a+b> has complement U + A3
    std::vector<IVec> span3{vec({1, 0, 0, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0, 0, 0}),
                            vec({0, 0, 2, 2, 0, 0, 1, 1})};
    c = orthogonal_complement(og6, span3);
    expected = parse_lattice_expr("U + A3");
    CHECK(c.lattice.rank() == 5);
    CHECK(signature(c.lattice) == signature(expected));
    CHECK(forms_equivalent(discriminant_form(c.lattice), discriminant_form(expected)));

    // first U factor inside U^3 has complement U^2
    Lattice u3 = parse_lattice_expr("U^3");
    std::vector<IVec> span_u{vec({1, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0})};
    c = orthogonal_complement(u3, span_u);
    CHECK(c.lattice.rank() == 4);
    CHECK(abs(c.lattice.det()) == 1);
    CHECK(signature(c.lattice) == Signature{2, 2});

    CHECK_THROWS_AS(orthogonal_complement(u3, {vec({1, 0, 0, 0, 0, 0})}), domain_error);
}

TEST_CASE("complement output is saturated and orthogonal") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    std::vector<IVec> span{vec({2, 1, 0, 0, 0, 0, 1, 0}), vec({0, 0, 1, 3, 0, 0, 0, 1})};
    Complement c = orthogonal_complement(og6, span);
    CHECK(is_primitive_sublattice(c.basis));
    for (std::size_t j = 0; j < c.basis.cols(); ++j)
        for (const IVec& v : span) CHECK(inner(og6, v, c.basis.column_vec(j)) == 0);
    // re-saturating is the identity
    IntMat sat = saturate_columns(c.basis);
    CHECK(abs((sat.transpose() * sat).det()) == abs((c.basis.transpose() * c.basis).det()));
}

TEST_CASE("direct sum and rescale") {
    Lattice l = parse_lattice_expr("U + <-2>");
    IntMat expect{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}};
    CHECK(l.gram() == expect);

    Lattice u2 = parse_lattice_expr("U(2)");
    IntMat expect_u2{{0, 2}, {2, 0}};
    CHECK(u2.gram() == expect_u2);

    Lattice a2 = ade_lattice('A', 2);
    CHECK(rescale(a2, 1).gram() == a2.gram());
    CHECK_THROWS_AS(rescale(a2, 0), domain_error);
}

TEST_CASE("rescale scales divisibility and determinant") {
    std::mt19937 rng(5);
    Lattice base = parse_lattice_expr("U + <6>");
    for (int trial = 0; trial < 20; ++trial) {
        Int k = 1 + static_cast<long>(rng() % 4);
        Lattice scaled = rescale(base, k);
        IVec v{1, static_cast<long>(rng() % 5), static_cast<long>(rng() % 5)};
        CHECK(divisibility(scaled, v) == k * divisibility(base, v));
        Int expect = base.det();
        for (int i = 0; i < base.rank(); ++i) expect *= k;
        CHECK(scaled.det() == expect);
    }
}

TEST_CASE("determinant equals product of SNF invariants") {
    std::vector<std::string> exprs{"U^3 + <-2>^2", "A3 + <8>", "U(2) + A2", "E6 + U"};
    for (const auto& e : exprs) {
        Lattice l = parse_lattice_expr(e);
        Int prod = 1;
        for (const Int& d : snf_diagonal(l.gram())) prod *= d;
        CHECK(prod == abs(l.det()));
    }
}
