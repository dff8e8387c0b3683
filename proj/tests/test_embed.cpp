#include <doctest.h>

#include <random>

#include "lattice_forge/dsl.hpp"
#include "lattice_forge/hk.hpp"

using namespace lattice_forge;

namespace {

IVec vec(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

RVec rvec(std::initializer_list<const char*> xs) {
    RVec v;
    for (const char* x : xs) {
        Rat r(x);
        r.canonicalize();
        v.push_back(r);
    }
    return v;
}

Lattice random_even_lattice(std::mt19937& rng, int rank, int span = 2) {
    std::uniform_int_distribution<int> dist(-span, span);
    for (;;) {
        IntMat g(rank, rank);
        for (int i = 0; i < rank; ++i) {
            g.at(i, i) = 2 * dist(rng);
            for (int j = i + 1; j < rank; ++j) {
                int v = dist(rng);
                g.at(i, j) = v;
                g.at(j, i) = v;
            }
        }
        if (g.det() == 0) continue;
        return Lattice(g);
    }
}

}  // namespace

TEST_CASE("unimodular embedding uniqueness") {
    // U^3 into signature (4,4): unique (unimodular source).
    CHECK(unimodular_embedding_unique(parse_lattice_expr("U^3"), Signature{4, 4}));
    // Transcendental lattices of rank <= 10 into the Mukai signature (4,20).
    for (const char* expr : {"U + <4>", "U^2 + <-4>", "<6> + <6>", "U + A3 + <2>"}) {
        Lattice t = parse_lattice_expr(expr);
        CHECK(unimodular_embedding_unique(t, Signature{4, 20}));
    }
    // Equal positive parts: condition (1) fails.
    CHECK(!unimodular_embedding_unique(parse_lattice_expr("<2> + <2>"), Signature{2, 10}));
    // Rank-gap failure at an odd prime: A2^4 has length 4 at p=3; gap 4 < 6.
    CHECK(!unimodular_embedding_unique(parse_lattice_expr("A2^4"), Signature{1, 11}));
    // 2-adic boundary with a u_2 split: U(2) into signature (3,3).
    CHECK(unimodular_embedding_unique(parse_lattice_expr("U(2)"), Signature{3, 3}));
    // 2-adic boundary without a split: <2> + <-2> into (3,3) fails
    // (rank gap 4 = 2 + length of the 2-part, and q = (1/2, -1/2) splits
    // neither u_2 nor v_2).
    CHECK(!unimodular_embedding_unique(parse_lattice_expr("<2> + <-2>"), Signature{3, 3}));
}

TEST_CASE("exactly two classes of <-2> in the OG6 lattice") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    auto classes = enumerate_embedding_data(parse_lattice_expr("<-2>"), og6);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].h_order == 1);
    CHECK(classes[1].h_order == 2);
    // Complement genus of the divisibility-2 class is U^3 + <-2>.
    Lattice expected = parse_lattice_expr("U^3 + <-2>");
    CHECK(genus_equal(classes[1].complement_genus,
                      GenusDescriptor{signature(expected), discriminant_form(expected)}));
}

TEST_CASE("exactly two classes of <-6> in the OG10 lattice") {
    Lattice og10 = parse_lattice_expr("U^3 + E8^2 + A2");
    auto classes = enumerate_embedding_data(parse_lattice_expr("<-6>"), og10);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].h_order == 1);
    CHECK(classes[1].h_order == 3);
    // Complement of the divisibility-3 class is U^3 + E8^2 + <-2>.
    Lattice expected = parse_lattice_expr("U^3 + E8^2 + <-2>");
    CHECK(genus_equal(classes[1].complement_genus,
                      GenusDescriptor{signature(expected), discriminant_form(expected)}));
}

TEST_CASE("rank-3 transcendental classes in the OG6 lattice count 1 or 2 with d mod 4") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    for (long d = 1; d <= 16; ++d) {
        Lattice td = parse_lattice_expr("U^2 + <" + std::to_string(-2 * d) + ">");
        auto classes = enumerate_embedding_data(td, og6);
        std::size_t expected = (d % 4 == 0 || d % 4 == 3) ? 1 : 2;
        CAPTURE(d);
        CHECK(classes.size() == expected);
        // The glue-free class always has the complement genus of S_d.
        Lattice sd = parse_lattice_expr("<" + std::to_string(2 * d) + "> + <-2>^2");
        CHECK(genus_equal(classes[0].complement_genus,
                          GenusDescriptor{signature(sd), discriminant_form(sd)}));
    }
}

TEST_CASE("glue: A2 as an overlattice of <-2> + <-6>") {
    Lattice l = parse_lattice_expr("<-2> + <-6>");
    Lattice glued = glue_overlattice(l, {rvec({"1/2", "1/2"})});
    CHECK(glued.det() == 3);  // 12 -> 3
    Lattice a2 = ade_lattice('A', 2);
    CHECK(binary_definite_isometric(glued.gram(), a2.gram()));

    // Trivial glue returns the lattice itself up to basis.
    Lattice same = glue_overlattice(l, {});
    CHECK(abs(same.det()) == abs(l.det()));

    // alpha/2 alone is not isotropic: q = -1/2.
    CHECK_THROWS_AS(glue_overlattice(l, {rvec({"1/2", "0"})}), domain_error);
    // vectors not in the dual lattice are rejected
    CHECK_THROWS_AS(glue_overlattice(l, {rvec({"1/3", "0"})}), domain_error);
}

TEST_CASE("glue scales the determinant by the square of the index") {
    Lattice l = parse_lattice_expr("U(2) + U(2)");
    Lattice glued = glue_overlattice(l, {rvec({"1/2", "1/2", "1/2", "1/2"})});
    CHECK(abs(glued.det()) == abs(l.det()) / 4);
}

TEST_CASE("find_vector: obstruction paths from the OG6 examples") {
    // U + <-4>: no class of square -2 and divisibility 2.
    Decision d = find_vector(parse_lattice_expr("U + <-4>"), Int(-2), Int(2));
    CHECK(d.no());
    // U + A2^2: no 2-torsion at all.
    d = find_vector(parse_lattice_expr("U + A2^2"), Int(-2), Int(2));
    CHECK(d.no());
    // U + E8^2 + D4: no 3-torsion, so no square -6, divisibility 3.
    d = find_vector(parse_lattice_expr("U + E8^2 + D4"), Int(-6), Int(3));
    CHECK(d.no());
}

TEST_CASE("find_vector: witnesses re-verify") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    Decision d = find_vector(og6, Int(-2), Int(2));
    REQUIRE(d.yes());
    CHECK(inner(og6, *d.witness, *d.witness) == -2);
    CHECK(divisibility(og6, *d.witness) == 2);

    Lattice og10 = parse_lattice_expr("U^3 + E8^2 + A2");
    d = find_vector(og10, Int(-6), Int(3), SearchOptions{.height = 4});
    REQUIRE(d.yes());
    CHECK(inner(og10, *d.witness, *d.witness) == -6);
    CHECK(divisibility(og10, *d.witness) == 3);
}

TEST_CASE("find_vector: No obstructions are never contradicted by exhaustive search") {
    std::mt19937 rng(1009);
    int done = 0;
    while (done < 100) {
        Lattice l = random_even_lattice(rng, 2 + static_cast<int>(rng() % 2));
        Int square = 2 * (static_cast<long>(rng() % 7) - 3);
        Int div = 1 + static_cast<long>(rng() % 3);
        if (square == 0) continue;
        ++done;
        Decision d = find_vector(l, square, div, SearchOptions{.height = 10});
        if (!d.no()) continue;
        bool found = false;
        for (long h = 1; h <= 10 && !found; ++h)
            for_each_shell_vector(l.rank(), h, true, [&](const IVec& v) {
                if (gcd_all(v) == 1 && inner(l, v, v) == square &&
                    gcd_all(l.gram().mul(v)) == div) {
                    found = true;
                    return true;
                }
                return false;
            });
        CAPTURE(l.gram().to_string());
        CAPTURE(square.get_str());
        CAPTURE(div.get_str());
        CHECK(!found);
    }
}

TEST_CASE("find_hyperbolic_pair") {
    Lattice l = parse_lattice_expr("U + <-2>");
    Decision d = find_hyperbolic_pair(l);
    REQUIRE(d.yes());
    CHECK(inner(l, *d.witness, *d.witness) == 0);
    CHECK(inner(l, *d.witness2, *d.witness2) == 0);
    CHECK(inner(l, *d.witness, *d.witness2) == 1);

    // Example 4.23 lattice: not settled at the default height.
    Lattice ns1(IntMat{{-2, 1, -1}, {1, -2, 1}, {-1, 1, 2}});
    d = find_hyperbolic_pair(ns1);
    CHECK(!d.yes());

    // Rank 1 definite: No.
    d = find_hyperbolic_pair(parse_lattice_expr("<2>"));
    CHECK(d.no());

    // A non-block copy containing an isotropic pair.
    IntMat g{{0, 1, 2}, {1, 2, 0}, {2, 0, -2}};
    Lattice scrambled(g);
    Decision ds = find_hyperbolic_pair(scrambled);
    if (ds.yes()) {
        CHECK(inner(scrambled, *ds.witness, *ds.witness) == 0);
        CHECK(inner(scrambled, *ds.witness, *ds.witness2) == 1);
    }
}

TEST_CASE("realize_genus finds the named complements") {
    Catalog cat = default_catalog();
    for (long d : {3L, 4L, 7L}) {
        Lattice sd = parse_lattice_expr("<" + std::to_string(2 * d) + "> + <-2>^2");
        auto found = realize_genus({signature(sd), discriminant_form(sd)}, cat);
        REQUIRE(found.has_value());
        CHECK(genus_equal(GenusDescriptor{signature(*found), discriminant_form(*found)},
                          GenusDescriptor{signature(sd), discriminant_form(sd)}));
    }
    auto u = realize_genus({Signature{1, 1}, FiniteQuadraticForm()}, cat);
    REQUIRE(u.has_value());
    CHECK(abs(u->det()) == 1);
    Lattice ua3 = parse_lattice_expr("U + A3");
    auto found = realize_genus({signature(ua3), discriminant_form(ua3)}, cat);
    REQUIRE(found.has_value());
    CHECK(forms_equivalent(discriminant_form(*found), discriminant_form(ua3)));
}

TEST_CASE("find_embedding_by_search basics") {
    Lattice u = hyperbolic_plane();
    Lattice u3 = parse_lattice_expr("U^3");
    auto emb = find_embedding_by_search(u, u3);
    REQUIRE(emb.has_value());
    CHECK(gram_of(u3, emb->images) == u.gram());
    CHECK(is_primitive_sublattice(emb->images));

    // <6>^2 into OG6 with the glued-class target: complement genus U + A2^2.
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    Lattice s66 = parse_lattice_expr("<6> + <6>");
    Lattice ua22 = parse_lattice_expr("U + A2^2");
    EmbeddingTarget target;
    target.complement_disc = discriminant_form(ua22);
    auto emb2 = find_embedding_by_search(s66, og6, SearchOptions{.height = 4}, target);
    REQUIRE(emb2.has_value());
    GlueData glue = embedding_glue_data(*emb2);
    CHECK(forms_equivalent(discriminant_form(glue.complement.lattice),
                           discriminant_form(ua22)));
    CHECK(signature(glue.complement.lattice) == signature(ua22));
}

TEST_CASE("embedding glue data recovers the Nikulin subgroups") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    Lattice s = parse_lattice_expr("<-2>");
    auto classes = enumerate_embedding_data(s, og6);
    REQUIRE(classes.size() == 2);

    // divisibility 1: sigma = u1 - u2
    IntMat img1(8, 1);
    img1.at(0, 0) = 1;
    img1.at(1, 0) = -1;
    GlueData g1 = embedding_glue_data(make_primitive_embedding(s, og6, img1));
    CHECK(g1.h_s_key == classes[0].h_s_key);
    CHECK(g1.glue_order == 2);

    // divisibility 2: sigma = a
    IntMat img2(8, 1);
    img2.at(6, 0) = 1;
    GlueData g2 = embedding_glue_data(make_primitive_embedding(s, og6, img2));
    CHECK(g2.h_s_key == classes[1].h_s_key);
    CHECK(g2.glue_order == 1);

    // Round trip: complement discriminant matches the class data.
    CHECK(forms_equivalent(discriminant_form(g1.complement.lattice),
                           classes[0].complement_genus.disc));
    CHECK(forms_equivalent(discriminant_form(g2.complement.lattice),
                           classes[1].complement_genus.disc));
}

TEST_CASE("example 4.10 complements and their moduli obstructions") {
    Lattice og6 = parse_lattice_expr("U^3 + <-2>^2");
    struct Case {
        std::vector<IVec> span;
        const char* complement;
    };
    std::vector<Case> cases{
        // (1) T = U + U + <-4> as <u1,u2,v1,v2,a+b>
        {{vec({1, 0, 0, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0, 0, 0}),
          vec({0, 0, 1, 0, 0, 0, 0, 0}), vec({0, 0, 0, 1, 0, 0, 0, 0}),
          vec({0, 0, 0, 0, 0, 0, 1, 1})},
         "U + <-4>"},
        // (2) T = U + <6> + <-10> as <u1,u2,2(v1+v2)+a,2(w1-w2)+b>
        {{vec({1, 0, 0, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0, 0, 0}),
          vec({0, 0, 2, 2, 0, 0, 1, 0}), vec({0, 0, 0, 0, 2, -2, 0, 1})},
         "A2 + [-2,3;3,-2]"},
        // (3) T = U + <4> as <u1,u2,2(v1+v2)+a+b>
        {{vec({1, 0, 0, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0, 0, 0}),
          vec({0, 0, 2, 2, 0, 0, 1, 1})},
         "U + A3"},
        // (4) T = <6>^2 as <2(u1+u2)+a, 2(v1+v2)+b>
        {{vec({2, 2, 0, 0, 0, 0, 1, 0}), vec({0, 0, 2, 2, 0, 0, 0, 1})},
         "U + A2^2"},
    };
    for (const auto& c : cases) {
        CAPTURE(c.complement);
        Complement comp = orthogonal_complement(og6, c.span);
        Lattice expected = parse_lattice_expr(c.complement);
        CHECK(signature(comp.lattice) == signature(expected));
        CHECK(forms_equivalent(discriminant_form(comp.lattice), discriminant_form(expected)));
        // None admits a class of square -2 and divisibility 2 (sound obstruction).
        Decision d = find_vector(comp.lattice, Int(-2), Int(2));
        CHECK(d.no());
    }
}

TEST_CASE("shell enumeration is exhaustive and deterministic") {
    int count = 0;
    for (long h = 0; h <= 2; ++h)
        for_each_shell_vector(2, h, false, [&](const IVec&) {
            ++count;
            return false;
        });
    CHECK(count == 25);
    count = 0;
    for (long h = 1; h <= 2; ++h)
        for_each_shell_vector(2, h, true, [&](const IVec&) {
            ++count;
            return false;
        });
    CHECK(count == 12);
}
