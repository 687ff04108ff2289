// Constructors, face lattices, products, subcomplexes, order complexes,
// validation.

#include <catch2/catch_amalgamated.hpp>

#include "polytopal/complex.hpp"
#include "polytopal/order_complex.hpp"
#include "polytopal/product.hpp"
#include "polytopal/propsuite.hpp"

using namespace polytopal;

namespace {

std::size_t count_dim(const Complex& c, int d) {
    std::size_t n = 0;
    for (const Face& f : c.all_faces())
        if (c.face_dim(f) == d) ++n;
    return n;
}

}  // namespace

TEST_CASE("simplex constructor") {
    auto p0 = make_simplex(0);
    CHECK(p0->vertex_count() == 1);
    CHECK(p0->face_count() == 1);

    auto p2 = make_simplex(2);
    CHECK(p2->vertex_count() == 3);
    CHECK(p2->face_count() == 7);

    auto p4 = make_simplex(4);
    CHECK(p4->face_count() == 31);  // nonempty subsets of 5 vertices
    CHECK(p4->dim() == 4);
    CHECK(validate(*p4).empty());
}

TEST_CASE("cube constructor") {
    auto c1 = make_cube(1);
    CHECK(c1->vertex_count() == 2);
    CHECK(count_dim(*c1, 1) == 1);

    auto c3 = make_cube(3);
    CHECK(c3->vertex_count() == 8);
    CHECK(count_dim(*c3, 1) == 12);
    CHECK(count_dim(*c3, 2) == 6);
    CHECK(count_dim(*c3, 3) == 1);
    CHECK(validate(*c3).empty());

    auto c4 = make_cube(4);
    CHECK(c4->vertex_count() == 16);
    CHECK(count_dim(*c4, 1) == 32);
    CHECK(count_dim(*c4, 2) == 24);
    CHECK(count_dim(*c4, 3) == 8);
    CHECK(count_dim(*c4, 4) == 1);
}

TEST_CASE("product complexes") {
    SECTION("point x Q is a copy of Q") {
        auto pt = make_simplex(0);
        auto q = make_cube(2);
        auto pq = product(pt, q);
        CHECK(pq->face_count() == q->face_count());
        CHECK(pq->dim() == q->dim());
        for (int d = 0; d <= 2; ++d) CHECK(count_dim(*pq, d) == count_dim(*q, d));
    }
    SECTION("segment x segment is a square") {
        auto s = make_simplex(1);
        auto sq = product(s, s);
        CHECK(sq->vertex_count() == 4);
        CHECK(count_dim(*sq, 1) == 4);
        CHECK(count_dim(*sq, 2) == 1);
        CHECK(validate(*sq).empty());
    }
    SECTION("face counts multiply") {
        auto a = make_simplex(2);
        auto b = make_cube(1);
        auto ab = product(a, b);
        // generating polynomial f(P*Q) = f(P) f(Q); check per-dimension by
        // the brute-force convolution
        for (int d = 0; d <= ab->dim(); ++d) {
            std::size_t expect = 0;
            for (int i = 0; i <= d; ++i) expect += count_dim(*a, i) * count_dim(*b, d - i);
            CHECK(count_dim(*ab, d) == expect);
        }
        CHECK(validate(*ab).empty());
    }
    SECTION("power") {
        auto c1 = make_cube(1);
        auto p1 = power(c1, 1);
        CHECK(p1->face_count() == c1->face_count());

        auto p3 = power(c1, 3);
        auto c3 = make_cube(3);
        CHECK(p3->vertex_count() == 8);
        // (cube_1)^3 and cube_3 agree under the identity on little-endian
        // bit-encoded vertices: same face sets, hence isomorphic lattices.
        auto a = p3->all_faces();
        auto b = c3->all_faces();
        CHECK(a == b);
    }
    SECTION("vertex count of power") {
        auto q = make_simplex(2);
        CHECK(power(q, 3)->vertex_count() == 27);
    }
}

TEST_CASE("subcomplex") {
    auto c2 = make_cube(2);
    SECTION("keep everything") {
        auto all = subcomplex(c2, [](const Face&) { return true; });
        CHECK(all->face_count() == c2->face_count());
    }
    SECTION("boundary of the square") {
        auto bd = subcomplex(c2, [&](const Face& f) { return c2->face_dim(f) < 2; });
        CHECK(bd->vertex_count() == 4);
        CHECK(bd->face_count() == 8);
        CHECK(bd->dim() == 1);
    }
    SECTION("non-closed keep set throws") {
        CHECK_THROWS_AS(subcomplex(c2, [&](const Face& f) { return c2->face_dim(f) != 1; }),
                        NotClosed);
    }
}

TEST_CASE("minimal containing face") {
    auto c2 = make_cube(2);
    SECTION("single vertex") {
        auto mf = c2->minimal_face_containing(Face{2});
        REQUIRE(mf.has_value());
        CHECK(*mf == Face{2});
    }
    SECTION("two opposite corners of the square") {
        auto mf = c2->minimal_face_containing(Face{0, 3});
        REQUIRE(mf.has_value());
        CHECK(*mf == Face{0, 1, 2, 3});
    }
    SECTION("no containing face") {
        // two disjoint edges
        auto c = make_simplicial({{Rational(0)}, {Rational(1)}, {Rational(5)}, {Rational(7)}},
                                 {Face{0, 1}, Face{2, 3}});
        CHECK_FALSE(c->minimal_face_containing(Face{0, 2}).has_value());
    }
    SECTION("agrees with brute force") {
        std::mt19937_64 rng(99);
        std::vector<std::shared_ptr<const Complex>> cs{make_simplex(3), make_cube(2),
                                                       product(make_simplex(2), make_cube(1))};
        for (auto& c : cs) {
            std::uniform_int_distribution<VertexId> pick(0, c->vertex_count() - 1);
            for (int trial = 0; trial < 40; ++trial) {
                Face s = sorted_face({pick(rng), pick(rng)});
                auto got = c->minimal_face_containing(s);
                // oracle: scan all faces for inclusion-minimal containing face
                std::optional<Face> best;
                for (const Face& f : c->all_faces()) {
                    if (!face_subset(s, f)) continue;
                    if (!best || face_subset(f, *best)) best = f;
                }
                REQUIRE(got.has_value() == best.has_value());
                if (got) {
                    CHECK(*got == *best);
                    for (const Face& f : c->all_faces())
                        if (face_subset(s, f)) CHECK(face_subset(*got, f));
                }
            }
        }
    }
}

TEST_CASE("order complex") {
    SECTION("segment") {
        auto oc = order_complex(*make_simplex(1));
        CHECK(oc.complex->vertex_count() == 3);
        CHECK(count_dim(*oc.complex, 1) == 2);
        CHECK(oc.complex->dim() == 1);
    }
    SECTION("square") {
        auto oc = order_complex(*make_cube(2));
        CHECK(oc.complex->vertex_count() == 9);
        CHECK(count_dim(*oc.complex, 2) == 8);  // maximal chains 4*2*1
        CHECK(oc.complex->dim() == 2);
        CHECK(validate(*oc.complex).empty());
        // simplicial: every face has |vertices| == dim+1
        for (const Face& f : oc.complex->all_faces())
            CHECK(static_cast<int>(f.size()) == oc.complex->face_dim(f) + 1);
    }
    SECTION("dimension is preserved") {
        auto oc = order_complex(*make_simplex(3));
        CHECK(oc.complex->dim() == 3);
    }
}

TEST_CASE("validate flags broken complexes") {
    SECTION("intersection not a face") {
        // two triangles sharing exactly two vertices but no common edge face
        std::vector<Coords> verts = {{Rational(0), Rational(0)},
                                     {Rational(2), Rational(0)},
                                     {Rational(1), Rational(1)},
                                     {Rational(1), Rational(-1)}};
        std::vector<std::pair<Face, std::vector<Face>>> lattice;
        for (VertexId v = 0; v < 4; ++v) lattice.push_back({Face{v}, {}});
        auto tri = [&](VertexId a, VertexId b, VertexId c) {
            // edges of each triangle included except the shared {0,1}
            lattice.push_back({Face{a, c}, {Face{a}, Face{c}}});
            lattice.push_back({Face{b, c}, {Face{b}, Face{c}}});
            lattice.push_back({Face{a, b, c}, {Face{a, c}, Face{b, c}}});
        };
        tri(0, 1, 2);
        tri(0, 1, 3);
        ExplicitComplex c(verts, lattice);
        auto v = validate(c);
        bool found = false;
        for (auto& violation : v)
            if (violation.kind == Violation::IntersectionNotAFace) found = true;
        CHECK(found);
    }
    SECTION("missing subface") {
        std::vector<Coords> verts = {{Rational(0), Rational(0)},
                                     {Rational(1), Rational(0)},
                                     {Rational(0), Rational(1)},
                                     {Rational(1), Rational(1)}};
        std::vector<std::pair<Face, std::vector<Face>>> lattice;
        for (VertexId v = 0; v < 4; ++v) lattice.push_back({Face{v}, {}});
        // the square lists four edges as facets but one is absent from the complex
        lattice.push_back({Face{0, 1}, {Face{0}, Face{1}}});
        lattice.push_back({Face{0, 2}, {Face{0}, Face{2}}});
        lattice.push_back({Face{1, 3}, {Face{1}, Face{3}}});
        lattice.push_back(
            {Face{0, 1, 2, 3}, {Face{0, 1}, Face{0, 2}, Face{1, 3}, Face{2, 3}}});
        ExplicitComplex c(verts, lattice);
        auto v = validate(c);
        bool found = false;
        for (auto& violation : v)
            if (violation.kind == Violation::MissingSubface) found = true;
        CHECK(found);
    }
}

TEST_CASE("random subcomplexes validate and close") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto c = random_subcomplex(seed);
        CHECK(validate(*c).empty());
    }
}

TEST_CASE("product associativity up to relabeling") {
    auto a = make_simplex(1);
    auto b = make_cube(1);
    auto c = make_simplex(0);
    auto left = product(product(a, b), c);
    auto right = product(a, product(b, c));
    // flattened little-endian encodings agree on the nose
    CHECK(left->all_faces() == right->all_faces());
}
