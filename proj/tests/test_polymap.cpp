// Polytopal maps, induced chain maps, functoriality, homotopies.

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "polytopal/polymap.hpp"
#include "polytopal/propsuite.hpp"

using namespace polytopal;

namespace {

// Textbook simplicial chain map, used as an independent oracle.
Chain classical_simplicial_image(const PolytopalMap& m, const Face& f) {
    std::vector<VertexId> img;
    for (VertexId v : f) img.push_back(m.vertex_fn(v));
    std::vector<VertexId> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    Chain out;
    out.degree = static_cast<int>(f.size()) - 1;
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
    // parity of the permutation sorting img
    int sign = 1;
    std::vector<VertexId> work = img;
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = i + 1; j < work.size(); ++j)
            if (work[i] > work[j]) {
                std::swap(work[i], work[j]);
                sign = -sign;
            }
    out.add(work, sign);
    return out;
}

std::shared_ptr<ExplicitComplex> hexagon() {
    std::vector<Coords> verts = {
        {Rational(2), Rational(0)},   {Rational(1), Rational(2)},   {Rational(-1), Rational(2)},
        {Rational(-2), Rational(0)},  {Rational(-1), Rational(-2)}, {Rational(1), Rational(-2)}};
    std::vector<std::pair<Face, std::vector<Face>>> lattice;
    for (VertexId v = 0; v < 6; ++v) lattice.push_back({Face{v}, {}});
    std::vector<Face> edges;
    for (VertexId v = 0; v < 6; ++v) edges.push_back(sorted_face({v, (v + 1) % 6}));
    for (auto& e : edges) lattice.push_back({e, {Face{e[0]}, Face{e[1]}}});
    lattice.push_back({Face{0, 1, 2, 3, 4, 5}, edges});
    return std::make_shared<ExplicitComplex>(verts, lattice);
}

// Checks lambda# d == d lambda# on every face of the source.
void check_chain_map_property(const ChainMapBase& cm) {
    const Complex& src = *cm.source();
    const Complex& tgt = *cm.target();
    for (const Face& f : src.all_faces()) {
        Chain lhs = cm.apply(boundary(src, face_chain(src, f)));
        Chain rhs = boundary(tgt, cm.apply_face(f));
        CHECK(lhs == rhs);
    }
}

}  // namespace

TEST_CASE("identity map validates and induces the identity") {
    auto c3 = make_cube(3);
    PolytopalMap id = identity_map(c3);
    CHECK(validate_polytopal(id).empty());
    auto cm = induce_chain_map(id);
    for (const Face& f : c3->all_faces()) {
        Chain img = cm->apply_face(f);
        REQUIRE(img.terms.size() == 1);
        CHECK(img.terms.begin()->first == f);
        CHECK(img.terms.begin()->second == 1);
    }
}

TEST_CASE("constant map is polytopal") {
    auto c3 = make_cube(3);
    auto pt = make_simplex(0);
    PolytopalMap cst{c3, pt, [](VertexId) { return 0; }};
    CHECK(validate_polytopal(cst).empty());
}

TEST_CASE("the eight-row cube map separates the two definitions") {
    auto c3 = make_cube(3);
    auto c4 = make_cube(4);
    // (x,y,z) with little-endian ids; images as 4-bit little-endian ids.
    std::vector<VertexId> table(8);
    auto set = [&](int x, int y, int z, int a, int b, int c, int d) {
        table[x + 2 * y + 4 * z] = a + 2 * b + 4 * c + 8 * d;
    };
    set(0, 0, 0, 0, 0, 0, 0);
    set(1, 0, 0, 1, 0, 0, 0);
    set(0, 1, 0, 0, 1, 0, 0);
    set(1, 1, 0, 0, 0, 0, 0);
    set(0, 0, 1, 0, 0, 0, 1);
    set(1, 0, 1, 0, 0, 0, 0);
    set(0, 1, 1, 0, 0, 0, 0);
    set(1, 1, 1, 0, 0, 1, 0);
    PolytopalMap m = PolytopalMap::from_table(c3, c4, table);

    CHECK(feh_cubical_ok(m));  // cubical in the Fan-Ehrenborg-Hetyei sense

    auto viols = validate_polytopal(m);  // but not polytopal
    REQUIRE_FALSE(viols.empty());
    bool top_cube_flagged = false;
    for (auto& v : viols)
        if (v.face.size() == 8 && v.min_face_dim == 4) top_cube_flagged = true;
    CHECK(top_cube_flagged);
}

TEST_CASE("random simplicial maps agree with the classical chain map") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        auto src = random_simplicial_complex(rng);
        auto tgt = make_simplex(3);  // full simplex: every vertex map is simplicial
        std::uniform_int_distribution<VertexId> pick(0, tgt->vertex_count() - 1);
        std::vector<VertexId> table(src->vertex_count());
        for (auto& t : table) t = pick(rng);
        PolytopalMap m = PolytopalMap::from_table(src, tgt, table);
        CHECK(validate_polytopal(m).empty());
        auto cm = induce_chain_map(m);
        for (const Face& f : src->all_faces()) {
            Chain got = cm->apply_face(f);
            Chain expect = classical_simplicial_image(m, f);
            CHECK(got == expect);
            for (auto& [face, k] : got.terms) CHECK((k == 1 || k == -1));
            // nonzero image means the image vertex set equals the target face
            if (!got.is_zero()) CHECK(m.image(f) == got.terms.begin()->first);
        }
        check_chain_map_property(*cm);
    }
}

TEST_CASE("polytopal validator matches the classical simplicial condition") {
    // Target with a missing top simplex so that some maps get rejected.
    auto tgt = make_simplicial({{Rational(1), Rational(0), Rational(0)},
                                {Rational(0), Rational(1), Rational(0)},
                                {Rational(0), Rational(0), Rational(1)},
                                {Rational(1), Rational(1), Rational(1)}},
                               {Face{0, 1, 2}, Face{2, 3}});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto src = random_simplicial_complex(rng);
        std::uniform_int_distribution<VertexId> pick(0, tgt->vertex_count() - 1);
        std::vector<VertexId> table(src->vertex_count());
        for (auto& t : table) t = pick(rng);
        PolytopalMap m = PolytopalMap::from_table(src, tgt, table);
        bool classical = true;
        for (const Face& f : src->all_faces())
            if (!tgt->contains(m.image(f))) classical = false;
        CHECK(validate_polytopal(m).empty() == classical);
    }
}

TEST_CASE("hexagon double wrap has multiplicity two") {
    auto hex = hexagon();
    auto tri = make_simplex(2);
    PolytopalMap wrap = PolytopalMap::from_table(hex, tri, {0, 1, 2, 0, 1, 2});
    CHECK(validate_polytopal(wrap).empty());
    auto cm = induce_chain_map(wrap);
    for (VertexId v = 0; v < 6; ++v) {
        Chain img = cm->apply_face(sorted_face({v, (v + 1) % 6}));
        REQUIRE(img.terms.size() == 1);
        CHECK(std::abs(img.terms.begin()->second) == 1);
    }
    Chain top = cm->apply_face(Face{0, 1, 2, 3, 4, 5});
    REQUIRE(top.terms.size() == 1);
    CHECK(top.terms.begin()->first == Face{0, 1, 2});
    CHECK(std::abs(top.terms.begin()->second) == 2);
    check_chain_map_property(*cm);
}

TEST_CASE("functoriality") {
    std::mt19937_64 rng(11);
    auto mid = make_simplex(4);
    auto tgt = make_simplex(3);

    SECTION("compose with identity") {
        auto src = random_simplicial_complex(rng);
        PolytopalMap id = identity_map(src);
        std::uniform_int_distribution<VertexId> pick(0, mid->vertex_count() - 1);
        std::vector<VertexId> table(src->vertex_count());
        for (auto& t : table) t = pick(rng);
        auto lam = induce_chain_map(PolytopalMap::from_table(src, mid, table));
        auto composed = compose(lam, induce_chain_map(id));
        for (const Face& f : src->all_faces()) CHECK(composed->apply_face(f) == lam->apply_face(f));
    }

    SECTION("(lambda mu)# = lambda# mu# on random pairs") {
        for (int trial = 0; trial < 25; ++trial) {
            auto src = random_simplicial_complex(rng);
            std::uniform_int_distribution<VertexId> pick_mid(0, mid->vertex_count() - 1);
            std::uniform_int_distribution<VertexId> pick_tgt(0, tgt->vertex_count() - 1);
            std::vector<VertexId> t1(src->vertex_count()), t2(mid->vertex_count());
            for (auto& t : t1) t = pick_mid(rng);
            for (auto& t : t2) t = pick_tgt(rng);
            PolytopalMap mu = PolytopalMap::from_table(src, mid, t1);
            PolytopalMap lam = PolytopalMap::from_table(mid, tgt, t2);
            auto pointwise = compose(induce_chain_map(lam), induce_chain_map(mu));
            auto direct = induce_chain_map(compose_maps(lam, mu));
            for (const Face& f : src->all_faces())
                CHECK(pointwise->apply_face(f) == direct->apply_face(f));
        }
    }
}

TEST_CASE("group action chain maps") {
    auto tri = make_simplex(2);
    GroupAction rot(tri, [](VertexId v) { return (v + 1) % 3; }, 3);
    Chain top = face_chain(*tri, Face{0, 1, 2});
    Chain rotated = rot.apply(1, top);
    REQUIRE(rotated.terms.size() == 1);
    CHECK(rotated.terms.begin()->first == Face{0, 1, 2});
    CHECK(rotated.terms.begin()->second == 1);  // a 3-cycle is even
    CHECK(rot.apply(3, top) == top);
    Chain v = face_chain(*tri, Face{0});
    CHECK(rot.norm(v).terms.size() == 3);
}

TEST_CASE("prism homotopy") {
    SECTION("lambda == mu gives the zero identity") {
        auto k = make_cube(2);
        auto p1 = make_path(1);
        auto kx = product(k, p1);
        PolytopalMap lam = identity_map(k);
        PolytopalMap phi{kx, k, [&](VertexId v) { return v % k->vertex_count(); }};
        PrismHomotopy d(phi, lam, lam);
        for (const Face& f : k->all_faces()) {
            Chain c = face_chain(*k, f);
            Chain lhs = d.apply(boundary(*k, c)) + boundary(*k, d.apply(c));
            CHECK(lhs.is_zero());
        }
    }

    SECTION("contiguous simplicial maps") {
        auto k = make_simplex(1);
        auto l = make_simplex(2);
        auto p1 = make_path(1);
        auto kx = product(k, p1);
        PolytopalMap lam = PolytopalMap::from_table(k, l, {0, 1});
        PolytopalMap mu = PolytopalMap::from_table(k, l, {0, 2});
        PolytopalMap phi = PolytopalMap::from_table(kx, l, {0, 1, 0, 2});
        CHECK(validate_polytopal(phi).empty());
        PrismHomotopy d(phi, lam, mu);
        auto lamc = induce_chain_map(lam);
        auto muc = induce_chain_map(mu);
        for (const Face& f : k->all_faces()) {
            Chain c = face_chain(*k, f);
            Chain lhs = d.apply(boundary(*k, c)) + boundary(*l, d.apply(c));
            Chain rhs = lamc->apply(c) - muc->apply(c);
            CHECK(lhs == rhs);
        }
    }

    SECTION("cubical elementary homotopy") {
        auto k = make_cube(1);
        auto l = make_cube(2);
        auto kx = product(k, make_path(1));
        PolytopalMap lam = PolytopalMap::from_table(k, l, {0, 1});
        PolytopalMap mu = PolytopalMap::from_table(k, l, {2, 3});
        PolytopalMap phi = PolytopalMap::from_table(kx, l, {0, 1, 2, 3});
        CHECK(validate_polytopal(phi).empty());
        PrismHomotopy d(phi, lam, mu);
        auto lamc = induce_chain_map(lam);
        auto muc = induce_chain_map(mu);
        for (const Face& f : k->all_faces()) {
            Chain c = face_chain(*k, f);
            Chain lhs = d.apply(boundary(*k, c)) + boundary(*l, d.apply(c));
            CHECK(lhs == lamc->apply(c) - muc->apply(c));
        }
    }

    SECTION("restriction mismatch throws") {
        auto k = make_simplex(1);
        auto l = make_simplex(2);
        auto kx = product(k, make_path(1));
        PolytopalMap lam = PolytopalMap::from_table(k, l, {0, 1});
        PolytopalMap mu = PolytopalMap::from_table(k, l, {0, 2});
        PolytopalMap phi = PolytopalMap::from_table(kx, l, {0, 1, 0, 1});
        CHECK_THROWS_AS(PrismHomotopy(phi, lam, mu), NotAHomotopy);
    }

    SECTION("telescoping along a length-3 path") {
        auto k = make_simplex(1);
        auto l = make_simplex(2);
        std::vector<std::vector<VertexId>> steps = {{0, 1}, {0, 0}, {0, 2}, {2, 2}};
        auto lam0 = induce_chain_map(PolytopalMap::from_table(k, l, steps.front()));
        auto lam3 = induce_chain_map(PolytopalMap::from_table(k, l, steps.back()));
        auto kx = product(k, make_path(1));
        for (const Face& f : k->all_faces()) {
            Chain c = face_chain(*k, f);
            Chain total_d;
            total_d.degree = c.degree + 1;
            Chain total_db;
            total_db.degree = c.degree;
            for (int s = 0; s < 3; ++s) {
                PolytopalMap a = PolytopalMap::from_table(k, l, steps[s]);
                PolytopalMap b = PolytopalMap::from_table(k, l, steps[s + 1]);
                std::vector<VertexId> tbl;
                for (auto v : steps[s]) tbl.push_back(v);
                for (auto v : steps[s + 1]) tbl.push_back(v);
                PolytopalMap phi = PolytopalMap::from_table(kx, l, tbl);
                REQUIRE(validate_polytopal(phi).empty());
                PrismHomotopy d(phi, a, b);
                total_d += d.apply(c);
                total_db += d.apply(boundary(*k, c));
            }
            Chain lhs = total_db + boundary(*l, total_d);
            Chain rhs = lam0->apply(c) - lam3->apply(c);
            CHECK(lhs == rhs);
        }
    }
}
