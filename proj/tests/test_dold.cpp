// Join complex, subdivision chain map, orbit map g, phi functionals, pairing.

#include <catch2/catch_amalgamated.hpp>

#include "polytopal/dold.hpp"

using namespace polytopal;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("join complex combinatorics") {
    for (int p : {2, 3})
        for (int m : {1, 2, 3, 4}) {
            JoinComplex j = build_join(p, m);
            CHECK(j.complex->vertex_count() == static_cast<unsigned>(m) * p);
            CHECK(j.complex->dim() == m - 1);
            std::vector<std::size_t> per_dim(m, 0);
            for (const Face& f : j.complex->all_faces()) ++per_dim[j.complex->face_dim(f)];
            for (int d = 0; d < m; ++d) {
                long long expect = binom(m, d + 1);
                for (int i = 0; i <= d; ++i) expect *= p;
                CHECK(per_dim[d] == static_cast<std::size_t>(expect));
            }
            // the action is free on faces
            for (const Face& f : j.complex->all_faces()) CHECK(j.nu->face(1, f) != f);
        }
    CHECK(validate(*build_join(2, 3).complex).empty());
}

TEST_CASE("subdivision chain map") {
    SECTION("an edge splits into two half-edges") {
        auto s1 = make_simplex(1);
        auto sd = sd_chain_map(s1);
        Chain c = sd->apply_face(Face{0, 1});
        CHECK(c.terms.size() == 2);
        for (auto& [f, k] : c.terms) {
            CHECK(f.size() == 2);
            CHECK((k == 1 || k == -1));
        }
        // signs are forced by boundary commutation
        Chain lhs = sd->apply(boundary(*s1, face_chain(*s1, Face{0, 1})));
        Chain rhs = boundary(*sd->target(), c);
        CHECK(lhs == rhs);
    }
    SECTION("the square splits into eight triangles") {
        auto c2 = make_cube(2);
        auto sd = sd_chain_map(c2);
        Chain c = sd->apply_face(Face{0, 1, 2, 3});
        CHECK(c.terms.size() == 8);
        for (auto& [f, k] : c.terms) CHECK((k == 1 || k == -1));
    }
    SECTION("boundary commutation everywhere") {
        for (std::shared_ptr<const Complex> base :
             {std::static_pointer_cast<const Complex>(make_simplex(2)),
              std::static_pointer_cast<const Complex>(make_cube(2))}) {
            auto sd = sd_chain_map(base);
            for (const Face& f : base->all_faces()) {
                Chain lhs = sd->apply(boundary(*base, face_chain(*base, f)));
                Chain rhs = boundary(*sd->target(), sd->apply_face(f));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("orbit map g") {
    Necklace nk = Necklace::from_string("aaa");
    NecklaceSetup st = make_setup(nk, 3);  // L = simplex_2
    auto sd = sd_chain_map(st.L);
    const OrderComplex& oc = sd->order();
    JoinComplex join = build_join(3, 3);
    PolytopalMap g = build_g(oc, *st.nuL, join);

    SECTION("vertices land in the first copy, flags in distinct copies") {
        CHECK(validate_polytopal(g).empty());
        for (std::size_t i = 0; i < oc.elements.size(); ++i) {
            int d = st.L->face_dim(oc.elements[i]);
            VertexId img = g.vertex_fn(i);
            CHECK(static_cast<int>(img / 3) == d);  // copy = dim+1 (0-based block d)
        }
    }
    SECTION("equivariance below the top poset element") {
        for (std::size_t i = 0; i < oc.elements.size(); ++i) {
            const Face& elt = oc.elements[i];
            if (st.L->face_dim(elt) == st.L->dim()) continue;  // the fixed top face
            VertexId moved = oc.index.at(st.nuL->face(1, elt));
            CHECK(g.vertex_fn(moved) == join.nu->vertex(1, g.vertex_fn(i)));
        }
    }
    SECTION("a fixed proper face raises OrbitNotFree") {
        auto s1 = make_simplex(1);
        auto sd1 = sd_chain_map(s1);
        GroupAction trivial(s1, [](VertexId v) { return v; }, 2);
        CHECK_THROWS_AS(build_g(sd1->order(), trivial, build_join(2, 2)), OrbitNotFree);
    }
}

TEST_CASE("eta chain map") {
    Necklace nk = Necklace::from_string("aa");
    NecklaceSetup st = make_setup(nk, 2);  // L = simplex_1, top = 1
    EtaMachine em = eta_chain_map(st, 2);

    for (const Face& f : st.L->all_faces()) {
        Chain img = em.eta->apply_face(f);
        if (!img.is_zero()) CHECK(img.degree == st.L->face_dim(f));
        Chain lhs = em.eta->apply(boundary(*st.L, face_chain(*st.L, f)));
        Chain rhs = boundary(*em.join.complex, img);
        CHECK(lhs == rhs);
        if (st.L->face_dim(f) < st.L->dim()) {
            Chain a = em.eta->apply(st.nuL->apply(1, face_chain(*st.L, f)));
            Chain b = em.join.nu->apply(1, em.eta->apply_face(f));
            CHECK(a == b);
        }
    }
}

TEST_CASE("phi recurrences hold on every basis chain") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        JoinComplex join = build_join(p, m);
        PhiSequence phi = solve_phi(join, m - 1);
        // phi_0: 1 exactly on the element-0 vertices
        for (int copy = 1; copy <= m; ++copy) {
            Chain v = face_chain(*join.complex, Face{join.vid(copy, 0)});
            CHECK(phi.eval(0, v) == 1);
            Chain w = face_chain(*join.complex, Face{join.vid(copy, 1 % p)});
            CHECK(phi.eval(0, w) == 0);
        }
        for (int d = 1; d <= m - 1; ++d) {
            for (const Face& f : join.complex->all_faces()) {
                if (join.complex->face_dim(f) != d) continue;
                Chain c = face_chain(*join.complex, f);
                Chain op;
                if (d % 2 == 1)
                    op = (p == 2) ? join.nu->apply(1, c) - c
                                  : join.nu->apply(-1, c) - join.nu->apply(1, c);
                else
                    op = join.nu->norm(c);
                int lhs = phi.eval(d, op);
                int rhs = phi.eval(d - 1, boundary(*join.complex, c));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("pairing ladder") {
    SECTION("t=1 p=2") {
        NecklaceSetup st = make_setup(Necklace::from_string("aa"), 2);
        PairingReport rep = verify_pairing(st);
        REQUIRE(rep.rungs.size() == 1);  // top = 1: the base rung only
        CHECK(rep.rungs[0].residue == 1);
        CHECK(rep.top_nonzero);
        CHECK(rep.final_nonzero);
        CHECK(rep.witness_faces >= 1);
        CHECK_NOTHROW(require_ok(rep));
    }
    SECTION("t=1 p=3: residues alternate") {
        NecklaceSetup st = make_setup(Necklace::from_string("aaa"), 3);
        PairingReport rep = verify_pairing(st);
        REQUIRE(rep.rungs.size() == 2);
        CHECK(rep.rungs[0].residue == 1);       // (-1)^0
        CHECK(rep.rungs[1].residue == 3 - 1);   // (-1)^1 mod 3
        CHECK(rep.top_nonzero);
        CHECK_NOTHROW(require_ok(rep));
    }
    SECTION("t=2 p=2") {
        NecklaceSetup st = make_setup(Necklace::from_string("ab"), 2);
        PairingReport rep = verify_pairing(st);
        REQUIRE(rep.rungs.size() == 2);
        for (auto& r : rep.rungs) CHECK(r.ok);
        CHECK(rep.top_nonzero);
        CHECK_NOTHROW(require_ok(rep));
    }
}
