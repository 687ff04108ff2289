// The cut encoding (S, K), winner map, witness chains, and the solver.

#include <catch2/catch_amalgamated.hpp>

#include "polytopal/flatchain.hpp"
#include "polytopal/necklace.hpp"

using namespace polytopal;

namespace {

bool zero_mod(const Chain& c, int p) { return c.reduced_mod(p).is_zero(); }

// count faces of K by filtering the parent's faces (desk scale only)
std::vector<Face> k_faces(const NecklaceSetup& st) { return st.K->all_faces(); }

}  // namespace

TEST_CASE("necklace parsing") {
    Necklace nk = Necklace::from_string("abab");
    CHECK(nk.n == 4);
    CHECK(nk.t == 2);
    CHECK(nk.counts == std::vector<int>{2, 2});
    CHECK_THROWS_AS(Necklace::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Necklace::from_string("aB"), std::invalid_argument);
}

TEST_CASE("cut graph S") {
    auto s12 = build_S(1, 2);
    CHECK(s12->vertex_count() == 3);
    CHECK(s12->face_count() == 5);  // 3 vertices + 2 edges
    CHECK(validate(*s12).empty());

    auto s23 = build_S(2, 3);
    CHECK(s23->vertex_count() == 7);  // 1 + pn
    CHECK(s23->face_count() == 13);
    CHECK(validate(*s23).empty());

    for (int n : {1, 2, 3})
        for (int p : {2, 3}) CHECK(build_S(n, p)->vertex_count() == 1 + static_cast<unsigned>(p) * n);
}

TEST_CASE("the subcomplex K") {
    Necklace nk = Necklace::from_string("ab");
    NecklaceSetup st = make_setup(nk, 2);  // t=2, p=2, J=3
    CHECK(st.K->dim() == 2);

    SECTION("face characterization matches the vertex condition") {
        for (const Face& f : st.SJ->all_faces()) {
            bool all_vertices_ok = true;
            for (VertexId v : f) {
                bool has_n = false;
                for (const CutCoord& c : decode_vertex(st, v).coords)
                    if (c.pos == nk.n) has_n = true;
                all_vertices_ok = all_vertices_ok && has_n;
            }
            CHECK(st.K->contains(f) == all_vertices_ok);
        }
    }

    SECTION("dimension bound is attained") {
        int best = -1;
        for (const Face& f : k_faces(st)) best = std::max(best, st.K->face_dim(f));
        CHECK(best == nk.t * (st.p - 1));
    }

    SECTION("the action is free on K's vertices") {
        for (const Face& f : k_faces(st)) {
            if (st.K->face_dim(f) != 0) continue;
            CHECK(st.nuK->vertex(1, f[0]) != f[0]);
        }
    }
}

TEST_CASE("decoding splittings") {
    Necklace nk = Necklace::from_string("aab");

    SECTION("all coordinates at the right end") {
        CutVertex v{{{3, 2}, {3, 2}, {3, 2}}};
        Splitting s = decode_splitting(v, nk);
        CHECK(s.interior_cuts().empty());
        CHECK(s.owner_of_bead() == std::vector<int>{2, 2, 2});
    }

    SECTION("coordinate order decides ownership") {
        CutVertex v{{{2, 2}, {1, 1}, {3, 3}}};
        CutVertex w{{{1, 1}, {2, 2}, {3, 3}}};  // first two cuts exchanged
        std::vector<int> ov = decode_splitting(v, nk).owner_of_bead();
        std::vector<int> ow = decode_splitting(w, nk).owner_of_bead();
        CHECK(ov == std::vector<int>{2, 2, 3});
        CHECK(ow == std::vector<int>{1, 2, 3});  // first sub-necklace changes hands
        CHECK(ov[1] == ow[1]);                   // the second one does not
    }

    SECTION("origin coordinates are ignored") {
        CutVertex v{{{0, 0}, {2, 1}, {3, 2}}};
        Splitting s = decode_splitting(v, nk);
        CHECK(s.owner_of_bead() == std::vector<int>{1, 1, 2});
        CHECK(s.interior_cuts() == std::vector<int>{2});
    }
}

TEST_CASE("winners and the tie break") {
    Necklace nk = Necklace::from_string("aabb");

    SECTION("sole owner wins every type") {
        CutVertex v{{{4, 1}, {4, 1}, {4, 1}, {4, 1}, {4, 1}}};
        CHECK(winners(v, nk, 2) == std::vector<int>{1, 1});
    }

    SECTION("tie goes to the owner of the earliest bead") {
        // cut in the middle: thief 1 takes beads 1-2 (both a), thief 2 takes 3-4
        CutVertex v{{{2, 1}, {4, 2}, {0, 0}}};
        std::vector<int> w = winners(v, nk, 2);
        CHECK(w[0] == 1);  // a: 2-0
        CHECK(w[1] == 2);  // b: 0-2
        // cut after bead 1 and 3: thief 1 has one a and one b, thief 2 likewise
        CutVertex u{{{1, 1}, {3, 2}, {4, 1}}};
        std::vector<int> wu = winners(u, nk, 2);
        // ties on both types; earliest a (bead 1, thief 1), earliest b (bead 3, thief 2)
        CHECK(wu == std::vector<int>{1, 2});
    }
}

TEST_CASE("winner map is equivariant and polytopal (exhaustive, small)") {
    for (auto& [s, p] : std::vector<std::pair<std::string, int>>{
             {"ab", 2}, {"aa", 3}, {"aab", 2}, {"ab", 3}}) {
        Necklace nk = Necklace::from_string(s);
        NecklaceSetup st = make_setup(nk, p);
        CHECK(validate_polytopal(st.lambda).empty());
        for (const Face& f : k_faces(st)) {
            if (st.K->face_dim(f) != 0) continue;
            VertexId v = f[0];
            CHECK(st.lambda.vertex_fn(st.nuK->vertex(1, v)) ==
                  st.nuL->vertex(1, st.lambda.vertex_fn(v)));
        }
    }
}

TEST_CASE("witness chain ladder") {
    for (auto& [s, p] : std::vector<std::pair<std::string, int>>{
             {"aab", 2}, {"ab", 2}, {"aa", 3}, {"abab", 2}}) {
        Necklace nk = Necklace::from_string(s);
        NecklaceSetup st = make_setup(nk, p);
        std::vector<Chain> h = build_h(st);
        const int top = nk.t * (p - 1);
        REQUIRE(static_cast<int>(h.size()) == top + 1);

        // supports lie in K
        for (const Chain& c : h)
            for (auto& [f, k] : c.terms) CHECK(st.K->contains(f));

        // h_0 is a single K vertex
        CHECK(h[0].terms.size() == 1);

        // boundary relations, exactly mod p
        for (int d = 1; d <= top; ++d) {
            Chain lhs = boundary(*st.K, h[d]);
            Chain rhs = (d % 2 == 1) ? st.nuK->norm(h[d - 1]) : h_difference(st, h[d - 1]);
            CHECK(zero_mod(lhs - rhs, p));
        }
    }
}

TEST_CASE("flat kernel against the generic reference") {
    Necklace nk = Necklace::from_string("aab");
    NecklaceSetup st = make_setup(nk, 2);
    flat::FactorTable table(st.S);
    int nu = table.add_automorphism([&](VertexId v) {
        CutCoord c = s_vertex_decode(2, v);
        if (c.thief == 0) return v;
        c.thief = c.thief % 2 + 1;
        return s_vertex_id(2, c);
    });

    // a small flat chain: tensor of two path edges and one frozen vertex
    flat::FlatChain x;
    flat::CoordChain edge1{{table.id_of(sorted_face({0, s_vertex_id(2, {1, 1})})), 1}};
    flat::CoordChain edge2{{table.id_of(sorted_face({s_vertex_id(2, {1, 2}), s_vertex_id(2, {2, 2})})), 1}};
    flat::CoordChain vert{{table.id_of(Face{s_vertex_id(2, {3, 1})}), 1}};
    x[flat::Key{}] = 1;
    x = flat::tensor_coord(x, edge1);
    x = flat::tensor_coord(x, edge2);
    x = flat::tensor_coord(x, vert);

    Chain gx = flat::to_chain(table, *st.SJ, x);
    CHECK(gx.degree == 2);

    SECTION("boundaries agree") {
        Chain fast = flat::to_chain(table, *st.SJ, flat::boundary(table, x));
        Chain slow = boundary(*st.SJ, gx);
        CHECK(fast == slow);
    }
    SECTION("group action agrees") {
        Chain fast = flat::to_chain(table, *st.SJ, flat::act(table, nu, 1, x));
        Chain slow = st.nuK->apply(1, gx);
        CHECK(fast == slow);
    }
}

TEST_CASE("nonvanishing of the top chain image") {
    for (auto& [s, p] :
         std::vector<std::pair<std::string, int>>{{"ab", 2}, {"aab", 2}, {"aa", 3}}) {
        Necklace nk = Necklace::from_string(s);
        NecklaceSetup st = make_setup(nk, p);
        std::vector<Chain> h = build_h(st);
        auto lam = induce_chain_map(st.lambda);
        Chain image = lam->apply(h.back());
        CHECK_FALSE(image.reduced_mod(p).is_zero());
        // every face with nonzero lambda# maps onto the top face of L
        Face top_face;
        for (const Face& f : st.L->all_faces())
            if (st.L->face_dim(f) == st.L->dim()) top_face = f;
        for (auto& [f, k] : h.back().terms) {
            Chain img = lam->apply_face(f);
            if (!img.is_zero()) {
                CHECK(img.terms.begin()->first == top_face);
                CHECK(st.lambda.image(f) == top_face);
            }
        }
    }
}

TEST_CASE("find_fair_split on the worked examples") {
    SECTION("aa with two thieves") {
        auto out = find_fair_split(Necklace::from_string("aa"), 2);
        CHECK(out.splitting.interior_cuts() == std::vector<int>{1});
        CHECK(verify_splitting(Necklace::from_string("aa"), out.splitting, 2).ok());
    }
    SECTION("aabb with two thieves") {
        Necklace nk = Necklace::from_string("aabb");
        auto out = find_fair_split(nk, 2);
        SplitReport rep = verify_splitting(nk, out.splitting, 2);
        CHECK(rep.ok());
        CHECK(rep.interior_cut_count <= 2);
        for (int r = 0; r < 2; ++r) {
            CHECK(rep.counts[0][r] == 1);
            CHECK(rep.counts[1][r] == 1);
        }
    }
    SECTION("aab with two thieves (counts not multiples of q)") {
        Necklace nk = Necklace::from_string("aab");
        auto out = find_fair_split(nk, 2);
        SplitReport rep = verify_splitting(nk, out.splitting, 2);
        CHECK(rep.ok());
        CHECK(rep.counts[0][0] == 1);
        CHECK(rep.counts[0][1] == 1);
    }
    SECTION("composite q = 4") {
        Necklace nk = Necklace::from_string("aaaabbbb");
        auto out = find_fair_split(nk, 4);
        SplitReport rep = verify_splitting(nk, out.splitting, 4);
        CHECK(rep.ok());
        CHECK(rep.interior_cut_count <= 6);
        CHECK_FALSE(out.used_fallback);
    }
    SECTION("parallel equals serial") {
        Necklace nk = Necklace::from_string("abbaba");
        SplitOptions ser, par;
        par.parallel = true;
        auto a = find_fair_split(nk, 2, ser);
        auto b = find_fair_split(nk, 2, par);
        CHECK(a.splitting.segments.size() == b.splitting.segments.size());
        CHECK(a.splitting.owner_of_bead() == b.splitting.owner_of_bead());
        auto c = find_fair_split(nk, 3, ser);
        auto d = find_fair_split(nk, 3, par);
        CHECK(c.splitting.owner_of_bead() == d.splitting.owner_of_bead());
    }
}

TEST_CASE("verify_splitting flags problems") {
    Necklace nk = Necklace::from_string("aabb");
    SECTION("unfair assignment") {
        Splitting s = Splitting::from_cuts_owners(4, 2, {}, {1});
        SplitReport rep = verify_splitting(nk, s, 2);
        CHECK(rep.covers);
        CHECK_FALSE(rep.fair());
    }
    SECTION("budget violation") {
        Splitting s = Splitting::from_cuts_owners(4, 2, {1, 2, 3}, {1, 2, 1, 2});
        SplitReport rep = verify_splitting(nk, s, 2);
        CHECK(rep.interior_cut_count == 3);
        CHECK_FALSE(rep.within_budget);  // t(q-1) = 2
    }
    SECTION("gap in coverage") {
        Splitting s;
        s.n = 4;
        s.q = 2;
        s.segments = {{0, 2, 1}, {3, 4, 2}};
        CHECK_FALSE(verify_splitting(nk, s, 2).covers);
    }
}

TEST_CASE("brute force oracle") {
    SECTION("ab splits without cuts when every count is 1") {
        // floor(1/2) = 0: one thief may take both beads
        Necklace nk = Necklace::from_string("ab");
        auto s0 = brute_force_split(nk, 2, 0);
        REQUIRE(s0.has_value());
        CHECK(verify_splitting(nk, *s0, 2).ok());
        auto s = brute_force_split(nk, 2, 2);
        REQUIRE(s.has_value());
        CHECK(verify_splitting(nk, *s, 2).ok());
    }
    SECTION("aabb genuinely needs cuts") {
        Necklace nk = Necklace::from_string("aabb");
        CHECK_FALSE(brute_force_split(nk, 2, 0).has_value());
        CHECK(brute_force_split(nk, 2, 2).has_value());
    }
    SECTION("single type splits with exactly q-1 cuts") {
        Necklace nk = Necklace::from_string("aaaaaa");
        auto s = brute_force_split(nk, 3, 2);
        REQUIRE(s.has_value());
        CHECK(s->interior_cuts().size() == 2);
    }
    SECTION("size guard") {
        CHECK_THROWS_AS(brute_force_split(Necklace::from_string("aaaaaaaaaaaaa"), 2, 1), TooLarge);
    }
}

TEST_CASE("mini sweep against the oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::string s;
            for (int k = 0; k < n; ++k) s.push_back((mask >> k) & 1 ? 'b' : 'a');
            Necklace nk = Necklace::from_string(s);
            for (int q : {2, 3}) {
                auto out = find_fair_split(nk, q);
                SplitReport rep = verify_splitting(nk, out.splitting, q);
                CHECK(rep.ok());
                auto oracle = brute_force_split(nk, q, nk.t * (q - 1));
                CHECK(oracle.has_value());
            }
        }
    }
}
