#include "polytopal/propsuite.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "polytopal/linalg.hpp"
#include "polytopal/polymap.hpp"

namespace polytopal {

namespace {

std::string face_str(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "}";
}

}  // namespace

std::vector<std::string> check_dd_zero(const Complex& c) {
    std::vector<std::string> fails;
    for (const Face& f : c.all_faces()) {
        Chain d = boundary(c, face_chain(c, f));
        Chain dd = boundary(c, d);
        if (!dd.is_zero()) fails.push_back("dd != 0 on face " + face_str(f));
    }
    return fails;
}

std::vector<std::string> check_two_orientations(const Complex& c, const Face& f) {
    std::vector<std::string> fails;
    const int d = c.face_dim(f);
    const std::size_t k = d + 1;
    const std::vector<Coords> all_coords = c.coords_of(f);

    // Independent (d+1)-subsets, each kept in sorted vertex order.
    std::vector<std::vector<std::size_t>> combos;  // indices into f
    std::vector<std::size_t> pick(k);
    auto gen = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
        if (pos == k) {
            std::vector<Coords> pts;
            for (std::size_t i : pick) pts.push_back(all_coords[i]);
            if (affinely_independent(pts)) combos.push_back(pick);
            return;
        }
        for (std::size_t i = from; i + (k - pos - 1) < f.size(); ++i) {
            pick[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    gen(gen, 0, 0);
    if (combos.empty()) {
        fails.push_back("no independent tuple in face " + face_str(f));
        return fails;
    }

    // Half-space side of point x w.r.t. the hyperplane through `rest`,
    // measured inside the face's own frame.
    const std::vector<VertexId> face_frame = c.reference_frame(f);
    const std::vector<Coords> frame_coords = c.coords_of(face_frame);
    auto side = [&](const std::vector<std::size_t>& rest, std::size_t x) {
        std::vector<Coords> tuple;
        for (std::size_t i : rest) tuple.push_back(all_coords[i]);
        tuple.push_back(all_coords[x]);
        return sign_in_frame(frame_coords, tuple);
    };

    // Propagate from the lexicographically first combo (value +1) across
    // single-vertex exchanges; the half-space axiom forces each step.
    std::map<std::vector<std::size_t>, int> value;
    value[combos[0]] = 1;
    std::queue<std::vector<std::size_t>> todo;
    todo.push(combos[0]);
    std::map<std::vector<std::size_t>, bool> is_combo;
    for (auto& cb : combos) is_combo[cb] = true;

    auto exchange_value = [&](const std::vector<std::size_t>& from, int from_val,
                              std::size_t out_pos, std::size_t in_idx) {
        // Value of the sorted tuple (from \ from[out_pos]) + in_idx.
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < from.size(); ++i)
            if (i != out_pos) rest.push_back(from[i]);
        // Work with the ordered tuple (x, rest...) at position 0; alternation
        // relates it to the sorted representative by insertion parity.
        auto front_value = [&](std::size_t x, int sorted_val) {
            // sorted tuple = rest with x inserted at its sorted position q:
            // moving x to the front costs (-1)^q.
            std::size_t q = 0;
            while (q < rest.size() && rest[q] < x) ++q;
            return (q % 2 == 0) ? sorted_val : -sorted_val;
        };
        int from_front = front_value(from[out_pos], from_val);
        int s_out = side(rest, from[out_pos]);
        int s_in = side(rest, in_idx);
        int new_front = (s_out == s_in) ? from_front : -from_front;
        // invert the parity mapping for the new sorted representative
        std::size_t q = 0;
        while (q < rest.size() && rest[q] < in_idx) ++q;
        return (q % 2 == 0) ? new_front : -new_front;
    };

    while (!todo.empty()) {
        std::vector<std::size_t> cur = todo.front();
        todo.pop();
        const int cur_val = value.at(cur);
        for (std::size_t out = 0; out < cur.size(); ++out) {
            for (std::size_t in_idx = 0; in_idx < f.size(); ++in_idx) {
                if (std::find(cur.begin(), cur.end(), in_idx) != cur.end()) continue;
                std::vector<std::size_t> next;
                for (std::size_t i = 0; i < cur.size(); ++i)
                    if (i != out) next.push_back(cur[i]);
                next.push_back(in_idx);
                std::sort(next.begin(), next.end());
                if (!is_combo.count(next)) continue;  // dependent replacement
                int forced = exchange_value(cur, cur_val, out, in_idx);
                auto it = value.find(next);
                if (it == value.end()) {
                    value[next] = forced;
                    todo.push(next);
                } else if (it->second != forced) {
                    fails.push_back("axiom conflict at tuple in face " + face_str(f));
                }
            }
        }
    }

    if (value.size() != combos.size())
        fails.push_back("exchange graph not connected on face " + face_str(f) +
                        " (propagation misses tuples; orientation not unique)");

    // The propagated assignment must be the determinant-rule reference.
    Orientation ref = reference_orientation(c, f);
    for (auto& [combo, val] : value) {
        std::vector<VertexId> tuple;
        for (std::size_t i : combo) tuple.push_back(f[i]);
        if (evaluate(c, ref, tuple) != val)
            fails.push_back("propagated orientation disagrees with reference on " + face_str(f));
    }
    return fails;
}

std::vector<std::string> check_leibniz(std::shared_ptr<const Complex> a,
                                       std::shared_ptr<const Complex> b) {
    std::vector<std::string> fails;
    auto prod = product(a, b);
    for (const Face& fa : a->all_faces())
        for (const Face& fb : b->all_faces()) {
            Chain ca = face_chain(*a, fa);
            Chain cb = face_chain(*b, fb);
            Chain t = tensor(*a, *b, ca, cb);
            Chain lhs = boundary(*prod, t);
            Chain rhs = tensor(*a, *b, boundary(*a, ca), cb);
            Chain second = tensor(*a, *b, ca, boundary(*b, cb));
            if (a->face_dim(fa) % 2 == 0)
                rhs += second;
            else
                rhs -= second;
            if (!(lhs == rhs))
                fails.push_back("Leibniz fails on " + face_str(fa) + " x " + face_str(fb));
            Chain dd = boundary(*prod, lhs);
            if (!dd.is_zero())
                fails.push_back("dd != 0 on tensor " + face_str(fa) + " x " + face_str(fb));
        }
    return fails;
}

std::shared_ptr<ExplicitComplex> random_simplicial_complex(std::mt19937_64& rng) {
    // Random subset of the 3-skeleton of a simplex on 6 vertices, closed down.
    const int nv = 6;
    std::vector<Coords> verts(nv, Coords(nv, Rational(0)));
    for (int i = 0; i < nv; ++i) verts[i][i] = 1;
    std::vector<Face> faces;
    std::uniform_int_distribution<int> coin(0, 3);
    for (std::uint64_t mask = 1; mask < (1ull << nv); ++mask) {
        int sz = __builtin_popcountll(mask);
        if (sz > 4) continue;
        if (sz >= 2 && coin(rng) != 0) continue;  // keep ~1/4 of the candidates
        Face f;
        for (int i = 0; i < nv; ++i)
            if (mask & (1ull << i)) f.push_back(i);
        faces.push_back(std::move(f));
    }
    for (int i = 0; i < nv; ++i) faces.push_back(Face{static_cast<VertexId>(i)});
    return make_simplicial(std::move(verts), faces);
}

Chain classical_simplicial_image(const std::function<VertexId(VertexId)>& vertex_map,
                                 const Face& f) {
    std::vector<VertexId> img;
    img.reserve(f.size());
    for (VertexId v : f) img.push_back(vertex_map(v));
    std::vector<VertexId> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    Chain out;
    out.degree = static_cast<int>(f.size()) - 1;
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
    int sign = 1;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) {
                std::swap(img[i], img[j]);
                sign = -sign;
            }
    out.add(img, sign);
    return out;
}

std::vector<std::string> run_invariant_suite(std::uint64_t seed, int max_dim) {
    std::vector<std::string> fails;
    auto take = [&fails](std::vector<std::string> more, const std::string& where) {
        for (auto& m : more) fails.push_back(where + ": " + m);
    };

    // constructor complexes validate and satisfy dd = 0
    for (int d = 0; d <= max_dim; ++d) {
        auto s = make_simplex(d);
        for (const Violation& v : validate(*s)) fails.push_back("simplex: " + v.describe());
        take(check_dd_zero(*s), "simplex d=" + std::to_string(d));
    }
    for (int d = 0; d <= std::min(max_dim, 4); ++d) {
        auto c = make_cube(d);
        for (const Violation& v : validate(*c)) fails.push_back("cube: " + v.describe());
        take(check_dd_zero(*c), "cube d=" + std::to_string(d));
    }
    {
        auto prod = product(make_simplex(2), make_cube(1));
        for (const Violation& v : validate(*prod)) fails.push_back("product: " + v.describe());
        take(check_dd_zero(*prod), "product");
    }

    // boundary convention and two-orientations spot checks
    {
        auto s1 = make_simplex(1);
        Chain d = boundary(*s1, face_chain(*s1, Face{0, 1}));
        Chain expect;
        expect.degree = 0;
        expect.add(Face{1}, 1);
        expect.add(Face{0}, -1);
        if (!(d == expect)) fails.push_back("boundary of an edge is not head minus tail");
        take(check_two_orientations(*make_cube(2), Face{0, 1, 2, 3}), "two-orientations square");
        take(check_two_orientations(*make_simplex(std::min(max_dim, 3)),
                                    make_simplex(std::min(max_dim, 3))->all_faces().back()),
             "two-orientations simplex");
    }

    take(check_leibniz(make_simplex(2), make_simplex(1)), "Leibniz");
    take(check_leibniz(make_cube(2), make_simplex(1)), "Leibniz");

    std::mt19937_64 rng(seed);

    for (int trial = 0; trial < 20; ++trial) {
        auto sub = random_subcomplex(rng());
        take(check_dd_zero(*sub), "random subcomplex");
        for (const Violation& v : validate(*sub)) fails.push_back("random subcomplex: " + v.describe());
    }

    // random simplicial maps against the classical oracle
    auto tgt = make_simplex(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto src = random_simplicial_complex(rng);
        std::uniform_int_distribution<VertexId> pick(0, tgt->vertex_count() - 1);
        std::vector<VertexId> table(src->vertex_count());
        for (auto& t : table) t = pick(rng);
        PolytopalMap m = PolytopalMap::from_table(src, tgt, table);
        if (!validate_polytopal(m).empty()) {
            fails.push_back("simplicial map into a full simplex failed validation");
            continue;
        }
        auto cm = induce_chain_map(m);
        auto fn = m.vertex_fn;
        for (const Face& f : src->all_faces()) {
            Chain got = cm->apply_face(f);
            if (!(got == classical_simplicial_image(fn, f)))
                fails.push_back("induced chain map disagrees with the simplicial oracle");
            Chain lhs = cm->apply(boundary(*src, face_chain(*src, f)));
            Chain rhs = boundary(*tgt, got);
            if (!(lhs == rhs)) fails.push_back("chain map does not commute with the boundary");
        }
    }

    // functoriality on random pairs
    auto mid = make_simplex(4);
    auto tgt2 = make_simplex(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto src = random_simplicial_complex(rng);
        std::uniform_int_distribution<VertexId> pick_mid(0, mid->vertex_count() - 1);
        std::uniform_int_distribution<VertexId> pick_tgt(0, tgt2->vertex_count() - 1);
        std::vector<VertexId> t1(src->vertex_count()), t2(mid->vertex_count());
        for (auto& t : t1) t = pick_mid(rng);
        for (auto& t : t2) t = pick_tgt(rng);
        PolytopalMap mu = PolytopalMap::from_table(src, mid, t1);
        PolytopalMap lam = PolytopalMap::from_table(mid, tgt2, t2);
        auto pointwise = compose(induce_chain_map(lam), induce_chain_map(mu));
        auto direct = induce_chain_map(compose_maps(lam, mu));
        for (const Face& f : src->all_faces())
            if (!(pointwise->apply_face(f) == direct->apply_face(f)))
                fails.push_back("composition is not functorial");
    }
    return fails;
}

std::shared_ptr<const Complex> random_subcomplex(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> base_pick(0, 2);
    std::shared_ptr<const Complex> base;
    switch (base_pick(rng)) {
        case 0: base = make_cube(3); break;
        case 1: base = make_simplex(4); break;
        default: base = product(make_simplex(2), make_cube(1)); break;
    }
    // Keep a random downward-closed face set: drop top-dimensional faces at
    // random, then close what remains downward.
    std::vector<Face> faces = base->all_faces();
    std::unordered_set<Face, FaceHash> kept;
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
        if (coin(rng)) kept.insert(*it);
    }
    for (VertexId v = 0; v < base->vertex_count(); ++v) kept.insert(Face{v});
    // close downward
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Face& f : faces)
            if (kept.count(f))
                for (const Face& g : base->facets_of(f))
                    if (kept.insert(g).second) changed = true;
    }
    return subcomplex(base, [kept](const Face& f) { return kept.count(f) != 0; });
}

}  // namespace polytopal
