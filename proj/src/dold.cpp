#include "polytopal/dold.hpp"

#include <algorithm>
#include <chrono>

namespace polytopal {

VertexId JoinComplex::vid(int copy, int elt) const {
    return static_cast<VertexId>(copy - 1) * p + elt;
}

JoinComplex build_join(int p, int m) {
    if (p < 2 || m < 1) throw std::invalid_argument("build_join needs p >= 2, m >= 1");
    JoinComplex j;
    j.p = p;
    j.m = m;
    const std::size_t nv = static_cast<std::size_t>(m) * p;
    std::vector<Coords> verts(nv, Coords(nv, Rational(0)));
    for (std::size_t v = 0; v < nv; ++v) verts[v][v] = 1;

    // Faces: at most one vertex per copy.
    std::vector<Face> faces;
    std::vector<VertexId> cur;
    auto gen = [&](auto&& self, int copy) -> void {
        if (copy > m) {
            if (!cur.empty()) faces.push_back(sorted_face(cur));
            return;
        }
        self(self, copy + 1);  // skip this copy
        for (int g = 0; g < p; ++g) {
            cur.push_back(static_cast<VertexId>(copy - 1) * p + g);
            self(self, copy + 1);
            cur.pop_back();
        }
    };
    gen(gen, 1);
    j.complex = make_simplicial(std::move(verts), faces);

    const int pp = p;
    j.nu = std::make_shared<GroupAction>(
        j.complex, [pp](VertexId v) { return v - (v % pp) + (v + 1) % pp; }, p);
    return j;
}

// ---- sd# -------------------------------------------------------------------

namespace {

// Prepend-cone over an order-complex chain: [apex, x_0..x_k] re-expressed
// against the sorted reference tuple of the coned simplex.
Chain cone(const Chain& c, VertexId apex) {
    Chain out;
    out.degree = c.degree + 1;
    for (auto& [f, coeff] : c.terms) {
        Face g = f;
        auto pos = std::lower_bound(g.begin(), g.end(), apex) - g.begin();
        g.insert(g.begin() + pos, apex);
        int sign = (pos % 2 == 0) ? 1 : -1;
        out.add(g, coeff * sign);
    }
    return out;
}

}  // namespace

SdChainMap::SdChainMap(std::shared_ptr<const Complex> base)
    : base_(std::move(base)), oc_(order_complex(*base_)) {}

std::shared_ptr<SdChainMap> sd_chain_map(std::shared_ptr<const Complex> base) {
    return std::make_shared<SdChainMap>(std::move(base));
}

Chain SdChainMap::apply_face(const Face& f) const {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    Chain out;
    const VertexId apex = oc_.vertex_of(f);
    if (base_->face_dim(f) == 0) {
        out.degree = 0;
        out.add(Face{apex}, 1);
    } else {
        Chain sub;
        sub.degree = base_->face_dim(f) - 1;
        for (const BoundaryTerm& bt : base_->boundary_of(f)) sub += apply_face(bt.face) * bt.sign;
        out = cone(sub, apex);
    }
    memo_.emplace(f, out);
    return out;
}

// ---- g ----------------------------------------------------------------------

PolytopalMap build_g(const OrderComplex& oc, const GroupAction& nu_base, const JoinComplex& join) {
    const std::size_t count = oc.elements.size();
    const int p = join.p;
    const Complex& base = *nu_base.complex();
    std::vector<VertexId> table(count, 0);
    std::vector<char> assigned(count, 0);

    for (std::size_t i = 0; i < count; ++i) {
        if (assigned[i]) continue;
        std::vector<std::size_t> orbit;
        Face cur = oc.elements[i];
        for (int k = 0; k < p; ++k) {
            orbit.push_back(oc.index.at(cur));
            cur = nu_base.face(1, cur);
        }
        if (cur != oc.elements[i])
            throw OrbitNotFree("base action does not have order p on a poset element");

        const std::size_t rep = *std::min_element(orbit.begin(), orbit.end());
        const Face& rep_face = oc.elements[rep];
        const int copy = base.face_dim(rep_face) + 1;
        if (copy > join.m) throw OrbitNotFree("join has too few copies for this poset element");

        if (orbit[1] == orbit[0]) {
            // A fixed poset element.  Only the top face of the base complex is
            // allowed (the diagonal shift always fixes it); g gets an arbitrary
            // but deterministic vertex there, and equivariance holds strictly
            // below the top element -- all the pairing uses.
            if (base.face_dim(rep_face) != base.dim())
                throw OrbitNotFree("action fixes a poset element other than the top face");
            table[rep] = join.vid(copy, 0);
            assigned[rep] = 1;
            continue;
        }
        Face walk = oc.elements[rep];
        for (int k = 0; k < p; ++k) {
            std::size_t idx = oc.index.at(walk);
            table[idx] = join.vid(copy, k % p);
            assigned[idx] = 1;
            walk = nu_base.face(1, walk);
        }
    }
    return PolytopalMap::from_table(oc.complex, join.complex, table);
}

EtaMachine eta_chain_map(const NecklaceSetup& setup, int m) {
    EtaMachine em;
    em.join = build_join(setup.p, m);
    em.sd = sd_chain_map(setup.L);
    em.g = induce_chain_map(build_g(em.sd->order(), *setup.nuL, em.join));
    em.eta = compose(em.g, em.sd);
    return em;
}

// ---- phi --------------------------------------------------------------------

int PhiSequence::eval(int degree, const Chain& c) const {
    if (c.is_zero()) return 0;
    long long acc = 0;
    const auto& table = phi.at(degree);
    for (auto& [f, coeff] : c.terms) {
        auto it = table.find(f);
        if (it != table.end()) acc += (coeff % p) * it->second;
    }
    return static_cast<int>(((acc % p) + p) % p);
}

PhiSequence solve_phi(const JoinComplex& join, int max_degree) {
    const int p = join.p;
    PhiSequence seq;
    seq.p = p;
    seq.phi.resize(max_degree + 1);

    std::vector<std::vector<Face>> basis(max_degree + 1);
    for (const Face& f : join.complex->all_faces()) {
        int d = join.complex->face_dim(f);
        if (d <= max_degree) basis[d].push_back(f);
    }

    // phi_0: 1 on the element-0 vertex of every copy.  (The single-vertex
    // variant makes the degree-1 system unsolvable; see the tests.)
    for (int copy = 1; copy <= join.m; ++copy) seq.phi[0][Face{join.vid(copy, 0)}] = 1;

    auto mod = [p](long long x) { return static_cast<int>(((x % p) + p) % p); };

    for (int d = 1; d <= max_degree; ++d) {
        const std::vector<Face>& cols = basis[d];
        std::unordered_map<Face, int, FaceHash> col_of;
        for (std::size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], static_cast<int>(i));

        std::vector<std::vector<int>> a(cols.size(), std::vector<int>(cols.size() + 1, 0));
        for (std::size_t r = 0; r < cols.size(); ++r) {
            Chain c = face_chain(*join.complex, cols[r]);
            Chain op;
            if (d % 2 == 1) {
                if (p == 2)
                    op = join.nu->apply(1, c) - c;
                else
                    op = join.nu->apply(-1, c) - join.nu->apply(1, c);
            } else {
                op = join.nu->norm(c);
            }
            for (auto& [f, coeff] : op.terms) a[r][col_of.at(f)] = mod(coeff);
            a[r][cols.size()] = seq.eval(d - 1, boundary(*join.complex, c));
        }

        // Gaussian elimination mod p
        std::vector<int> pivot_col(cols.size(), -1);
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols.size() && row < a.size(); ++col) {
            std::size_t piv = row;
            while (piv < a.size() && a[piv][col] == 0) ++piv;
            if (piv == a.size()) continue;
            std::swap(a[row], a[piv]);
            int inv = 1;
            while (mod(static_cast<long long>(inv) * a[row][col]) != 1) ++inv;
            for (auto& x : a[row]) x = mod(static_cast<long long>(x) * inv);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (i == row || a[i][col] == 0) continue;
                int f = a[i][col];
                for (std::size_t j = col; j <= cols.size(); ++j)
                    a[i][j] = mod(a[i][j] - static_cast<long long>(f) * a[row][j]);
            }
            pivot_col[row] = static_cast<int>(col);
            ++row;
        }
        for (std::size_t i = row; i < a.size(); ++i)
            if (a[i][cols.size()] != 0)
                throw Inconsistent("phi system has no solution in degree " + std::to_string(d));

        for (std::size_t i = 0; i < row; ++i)  // free coordinates stay 0
            if (a[i][cols.size()] != 0) seq.phi[d][cols[pivot_col[i]]] = a[i][cols.size()];
    }
    return seq;
}

// ---- pairing -----------------------------------------------------------------

bool PairingReport::ok() const {
    for (const PairingRung& r : rungs)
        if (!r.ok) return false;
    return final_nonzero && top_nonzero;
}

void require_ok(const PairingReport& report) {
    if (!report.ok())
        throw PairingMismatch("pairing ladder failed for n=" + std::to_string(report.n) +
                              " t=" + std::to_string(report.t) + " p=" + std::to_string(report.p));
}

PairingReport verify_pairing(const NecklaceSetup& setup) {
    auto start = std::chrono::steady_clock::now();
    PairingReport rep;
    rep.n = setup.necklace.n;
    rep.t = setup.necklace.t;
    rep.p = setup.p;
    const int p = setup.p;
    const int top = setup.necklace.t * (p - 1);

    std::vector<Chain> h = build_h(setup);
    auto lam = induce_chain_map(setup.lambda);
    EtaMachine em = eta_chain_map(setup, top + 1);
    PhiSequence phi = solve_phi(em.join, std::max(0, top - 1));

    auto expect_mod = [p](int sign) { return ((sign % p) + p) % p; };

    // rung arguments live strictly below the top degree
    for (int l = 0; 2 * l <= top - 1; ++l) {
        Chain arg = setup.nuK->norm(h[2 * l]);
        int value = phi.eval(2 * l, em.eta->apply(lam->apply(arg)));
        PairingRung rung{l, true, 2 * l, value, expect_mod(l % 2 == 0 ? 1 : -1), false};
        rung.ok = rung.residue == rung.expected;
        rep.rungs.push_back(rung);

        if (2 * l + 1 <= top - 1) {
            Chain odd_arg = h_difference(setup, h[2 * l + 1]);
            int odd_value = phi.eval(2 * l + 1, em.eta->apply(lam->apply(odd_arg)));
            PairingRung odd{l, false, 2 * l + 1, odd_value, expect_mod(l % 2 == 0 ? -1 : 1), false};
            odd.ok = odd.residue == odd.expected;
            rep.rungs.push_back(odd);
        }
    }

    // final step: phi_{top-1}(boundary(eta# lambda# h_top)) equals the last
    // rung's value and is nonzero, which certifies lambda#(h_top) != 0.
    Chain image = lam->apply(h[top]).reduced_mod(p);
    rep.top_nonzero = !image.is_zero();
    for (auto& [f, k] : h[top].terms) {
        (void)k;
        if (!lam->apply_face(f).reduced_mod(p).is_zero()) ++rep.witness_faces;
    }
    Chain lifted = em.eta->apply(lam->apply(h[top]));
    rep.final_residue = phi.eval(top - 1, boundary(*em.join.complex, lifted));
    rep.final_nonzero = rep.final_residue != 0;

    rep.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace polytopal
