#include "polytopal/necklace.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "polytopal/flatchain.hpp"

namespace polytopal {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Necklace Necklace::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("necklace must have at least one bead");
    Necklace nk;
    nk.beads = s;
    nk.n = static_cast<int>(s.size());
    std::vector<char> present;
    for (char c : s) {
        if (c < 'a' || c > 'z') throw std::invalid_argument("bead labels must be lowercase letters");
        if (std::find(present.begin(), present.end(), c) == present.end()) present.push_back(c);
    }
    std::sort(present.begin(), present.end());
    nk.labels = present;
    nk.t = static_cast<int>(present.size());
    nk.counts.assign(nk.t, 0);
    for (char c : s) {
        int ty = static_cast<int>(std::find(present.begin(), present.end(), c) - present.begin());
        nk.type_of.push_back(ty);
        ++nk.counts[ty];
    }
    return nk;
}

// ---- Splitting ----------------------------------------------------------------

std::vector<int> Splitting::interior_cuts() const {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
        int b = segments[i].end;
        if (b > 0 && b < n) out.push_back(b);
    }
    return out;
}

std::vector<int> Splitting::owner_of_bead() const {
    std::vector<int> out(n, 0);
    for (const Segment& s : segments)
        for (int k = s.begin + 1; k <= s.end; ++k) out[k - 1] = s.owner;
    return out;
}

Splitting Splitting::canonical() const {
    Splitting out;
    out.n = n;
    out.q = q;
    for (const Segment& s : segments) {
        if (s.begin == s.end) continue;
        if (!out.segments.empty() && out.segments.back().owner == s.owner)
            out.segments.back().end = s.end;
        else
            out.segments.push_back(s);
    }
    return out;
}

Splitting Splitting::from_owners(const std::vector<int>& owner_of_bead, int q) {
    Splitting out;
    out.n = static_cast<int>(owner_of_bead.size());
    out.q = q;
    int start = 0;
    for (int k = 1; k <= out.n; ++k) {
        if (k == out.n || owner_of_bead[k] != owner_of_bead[start]) {
            out.segments.push_back({start, k, owner_of_bead[start]});
            start = k;
        }
    }
    return out;
}

Splitting Splitting::from_cuts_owners(int n, int q, const std::vector<int>& cuts,
                                      const std::vector<int>& owners) {
    if (owners.size() != cuts.size() + 1)
        throw std::invalid_argument("owners must have one more entry than cuts");
    Splitting out;
    out.n = n;
    out.q = q;
    int prev = 0;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        int end = (i == cuts.size()) ? n : cuts[i];
        if (end < prev || end > n) throw std::invalid_argument("cuts must be sorted within 0..n");
        out.segments.push_back({prev, end, owners[i]});
        prev = end;
    }
    return out;
}

// ---- the cut graph S ----------------------------------------------------------

VertexId s_vertex_id(int p, const CutCoord& c) {
    if (c.thief == 0) return 0;
    return 1 + static_cast<VertexId>(c.pos - 1) * p + (c.thief - 1);
}

CutCoord s_vertex_decode(int p, VertexId v) {
    if (v == 0) return {0, 0};
    VertexId x = v - 1;
    return {static_cast<int>(x / p) + 1, static_cast<int>(x % p) + 1};
}

std::shared_ptr<ExplicitComplex> build_S(int n, int p) {
    if (n < 1 || p < 2) throw std::invalid_argument("build_S needs n >= 1 and p >= 2");
    std::vector<Coords> verts(1 + static_cast<std::size_t>(n) * p, Coords(p, Rational(0)));
    for (int k = 1; k <= n; ++k)
        for (int r = 1; r <= p; ++r) verts[s_vertex_id(p, {k, r})][r - 1] = k;
    std::vector<std::pair<Face, std::vector<Face>>> lattice;
    for (VertexId v = 0; v < verts.size(); ++v) lattice.push_back({Face{v}, {}});
    for (int r = 1; r <= p; ++r) {
        for (int k = 1; k <= n; ++k) {
            VertexId a = (k == 1) ? 0 : s_vertex_id(p, {k - 1, r});
            VertexId b = s_vertex_id(p, {k, r});
            Face e = sorted_face({a, b});
            lattice.push_back({e, {Face{e[0]}, Face{e[1]}}});
        }
    }
    return std::make_shared<ExplicitComplex>(std::move(verts), std::move(lattice));
}

// ---- setup ---------------------------------------------------------------------

namespace {

VertexId s_shift(int p, VertexId v) {
    CutCoord c = s_vertex_decode(p, v);
    if (c.thief == 0) return v;
    c.thief = c.thief % p + 1;
    return s_vertex_id(p, c);
}

}  // namespace

std::shared_ptr<SubComplex> build_K(int n, int t, int p) {
    auto S = build_S(n, p);
    int J = t * (p - 1) + 1;
    auto SJ = power(S, J);
    auto pred = [SJ, n, p](const Face& f) {
        auto parts = SJ->to_factor_faces(f);
        if (!parts) return false;
        for (const Face& part : *parts)
            if (part.size() == 1 && s_vertex_decode(p, part[0]).pos == n) return true;
        return false;
    };
    return SubComplex::predicate(SJ, pred, t * (p - 1));
}

CutVertex decode_vertex(const NecklaceSetup& setup, VertexId sj_vertex) {
    CutVertex out;
    for (VertexId part : setup.SJ->decode_vertex(sj_vertex))
        out.coords.push_back(s_vertex_decode(setup.p, part));
    return out;
}

VertexId encode_vertex(const NecklaceSetup& setup, const CutVertex& v) {
    std::vector<VertexId> parts;
    for (const CutCoord& c : v.coords) parts.push_back(s_vertex_id(setup.p, c));
    return setup.SJ->encode_vertex(parts);
}

Splitting decode_splitting(const CutVertex& v, const Necklace& nk) {
    Splitting out;
    out.n = nk.n;
    out.q = 0;  // thief range comes from the caller's p; filled below from coords
    std::vector<int> positions;
    for (const CutCoord& c : v.coords) {
        positions.push_back(c.pos);
        out.q = std::max(out.q, c.thief);
    }
    std::sort(positions.begin(), positions.end());
    int prev = 0;
    auto owner_right_of = [&](int y) {
        for (const CutCoord& c : v.coords)
            if (c.thief >= 1 && c.pos >= y) return c.thief;
        return 0;
    };
    for (int pos : positions) {
        out.segments.push_back({prev, pos, owner_right_of(pos)});
        prev = pos;
    }
    if (prev != nk.n) out.segments.push_back({prev, nk.n, owner_right_of(nk.n)});
    for (const Segment& s : out.segments)
        if (s.end > s.begin && s.owner == 0)
            throw std::invalid_argument("cut vertex has an unowned sub-necklace (not a K vertex)");
    return out;
}

std::vector<int> winners(const CutVertex& v, const Necklace& nk, int p) {
    // owner of bead k: thief of the lowest-index coordinate at or right of k
    std::vector<int> owner(nk.n, 0);
    for (int k = 1; k <= nk.n; ++k) {
        for (const CutCoord& c : v.coords)
            if (c.thief >= 1 && c.pos >= k) {
                owner[k - 1] = c.thief;
                break;
            }
        if (owner[k - 1] == 0)
            throw std::invalid_argument("cut vertex has an unowned bead (not a K vertex)");
    }
    std::vector<int> out(nk.t, 0);
    for (int i = 0; i < nk.t; ++i) {
        std::vector<int> cnt(p + 1, 0);
        for (int k = 0; k < nk.n; ++k)
            if (nk.type_of[k] == i) ++cnt[owner[k]];
        int cmax = *std::max_element(cnt.begin() + 1, cnt.end());
        int tied = 0, winner = 0;
        for (int r = 1; r <= p; ++r)
            if (cnt[r] == cmax) {
                ++tied;
                winner = r;
            }
        if (tied > 1) {
            // earliest type-i bead owned by any tied thief decides
            winner = 0;
            for (int k = 0; k < nk.n && winner == 0; ++k)
                if (nk.type_of[k] == i && cnt[owner[k]] == cmax) winner = owner[k];
            if (winner == 0)
                throw TieBreakNonEquivariant("tie among thieves owning no bead of the tied type");
        }
        out[i] = winner;
    }
    return out;
}

PolytopalMap winner_map(const Necklace& nk, int p) {
    NecklaceSetup setup = make_setup(nk, p);
    return setup.lambda;
}

NecklaceSetup make_setup(const Necklace& nk, int p) {
    if (!is_prime(p)) throw std::invalid_argument("the encoding requires a prime number of thieves");
    NecklaceSetup st;
    st.necklace = nk;
    st.p = p;
    st.J = nk.t * (p - 1) + 1;
    if (st.J > flat::kMaxCoords) throw TooLarge("t(p-1)+1 exceeds the supported coordinate count");
    st.S = build_S(nk.n, p);
    st.SJ = power(st.S, st.J);
    const int n = nk.n;
    auto SJ = st.SJ;
    auto pred = [SJ, n, p](const Face& f) {
        auto parts = SJ->to_factor_faces(f);
        if (!parts) return false;
        for (const Face& part : *parts)
            if (part.size() == 1 && s_vertex_decode(p, part[0]).pos == n) return true;
        return false;
    };
    st.K = SubComplex::predicate(st.SJ, pred, nk.t * (p - 1));
    st.L = power(make_simplex(p - 1), nk.t);

    Necklace nkc = nk;
    auto setup_sj = st.SJ;
    auto setup_l = st.L;
    st.lambda = PolytopalMap{
        st.K, st.L, [nkc, p, setup_sj, setup_l](VertexId v) {
            CutVertex cv;
            for (VertexId part : setup_sj->decode_vertex(v))
                cv.coords.push_back(s_vertex_decode(p, part));
            std::vector<int> w = winners(cv, nkc, p);
            std::vector<VertexId> parts;
            for (int wi : w) parts.push_back(wi - 1);
            return setup_l->encode_vertex(parts);
        }};

    auto sj = st.SJ;
    st.nuK = std::make_shared<GroupAction>(
        st.K,
        [sj, p](VertexId v) {
            std::vector<VertexId> parts = sj->decode_vertex(v);
            for (VertexId& part : parts) part = s_shift(p, part);
            return sj->encode_vertex(parts);
        },
        p);
    auto l = st.L;
    st.nuL = std::make_shared<GroupAction>(
        l,
        [l, p](VertexId v) {
            std::vector<VertexId> parts = l->decode_vertex(v);
            for (VertexId& part : parts) part = (part + 1) % p;
            return l->encode_vertex(parts);
        },
        p);
    return st;
}

// ---- witness chains ------------------------------------------------------------

namespace detail {

struct FlatH {
    flat::FactorTable table;
    int nu = -1;
    flat::CoordChain path1;   // edges of path 1, oriented from o
    flat::CoordChain origin;  // the vertex o
    std::vector<flat::FlatChain> htilde;

    FlatH(const NecklaceSetup& st) : table(st.S) {
        const int p = st.p;
        nu = table.add_automorphism([p](VertexId v) { return s_shift(p, v); });
        const int n = st.necklace.n;
        for (int k = 1; k <= n; ++k) {
            VertexId a = (k == 1) ? 0 : s_vertex_id(p, {k - 1, 1});
            VertexId b = s_vertex_id(p, {k, 1});
            path1.push_back({table.id_of(sorted_face({a, b})), 1});
        }
        origin.push_back({table.id_of(Face{0}), 1});

        const int top = st.necklace.t * (p - 1);
        htilde.resize(top + 1);
        htilde[0][flat::Key{}] = 1;
        for (int d = 1; d <= top; ++d) {
            flat::FlatChain x = flat::tensor_coord(htilde[d - 1], path1);
            flat::FlatChain out;
            if (d % 2 == 1) {
                for (int r = 1; r <= p; ++r) add_scaled(out, flat::act(table, nu, r, x), 1);
            } else {
                // (nu^{-1} - nu): the sign opposite to the ladder's difference
                // operator.  Together with the alternating sign in h() below
                // this is what keeps the padded faces outside K at
                // coefficients divisible by p.  (For p = 2 all these signs
                // coincide mod 2; nu - nu^{-1} itself vanishes there and
                // nu - 1 stands in.)
                if (p == 2) {
                    out = flat::act(table, nu, 1, x);
                    add_scaled(out, x, -1);
                } else {
                    out = flat::act(table, nu, p - 1, x);
                    add_scaled(out, flat::act(table, nu, 1, x), -1);
                }
            }
            htilde[d] = std::move(out);
        }
    }

    flat::FlatChain pad(flat::FlatChain c, int count) const {
        for (int i = 0; i < count; ++i) c = flat::tensor_coord(c, origin);
        return c;
    }

    flat::FlatChain h(int d, int top, int p) const {
        flat::FlatChain u = pad(flat::tensor_coord(htilde[d], path1), top - d);
        flat::FlatChain out = flat::boundary(table, u);
        flat::FlatChain result = pad(htilde[d], top + 1 - d);
        add_scaled(result, out, (d % 2 == 0) ? 1 : -1);
        return flat::reduced_mod(result, p);
    }
};

}  // namespace detail

std::vector<Chain> build_h(const NecklaceSetup& setup) {
    detail::FlatH fh(setup);
    const int top = setup.necklace.t * (setup.p - 1);
    std::vector<Chain> out;
    for (int d = 0; d <= top; ++d) {
        Chain c = flat::to_chain(fh.table, *setup.SJ, fh.h(d, top, setup.p));
        c.degree = d;
        out.push_back(std::move(c));
    }
    return out;
}

Chain h_difference(const NecklaceSetup& setup, const Chain& c) {
    Chain out = setup.nuK->apply(1, c);
    if (setup.p == 2)
        out -= c;
    else
        out -= setup.nuK->apply(-1, c);
    return out;
}

// ---- verification ----------------------------------------------------------------

SplitReport verify_splitting(const Necklace& nk, const Splitting& s, int q) {
    SplitReport rep;
    rep.covers = !s.segments.empty() && s.segments.front().begin == 0 &&
                 s.segments.back().end == nk.n && s.n == nk.n;
    int prev = 0;
    for (const Segment& seg : s.segments) {
        if (seg.begin != prev || seg.end < seg.begin) rep.covers = false;
        prev = seg.end;
    }
    if (prev != nk.n) rep.covers = false;

    rep.owners_ok = true;
    for (const Segment& seg : s.segments)
        if (seg.end > seg.begin && (seg.owner < 1 || seg.owner > q)) rep.owners_ok = false;

    std::vector<int> cuts = s.interior_cuts();
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    rep.interior_cut_count = static_cast<int>(cuts.size());
    rep.within_budget = rep.interior_cut_count <= nk.t * (q - 1);

    rep.counts.assign(nk.t, std::vector<int>(q, 0));
    if (rep.covers && rep.owners_ok) {
        std::vector<int> owner = s.owner_of_bead();
        for (int k = 0; k < nk.n; ++k)
            if (owner[k] >= 1) ++rep.counts[nk.type_of[k]][owner[k] - 1];
        for (int i = 0; i < nk.t; ++i) {
            int lo = nk.counts[i] / q;
            int hi = (nk.counts[i] + q - 1) / q;
            for (int r = 0; r < q; ++r)
                if (rep.counts[i][r] != lo && rep.counts[i][r] != hi) rep.unfair.push_back({i, r + 1});
        }
    }
    return rep;
}

// ---- chain-guided witness search -------------------------------------------------
//
// The top witness chain is h_top = boundary(htilde_top (x) P1) + htilde_top (x) o
// reduced mod p; the padded term is supported outside K, so every support face
// of h_top is a facet of a face of u = htilde_top (x) P1 that lies in K.  The
// scan streams those facets (never materializing the boundary), keeps the ones
// with a coordinate frozen at position n, and looks for one whose image under
// lambda# is nonzero -- any such face maps onto the top face of L and contains
// a vertex decoding to a fair splitting.

namespace detail {

// L-face as a Key: slot[i] = thief bitmask of type i's simplex factor.
using LKey = flat::Key;

struct HData {
    std::unique_ptr<FlatH> fh;
    flat::FlatChain u;
    std::vector<flat::Key> ukeys;
    int top = 0;
};

std::shared_ptr<HData> h_data(const NecklaceSetup& st) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<HData>> cache;
    std::tuple<int, int, int> key{st.necklace.n, st.necklace.t, st.p};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto data = std::make_shared<HData>();
    data->fh = std::make_unique<FlatH>(st);
    data->top = st.necklace.t * (st.p - 1);
    data->u = flat::tensor_coord(data->fh->htilde[data->top], data->fh->path1);
    data->ukeys.reserve(data->u.size());
    for (auto& [k, c] : data->u) data->ukeys.push_back(k);
    std::sort(data->ukeys.begin(), data->ukeys.end());
    data->u.clear();  // the scan only streams the keys
    cache[key] = data;
    return data;
}

struct PrimeSolver {
    const Necklace nk;
    const int p, J, top;
    std::shared_ptr<HData> hd;
    const flat::FactorTable& table;
    std::vector<char> frozen_n;        // face id -> dim 0 and position n
    std::vector<CutCoord> coord_of;    // face id -> cut coordinate (dim 0 only)
    std::vector<int> lo, hi;           // fairness bounds per type
    LKey full;                         // the top face of L

    struct Cache {
        // vertex key -> (winner per type packed in a Key, fairness flag)
        std::unordered_map<flat::Key, std::pair<flat::Key, bool>, flat::KeyHash> vertex;
        // face key -> (minimal L-face, alpha)
        std::unordered_map<flat::Key, std::pair<LKey, std::int64_t>, flat::KeyHash> lam;
    };

    PrimeSolver(const NecklaceSetup& st)
        : nk(st.necklace),
          p(st.p),
          J(st.J),
          top(st.necklace.t * (st.p - 1)),
          hd(h_data(st)),
          table(hd->fh->table) {
        frozen_n.resize(table.size(), 0);
        coord_of.resize(table.size());
        for (std::uint16_t i = 0; i < table.size(); ++i) {
            if (table.dim(i) != 0) continue;
            coord_of[i] = s_vertex_decode(p, table.vertex_of(i));
            frozen_n[i] = coord_of[i].pos == nk.n;
        }
        lo.resize(nk.t);
        hi.resize(nk.t);
        for (int i = 0; i < nk.t; ++i) {
            lo[i] = nk.counts[i] / p;
            hi[i] = (nk.counts[i] + p - 1) / p;
        }
        full.len = static_cast<std::uint8_t>(nk.t);
        for (int i = 0; i < nk.t; ++i) full.slot[i] = static_cast<std::uint16_t>((1u << p) - 1);
    }

    const std::pair<flat::Key, bool>& vertex_info(Cache& c, const flat::Key& vkey) const {
        auto it = c.vertex.find(vkey);
        if (it != c.vertex.end()) return it->second;
        // owner of bead k: lowest-index coordinate at or beyond k
        std::array<int, flat::kMaxCoords> pos{}, thief{};
        for (int j = 0; j < vkey.len; ++j) {
            const CutCoord& cc = coord_of[vkey.slot[j]];
            pos[j] = cc.pos;
            thief[j] = cc.thief;
        }
        std::vector<int> count(static_cast<std::size_t>(nk.t) * (p + 1), 0);
        for (int k = 1; k <= nk.n; ++k) {
            int owner = 0;
            for (int j = 0; j < vkey.len; ++j)
                if (thief[j] >= 1 && pos[j] >= k) {
                    owner = thief[j];
                    break;
                }
            ++count[nk.type_of[k - 1] * (p + 1) + owner];
        }
        flat::Key w;
        w.len = static_cast<std::uint8_t>(nk.t);
        bool fair = true;
        for (int i = 0; i < nk.t; ++i) {
            int* cnt = &count[i * (p + 1)];
            if (cnt[0] != 0) throw std::invalid_argument("unowned bead in a K vertex");
            int cmax = 0;
            for (int r = 1; r <= p; ++r) cmax = std::max(cmax, cnt[r]);
            int winner = 0, tied = 0;
            for (int r = 1; r <= p; ++r)
                if (cnt[r] == cmax) {
                    ++tied;
                    winner = r;
                }
            if (tied > 1) {
                winner = 0;
                for (int k = 0; k < nk.n && winner == 0; ++k) {
                    if (nk.type_of[k] != i) continue;
                    int owner = 0;
                    for (int j = 0; j < vkey.len; ++j)
                        if (thief[j] >= 1 && pos[j] >= k + 1) {
                            owner = thief[j];
                            break;
                        }
                    if (cnt[owner] == cmax) winner = owner;
                }
            }
            w.slot[i] = static_cast<std::uint16_t>(winner);
            for (int r = 1; r <= p; ++r)
                if (cnt[r] != lo[i] && cnt[r] != hi[i]) fair = false;
        }
        return c.vertex.emplace(vkey, std::make_pair(w, fair)).first->second;
    }

    template <typename Fn>
    void for_each_vertex(const flat::Key& k, Fn&& fn) const {
        std::vector<int> edge_slots;
        for (int j = 0; j < k.len; ++j)
            if (table.dim(k.slot[j]) == 1) edge_slots.push_back(j);
        flat::Key v = k;
        const std::size_t m = edge_slots.size();
        for (std::size_t mask = 0; mask < (1ull << m); ++mask) {
            for (std::size_t b = 0; b < m; ++b)
                v.slot[edge_slots[b]] = table.endpoints(k.slot[edge_slots[b]])[(mask >> b) & 1];
            fn(v);
        }
    }

    static int lkey_dim(const LKey& f) {
        int d = 0;
        for (int i = 0; i < f.len; ++i) d += __builtin_popcount(f.slot[i]) - 1;
        return d;
    }

    static std::vector<std::pair<LKey, int>> l_boundary(const LKey& f) {
        std::vector<std::pair<LKey, int>> out;
        int parity = 1;
        for (int i = 0; i < f.len; ++i) {
            const unsigned mask = f.slot[i];
            const int pc = __builtin_popcount(mask);
            if (pc >= 2) {
                int idx = 0;
                for (unsigned bits = mask; bits; bits &= bits - 1, ++idx) {
                    unsigned bit = bits & -bits;
                    LKey g = f;
                    g.slot[i] = static_cast<std::uint16_t>(mask & ~bit);
                    out.push_back({g, parity * ((idx % 2 == 0) ? 1 : -1)});
                }
            }
            if ((pc - 1) % 2 != 0) parity = -parity;
        }
        return out;
    }

    // lambda# of a single face of K, by induction on dimension.
    std::pair<LKey, std::int64_t> lam_face(Cache& c, const flat::Key& k) const {
        auto it = c.lam.find(k);
        if (it != c.lam.end()) return it->second;

        LKey masks;
        masks.len = static_cast<std::uint8_t>(nk.t);
        for_each_vertex(k, [&](const flat::Key& v) {
            const flat::Key& w = vertex_info(c, v).first;
            for (int i = 0; i < nk.t; ++i)
                masks.slot[i] |= static_cast<std::uint16_t>(1u << (w.slot[i] - 1));
        });
        const int d = flat::key_dim(table, k);
        const int dmin = lkey_dim(masks);
        if (dmin > d) throw InductionBroken("winner map is not polytopal on a scanned face");

        std::pair<LKey, std::int64_t> result{masks, 0};
        if (dmin == d) {
            if (d == 0) {
                result.second = 1;
            } else {
                std::map<LKey, std::int64_t> b;
                int parity = 1;
                for (int j = 0; j < k.len; ++j) {
                    for (auto& [facet, sgn] : table.boundary(k.slot[j])) {
                        flat::Key kk = k;
                        kk.slot[j] = facet;
                        auto rec = lam_face(c, kk);
                        if (rec.second != 0) {
                            auto [bit, inserted] = b.emplace(rec.first, 0);
                            (void)inserted;
                            bit->second += rec.second * parity * sgn;
                            if (bit->second == 0) b.erase(bit);
                        }
                    }
                    if (table.dim(k.slot[j]) % 2 != 0) parity = -parity;
                }
                auto big = l_boundary(masks);
                std::int64_t alpha = 0;
                if (!b.empty()) {
                    auto bt = b.find(big[0].first);
                    alpha = (bt == b.end()) ? 0 : bt->second * big[0].second;
                    // all facets must carry the same multiplicity
                    if (b.size() != (alpha == 0 ? 0u : big.size()))
                        throw InductionBroken("facet coefficients disagree in the witness scan");
                    for (auto& [tau, s] : big) {
                        auto found = b.find(tau);
                        std::int64_t have = (found == b.end()) ? 0 : found->second;
                        if (have != alpha * s)
                            throw InductionBroken("facet coefficients disagree in the witness scan");
                    }
                }
                result.second = alpha;
            }
        }
        c.lam.emplace(k, result);
        return result;
    }

    // Examine one candidate face; returns a fair splitting if it is a witness.
    std::optional<Splitting> try_candidate(Cache& c, const flat::Key& cand) const {
        // quick reject: the image must be the whole top face of L
        LKey masks;
        masks.len = static_cast<std::uint8_t>(nk.t);
        bool full_image = true;
        for_each_vertex(cand, [&](const flat::Key& v) {
            const flat::Key& w = vertex_info(c, v).first;
            for (int i = 0; i < nk.t; ++i)
                masks.slot[i] |= static_cast<std::uint16_t>(1u << (w.slot[i] - 1));
        });
        for (int i = 0; i < nk.t; ++i)
            if (masks.slot[i] != full.slot[i]) full_image = false;
        if (!full_image) return std::nullopt;

        if (lam_face(c, cand).second == 0) return std::nullopt;

        // witness face: some vertex decodes to a fair splitting
        std::optional<Splitting> out;
        for_each_vertex(cand, [&](const flat::Key& v) {
            if (out) return;
            if (!vertex_info(c, v).second) return;
            CutVertex cv;
            for (int j = 0; j < v.len; ++j) cv.coords.push_back(coord_of[v.slot[j]]);
            Splitting s = decode_splitting(cv, nk).canonical();
            s.q = p;
            out = s;
        });
        if (!out)
            throw WitnessNotFound("face with nonzero top image has no fair vertex");
        return out;
    }

    // Candidates of one u-face, in deterministic order.
    std::optional<Splitting> scan_uface(Cache& c, const flat::Key& uk) const {
        for (int j = 0; j < uk.len; ++j) {
            const auto& ends = table.endpoints(uk.slot[j]);
            for (int e = 0; e < 2; ++e) {
                if (!frozen_n[ends[e]]) continue;
                flat::Key cand = uk;
                cand.slot[j] = ends[e];
                auto hit = try_candidate(c, cand);
                if (hit) return hit;
            }
        }
        return std::nullopt;
    }

    std::optional<Splitting> run_serial() const {
        Cache cache;
        for (const flat::Key& uk : hd->ukeys) {
            auto hit = scan_uface(cache, uk);
            if (hit) return hit;
        }
        return std::nullopt;
    }

    std::optional<Splitting> run_parallel() const;
};

std::optional<Splitting> PrimeSolver::run_parallel() const {
    const std::size_t m = hd->ukeys.size();
    std::atomic<std::size_t> best{m};
#ifdef _OPENMP
    std::exception_ptr error;
    std::mutex error_mu;
#pragma omp parallel
    {
        Cache cache;
#pragma omp for schedule(dynamic, 32)
        for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(m); ++idx) {
            std::size_t i = static_cast<std::size_t>(idx);
            if (i >= best.load(std::memory_order_relaxed)) continue;
            try {
                if (scan_uface(cache, hd->ukeys[i])) {
                    std::size_t cur = best.load(std::memory_order_relaxed);
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                best.store(0);  // wind the loop down
            }
        }
    }
    if (error) std::rethrow_exception(error);
#else
    {
        Cache cache;
        for (std::size_t i = 0; i < m; ++i)
            if (scan_uface(cache, hd->ukeys[i])) {
                best.store(i);
                break;
            }
    }
#endif
    if (best.load() == m) return std::nullopt;
    // recompute the winning u-face serially: identical result to run_serial()
    Cache cache;
    return scan_uface(cache, hd->ukeys[best.load()]);
}

}  // namespace detail

SplitOutcome find_fair_split(const Necklace& nk, int q, const SplitOptions& opts) {
    if (q < 2) throw std::invalid_argument("need at least two thieves");

    if (opts.method == SplitMethod::Brute) {
        auto s = brute_force_split(nk, q, nk.t * (q - 1));
        if (!s) throw WitnessNotFound("exhaustive search found no fair splitting within the cut budget");
        return {*s, false};
    }

    if (is_prime(q)) {
        NecklaceSetup st = make_setup(nk, q);
        detail::PrimeSolver solver(st);
        auto hit = opts.parallel ? solver.run_parallel() : solver.run_serial();
        if (!hit) throw WitnessNotFound("no witness face found in the top chain support");
        SplitReport rep = verify_splitting(nk, *hit, q);
        if (!rep.ok()) throw WitnessNotFound("witness splitting failed verification");
        return {*hit, false};
    }

    // composite: split among q1 groups, then each share among q2 thieves
    int q1 = 2;
    while (q % q1 != 0) ++q1;
    const int q2 = q / q1;
    SplitOutcome first = find_fair_split(nk, q1, opts);
    std::vector<int> group = first.splitting.owner_of_bead();
    std::vector<int> final_owner(nk.n, 0);
    bool fallback = first.used_fallback;
    for (int g = 1; g <= q1; ++g) {
        std::vector<int> beads;
        std::string sub;
        for (int k = 0; k < nk.n; ++k)
            if (group[k] == g) {
                beads.push_back(k);
                sub.push_back(nk.beads[k]);
            }
        if (sub.empty()) continue;  // empty share: its thieves keep zero of everything
        SplitOutcome rec = find_fair_split(Necklace::from_string(sub), q2, opts);
        fallback = fallback || rec.used_fallback;
        std::vector<int> sub_owner = rec.splitting.owner_of_bead();
        for (std::size_t m = 0; m < beads.size(); ++m)
            final_owner[beads[m]] = (g - 1) * q2 + sub_owner[m];
    }
    Splitting out = Splitting::from_owners(final_owner, q);
    SplitReport rep = verify_splitting(nk, out, q);
    if (!rep.ok()) {
        // the floor/ceil arithmetic says this cannot happen; keep the guarded
        // fallback anyway
        if (nk.n <= 12) {
            auto s = brute_force_split(nk, q, nk.t * (q - 1));
            if (s) return {*s, true};
        }
        throw WitnessNotFound("composite recursion produced an unfair splitting");
    }
    return {out, fallback};
}

std::optional<Splitting> brute_force_split(const Necklace& nk, int q, int max_cuts) {
    if (nk.n > 12) throw TooLarge("brute_force_split is limited to 12 beads");
    max_cuts = std::min(max_cuts, nk.n - 1);
    std::vector<int> lo(nk.t), hi(nk.t);
    for (int i = 0; i < nk.t; ++i) {
        lo[i] = nk.counts[i] / q;
        hi[i] = (nk.counts[i] + q - 1) / q;
    }
    for (int c = 0; c <= max_cuts; ++c) {
        std::vector<int> cuts(c);
        for (int i = 0; i < c; ++i) cuts[i] = i + 1;
        while (true) {
            // all ownership assignments of the c+1 segments
            std::vector<int> owners(c + 1, 1);
            while (true) {
                std::vector<std::vector<int>> count(nk.t, std::vector<int>(q + 1, 0));
                int seg = 0;
                for (int k = 1; k <= nk.n; ++k) {
                    while (seg < c && cuts[seg] < k) ++seg;
                    ++count[nk.type_of[k - 1]][owners[seg]];
                }
                bool fair = true;
                for (int i = 0; i < nk.t && fair; ++i)
                    for (int r = 1; r <= q && fair; ++r)
                        if (count[i][r] != lo[i] && count[i][r] != hi[i]) fair = false;
                if (fair) {
                    std::vector<int> cuts_out(cuts.begin(), cuts.end());
                    return Splitting::from_cuts_owners(nk.n, q, cuts_out, owners).canonical();
                }
                // next assignment
                int pos = 0;
                while (pos <= c && ++owners[pos] > q) owners[pos++] = 1;
                if (pos > c) break;
            }
            // next cut combination
            int i = c - 1;
            while (i >= 0 && cuts[i] == nk.n - 1 - (c - 1 - i)) --i;
            if (i < 0) break;
            ++cuts[i];
            for (int j = i + 1; j < c; ++j) cuts[j] = cuts[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace polytopal
