/*
 * Combinatorial necklace splitting.
 *
 * A necklace of n beads in t types is to be divided among q thieves so that
 * every thief receives floor(A_i/q) or ceil(A_i/q) beads of each type i,
 * using at most t(q-1) cuts at bead boundaries.
 *
 * For prime q = p the solver works through the cut encoding: the graph S of
 * marked cut positions, the subcomplex K of S^(t(p-1)+1) whose vertices
 * carry a coordinate at position n, the winner map lambda: K -> L =
 * (simplex_{p-1})^t, and the explicit witness chains h_d whose boundaries
 * alternate between the norm and difference of the cyclic action.  The
 * top chain has nonvanishing image under lambda#, any face realizing that
 * maps onto the top face of L, and such a face always contains a vertex
 * decoding to a fair splitting.  Composite q splits recursively through its
 * prime factors.
 */

#ifndef POLYTOPAL_NECKLACE_HPP
#define POLYTOPAL_NECKLACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polytopal/chains.hpp"
#include "polytopal/complex.hpp"
#include "polytopal/polymap.hpp"
#include "polytopal/product.hpp"

namespace polytopal {

struct Necklace {
    std::string beads;          // lowercase letter per bead
    int n = 0;                  // bead count
    int t = 0;                  // distinct types
    std::vector<int> type_of;   // per bead, 0-based type (alphabetical label order)
    std::vector<int> counts;    // beads per type
    std::vector<char> labels;   // type -> letter

    static Necklace from_string(const std::string& s);
};

/// One coordinate of a cut vertex: either the origin marker o (thief == 0,
/// pos == 0) or a cut at position pos in 1..n assigned to a thief in 1..p.
struct CutCoord {
    int pos = 0;
    int thief = 0;
};

struct CutVertex {
    std::vector<CutCoord> coords;
};

struct Segment {
    int begin = 0, end = 0;  // bead interval [begin, end], may be empty
    int owner = 0;           // thief 1..q
};

/// A partition of [0,n] into consecutive (possibly empty) segments with
/// owners.  Raw decodings keep duplicate cuts; canonical() merges them.
struct Splitting {
    int n = 0, q = 0;
    std::vector<Segment> segments;

    std::vector<int> interior_cuts() const;  // boundaries 0 < k < n, with multiplicity
    std::vector<int> owner_of_bead() const;  // size n, thieves 1..q
    Splitting canonical() const;             // no empty segments, no same-owner neighbors

    static Splitting from_owners(const std::vector<int>& owner_of_bead, int q);
    static Splitting from_cuts_owners(int n, int q, const std::vector<int>& cuts,
                                      const std::vector<int>& owners);
};

// ---- the encoding complexes --------------------------------------------------

/// The cut graph: p paths of n edges sharing the origin o.  Vertex ids:
/// o = 0, (k,r) = 1 + (k-1)p + (r-1); path r is realized on the r-th
/// coordinate ray of R^p.
std::shared_ptr<ExplicitComplex> build_S(int n, int p);

VertexId s_vertex_id(int p, const CutCoord& c);
CutCoord s_vertex_decode(int p, VertexId v);

/// Everything the solver and the verification suites need for one (necklace,
/// prime) instance.
struct NecklaceSetup {
    Necklace necklace;
    int p = 0;
    int J = 0;  // t(p-1)+1 coordinates
    std::shared_ptr<ExplicitComplex> S;
    std::shared_ptr<ProductComplex> SJ;  // S^J
    std::shared_ptr<SubComplex> K;       // faces with a coordinate frozen at position n
    std::shared_ptr<ProductComplex> L;   // (simplex_{p-1})^t
    PolytopalMap lambda;                 // winner map K -> L
    std::shared_ptr<GroupAction> nuK;    // diagonal thief shift on S^J (restricts to K)
    std::shared_ptr<GroupAction> nuL;    // diagonal shift on L
};

NecklaceSetup make_setup(const Necklace& nk, int p);

/// The cut subcomplex K of S^(t(p-1)+1): product faces with at least one
/// coordinate frozen at a vertex (n,r).
std::shared_ptr<SubComplex> build_K(int n, int t, int p);

CutVertex decode_vertex(const NecklaceSetup& setup, VertexId sj_vertex);
VertexId encode_vertex(const NecklaceSetup& setup, const CutVertex& v);

/// Splitting encoded by a cut vertex: the coordinates cut [0,n] into
/// consecutive sub-necklaces; each one goes to the thief of the
/// lowest-index coordinate whose position lies at or right of it.  Origin
/// markers are ignored.
Splitting decode_splitting(const CutVertex& v, const Necklace& nk);

/// Per-type winners (thieves 1..p) of the splitting encoded by v: the thief
/// with the most type-i beads; ties go to the owner of the earliest type-i
/// bead among the tied thieves.
std::vector<int> winners(const CutVertex& v, const Necklace& nk, int p);

/// The winner map as a polytopal map K -> L.
PolytopalMap winner_map(const Necklace& nk, int p);

// ---- witness chains ----------------------------------------------------------

/// Witness chains h_0 .. h_{t(p-1)} in C(K), coefficients reduced to balanced
/// residues mod p.  Exactly mod p they satisfy: boundary(h_{2l+1}) equals the
/// norm of h_{2l}, and boundary(h_{2l+2}) equals the difference-operator image
/// of h_{2l+1} (nu - nu^{-1} for odd p; nu - 1 when p = 2, where nu - nu^{-1}
/// vanishes identically).
std::vector<Chain> build_h(const NecklaceSetup& setup);

/// The difference operator of the ladder on a generic chain (see build_h).
Chain h_difference(const NecklaceSetup& setup, const Chain& c);

// ---- verification and search -------------------------------------------------

struct SplitReport {
    bool covers = false;    // segments form a partition of [0, n]
    bool owners_ok = false; // thieves within 1..q
    int interior_cut_count = 0;
    bool within_budget = false;             // <= t(q-1)
    std::vector<std::vector<int>> counts;   // [type][thief-1]
    std::vector<std::pair<int, int>> unfair;  // (type, thief) pairs outside floor/ceil

    bool fair() const { return unfair.empty(); }
    bool ok() const { return covers && owners_ok && fair() && within_budget; }
};

SplitReport verify_splitting(const Necklace& nk, const Splitting& s, int q);

/// Exhaustive oracle (n <= 12): all cut sets of size <= max_cuts with all
/// ownership assignments, first fair hit in lexicographic order.
std::optional<Splitting> brute_force_split(const Necklace& nk, int q, int max_cuts);

enum class SplitMethod { Chain, Brute };

struct SplitOptions {
    SplitMethod method = SplitMethod::Chain;
    bool parallel = false;  // OpenMP witness scan; result identical to serial
};

struct SplitOutcome {
    Splitting splitting;
    bool used_fallback = false;  // composite recursion fell back to brute force
};

SplitOutcome find_fair_split(const Necklace& nk, int q, const SplitOptions& opts = {});

bool is_prime(int q);

}  // namespace polytopal

#endif
