/*
 * Desk-scale verification of the combinatorial fixed-point machinery behind
 * the necklace solver: the equivariant chain map eta# into the join complex
 * Z_p * ... * Z_p, the mod-p functionals phi_d, and the pairing ladder whose
 * rungs evaluate to alternating units and certify that the winner map's image
 * of the top witness chain does not vanish.
 */

#ifndef POLYTOPAL_DOLD_HPP
#define POLYTOPAL_DOLD_HPP

#include <memory>
#include <vector>

#include "polytopal/necklace.hpp"
#include "polytopal/order_complex.hpp"

namespace polytopal {

/// Join of m labeled copies of Z_p: vertices (copy 1..m, element 0..p-1),
/// faces = vertex sets with pairwise distinct copies, realized on the
/// standard basis of R^(mp).  The action shifts the group element in every
/// vertex and is free on faces.
struct JoinComplex {
    int p = 0, m = 0;
    std::shared_ptr<ExplicitComplex> complex;
    std::shared_ptr<GroupAction> nu;

    VertexId vid(int copy, int elt) const;  // copy 1..m, elt 0..p-1
};

JoinComplex build_join(int p, int m);

/// Barycentric-subdivision chain map C(L) -> C(order_complex(L)): a face goes
/// to the signed sum of the full flags below it (cone over the subdivided
/// boundary); commutes with the boundary operator exactly.
class SdChainMap : public ChainMapBase {
public:
    explicit SdChainMap(std::shared_ptr<const Complex> base);
    std::shared_ptr<const Complex> source() const override { return base_; }
    std::shared_ptr<const Complex> target() const override { return oc_.complex; }
    Chain apply_face(const Face& f) const override;
    const OrderComplex& order() const { return oc_; }

private:
    std::shared_ptr<const Complex> base_;
    OrderComplex oc_;
    mutable std::unordered_map<Face, Chain, FaceHash> memo_;
};

std::shared_ptr<SdChainMap> sd_chain_map(std::shared_ptr<const Complex> base);

/**
 * The orbit-collapsing simplicial map g: order_complex(L) -> join.  Each
 * poset element goes to a vertex in the (dim+1)-st copy; orbit
 * representatives (lexicographically smallest) pick group element 0 and the
 * action extends equivariantly.  The diagonal shift always fixes the top
 * face of L = (simplex)^t (the full vertex set is shift-invariant), so g is
 * equivariant strictly below the top poset element -- which is all the
 * pairing needs; any other fixed face raises OrbitNotFree.
 */
PolytopalMap build_g(const OrderComplex& oc, const GroupAction& nu_base, const JoinComplex& join);

/// eta# = g# after sd#, with the pieces kept around for the tests.
struct EtaMachine {
    JoinComplex join;
    std::shared_ptr<SdChainMap> sd;
    std::shared_ptr<InducedChainMap> g;
    std::shared_ptr<ChainMapBase> eta;
};

EtaMachine eta_chain_map(const NecklaceSetup& setup, int m);

/// Mod-p functionals phi_0..phi_D on the join's chain groups satisfying
///   phi_{2l+1} ( (nu^{-1} - nu) c ) = phi_{2l} (boundary c)   (nu - 1 when p = 2)
///   phi_{2l+2} ( (sum_r nu^r) c )  = phi_{2l+1} (boundary c)
/// phi_0 is 1 on the element-0 vertex of every copy (the designated first-copy
/// vertex among them) and 0 elsewhere; each next phi_d is solved by Gaussian
/// elimination mod p, free coordinates set to 0.  Throws Inconsistent if a
/// system has no solution.
struct PhiSequence {
    int p = 0;
    std::vector<std::unordered_map<Face, int, FaceHash>> phi;  // per degree

    int eval(int degree, const Chain& c) const;  // residue in 0..p-1
};

PhiSequence solve_phi(const JoinComplex& join, int max_degree);

struct PairingRung {
    int l = 0;
    bool even = true;
    int degree = 0;    // degree of the rung argument
    int residue = 0;   // computed value mod p
    int expected = 0;  // (-1)^l for even rungs, (-1)^(l+1) for odd, mod p
    bool ok = false;
};

struct PairingReport {
    int n = 0, t = 0, p = 0;
    std::vector<PairingRung> rungs;
    int final_residue = 0;     // phi_{top-1} of boundary(eta# lambda# h_top)
    bool final_nonzero = false;
    bool top_nonzero = false;  // lambda#(h_top) != 0 mod p
    std::size_t witness_faces = 0;  // support faces with nonzero image
    double wall_ms = 0.0;

    bool ok() const;
};

/// Runs the whole ladder for one instance.  All identities are theorems;
/// a failing report indicates a construction bug (callers may escalate via
/// require_ok).
PairingReport verify_pairing(const NecklaceSetup& setup);

/// Throws PairingMismatch unless the report is fully green.
void require_ok(const PairingReport& report);

}  // namespace polytopal

#endif
