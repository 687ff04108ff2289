/*
 * Polytopal maps and their induced chain maps.
 *
 * A vertex map is polytopal when the image of every d-face lies inside a
 * face of dimension <= d of the target.  Such a map induces a chain map by
 * induction on dimension: the image of a face is alpha * (minimal containing
 * face) where alpha is read off from the already-computed boundary image;
 * the induction asserts that all facet coefficients agree.
 *
 * Also here: the Fan-Ehrenborg-Hetyei cubical-map predicate (kept purely for
 * the comparison test), chain maps of complex automorphisms, composition,
 * and the prism chain homotopy.
 */

#ifndef POLYTOPAL_POLYMAP_HPP
#define POLYTOPAL_POLYMAP_HPP

#include <functional>
#include <memory>
#include <unordered_map>

#include "polytopal/chains.hpp"
#include "polytopal/complex.hpp"
#include "polytopal/product.hpp"

namespace polytopal {

struct PolytopalMap {
    std::shared_ptr<const Complex> source;
    std::shared_ptr<const Complex> target;
    std::function<VertexId(VertexId)> vertex_fn;

    VertexId operator()(VertexId v) const;  // throws TargetVertexUnknown
    Face image(const Face& f) const;

    static PolytopalMap from_table(std::shared_ptr<const Complex> source,
                                   std::shared_ptr<const Complex> target,
                                   std::vector<VertexId> table);
};

PolytopalMap identity_map(std::shared_ptr<const Complex> c);
PolytopalMap compose_maps(const PolytopalMap& outer, const PolytopalMap& inner);

struct MapViolation {
    Face face;
    int min_face_dim;  // dimension of the minimal containing face; -1 if none
};

/// Empty iff the map is polytopal.  Enumerates the source's faces, so only
/// usable below the materialization guard.
std::vector<MapViolation> validate_polytopal(const PolytopalMap& m);

/// Classical cubical-map condition: every cube's image is contained in the
/// vertex set of a cube (any dimension), and adjacent vertices map to
/// adjacent-or-equal vertices.  No chain map is induced from this predicate.
bool feh_cubical_ok(const PolytopalMap& m);

// ---- chain maps -------------------------------------------------------------

class ChainMapBase {
public:
    virtual ~ChainMapBase() = default;
    virtual std::shared_ptr<const Complex> source() const = 0;
    virtual std::shared_ptr<const Complex> target() const = 0;
    /// Image of (f, reference orientation of f).
    virtual Chain apply_face(const Face& f) const = 0;
    Chain apply(const Chain& c) const;
};

/// The induced chain map of a polytopal map.  Results are memoized per face;
/// instances are single-use-per-thread (queries are pure, so a fresh instance
/// per thread sees identical values).
class InducedChainMap : public ChainMapBase {
public:
    explicit InducedChainMap(PolytopalMap map) : map_(std::move(map)) {}

    std::shared_ptr<const Complex> source() const override { return map_.source; }
    std::shared_ptr<const Complex> target() const override { return map_.target; }
    Chain apply_face(const Face& f) const override;
    const PolytopalMap& map() const { return map_; }

private:
    PolytopalMap map_;
    mutable std::unordered_map<Face, Chain, FaceHash> memo_;
};

std::shared_ptr<InducedChainMap> induce_chain_map(PolytopalMap map);

/// Pointwise composition outer_after(inner(.)).  Functoriality (equality
/// with the chain map induced by the composed vertex maps) is a theorem,
/// exercised by the test suite.
class ComposedChainMap : public ChainMapBase {
public:
    ComposedChainMap(std::shared_ptr<const ChainMapBase> outer,
                     std::shared_ptr<const ChainMapBase> inner);
    std::shared_ptr<const Complex> source() const override { return inner_->source(); }
    std::shared_ptr<const Complex> target() const override { return outer_->target(); }
    Chain apply_face(const Face& f) const override;

private:
    std::shared_ptr<const ChainMapBase> outer_, inner_;
};

std::shared_ptr<ChainMapBase> compose(std::shared_ptr<const ChainMapBase> outer,
                                      std::shared_ptr<const ChainMapBase> inner);

/// Chain map of a complex automorphism (vertex relabeling): each face maps
/// to a face of equal dimension with sign +-1.
class RelabelChainMap : public ChainMapBase {
public:
    RelabelChainMap(std::shared_ptr<const Complex> c, std::function<VertexId(VertexId)> fn)
        : complex_(std::move(c)), fn_(std::move(fn)) {}
    std::shared_ptr<const Complex> source() const override { return complex_; }
    std::shared_ptr<const Complex> target() const override { return complex_; }
    Chain apply_face(const Face& f) const override;

private:
    std::shared_ptr<const Complex> complex_;
    std::function<VertexId(VertexId)> fn_;
    mutable std::unordered_map<Face, Chain, FaceHash> memo_;
};

/// Cyclic group action on a complex: generator permutation of order p.
class GroupAction {
public:
    GroupAction(std::shared_ptr<const Complex> c, std::function<VertexId(VertexId)> generator,
                int order);

    int order() const { return order_; }
    const std::shared_ptr<const Complex>& complex() const { return complex_; }
    VertexId vertex(int power, VertexId v) const;  // power may be negative
    Face face(int power, const Face& f) const;
    Chain apply(int power, const Chain& c) const;

    /// Sum over the whole group: (sum_r nu^r) c, r = 1..p.
    Chain norm(const Chain& c) const;

private:
    std::shared_ptr<const Complex> complex_;
    std::function<VertexId(VertexId)> gen_;
    int order_;
    std::vector<std::shared_ptr<RelabelChainMap>> powers_;  // index 0..p-1 = nu^0..nu^(p-1)
};

// ---- homotopy ---------------------------------------------------------------

/**
 * Prism operator of an elementary homotopy.  `phi` is a polytopal map on
 * K x P1 whose restrictions to K x {v0} and K x {v1} are lambda and mu.
 * apply() raises degree by one and satisfies D d + d D = lambda# - mu#
 * exactly (the degree-dependent sign lives inside the operator).
 */
class PrismHomotopy {
public:
    PrismHomotopy(PolytopalMap phi, const PolytopalMap& lambda, const PolytopalMap& mu);

    Chain apply(const Chain& c) const;
    const InducedChainMap& phi_chain_map() const { return *phi_; }

private:
    std::shared_ptr<const Complex> k_;
    std::shared_ptr<const Complex> p1_;
    std::shared_ptr<InducedChainMap> phi_;
};

}  // namespace polytopal

#endif
