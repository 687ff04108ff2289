/*
 * Polytopal complexes: vertex sets with exact rational realizations plus an
 * explicit face lattice.  A face is identified with its sorted vertex-id set
 * (valid under the no-degeneracy assumption: distinct faces of one polytope
 * have distinct supporting affine subspaces).
 *
 * Two storage strategies implement one interface: ExplicitComplex keeps the
 * whole lattice, SubComplex restricts a parent by a predicate.  Cartesian
 * products live in product.hpp and stay implicit.
 */

#ifndef POLYTOPAL_COMPLEX_HPP
#define POLYTOPAL_COMPLEX_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "polytopal/errors.hpp"
#include "polytopal/rational.hpp"

namespace polytopal {

using VertexId = std::uint64_t;

/// Sorted, duplicate-free vector of vertex ids.
using Face = std::vector<VertexId>;

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ f.size();
        for (VertexId v : f) h = (h ^ (v + 0x9e3779b97f4a7c15ull)) * 0xff51afd7ed558ccdull;
        return h;
    }
};

bool face_subset(const Face& a, const Face& b);  // a subseteq b (both sorted)
Face face_intersection(const Face& a, const Face& b);
Face sorted_face(std::vector<VertexId> vs);      // sort + dedupe

/// One term of a boundary: facet plus its sign against the facet's
/// reference orientation.
struct BoundaryTerm {
    Face face;
    int sign;  // +-1
};

class Complex {
public:
    virtual ~Complex() = default;

    virtual std::uint64_t vertex_count() const = 0;
    virtual std::size_t ambient_dim() const = 0;
    virtual Coords vertex_coords(VertexId v) const = 0;

    virtual int dim() const = 0;
    virtual std::uint64_t face_count() const = 0;
    virtual bool contains(const Face& f) const = 0;
    virtual int face_dim(const Face& f) const = 0;
    virtual std::vector<Face> facets_of(const Face& f) const = 0;

    /// The unique inclusion-minimal face containing S, or nullopt when no
    /// face contains S.  Uniqueness follows from intersection-closure.
    virtual std::optional<Face> minimal_face_containing(const Face& s) const = 0;

    /// Every face, ordered by (dim, lexicographic vertex ids).  Throws
    /// TooLarge for implicit complexes past the materialization guard.
    virtual std::vector<Face> all_faces() const = 0;

    /// Positively oriented affine frame of a face: the deterministic
    /// (dim+1)-tuple declared to have orientation value +1.  For explicit
    /// complexes this is the lexicographically first affinely independent
    /// tuple of the face's vertices.
    virtual std::vector<VertexId> reference_frame(const Face& f) const;

    /// Boundary of (f, reference orientation), each facet re-expressed
    /// against its own reference orientation.
    virtual std::vector<BoundaryTerm> boundary_of(const Face& f) const;

    std::vector<Coords> coords_of(const std::vector<VertexId>& vs) const;
};

/// Fully materialized complex.  Face dimensions are computed from the
/// realization (affine rank); reference frames and boundary signs are
/// precomputed at construction, so instances are immutable and safe for
/// concurrent reads.
class ExplicitComplex : public Complex, public std::enable_shared_from_this<ExplicitComplex> {
public:
    /// `lattice` maps each face to the vertex sets of its facets.  The
    /// constructor does not validate; deliberately broken inputs are allowed
    /// so that validate() can report on them.
    ExplicitComplex(std::vector<Coords> vertices,
                    std::vector<std::pair<Face, std::vector<Face>>> lattice);

    std::uint64_t vertex_count() const override { return verts_.size(); }
    std::size_t ambient_dim() const override { return ambient_; }
    Coords vertex_coords(VertexId v) const override;
    int dim() const override { return dim_; }
    std::uint64_t face_count() const override { return infos_.size(); }
    bool contains(const Face& f) const override { return infos_.count(f) != 0; }
    int face_dim(const Face& f) const override;
    std::vector<Face> facets_of(const Face& f) const override;
    std::optional<Face> minimal_face_containing(const Face& s) const override;
    std::vector<Face> all_faces() const override;
    std::vector<VertexId> reference_frame(const Face& f) const override;
    std::vector<BoundaryTerm> boundary_of(const Face& f) const override;

private:
    struct Info {
        int dim;
        std::vector<Face> facets;
        std::vector<VertexId> frame;
        std::vector<BoundaryTerm> boundary;
    };
    const Info& info(const Face& f) const;

    std::vector<Coords> verts_;
    std::size_t ambient_;
    std::unordered_map<Face, Info, FaceHash> infos_;
    std::vector<Face> ordered_;
    int dim_ = -1;
};

/// Restriction of a parent complex to a downward-closed face set.  Either
/// materialized (subcomplex(), with closure checking) or predicate-backed
/// (predicate_subcomplex(), for implicit parents where enumeration is not an
/// option -- the caller guarantees downward closure).
class SubComplex : public Complex {
public:
    static std::shared_ptr<SubComplex> materialized(std::shared_ptr<const Complex> parent,
                                                    const std::function<bool(const Face&)>& keep);
    static std::shared_ptr<SubComplex> predicate(std::shared_ptr<const Complex> parent,
                                                 std::function<bool(const Face&)> keep, int dim);

    std::uint64_t vertex_count() const override { return parent_->vertex_count(); }
    std::size_t ambient_dim() const override { return parent_->ambient_dim(); }
    Coords vertex_coords(VertexId v) const override { return parent_->vertex_coords(v); }
    int dim() const override { return dim_; }
    std::uint64_t face_count() const override;
    bool contains(const Face& f) const override;
    int face_dim(const Face& f) const override { return parent_->face_dim(f); }
    std::vector<Face> facets_of(const Face& f) const override { return parent_->facets_of(f); }
    std::optional<Face> minimal_face_containing(const Face& s) const override;
    std::vector<Face> all_faces() const override;
    std::vector<VertexId> reference_frame(const Face& f) const override {
        return parent_->reference_frame(f);
    }
    std::vector<BoundaryTerm> boundary_of(const Face& f) const override {
        return parent_->boundary_of(f);
    }
    const Complex& parent() const { return *parent_; }
    std::shared_ptr<const Complex> parent_ptr() const { return parent_; }

private:
    SubComplex() = default;
    std::shared_ptr<const Complex> parent_;
    std::function<bool(const Face&)> keep_;
    bool materialized_ = false;
    std::unordered_set<Face, FaceHash> kept_;
    std::vector<Face> ordered_;
    int dim_ = -1;
};

// ---- constructors ----------------------------------------------------------

/// Standard d-simplex: vertex i at basis point e_i of R^{d+1}, full subset lattice.
std::shared_ptr<ExplicitComplex> make_simplex(int d);

/// Unit d-cube [0,1]^d: vertices {0,1}^d (little-endian bit encoding), faces
/// obtained by freezing coordinate subsets; k-faces count C(d,k)*2^(d-k).
std::shared_ptr<ExplicitComplex> make_cube(int d);

/// Path with n unit edges, vertices 0..n at integer points of R^1.
std::shared_ptr<ExplicitComplex> make_path(int n);

/// Simplicial complex: downward closure of the given faces over the given
/// realization; every nonempty vertex subset of a face is a face.
std::shared_ptr<ExplicitComplex> make_simplicial(std::vector<Coords> vertices,
                                                 const std::vector<Face>& faces);

/// Materializing restriction; throws NotClosed when `keep` drops a subface of
/// a kept face.
std::shared_ptr<SubComplex> subcomplex(std::shared_ptr<const Complex> parent,
                                       const std::function<bool(const Face&)>& keep);

// ---- validation ------------------------------------------------------------

struct Violation {
    enum Kind {
        IntersectionNotAFace,
        MissingSubface,
        WrongFacetDim,
        BadSpanDim,
        DegenerateSupports,
        UnknownVertex,
    };
    Kind kind;
    Face a;
    Face b;  // second face when the violation concerns a pair
    std::string describe() const;
};

/// Empty iff all polytopal-complex invariants hold; violations are data.
std::vector<Violation> validate(const Complex& c);

}  // namespace polytopal

#endif
