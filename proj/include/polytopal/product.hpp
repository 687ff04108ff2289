/*
 * Implicit cartesian products of complexes.  A product face is a tuple of
 * factor faces; vertex ids are little-endian mixed-radix encodings of factor
 * vertex tuples, so appending factors never relabels existing ones and
 * product() is associative on the nose (nested products are flattened).
 *
 * Nothing is materialized: facets, dimensions, minimal containing faces and
 * boundaries are all answered factor-wise.  all_faces() works only below a
 * size guard.
 *
 * Reference orientations of product faces are the staircase tensor of the
 * factor reference frames ((v0,w0),(v1,w0),...,(vd,w0),(vd,w1),...), which
 * makes tensor products of chains and boundaries purely combinatorial.
 */

#ifndef POLYTOPAL_PRODUCT_HPP
#define POLYTOPAL_PRODUCT_HPP

#include <memory>
#include <vector>

#include "polytopal/complex.hpp"

namespace polytopal {

class ProductComplex : public Complex {
public:
    /// Factors are flattened: a ProductComplex factor contributes its own
    /// factor list.  At least one factor required.
    explicit ProductComplex(std::vector<std::shared_ptr<const Complex>> factors);

    std::size_t arity() const { return factors_.size(); }
    const Complex& factor(std::size_t i) const { return *factors_[i]; }
    std::shared_ptr<const Complex> factor_ptr(std::size_t i) const { return factors_[i]; }

    VertexId encode_vertex(const std::vector<VertexId>& parts) const;
    std::vector<VertexId> decode_vertex(VertexId v) const;

    /// Factor faces of a product face, or nullopt when the vertex set is not
    /// a full cartesian product of factor faces.
    std::optional<std::vector<Face>> to_factor_faces(const Face& f) const;
    Face from_factor_faces(const std::vector<Face>& parts) const;

    std::uint64_t vertex_count() const override { return vertex_count_; }
    std::size_t ambient_dim() const override { return ambient_; }
    Coords vertex_coords(VertexId v) const override;
    int dim() const override;
    std::uint64_t face_count() const override;
    bool contains(const Face& f) const override;
    int face_dim(const Face& f) const override;
    std::vector<Face> facets_of(const Face& f) const override;
    std::optional<Face> minimal_face_containing(const Face& s) const override;
    std::vector<Face> all_faces() const override;
    std::vector<VertexId> reference_frame(const Face& f) const override;
    std::vector<BoundaryTerm> boundary_of(const Face& f) const override;

    /// Materialization guard for all_faces(); generous but finite.
    static constexpr std::uint64_t kMaxMaterialize = 2'000'000;

private:
    std::vector<std::shared_ptr<const Complex>> factors_;
    std::vector<std::uint64_t> strides_;  // strides_[i] = prod of |V_j|, j < i
    std::uint64_t vertex_count_;
    std::size_t ambient_;
};

std::shared_ptr<ProductComplex> product(std::shared_ptr<const Complex> p,
                                        std::shared_ptr<const Complex> q);

/// Iterated product P^s (s >= 1), implicitly represented.
std::shared_ptr<ProductComplex> power(std::shared_ptr<const Complex> p, int s);

}  // namespace polytopal

#endif
