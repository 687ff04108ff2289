/*
 * Order complex of a complex's face poset: one vertex per face, realized at
 * the face's barycenter (exact rational average), one simplex per chain of
 * the inclusion order.  Isomorphic to the barycentric subdivision.
 */

#ifndef POLYTOPAL_ORDER_COMPLEX_HPP
#define POLYTOPAL_ORDER_COMPLEX_HPP

#include <memory>
#include <unordered_map>
#include <vector>

#include "polytopal/complex.hpp"

namespace polytopal {

struct OrderComplex {
    std::shared_ptr<ExplicitComplex> complex;  // simplicial
    std::vector<Face> elements;                // poset element per order-complex vertex id
    std::unordered_map<Face, VertexId, FaceHash> index;

    VertexId vertex_of(const Face& base_face) const { return index.at(base_face); }
};

OrderComplex order_complex(const Complex& base);

}  // namespace polytopal

#endif
