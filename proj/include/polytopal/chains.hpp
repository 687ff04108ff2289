/*
 * Orientations, integer chain groups, the boundary operator and the tensor
 * product of chains.
 *
 * An orientation is an alternating sign function on (dim+1)-tuples of a
 * face's vertices, vanishing exactly on affinely dependent tuples; every
 * face has exactly two, and chains store their coefficients against the
 * complex's deterministic reference orientation of each face.
 *
 * Conventions (machine-verified by the test suite):
 *   - induced orientation on a facet prepends the off-facet vertex, so
 *     boundary of an edge [v0,v1] is v1 - v0;
 *   - Leibniz: d(c (x) c') = dc (x) c' + (-1)^deg(c) c (x) dc'.
 */

#ifndef POLYTOPAL_CHAINS_HPP
#define POLYTOPAL_CHAINS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "polytopal/complex.hpp"
#include "polytopal/product.hpp"

namespace polytopal {

/// Orientation of a face, represented by a positively oriented frame:
/// an affinely independent (dim+1)-tuple declared to evaluate to `frame_sign`.
struct Orientation {
    Face face;
    std::vector<VertexId> frame;
    int frame_sign = 1;
};

/// A face together with a sign relative to its reference orientation.
struct OrientedFace {
    Face face;
    int sign = 1;
};

inline Orientation negate(Orientation o) {
    o.frame_sign = -o.frame_sign;
    return o;
}

/// Deterministic representative of the two orientations of a face.
Orientation reference_orientation(const Complex& c, const Face& f);

/// Sign of an ordered vertex tuple under an orientation: 0 iff affinely
/// dependent, alternating, flipping across the opposite supporting
/// hyperplane.  Throws WrongArity unless the tuple has dim+1 entries.
int evaluate(const Complex& c, const Orientation& o, const std::vector<VertexId>& tuple);

/// Integer chain: finite formal sum of faces of equal dimension, coefficients
/// relative to reference orientations.  No zero coefficients are stored.
struct Chain {
    int degree = -1;
    std::map<Face, std::int64_t> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Face& f, std::int64_t coeff);
    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain operator+(const Chain& other) const;
    Chain operator-(const Chain& other) const;
    Chain operator*(std::int64_t k) const;
    Chain operator-() const { return *this * -1; }
    bool operator==(const Chain& other) const {
        return (is_zero() && other.is_zero()) || (degree == other.degree && terms == other.terms);
    }

    /// Reduce coefficients to balanced residues mod p (p=2 uses {0,1}).
    Chain reduced_mod(std::int64_t p) const;
};

/// Chain carried by a single face with its reference orientation.
Chain face_chain(const Complex& c, const Face& f, std::int64_t coeff = 1);

/// Linear extension of the facet sum with induced orientations.  The
/// boundary of a 0-chain is the empty chain of degree -1.
Chain boundary(const Complex& c, const Chain& chain);

/**
 * Tensor product of chains.  `a` lives in A, `b` in B; the result lives in
 * the product with A's factors first (little-endian vertex encoding, i.e.
 * combined id = id_A + |V(A)| * id_B).  Bilinear; degrees add.  With the
 * staircase product frames the coefficient is just the product of the
 * factor coefficients.
 */
Chain tensor(const Complex& a_complex, const Complex& b_complex, const Chain& a, const Chain& b);

}  // namespace polytopal

#endif
