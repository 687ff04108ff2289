/*
 * Reusable property checks shared by the unit tests, the acceptance suite
 * and the `check-invariants` CLI command.  Each check returns a list of
 * human-readable failure strings (empty = pass) so callers can print or
 * assert as they wish.
 */

#ifndef POLYTOPAL_PROPSUITE_HPP
#define POLYTOPAL_PROPSUITE_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "polytopal/chains.hpp"
#include "polytopal/complex.hpp"

namespace polytopal {

/// d(d(f)) == 0 for every face.
std::vector<std::string> check_dd_zero(const Complex& c);

/**
 * Two-orientations check for one face: starting from the lexicographically
 * first independent tuple with value +1, propagate the half-space axiom
 * across single-vertex exchanges.  Passes iff the propagation reaches every
 * independent tuple exactly once without conflict (so the axioms admit
 * exactly two sign functions, mutual negatives) and the propagated values
 * agree with the determinant-rule reference orientation.
 */
std::vector<std::string> check_two_orientations(const Complex& c, const Face& f);

/// Leibniz identity d(a (x) b) = da (x) b + (-1)^dim(a) a (x) db for all
/// face pairs of A and B, plus dd = 0 on every tensor.
std::vector<std::string> check_leibniz(std::shared_ptr<const Complex> a,
                                       std::shared_ptr<const Complex> b);

/// Seeded random downward-closed subcomplex of a seeded random base complex.
std::shared_ptr<const Complex> random_subcomplex(std::uint64_t seed);

/// Seeded random simplicial complex (subcomplex of a simplex skeleton).
std::shared_ptr<ExplicitComplex> random_simplicial_complex(std::mt19937_64& rng);

/// Textbook simplicial chain map; the oracle the induced chain map is
/// checked against on simplicial inputs.  Stays independent of the
/// induction-based implementation.
Chain classical_simplicial_image(const std::function<VertexId(VertexId)>& vertex_map,
                                 const Face& f);

/// The orientation/boundary/chain-map property suite behind the
/// `check-invariants` command: constructor complexes validate, dd = 0,
/// exactly two orientations, the Leibniz identity, random simplicial maps
/// against the classical oracle, functoriality.  Deterministic per seed.
std::vector<std::string> run_invariant_suite(std::uint64_t seed, int max_dim);

}  // namespace polytopal

#endif
