/*
 * Exact rational Gaussian elimination: affine ranks, determinant signs,
 * and the sign of a tuple expressed in a reference affine frame.
 * Matrices here are tiny (a handful of rows/columns), so the plain
 * fraction-based elimination is more than fast enough.
 */

#ifndef POLYTOPAL_LINALG_HPP
#define POLYTOPAL_LINALG_HPP

#include <vector>

#include "polytopal/rational.hpp"

namespace polytopal {

/// Dense column-major-free matrix; rows of equal length.
using RMatrix = std::vector<std::vector<Rational>>;

/// Rank of a matrix (rows x cols), destructive-free.
int matrix_rank(RMatrix m);

/// Affine rank of a point set = rank of (p_i - p_0), i >= 1.
/// The affine dimension of the span is affine_rank(points).
int affine_rank(const std::vector<Coords>& points);

/// True if the points are affinely independent.
bool affinely_independent(const std::vector<Coords>& points);

/**
 * Sign of det(X) where X solves A·X = B, with A = frame differences
 * (d columns, full column rank) and B = tuple differences (d columns).
 * Returns 0 when B is not in A's column span or X is singular; +-1 otherwise.
 *
 * This is the workhorse of orientation evaluation: both the frame and the
 * query tuple are point tuples of length d+1 in the same ambient space.
 */
int sign_in_frame(const std::vector<Coords>& frame, const std::vector<Coords>& tuple);

/// Incremental affine-rank tracker used by the greedy frame search.
class AffineRankTracker {
public:
    explicit AffineRankTracker(std::size_t ambient) : ambient_(ambient) {}

    /// Try to add a point; returns true (and keeps it) if the affine rank grew,
    /// or if it is the first point.
    bool try_add(const Coords& p);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::size_t ambient_;
    bool have_base_ = false;
    Coords base_;
    std::vector<Coords> rows_;  // reduced difference vectors (row echelon)
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace polytopal

#endif
