#include "polytopal/linalg.hpp"

#include <stdexcept>

namespace polytopal {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

std::string rational_to_string(const Rational& r) {
    return r.str();
}

int matrix_rank(RMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows && col < cols; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

int affine_rank(const std::vector<Coords>& points) {
    if (points.size() <= 1) return 0;
    RMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        Coords d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(std::move(diffs));
}

bool affinely_independent(const std::vector<Coords>& points) {
    return affine_rank(points) == static_cast<int>(points.size()) - 1;
}

int sign_in_frame(const std::vector<Coords>& frame, const std::vector<Coords>& tuple) {
    const std::size_t d = frame.size() - 1;
    if (d == 0) return 1;  // 0-dimensional: single point, sign +1 by convention
    const std::size_t amb = frame[0].size();

    // Columns: frame diffs | tuple diffs.  Eliminate; the tuple block must
    // become expressible in the frame block (frame spans the face).
    RMatrix m(amb, std::vector<Rational>(2 * d));
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < amb; ++r) {
            m[r][c] = frame[c + 1][r] - frame[0][r];
            m[r][d + c] = tuple[c + 1][r] - tuple[0][r];
        }

    // Forward elimination on the frame block.
    std::size_t row = 0;
    std::vector<std::size_t> pivot_rows;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = row;
        while (piv < amb && m[piv][c] == 0) ++piv;
        if (piv == amb) return 0;  // frame not independent; caller's bug
        std::swap(m[row], m[piv]);
        for (std::size_t i = 0; i < amb; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[row][c];
            for (std::size_t j = c; j < 2 * d; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_rows.push_back(row);
        ++row;
    }
    // Rows below the frame rank must vanish on the tuple block, otherwise the
    // tuple leaves the face's affine hull (cannot happen for genuine faces).
    for (std::size_t i = row; i < amb; ++i)
        for (std::size_t j = d; j < 2 * d; ++j)
            if (m[i][j] != 0) return 0;

    // X[c][k] = coefficient of frame vector c in tuple vector k.
    // det X sign via elimination over the d x d block.
    RMatrix x(d, std::vector<Rational>(d));
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t k = 0; k < d; ++k)
            x[c][k] = m[pivot_rows[c]][d + k] / m[pivot_rows[c]][c];

    int sgn = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && x[piv][c] == 0) ++piv;
        if (piv == d) return 0;  // affinely dependent tuple
        if (piv != c) {
            std::swap(x[c], x[piv]);
            sgn = -sgn;
        }
        if (x[c][c] < 0) sgn = -sgn;
        for (std::size_t i = c + 1; i < d; ++i) {
            if (x[i][c] == 0) continue;
            Rational f = x[i][c] / x[c][c];
            for (std::size_t j = c; j < d; ++j) x[i][j] -= f * x[c][j];
        }
    }
    return sgn;
}

bool AffineRankTracker::try_add(const Coords& p) {
    if (!have_base_) {
        base_ = p;
        have_base_ = true;
        return true;
    }
    Coords v(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = p[j] - base_[j];
    // Reduce against existing echelon rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t pc = pivot_cols_[r];
        if (v[pc] == 0) continue;
        Rational f = v[pc] / rows_[r][pc];
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
    }
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (v[j] != 0) {
            rows_.push_back(std::move(v));
            pivot_cols_.push_back(j);
            return true;
        }
    }
    return false;
}

}  // namespace polytopal
