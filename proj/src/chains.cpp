#include "polytopal/chains.hpp"

#include <algorithm>

#include "polytopal/linalg.hpp"

namespace polytopal {

Orientation reference_orientation(const Complex& c, const Face& f) {
    if (!c.contains(f)) throw std::invalid_argument("reference_orientation: face not in complex");
    return Orientation{f, c.reference_frame(f), 1};
}

int evaluate(const Complex& c, const Orientation& o, const std::vector<VertexId>& tuple) {
    const int d = static_cast<int>(o.frame.size()) - 1;
    if (static_cast<int>(tuple.size()) != d + 1)
        throw WrongArity("evaluate: tuple must have dim+1 entries");
    for (VertexId v : tuple)
        if (!std::binary_search(o.face.begin(), o.face.end(), v))
            throw std::invalid_argument("evaluate: tuple vertex outside the face");
    // Repeated entries are affinely dependent; catch early.
    std::vector<VertexId> sorted(tuple);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
    return o.frame_sign * sign_in_frame(c.coords_of(o.frame), c.coords_of(tuple));
}

void Chain::add(const Face& f, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms.emplace(f, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other) {
    if (!other.is_zero()) {
        if (is_zero()) degree = other.degree;
        if (degree != other.degree) throw Mismatch("chain degree mismatch");
        for (auto& [f, k] : other.terms) add(f, k);
    }
    return *this;
}

Chain& Chain::operator-=(const Chain& other) {
    if (!other.is_zero()) {
        if (is_zero()) degree = other.degree;
        if (degree != other.degree) throw Mismatch("chain degree mismatch");
        for (auto& [f, k] : other.terms) add(f, -k);
    }
    return *this;
}

Chain Chain::operator+(const Chain& other) const {
    Chain out = *this;
    out += other;
    return out;
}

Chain Chain::operator-(const Chain& other) const {
    Chain out = *this;
    out -= other;
    return out;
}

Chain Chain::operator*(std::int64_t k) const {
    Chain out;
    out.degree = degree;
    if (k != 0)
        for (auto& [f, c] : terms) out.terms.emplace(f, c * k);
    return out;
}

Chain Chain::reduced_mod(std::int64_t p) const {
    Chain out;
    out.degree = degree;
    for (auto& [f, c] : terms) {
        std::int64_t r = ((c % p) + p) % p;
        if (2 * r > p) r -= p;  // balanced representative
        if (r != 0) out.terms.emplace(f, r);
    }
    return out;
}

Chain face_chain(const Complex& c, const Face& f, std::int64_t coeff) {
    Chain out;
    out.degree = c.face_dim(f);
    if (coeff != 0) out.terms.emplace(f, coeff);
    return out;
}

Chain boundary(const Complex& c, const Chain& chain) {
    Chain out;
    out.degree = chain.degree - 1;
    for (auto& [f, k] : chain.terms)
        for (const BoundaryTerm& bt : c.boundary_of(f)) out.add(bt.face, k * bt.sign);
    if (out.is_zero()) out.degree = chain.degree - 1;
    return out;
}

Chain tensor(const Complex& a_complex, const Complex& /*b_complex*/, const Chain& a,
             const Chain& b) {
    Chain out;
    out.degree = (a.is_zero() || b.is_zero()) ? -1 : a.degree + b.degree;
    const std::uint64_t stride = a_complex.vertex_count();
    for (auto& [fa, ka] : a.terms)
        for (auto& [fb, kb] : b.terms) {
            Face f;
            f.reserve(fa.size() * fb.size());
            for (VertexId vb : fb)
                for (VertexId va : fa) f.push_back(va + stride * vb);
            std::sort(f.begin(), f.end());
            out.add(f, ka * kb);
        }
    return out;
}

}  // namespace polytopal
