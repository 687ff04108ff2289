/*
 * Compact chains over powers of a small explicit complex (the cut graph S).
 * A face of S^J is stored as J factor-face ids packed in a fixed array, so
 * tensoring, boundaries and the group action are table lookups instead of
 * rational arithmetic.  Coefficients are relative to the same staircase
 * reference orientations as ProductComplex, which makes conversion to the
 * generic Chain type a plain re-keying.
 *
 * This is the OpenMP-friendly kernel behind the necklace solver; the generic
 * modules stay the readable reference implementation and the two are checked
 * against each other in the tests.
 */

#ifndef POLYTOPAL_FLATCHAIN_HPP
#define POLYTOPAL_FLATCHAIN_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "polytopal/chains.hpp"
#include "polytopal/complex.hpp"
#include "polytopal/product.hpp"

namespace polytopal::flat {

constexpr int kMaxCoords = 12;

struct Key {
    std::array<std::uint16_t, kMaxCoords> slot{};
    std::uint8_t len = 0;

    bool operator==(const Key& o) const { return len == o.len && slot == o.slot; }
    bool operator<(const Key& o) const {
        if (len != o.len) return len < o.len;
        return slot < o.slot;
    }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ k.len;
        for (int i = 0; i < k.len; ++i) h = (h ^ k.slot[i]) * 0x100000001b3ull;
        return static_cast<std::size_t>(h);
    }
};

using FlatChain = std::unordered_map<Key, std::int64_t, KeyHash>;

/// Chain supported on a single coordinate (factor face id -> coefficient).
using CoordChain = std::vector<std::pair<std::uint16_t, std::int64_t>>;

/// Precomputed face tables of the factor complex.
class FactorTable {
public:
    explicit FactorTable(std::shared_ptr<const ExplicitComplex> complex);

    const ExplicitComplex& complex() const { return *complex_; }
    std::uint16_t id_of(const Face& f) const { return id_of_.at(f); }
    const Face& face_of(std::uint16_t id) const { return faces_[id]; }
    int dim(std::uint16_t id) const { return dim_[id]; }
    std::size_t size() const { return faces_.size(); }
    const std::vector<std::pair<std::uint16_t, int>>& boundary(std::uint16_t id) const {
        return boundary_[id];
    }
    /// For 1-faces: the two endpoint vertex-face ids.
    const std::array<std::uint16_t, 2>& endpoints(std::uint16_t id) const { return ends_[id]; }
    /// For 0-faces: the vertex id in the factor complex.
    VertexId vertex_of(std::uint16_t id) const { return vert_[id]; }

    /// Register a vertex automorphism; returns its index.  Face images and
    /// signs are tabulated once.
    int add_automorphism(const std::function<VertexId(VertexId)>& fn);
    std::uint16_t auto_face(int autom, std::uint16_t id) const { return autos_[autom][id].first; }
    int auto_sign(int autom, std::uint16_t id) const { return autos_[autom][id].second; }

private:
    std::shared_ptr<const ExplicitComplex> complex_;
    std::vector<Face> faces_;
    std::unordered_map<Face, std::uint16_t, FaceHash> id_of_;
    std::vector<int> dim_;
    std::vector<std::vector<std::pair<std::uint16_t, int>>> boundary_;
    std::vector<std::array<std::uint16_t, 2>> ends_;
    std::vector<VertexId> vert_;
    std::vector<std::vector<std::pair<std::uint16_t, int>>> autos_;
};

int key_dim(const FactorTable& t, const Key& k);

void add_term(FlatChain& into, const Key& k, std::int64_t c);
void add_scaled(FlatChain& into, const FlatChain& c, std::int64_t k);

/// Append one coordinate: out = c (x) coord (bilinear, no sign).
FlatChain tensor_coord(const FlatChain& c, const CoordChain& coord);

/// Leibniz boundary over the coordinates.
FlatChain boundary(const FactorTable& t, const FlatChain& c);

/// Apply a registered automorphism diagonally (by `power` compositions).
FlatChain act(const FactorTable& t, int autom, int power, const FlatChain& c);

FlatChain reduced_mod(const FlatChain& c, std::int64_t p);
bool equal_mod(const FlatChain& a, const FlatChain& b, std::int64_t p);

/// Convert to the generic Chain over the matching power complex.
Chain to_chain(const FactorTable& t, const ProductComplex& power_complex, const FlatChain& c);

/// Key of a face given by factor face ids.
Key make_key(const std::vector<std::uint16_t>& slots);

}  // namespace polytopal::flat

#endif
