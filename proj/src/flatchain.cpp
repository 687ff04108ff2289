#include "polytopal/flatchain.hpp"

#include <algorithm>

#include "polytopal/polymap.hpp"

namespace polytopal::flat {

FactorTable::FactorTable(std::shared_ptr<const ExplicitComplex> complex)
    : complex_(std::move(complex)) {
    faces_ = complex_->all_faces();
    if (faces_.size() > 60000) throw TooLarge("factor complex too large for the flat kernel");
    dim_.resize(faces_.size());
    boundary_.resize(faces_.size());
    ends_.resize(faces_.size());
    vert_.resize(faces_.size());
    for (std::uint16_t i = 0; i < faces_.size(); ++i) id_of_.emplace(faces_[i], i);
    for (std::uint16_t i = 0; i < faces_.size(); ++i) {
        const Face& f = faces_[i];
        dim_[i] = complex_->face_dim(f);
        if (dim_[i] == 0) vert_[i] = f[0];
        for (const BoundaryTerm& bt : complex_->boundary_of(f))
            boundary_[i].push_back({id_of_.at(bt.face), bt.sign});
        if (dim_[i] == 1) {
            int pos = 0;
            for (auto& [fid, sgn] : boundary_[i]) {
                (void)sgn;
                ends_[i][pos++] = fid;
            }
        }
    }
}

int FactorTable::add_automorphism(const std::function<VertexId(VertexId)>& fn) {
    std::vector<std::pair<std::uint16_t, int>> table(faces_.size());
    for (std::uint16_t i = 0; i < faces_.size(); ++i) {
        Face img;
        img.reserve(faces_[i].size());
        for (VertexId v : faces_[i]) img.push_back(fn(v));
        std::sort(img.begin(), img.end());
        std::uint16_t j = id_of_.at(img);
        std::vector<VertexId> mapped_frame;
        for (VertexId v : complex_->reference_frame(faces_[i])) mapped_frame.push_back(fn(v));
        int s = evaluate(*complex_, reference_orientation(*complex_, img), mapped_frame);
        table[i] = {j, s};
    }
    autos_.push_back(std::move(table));
    return static_cast<int>(autos_.size()) - 1;
}

int key_dim(const FactorTable& t, const Key& k) {
    int d = 0;
    for (int i = 0; i < k.len; ++i) d += t.dim(k.slot[i]);
    return d;
}

void add_term(FlatChain& into, const Key& k, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = into.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

void add_scaled(FlatChain& into, const FlatChain& c, std::int64_t k) {
    if (k == 0) return;
    for (auto& [key, coeff] : c) add_term(into, key, coeff * k);
}

FlatChain tensor_coord(const FlatChain& c, const CoordChain& coord) {
    FlatChain out;
    out.reserve(c.size() * coord.size());
    for (auto& [key, coeff] : c) {
        Key k = key;
        k.len = key.len + 1;
        for (auto& [fid, fc] : coord) {
            k.slot[key.len] = fid;
            add_term(out, k, coeff * fc);
        }
    }
    return out;
}

FlatChain boundary(const FactorTable& t, const FlatChain& c) {
    FlatChain out;
    out.reserve(c.size() * 4);
    for (auto& [key, coeff] : c) {
        int parity = 1;
        for (int j = 0; j < key.len; ++j) {
            const std::uint16_t f = key.slot[j];
            for (auto& [facet, sgn] : t.boundary(f)) {
                Key k = key;
                k.slot[j] = facet;
                add_term(out, k, coeff * parity * sgn);
            }
            if (t.dim(f) % 2 != 0) parity = -parity;
        }
    }
    return out;
}

FlatChain act(const FactorTable& t, int autom, int power, const FlatChain& c) {
    FlatChain out;
    out.reserve(c.size());
    for (auto& [key, coeff] : c) {
        Key k = key;
        std::int64_t s = coeff;
        for (int j = 0; j < key.len; ++j) {
            std::uint16_t f = k.slot[j];
            for (int step = 0; step < power; ++step) {
                s *= t.auto_sign(autom, f);
                f = t.auto_face(autom, f);
            }
            k.slot[j] = f;
        }
        add_term(out, k, s);
    }
    return out;
}

FlatChain reduced_mod(const FlatChain& c, std::int64_t p) {
    FlatChain out;
    out.reserve(c.size());
    for (auto& [key, coeff] : c) {
        std::int64_t r = ((coeff % p) + p) % p;
        if (2 * r > p) r -= p;
        if (r != 0) out.emplace(key, r);
    }
    return out;
}

bool equal_mod(const FlatChain& a, const FlatChain& b, std::int64_t p) {
    FlatChain diff = a;
    add_scaled(diff, b, -1);
    for (auto& [key, coeff] : diff) {
        (void)key;
        if (coeff % p != 0) return false;
    }
    return true;
}

Chain to_chain(const FactorTable& t, const ProductComplex& power_complex, const FlatChain& c) {
    Chain out;
    for (auto& [key, coeff] : c) {
        std::vector<Face> parts;
        parts.reserve(key.len);
        for (int i = 0; i < key.len; ++i) parts.push_back(t.face_of(key.slot[i]));
        Face f = power_complex.from_factor_faces(parts);
        out.degree = key_dim(t, key);
        out.add(f, coeff);
    }
    return out;
}

Key make_key(const std::vector<std::uint16_t>& slots) {
    Key k;
    k.len = static_cast<std::uint8_t>(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) k.slot[i] = slots[i];
    return k;
}

}  // namespace polytopal::flat
