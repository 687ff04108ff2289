#include "polytopal/product.hpp"

#include <algorithm>

namespace polytopal {

ProductComplex::ProductComplex(std::vector<std::shared_ptr<const Complex>> factors) {
    for (auto& f : factors) {
        if (auto pc = std::dynamic_pointer_cast<const ProductComplex>(f)) {
            for (std::size_t i = 0; i < pc->arity(); ++i) factors_.push_back(pc->factors_[i]);
        } else {
            factors_.push_back(f);
        }
    }
    if (factors_.empty()) throw std::invalid_argument("product of zero factors");
    vertex_count_ = 1;
    ambient_ = 0;
    for (auto& f : factors_) {
        strides_.push_back(vertex_count_);
        vertex_count_ *= f->vertex_count();
        ambient_ += f->ambient_dim();
    }
}

VertexId ProductComplex::encode_vertex(const std::vector<VertexId>& parts) const {
    VertexId v = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) v += parts[i] * strides_[i];
    return v;
}

std::vector<VertexId> ProductComplex::decode_vertex(VertexId v) const {
    std::vector<VertexId> parts(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        parts[i] = v / strides_[i] % factors_[i]->vertex_count();
    }
    return parts;
}

std::optional<std::vector<Face>> ProductComplex::to_factor_faces(const Face& f) const {
    std::vector<Face> parts(factors_.size());
    for (VertexId v : f) {
        std::vector<VertexId> dec = decode_vertex(v);
        for (std::size_t i = 0; i < parts.size(); ++i) parts[i].push_back(dec[i]);
    }
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::sort(parts[i].begin(), parts[i].end());
        parts[i].erase(std::unique(parts[i].begin(), parts[i].end()), parts[i].end());
        if (!factors_[i]->contains(parts[i])) return std::nullopt;
        expect *= parts[i].size();
    }
    if (expect != f.size()) return std::nullopt;  // not the full product
    return parts;
}

Face ProductComplex::from_factor_faces(const std::vector<Face>& parts) const {
    Face out{0};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Face next;
        next.reserve(out.size() * parts[i].size());
        for (VertexId p : parts[i])
            for (VertexId base : out) next.push_back(base + p * strides_[i]);
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Coords ProductComplex::vertex_coords(VertexId v) const {
    Coords out;
    out.reserve(ambient_);
    std::vector<VertexId> parts = decode_vertex(v);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Coords c = factors_[i]->vertex_coords(parts[i]);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

int ProductComplex::dim() const {
    int d = 0;
    for (auto& f : factors_) d += f->dim();
    return d;
}

std::uint64_t ProductComplex::face_count() const {
    std::uint64_t n = 1;
    for (auto& f : factors_) n *= f->face_count();
    return n;
}

bool ProductComplex::contains(const Face& f) const {
    return to_factor_faces(f).has_value();
}

int ProductComplex::face_dim(const Face& f) const {
    auto parts = to_factor_faces(f);
    if (!parts) throw std::invalid_argument("face not in product complex");
    int d = 0;
    for (std::size_t i = 0; i < parts->size(); ++i) d += factors_[i]->face_dim((*parts)[i]);
    return d;
}

std::vector<Face> ProductComplex::facets_of(const Face& f) const {
    auto parts = to_factor_faces(f);
    if (!parts) throw std::invalid_argument("face not in product complex");
    std::vector<Face> out;
    for (std::size_t i = 0; i < parts->size(); ++i) {
        for (const Face& facet : factors_[i]->facets_of((*parts)[i])) {
            std::vector<Face> q = *parts;
            q[i] = facet;
            out.push_back(from_factor_faces(q));
        }
    }
    return out;
}

std::optional<Face> ProductComplex::minimal_face_containing(const Face& s) const {
    std::vector<Face> proj(factors_.size());
    for (VertexId v : s) {
        std::vector<VertexId> dec = decode_vertex(v);
        for (std::size_t i = 0; i < proj.size(); ++i) proj[i].push_back(dec[i]);
    }
    std::vector<Face> parts(factors_.size());
    for (std::size_t i = 0; i < proj.size(); ++i) {
        std::sort(proj[i].begin(), proj[i].end());
        proj[i].erase(std::unique(proj[i].begin(), proj[i].end()), proj[i].end());
        auto mf = factors_[i]->minimal_face_containing(proj[i]);
        if (!mf) return std::nullopt;
        parts[i] = *mf;
    }
    return from_factor_faces(parts);
}

std::vector<Face> ProductComplex::all_faces() const {
    if (face_count() > kMaxMaterialize)
        throw TooLarge("product complex too large to materialize");
    std::vector<Face> out;
    std::vector<std::vector<Face>> factor_faces;
    for (auto& f : factors_) factor_faces.push_back(f->all_faces());
    std::vector<std::size_t> idx(factors_.size(), 0);
    while (true) {
        std::vector<Face> parts;
        for (std::size_t i = 0; i < idx.size(); ++i) parts.push_back(factor_faces[i][idx[i]]);
        out.push_back(from_factor_faces(parts));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == factor_faces[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    std::sort(out.begin(), out.end(), [this](const Face& a, const Face& b) {
        int da = face_dim(a), db = face_dim(b);
        return da != db ? da < db : a < b;
    });
    return out;
}

std::vector<VertexId> ProductComplex::reference_frame(const Face& f) const {
    auto parts = to_factor_faces(f);
    if (!parts) throw std::invalid_argument("face not in product complex");
    // Staircase tuple through the factor frames: advance in factor 0 first,
    // then factor 1, ... keeping the other coordinates parked.
    std::vector<std::vector<VertexId>> frames;
    for (std::size_t i = 0; i < parts->size(); ++i)
        frames.push_back(factors_[i]->reference_frame((*parts)[i]));
    std::vector<VertexId> cur(parts->size());
    for (std::size_t i = 0; i < frames.size(); ++i) cur[i] = frames[i][0];
    std::vector<VertexId> out{encode_vertex(cur)};
    for (std::size_t i = 0; i < frames.size(); ++i)
        for (std::size_t k = 1; k < frames[i].size(); ++k) {
            cur[i] = frames[i][k];
            out.push_back(encode_vertex(cur));
        }
    return out;
}

std::vector<BoundaryTerm> ProductComplex::boundary_of(const Face& f) const {
    auto parts = to_factor_faces(f);
    if (!parts) throw std::invalid_argument("face not in product complex");
    // Leibniz over the factors; the sign of slot i is (-1)^(sum of earlier dims).
    std::vector<BoundaryTerm> out;
    int prefix = 0;
    for (std::size_t i = 0; i < parts->size(); ++i) {
        const int di = factors_[i]->face_dim((*parts)[i]);
        const int slot_sign = (prefix % 2 == 0) ? 1 : -1;
        for (const BoundaryTerm& bt : factors_[i]->boundary_of((*parts)[i])) {
            std::vector<Face> q = *parts;
            q[i] = bt.face;
            out.push_back(BoundaryTerm{from_factor_faces(q), slot_sign * bt.sign});
        }
        prefix += di;
    }
    return out;
}

std::shared_ptr<ProductComplex> product(std::shared_ptr<const Complex> p,
                                        std::shared_ptr<const Complex> q) {
    return std::make_shared<ProductComplex>(
        std::vector<std::shared_ptr<const Complex>>{std::move(p), std::move(q)});
}

std::shared_ptr<ProductComplex> power(std::shared_ptr<const Complex> p, int s) {
    if (s < 1) throw std::invalid_argument("power: s must be >= 1");
    std::vector<std::shared_ptr<const Complex>> fs(s, p);
    return std::make_shared<ProductComplex>(std::move(fs));
}

}  // namespace polytopal
