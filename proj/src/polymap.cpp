#include "polytopal/polymap.hpp"

#include <algorithm>

namespace polytopal {

VertexId PolytopalMap::operator()(VertexId v) const {
    VertexId w = vertex_fn(v);
    if (w >= target->vertex_count())
        throw TargetVertexUnknown("vertex map leaves the target vertex set");
    return w;
}

Face PolytopalMap::image(const Face& f) const {
    Face out;
    out.reserve(f.size());
    for (VertexId v : f) out.push_back((*this)(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PolytopalMap PolytopalMap::from_table(std::shared_ptr<const Complex> source,
                                      std::shared_ptr<const Complex> target,
                                      std::vector<VertexId> table) {
    if (table.size() != source->vertex_count())
        throw std::invalid_argument("vertex map must be total on the source vertices");
    return PolytopalMap{std::move(source), std::move(target),
                        [table = std::move(table)](VertexId v) { return table.at(v); }};
}

PolytopalMap identity_map(std::shared_ptr<const Complex> c) {
    return PolytopalMap{c, c, [](VertexId v) { return v; }};
}

PolytopalMap compose_maps(const PolytopalMap& outer, const PolytopalMap& inner) {
    if (outer.source->vertex_count() != inner.target->vertex_count())
        throw Mismatch("compose_maps: inner target and outer source disagree");
    auto in = inner.vertex_fn;
    auto out = outer.vertex_fn;
    return PolytopalMap{inner.source, outer.target,
                        [in, out](VertexId v) { return out(in(v)); }};
}

std::vector<MapViolation> validate_polytopal(const PolytopalMap& m) {
    std::vector<MapViolation> out;
    for (const Face& f : m.source->all_faces()) {
        Face img = m.image(f);
        auto mf = m.target->minimal_face_containing(img);
        if (!mf) {
            out.push_back({f, -1});
            continue;
        }
        const int d = m.target->face_dim(*mf);
        if (d > m.source->face_dim(f)) out.push_back({f, d});
    }
    return out;
}

bool feh_cubical_ok(const PolytopalMap& m) {
    for (const Face& f : m.source->all_faces()) {
        Face img = m.image(f);
        if (!m.target->minimal_face_containing(img)) return false;  // image not in any cube
        if (m.source->face_dim(f) == 1) {
            // adjacent vertices must map to adjacent or equal vertices
            if (img.size() == 1) continue;
            if (img.size() != 2) return false;
            if (!m.target->contains(img)) return false;
        }
    }
    return true;
}

// ---- chain maps -------------------------------------------------------------

Chain ChainMapBase::apply(const Chain& c) const {
    Chain out;
    out.degree = c.degree;
    for (auto& [f, k] : c.terms) {
        Chain img = apply_face(f);
        out += img * k;
    }
    if (out.is_zero()) out.degree = c.degree;
    return out;
}

Chain InducedChainMap::apply_face(const Face& f) const {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;

    const Complex& src = *map_.source;
    const Complex& tgt = *map_.target;
    const int d = src.face_dim(f);
    Chain result;
    result.degree = d;

    if (d == 0) {
        result.add(Face{map_(f[0])}, 1);
        memo_.emplace(f, result);
        return result;
    }

    Face img = map_.image(f);
    auto mf = tgt.minimal_face_containing(img);
    if (!mf) throw InductionBroken("face image is not contained in any target face");
    const int dmf = tgt.face_dim(*mf);
    if (dmf > d) throw InductionBroken("map is not polytopal: image dimension exceeds face dimension");

    if (dmf < d) {
        memo_.emplace(f, result);  // zero
        return result;
    }

    // lambda#(boundary f), regrouped per facet of the minimal face: all
    // coefficients must agree with a single alpha against d(mf, ref).
    Chain b;
    b.degree = d - 1;
    for (const BoundaryTerm& bt : src.boundary_of(f)) {
        Chain piece = apply_face(bt.face);
        b += piece * bt.sign;
    }
    Chain big = boundary(tgt, face_chain(tgt, *mf));

    std::int64_t alpha = 0;
    if (!b.is_zero()) {
        const auto& [tau, s] = *big.terms.begin();
        auto bt = b.terms.find(tau);
        alpha = (bt == b.terms.end()) ? 0 : bt->second * s;  // s in {+-1}
        if (!(big * alpha == b))
            throw InductionBroken("facet coefficients disagree during the chain-map induction");
    }
    if (alpha != 0) result.add(*mf, alpha);
    memo_.emplace(f, result);
    return result;
}

std::shared_ptr<InducedChainMap> induce_chain_map(PolytopalMap map) {
    return std::make_shared<InducedChainMap>(std::move(map));
}

ComposedChainMap::ComposedChainMap(std::shared_ptr<const ChainMapBase> outer,
                                   std::shared_ptr<const ChainMapBase> inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (outer_->source()->vertex_count() != inner_->target()->vertex_count())
        throw Mismatch("compose: chain maps are not composable");
}

Chain ComposedChainMap::apply_face(const Face& f) const {
    return outer_->apply(inner_->apply_face(f));
}

std::shared_ptr<ChainMapBase> compose(std::shared_ptr<const ChainMapBase> outer,
                                      std::shared_ptr<const ChainMapBase> inner) {
    return std::make_shared<ComposedChainMap>(std::move(outer), std::move(inner));
}

Chain RelabelChainMap::apply_face(const Face& f) const {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    Face g;
    g.reserve(f.size());
    for (VertexId v : f) g.push_back(fn_(v));
    std::sort(g.begin(), g.end());
    std::vector<VertexId> mapped_frame;
    for (VertexId v : complex_->reference_frame(f)) mapped_frame.push_back(fn_(v));
    int s = evaluate(*complex_, reference_orientation(*complex_, g), mapped_frame);
    Chain out;
    out.degree = complex_->face_dim(f);
    out.add(g, s);
    memo_.emplace(f, out);
    return out;
}

GroupAction::GroupAction(std::shared_ptr<const Complex> c,
                         std::function<VertexId(VertexId)> generator, int order)
    : complex_(std::move(c)), gen_(std::move(generator)), order_(order) {
    if (order_ < 1) throw std::invalid_argument("group order must be positive");
    for (int k = 0; k < order_; ++k) {
        auto fn = [this, k](VertexId v) {
            for (int i = 0; i < k; ++i) v = gen_(v);
            return v;
        };
        powers_.push_back(std::make_shared<RelabelChainMap>(complex_, fn));
    }
}

VertexId GroupAction::vertex(int power, VertexId v) const {
    int k = ((power % order_) + order_) % order_;
    for (int i = 0; i < k; ++i) v = gen_(v);
    return v;
}

Face GroupAction::face(int power, const Face& f) const {
    Face g;
    g.reserve(f.size());
    for (VertexId v : f) g.push_back(vertex(power, v));
    std::sort(g.begin(), g.end());
    return g;
}

Chain GroupAction::apply(int power, const Chain& c) const {
    int k = ((power % order_) + order_) % order_;
    return powers_[k]->apply(c);
}

Chain GroupAction::norm(const Chain& c) const {
    Chain out;
    out.degree = c.degree;
    for (int r = 1; r <= order_; ++r) out += apply(r, c);
    if (out.is_zero()) out.degree = c.degree;
    return out;
}

// ---- homotopy ---------------------------------------------------------------

PrismHomotopy::PrismHomotopy(PolytopalMap phi, const PolytopalMap& lambda,
                             const PolytopalMap& mu) {
    auto prod = std::dynamic_pointer_cast<const ProductComplex>(phi.source);
    if (!prod) throw NotAHomotopy("phi must be defined on K x P1 (a product complex)");
    const std::size_t arity = prod->arity();
    const Complex& last = prod->factor(arity - 1);
    if (last.vertex_count() != 2 || last.dim() != 1)
        throw NotAHomotopy("the last product factor must be a unit edge");

    // K = everything but the last factor.
    std::vector<std::shared_ptr<const Complex>> head;
    for (std::size_t i = 0; i + 1 < arity; ++i) head.push_back(prod->factor_ptr(i));
    k_ = head.size() == 1 ? head[0] : std::make_shared<ProductComplex>(head);
    p1_ = prod->factor_ptr(arity - 1);

    const std::uint64_t stride = k_->vertex_count();
    for (VertexId v = 0; v < stride; ++v) {
        if (phi.vertex_fn(v) != lambda.vertex_fn(v))
            throw NotAHomotopy("phi(.,v0) differs from lambda");
        if (phi.vertex_fn(v + stride) != mu.vertex_fn(v))
            throw NotAHomotopy("phi(.,v1) differs from mu");
    }
    phi_ = induce_chain_map(std::move(phi));
}

Chain PrismHomotopy::apply(const Chain& c) const {
    if (c.is_zero()) {
        Chain out;
        out.degree = c.degree + 1;
        return out;
    }
    // s(c) = (-1)^deg(c) c (x) [v1,v0]; D = phi# after s.  The reversed unit
    // edge and the degree sign are exactly what make D d + d D = lambda# - mu#
    // come out with the classical boundary convention.
    Chain rev_edge;
    rev_edge.degree = 1;
    rev_edge.add(Face{0, 1}, -1);
    Chain arg = tensor(*k_, *p1_, c, rev_edge);
    if (c.degree % 2 != 0) arg = arg * -1;
    Chain out = phi_->apply(arg);
    if (out.is_zero()) out.degree = c.degree + 1;
    return out;
}

}  // namespace polytopal
