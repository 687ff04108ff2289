#include "polytopal/complex.hpp"

#include <algorithm>
#include <map>

#include "polytopal/linalg.hpp"

namespace polytopal {

bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_intersection(const Face& a, const Face& b) {
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face sorted_face(std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::vector<Coords> Complex::coords_of(const std::vector<VertexId>& vs) const {
    std::vector<Coords> out;
    out.reserve(vs.size());
    for (VertexId v : vs) out.push_back(vertex_coords(v));
    return out;
}

std::vector<VertexId> Complex::reference_frame(const Face& f) const {
    // Greedy over sorted vertices = lexicographically first affinely
    // independent tuple (affine independence is a matroid).
    AffineRankTracker tracker(ambient_dim());
    std::vector<VertexId> frame;
    const int want = face_dim(f) + 1;
    for (VertexId v : f) {
        if (tracker.try_add(vertex_coords(v))) {
            frame.push_back(v);
            if (static_cast<int>(frame.size()) == want) break;
        }
    }
    return frame;
}

std::vector<BoundaryTerm> Complex::boundary_of(const Face& f) const {
    std::vector<BoundaryTerm> out;
    if (face_dim(f) == 0) return out;
    const std::vector<VertexId> frame = reference_frame(f);
    const std::vector<Coords> frame_coords = coords_of(frame);
    for (const Face& facet : facets_of(f)) {
        // Induced orientation: prepend a vertex of f\facet to the facet's
        // positive frame and evaluate against f's orientation.  Any choice of
        // the extra vertex gives the same sign (all of f\facet lies strictly
        // on one side of the facet's supporting hyperplane).
        VertexId z = 0;
        for (VertexId v : f)
            if (!std::binary_search(facet.begin(), facet.end(), v)) {
                z = v;
                break;
            }
        std::vector<VertexId> tuple;
        tuple.push_back(z);
        for (VertexId v : reference_frame(facet)) tuple.push_back(v);
        int s = sign_in_frame(frame_coords, coords_of(tuple));
        out.push_back(BoundaryTerm{facet, s});
    }
    return out;
}

// ---- ExplicitComplex --------------------------------------------------------

ExplicitComplex::ExplicitComplex(std::vector<Coords> vertices,
                                 std::vector<std::pair<Face, std::vector<Face>>> lattice)
    : verts_(std::move(vertices)) {
    ambient_ = verts_.empty() ? 0 : verts_[0].size();
    for (auto& [face, facets] : lattice) {
        Info info;
        info.facets = std::move(facets);
        std::vector<Coords> pts;
        bool ok = true;
        for (VertexId v : face) {
            if (v >= verts_.size()) {
                ok = false;
                break;
            }
            pts.push_back(verts_[v]);
        }
        info.dim = ok ? affine_rank(pts) : static_cast<int>(face.size()) - 1;
        dim_ = std::max(dim_, info.dim);
        infos_.emplace(face, std::move(info));
        ordered_.push_back(face);
    }
    std::sort(ordered_.begin(), ordered_.end(), [this](const Face& a, const Face& b) {
        int da = infos_.at(a).dim, db = infos_.at(b).dim;
        return da != db ? da < db : a < b;
    });
    // Precompute frames and boundary signs (immutability buys thread safety).
    for (const Face& f : ordered_) {
        Info& info = infos_.at(f);
        info.frame = Complex::reference_frame(f);
    }
    for (const Face& f : ordered_) {
        Info& info = infos_.at(f);
        if (info.dim == 0) continue;
        const std::vector<Coords> frame_coords = coords_of(info.frame);
        for (const Face& facet : info.facets) {
            auto it = infos_.find(facet);
            if (it == infos_.end()) continue;  // broken lattice; validate() reports
            VertexId z = 0;
            for (VertexId v : f)
                if (!std::binary_search(facet.begin(), facet.end(), v)) {
                    z = v;
                    break;
                }
            std::vector<VertexId> tuple;
            tuple.push_back(z);
            for (VertexId v : it->second.frame) tuple.push_back(v);
            info.boundary.push_back(BoundaryTerm{facet, sign_in_frame(frame_coords, coords_of(tuple))});
        }
    }
}

const ExplicitComplex::Info& ExplicitComplex::info(const Face& f) const {
    auto it = infos_.find(f);
    if (it == infos_.end()) throw std::invalid_argument("face not in complex");
    return it->second;
}

Coords ExplicitComplex::vertex_coords(VertexId v) const {
    if (v >= verts_.size()) throw std::invalid_argument("unknown vertex id");
    return verts_[v];
}

int ExplicitComplex::face_dim(const Face& f) const { return info(f).dim; }

std::vector<Face> ExplicitComplex::facets_of(const Face& f) const { return info(f).facets; }

std::optional<Face> ExplicitComplex::minimal_face_containing(const Face& s) const {
    const Face* best = nullptr;
    for (const Face& f : ordered_) {  // ordered by (dim, lex): first hit is minimal
        if (face_subset(s, f)) {
            best = &f;
            break;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

std::vector<Face> ExplicitComplex::all_faces() const { return ordered_; }

std::vector<VertexId> ExplicitComplex::reference_frame(const Face& f) const { return info(f).frame; }

std::vector<BoundaryTerm> ExplicitComplex::boundary_of(const Face& f) const { return info(f).boundary; }

// ---- SubComplex -------------------------------------------------------------

std::shared_ptr<SubComplex> SubComplex::materialized(std::shared_ptr<const Complex> parent,
                                                     const std::function<bool(const Face&)>& keep) {
    auto sc = std::shared_ptr<SubComplex>(new SubComplex());
    sc->parent_ = std::move(parent);
    sc->materialized_ = true;
    for (const Face& f : sc->parent_->all_faces()) {
        if (!keep(f)) continue;
        sc->kept_.insert(f);
        sc->ordered_.push_back(f);
        sc->dim_ = std::max(sc->dim_, sc->parent_->face_dim(f));
    }
    for (const Face& f : sc->ordered_)
        for (const Face& facet : sc->parent_->facets_of(f))
            if (!sc->kept_.count(facet))
                throw NotClosed("kept face has a dropped subface");
    return sc;
}

std::shared_ptr<SubComplex> SubComplex::predicate(std::shared_ptr<const Complex> parent,
                                                  std::function<bool(const Face&)> keep, int dim) {
    auto sc = std::shared_ptr<SubComplex>(new SubComplex());
    sc->parent_ = std::move(parent);
    sc->keep_ = std::move(keep);
    sc->dim_ = dim;
    return sc;
}

std::uint64_t SubComplex::face_count() const {
    if (materialized_) return kept_.size();
    std::uint64_t n = 0;
    for (const Face& f : parent_->all_faces())
        if (keep_(f)) ++n;
    return n;
}

bool SubComplex::contains(const Face& f) const {
    if (materialized_) return kept_.count(f) != 0;
    return parent_->contains(f) && keep_(f);
}

std::optional<Face> SubComplex::minimal_face_containing(const Face& s) const {
    // Downward closure: if the parent's minimal containing face is dropped,
    // every kept superface would force it back in, so there is none.
    auto mf = parent_->minimal_face_containing(s);
    if (!mf || !contains(*mf)) return std::nullopt;
    return mf;
}

std::vector<Face> SubComplex::all_faces() const {
    if (materialized_) return ordered_;
    std::vector<Face> out;
    for (const Face& f : parent_->all_faces())
        if (keep_(f)) out.push_back(f);
    return out;
}

std::shared_ptr<SubComplex> subcomplex(std::shared_ptr<const Complex> parent,
                                       const std::function<bool(const Face&)>& keep) {
    return SubComplex::materialized(std::move(parent), keep);
}

// ---- constructors -----------------------------------------------------------

std::shared_ptr<ExplicitComplex> make_simplex(int d) {
    if (d < 0) throw std::invalid_argument("make_simplex: d must be >= 0");
    std::vector<Coords> verts(d + 1, Coords(d + 1, Rational(0)));
    for (int i = 0; i <= d; ++i) verts[i][i] = 1;
    std::vector<std::pair<Face, std::vector<Face>>> lattice;
    for (std::uint64_t mask = 1; mask < (1ull << (d + 1)); ++mask) {
        Face f;
        for (int i = 0; i <= d; ++i)
            if (mask & (1ull << i)) f.push_back(i);
        std::vector<Face> facets;
        if (f.size() > 1) {
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face g = f;
                g.erase(g.begin() + drop);
                facets.push_back(std::move(g));
            }
        }
        lattice.emplace_back(std::move(f), std::move(facets));
    }
    return std::make_shared<ExplicitComplex>(std::move(verts), std::move(lattice));
}

std::shared_ptr<ExplicitComplex> make_cube(int d) {
    if (d < 0) throw std::invalid_argument("make_cube: d must be >= 0");
    const std::uint64_t nv = 1ull << d;
    std::vector<Coords> verts(nv, Coords(d));
    for (std::uint64_t v = 0; v < nv; ++v)
        for (int i = 0; i < d; ++i) verts[v][i] = (v >> i) & 1;

    // Subcube = (free coordinate set, base values on the frozen ones).
    auto subcube_vertices = [d](std::uint64_t free, std::uint64_t base) {
        Face f;
        std::vector<int> free_bits;
        for (int i = 0; i < d; ++i)
            if (free & (1ull << i)) free_bits.push_back(i);
        for (std::uint64_t m = 0; m < (1ull << free_bits.size()); ++m) {
            std::uint64_t v = base;
            for (std::size_t j = 0; j < free_bits.size(); ++j)
                if (m & (1ull << j)) v |= 1ull << free_bits[j];
            f.push_back(v);
        }
        std::sort(f.begin(), f.end());
        return f;
    };

    std::vector<std::pair<Face, std::vector<Face>>> lattice;
    for (std::uint64_t free = 0; free < (1ull << d); ++free) {
        std::uint64_t frozen = ((1ull << d) - 1) & ~free;
        // Iterate over base values on frozen coordinates.
        std::uint64_t base = 0;
        while (true) {
            Face f = subcube_vertices(free, base);
            std::vector<Face> facets;
            for (int i = 0; i < d; ++i) {
                if (!(free & (1ull << i))) continue;
                facets.push_back(subcube_vertices(free & ~(1ull << i), base));
                facets.push_back(subcube_vertices(free & ~(1ull << i), base | (1ull << i)));
            }
            lattice.emplace_back(std::move(f), std::move(facets));
            // next base within frozen mask
            if (frozen == 0) break;
            base = (base - frozen) & frozen;
            if (base == 0) break;
        }
    }
    return std::make_shared<ExplicitComplex>(std::move(verts), std::move(lattice));
}

std::shared_ptr<ExplicitComplex> make_path(int n) {
    if (n < 0) throw std::invalid_argument("make_path: n must be >= 0");
    std::vector<Coords> verts(n + 1, Coords(1));
    for (int k = 0; k <= n; ++k) verts[k][0] = k;
    std::vector<std::pair<Face, std::vector<Face>>> lattice;
    for (int k = 0; k <= n; ++k) lattice.push_back({Face{static_cast<VertexId>(k)}, {}});
    for (int k = 0; k < n; ++k)
        lattice.push_back({Face{static_cast<VertexId>(k), static_cast<VertexId>(k + 1)},
                           {Face{static_cast<VertexId>(k)}, Face{static_cast<VertexId>(k + 1)}}});
    return std::make_shared<ExplicitComplex>(std::move(verts), std::move(lattice));
}

std::shared_ptr<ExplicitComplex> make_simplicial(std::vector<Coords> vertices,
                                                 const std::vector<Face>& faces) {
    std::unordered_set<Face, FaceHash> closure;
    // Downward closure: all nonempty subsets of each given face.
    for (const Face& f : faces) {
        const std::size_t k = f.size();
        for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
            Face g;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ull << i)) g.push_back(f[i]);
            closure.insert(std::move(g));
        }
    }
    std::vector<std::pair<Face, std::vector<Face>>> lattice;
    for (const Face& f : closure) {
        std::vector<Face> facets;
        if (f.size() > 1)
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face g = f;
                g.erase(g.begin() + drop);
                facets.push_back(std::move(g));
            }
        lattice.emplace_back(f, std::move(facets));
    }
    return std::make_shared<ExplicitComplex>(std::move(vertices), std::move(lattice));
}

// ---- validation -------------------------------------------------------------

std::string Violation::describe() const {
    auto face_str = [](const Face& f) {
        std::string s = "{";
        for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
        return s + "}";
    };
    switch (kind) {
        case IntersectionNotAFace:
            return "intersection of " + face_str(a) + " and " + face_str(b) + " is not a face";
        case MissingSubface:
            return "facet " + face_str(b) + " of " + face_str(a) + " is not in the complex";
        case WrongFacetDim:
            return "facet " + face_str(b) + " of " + face_str(a) + " has wrong dimension";
        case BadSpanDim:
            return "face " + face_str(a) + " does not span its declared dimension";
        case DegenerateSupports:
            return "faces " + face_str(a) + " and " + face_str(b) + " share a supporting subspace";
        case UnknownVertex:
            return "face " + face_str(a) + " uses an unknown vertex";
    }
    return "unknown violation";
}

std::vector<Violation> validate(const Complex& c) {
    std::vector<Violation> out;
    const std::vector<Face> faces = c.all_faces();
    std::unordered_set<Face, FaceHash> member(faces.begin(), faces.end());

    for (const Face& f : faces) {
        bool vertices_ok = true;
        for (VertexId v : f)
            if (v >= c.vertex_count()) {
                out.push_back({Violation::UnknownVertex, f, {}});
                vertices_ok = false;
                break;
            }
        if (!vertices_ok) continue;

        const int d = c.face_dim(f);
        if (affine_rank(c.coords_of(f)) != d || static_cast<int>(f.size()) < d + 1)
            out.push_back({Violation::BadSpanDim, f, {}});

        for (const Face& facet : c.facets_of(f)) {
            if (!member.count(facet)) {
                out.push_back({Violation::MissingSubface, f, facet});
                continue;
            }
            if (c.face_dim(facet) != d - 1) out.push_back({Violation::WrongFacetDim, f, facet});
        }
    }

    // Intersection closure (pairwise; desk scale).
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            Face inter = face_intersection(faces[i], faces[j]);
            if (!inter.empty() && !member.count(inter))
                out.push_back({Violation::IntersectionNotAFace, faces[i], faces[j]});
        }

    // No degeneracy inside each polytope: distinct subfaces of a common face
    // with equal dimension must have distinct affine supports.
    for (const Face& top : faces) {
        // collect subfaces via the facet relation
        std::vector<Face> subs{top};
        std::unordered_set<Face, FaceHash> seen{top};
        for (std::size_t k = 0; k < subs.size(); ++k) {
            if (!member.count(subs[k])) continue;
            for (const Face& g : c.facets_of(subs[k]))
                if (seen.insert(g).second) subs.push_back(g);
        }
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i + 1; j < subs.size(); ++j) {
                if (!member.count(subs[i]) || !member.count(subs[j])) continue;
                if (c.face_dim(subs[i]) != c.face_dim(subs[j])) continue;
                const int d = c.face_dim(subs[i]);
                std::vector<Coords> both = c.coords_of(subs[i]);
                for (const Coords& p : c.coords_of(subs[j])) both.push_back(p);
                if (affine_rank(both) == d)
                    out.push_back({Violation::DegenerateSupports, subs[i], subs[j]});
            }
    }
    return out;
}

}  // namespace polytopal
