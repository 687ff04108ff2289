#include "polytopal/json_io.hpp"

#include <algorithm>

#include "polytopal/linalg.hpp"
#include "polytopal/product.hpp"

namespace polytopal {

Json complex_to_json(const Complex& c) {
    if (auto* pc = dynamic_cast<const ProductComplex*>(&c)) {
        Json factors = Json::array();
        for (std::size_t i = 0; i < pc->arity(); ++i)
            factors.push_back(complex_to_json(pc->factor(i)));
        return Json{{"product", factors}};
    }
    Json verts = Json::array();
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
        Json coords = Json::array();
        for (const Rational& x : c.vertex_coords(v)) coords.push_back(rational_to_string(x));
        verts.push_back(coords);
    }
    Json faces = Json::array();
    for (const Face& f : c.all_faces()) faces.push_back(f);
    return Json{{"vertices", verts}, {"faces", faces}};
}

std::shared_ptr<const Complex> complex_from_json(const Json& j) {
    if (j.contains("product")) {
        std::vector<std::shared_ptr<const Complex>> factors;
        for (const Json& f : j.at("product")) factors.push_back(complex_from_json(f));
        return std::make_shared<ProductComplex>(std::move(factors));
    }
    std::vector<Coords> verts;
    for (const Json& row : j.at("vertices")) {
        Coords c;
        for (const Json& x : row)
            c.push_back(x.is_string() ? parse_rational(x.get<std::string>())
                                      : Rational(x.get<long long>()));
        verts.push_back(std::move(c));
    }
    std::vector<Face> faces;
    for (const Json& f : j.at("faces")) faces.push_back(sorted_face(f.get<std::vector<VertexId>>()));

    // The face list determines the lattice: in a valid complex the subfaces of
    // a face are exactly the member subsets, so the facets are the member
    // subsets of codimension one (dimensions from the realization).
    auto dim_of = [&](const Face& f) {
        std::vector<Coords> pts;
        for (VertexId v : f) pts.push_back(verts.at(v));
        return affine_rank(pts);
    };
    std::vector<std::pair<Face, std::vector<Face>>> lattice;
    for (const Face& f : faces) {
        const int d = dim_of(f);
        std::vector<Face> facets;
        for (const Face& g : faces)
            if (g.size() < f.size() && face_subset(g, f) && dim_of(g) == d - 1)
                facets.push_back(g);
        lattice.emplace_back(f, std::move(facets));
    }
    return std::make_shared<ExplicitComplex>(std::move(verts), std::move(lattice));
}

Json chain_to_json(const Chain& c) {
    Json out = Json::array();
    for (auto& [f, k] : c.terms) out.push_back(Json{{"face", f}, {"coeff", k}});
    return out;
}

Chain chain_from_json(const Json& j, const Complex& home) {
    Chain out;
    for (const Json& term : j) {
        Face f = sorted_face(term.at("face").get<std::vector<VertexId>>());
        if (!home.contains(f)) throw std::invalid_argument("chain face not in the complex");
        out.degree = home.face_dim(f);
        out.add(f, term.at("coeff").get<std::int64_t>());
    }
    return out;
}

Json map_to_json(const PolytopalMap& m) {
    Json pairs = Json::array();
    for (VertexId v = 0; v < m.source->vertex_count(); ++v)
        pairs.push_back(Json::array({v, m.vertex_fn(v)}));
    return Json{{"vertex_map", pairs}};
}

Json splitting_to_json(const Splitting& s) {
    Json cuts = Json::array();
    Json owners = Json::array();
    for (std::size_t i = 0; i < s.segments.size(); ++i) {
        owners.push_back(s.segments[i].owner);
        if (i + 1 < s.segments.size()) cuts.push_back(s.segments[i].end);
    }
    return Json{{"cuts", cuts}, {"owners", owners}};
}

Splitting splitting_from_json(const Json& j, int n, int q) {
    std::vector<int> cuts = j.at("cuts").get<std::vector<int>>();
    std::vector<int> owners = j.at("owners").get<std::vector<int>>();
    for (int c : cuts)
        if (c < 0 || c > n) throw std::invalid_argument("cut position out of range");
    if (!std::is_sorted(cuts.begin(), cuts.end()))
        throw std::invalid_argument("cuts must be sorted");
    return Splitting::from_cuts_owners(n, q, cuts, owners);
}

Json split_report_to_json(const SplitReport& rep, const Necklace& nk, int q) {
    Json counts = Json::object();
    for (int i = 0; i < nk.t; ++i) {
        Json row = Json::array();
        for (int r = 0; r < q; ++r) row.push_back(rep.counts[i][r]);
        counts[std::string(1, nk.labels[i])] = row;
    }
    Json unfair = Json::array();
    for (auto& [type, thief] : rep.unfair)
        unfair.push_back(Json{{"type", std::string(1, nk.labels[type])}, {"thief", thief}});
    return Json{{"fair", rep.fair()},          {"within_budget", rep.within_budget},
                {"covers", rep.covers},        {"interior_cuts", rep.interior_cut_count},
                {"cut_budget", nk.t * (q - 1)}, {"counts", counts},
                {"unfair", unfair},            {"ok", rep.ok()}};
}

Json pairing_report_to_json(const PairingReport& rep) {
    Json rungs = Json::array();
    for (const PairingRung& r : rep.rungs)
        rungs.push_back(Json{{"l", r.l},
                             {"kind", r.even ? "even" : "odd"},
                             {"degree", r.degree},
                             {"residue", r.residue},
                             {"expected", r.expected},
                             {"ok", r.ok}});
    return Json{{"n", rep.n},
                {"types", rep.t},
                {"prime", rep.p},
                {"rungs", rungs},
                {"final_residue", rep.final_residue},
                {"top_nonzero", rep.top_nonzero},
                {"witness_faces", rep.witness_faces},
                {"wall_ms", rep.wall_ms},
                {"ok", rep.ok()}};
}

Necklace necklace_from_arg(const std::string& arg) {
    std::string trimmed = arg;
    auto first = trimmed.find_first_not_of(" \t\n");
    if (first != std::string::npos && trimmed[first] == '{') {
        Json j = Json::parse(trimmed);
        std::string beads;
        for (const Json& b : j.at("beads")) {
            std::string s = b.get<std::string>();
            if (s.size() != 1) throw std::invalid_argument("bead labels must be single letters");
            beads += s;
        }
        return Necklace::from_string(beads);
    }
    return Necklace::from_string(arg);
}

}  // namespace polytopal
