#include "polytopal/order_complex.hpp"

namespace polytopal {

OrderComplex order_complex(const Complex& base) {
    OrderComplex oc;
    oc.elements = base.all_faces();  // (dim, lex) order: ids respect the poset order
    const std::size_t m = oc.elements.size();
    for (std::size_t i = 0; i < m; ++i) oc.index.emplace(oc.elements[i], i);

    std::vector<Coords> verts(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Face& f = oc.elements[i];
        Coords bary(base.ambient_dim(), Rational(0));
        for (VertexId v : f) {
            Coords c = base.vertex_coords(v);
            for (std::size_t j = 0; j < bary.size(); ++j) bary[j] += c[j];
        }
        for (std::size_t j = 0; j < bary.size(); ++j) bary[j] /= Rational(f.size());
        verts[i] = std::move(bary);
    }

    // Comparability matrix on element ids (i < j in id order can only have
    // elements[i] included in elements[j]).
    std::vector<std::vector<char>> below(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (face_subset(oc.elements[i], oc.elements[j])) below[i][j] = 1;

    // All chains of the poset, as increasing id sequences.
    std::vector<Face> chains;
    std::vector<VertexId> cur;
    auto extend = [&](auto&& self, std::size_t last) -> void {
        chains.push_back(cur);
        for (std::size_t j = last + 1; j < m; ++j) {
            if (!below[last][j]) continue;
            cur.push_back(j);
            self(self, j);
            cur.pop_back();
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        cur.push_back(i);
        extend(extend, i);
        cur.pop_back();
    }

    oc.complex = make_simplicial(std::move(verts), chains);
    return oc;
}

}  // namespace polytopal
