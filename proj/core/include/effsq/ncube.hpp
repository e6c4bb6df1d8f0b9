#pragma once

#include <memory>

#include "effsq/cube.hpp"

namespace effsq {

// Recursive n-dimensional commuting diagram: a 1-cube is a Hom, an n-cube
// is a morphism between two (n-1)-cubes given by one connecting Hom per
// vertex (a natural transformation). Vertices and edges carry structural
// indices: src vertices first, then dst vertices, edges likewise with the
// connecting layer last.
class NCube {
public:
    NCube() = default;

    std::size_t dim() const { return dim_; }
    const Hom& arrow() const { return arrow_; } // dim 1 only
    const NCube& src() const { return *src_; }  // dim >= 2
    const NCube& dst() const { return *dst_; }
    const std::vector<Hom>& connect() const { return connect_; }

    std::size_t vertex_count() const { return std::size_t(1) << dim_; }
    const FpAbGroup& vertex(std::size_t i) const;

    struct Edge {
        std::size_t tail;
        std::size_t head;
        Hom hom;
    };
    std::vector<Edge> edges() const;

    friend NCube make_ncube(Hom arrow);
    friend NCube make_ncube(NCube src, NCube dst, std::vector<Hom> connect);

private:
    std::size_t dim_ = 0;
    Hom arrow_;
    std::shared_ptr<const NCube> src_, dst_;
    std::vector<Hom> connect_;
};

NCube make_ncube(Hom arrow);
// Validates matching dimensions, connector endpoints, and naturality of
// the connecting layer over every structural edge.
NCube make_ncube(NCube src, NCube dst, std::vector<Hom> connect);

bool ncube_equal(const NCube& x, const NCube& y);

NCube ncube_from_square(const Square& sq);
Square square_from_ncube(const NCube& c); // dim 2
NCube ncube_from_cube(const Cube& cu);    // dim 3

// The four faces that must be independent one level down (dim >= 2;
// bottom and top are src and dst themselves).
NCube front_face(const NCube& c);
NCube rear_face(const NCube& c);

// Reflection swapping the src/dst axis with the front/rear axis.
NCube transpose_ncube(const NCube& c);

// Composition of n-cubes as morphisms of (n-1)-cubes (vertexwise).
NCube compose_ncube(const NCube& second, const NCube& first);
// Pasting in square orientation: right.src must equal left.dst.
NCube hcompose_ncube(const NCube& left, const NCube& right);
// Vertical pasting via transposes: front(top) must equal rear(bottom).
NCube vcompose_ncube(const NCube& bottom, const NCube& top);

// Completes a span of (n-1)-cubes sharing their source by componentwise
// pushout; the result is the canonical independent n-cube over the span.
NCube complete_ncube_span(const NCube& e1, const NCube& e2);

// The derived (n-1)-cube of Thm-style effectiveness: for dim 3 the square
// of induced maps from the side pushouts, for dim >= 4 computed by
// applying the dim-3 construction componentwise one dimension down.
NCube derived_ncube(const NCube& c);

// Recursive n-dimensional independence: dim 1 is class membership, dim 2
// is square effectiveness, dim >= 3 requires the four faces independent
// one level down plus the derived cube independent one level down.
Verdict ncube_independent(std::size_t n, const NCube& c, const MorphismClass& m,
                          std::size_t max_dim = 4);

struct NCubeAmalgamResult {
    Verdict verdict;
    NCube amalgam_corner; // the E-cube
};

// Uniqueness-with-amalgam at cube level: both completions of the span
// (e1, e2) are pushed out along their induced morphisms; legs must agree
// on both sides and the outer completion must be independent.
NCubeAmalgamResult ncube_amalgamate(const NCube& e1, const NCube& e2, const NCube& comp1,
                                    const NCube& comp2, const MorphismClass& m,
                                    std::size_t max_dim = 4);

// Per-dimension scorecard for existence, symmetry, pasting, and
// uniqueness at n = 2..max_n. Dimension 4 runs with smoke quotas
// (at most 25 trials).
Report excellence_probe(std::size_t max_n, const MorphismClass& m, const GeneratorConfig& cfg);

} // namespace effsq
