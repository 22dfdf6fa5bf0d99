#pragma once

#include <cstdint>
#include <string>

#include "ccx/complex.hpp"
#include "ccx/graph.hpp"

namespace ccx {

// Cartesian product of complexes: walls are the disjoint union (names must
// not collide), vertices all concatenated pairs.
CubeComplex product(const CubeComplex& a, const CubeComplex& b);

// One-point union at the two base 0-cubes. Wall names must not collide.
CubeComplex wedge(const CubeComplex& a, const CubeComplex& b);

// A complex whose crossing graph is isomorphic to the given simple graph.
// Per connected component, every vertex is inflated into deg+2 wallspace
// elements with a matching edge per graph edge; a single-vertex component
// becomes one 1-cube; components are wedged at their base 0-cubes.
CubeComplex realize_crossing_graph(const Graph& d, int max_vertices = kDefaultVertexCap);

// Adds, for every osculating wall pair and every 0-cube where they touch,
// the opposite corner of the missing square, then re-cubulates the enlarged
// vertex set. The result's crossing graph equals the input's contact graph.
CubeComplex recubulate(const CubeComplex& x, int max_vertices = kDefaultVertexCap);

// Deterministic corpus generator. Kinds:
//   grid             params "A,B" (squares per side)
//   tree             params "K" (star with K edges), "random,M" (M edges,
//                    seeded), or a full degree sequence "3,1,1,1"
//   wedge            params "NAME1,NAME2" (fixture names; walls prefixed)
//   random-wallspace params "ELEMENTS,WALLS"; duplicate or one-sided walls
//                    are filtered out before cubulating
//   fixture          params = fixture name (see fixtures.hpp)
CubeComplex generate(const std::string& kind, const std::string& params, std::uint64_t seed,
                     int max_vertices = kDefaultVertexCap);

}  // namespace ccx
