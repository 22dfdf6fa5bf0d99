#pragma once

#include <string>
#include <vector>

#include "ccx/complex.hpp"

namespace ccx {

// Grid of A x B squares: (A+1)(B+1) vertices, walls x00.. / y00..
CubeComplex grid_complex(int a, int b);

// Path with N edges: N+1 vertices, walls e00..
CubeComplex path_complex(int n);

// Named example complexes:
//   tripod, square, path-N, grid-AxB, wedge-squares, wedge-square-tripod,
//   10gon-5squares, tripod-x-segment, rand-K (deterministic random duals).
CubeComplex fixture(const std::string& name);

// The frozen regression corpus (every name accepted by fixture()).
const std::vector<std::string>& corpus_names();

}  // namespace ccx
