#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "ccx/bits.hpp"
#include "ccx/complex.hpp"
#include "ccx/constructions.hpp"
#include "ccx/errors.hpp"
#include "ccx/fixtures.hpp"
#include "ccx/graph.hpp"
#include "ccx/hypgraphs.hpp"

using namespace ccx;

namespace {

// Independent adjacency oracles straight from the vertex masks.
bool carriers_meet(const CubeComplex& x, int a, int b) {
  return carrier_mask(x, a).intersects(carrier_mask(x, b));
}

bool four_quarterspaces(const CubeComplex& x, int a, int b) {
  Bits fa = x.far_side(a), fb = x.far_side(b);
  return (fa & fb).any() && fa.minus(fb).any() && fb.minus(fa).any() &&
         (~fa).minus(fb).any();
}

}  // namespace

TEST_SUITE("hypgraphs") {
  TEST_CASE("contact and crossing adjacency match the mask oracles") {
    for (const char* name :
         {"tripod", "grid-2x3", "10gon-5squares", "wedge-squares", "rand-6", "rand-11"}) {
      CubeComplex x = fixture(name);
      HypGraph gamma = contact_graph(x);
      HypGraph delta = crossing_graph(x);
      CHECK(gamma.kind == HypKind::contact);
      CHECK(delta.kind == HypKind::crossing);
      REQUIRE(gamma.g.n() == x.num_walls());
      REQUIRE(delta.g.n() == x.num_walls());
      for (int a = 0; a < x.num_walls(); ++a) {
        CHECK(gamma.g.name(a) == x.wall_name(a));
        for (int b = a + 1; b < x.num_walls(); ++b) {
          CHECK(gamma.g.has_edge(a, b) == carriers_meet(x, a, b));
          CHECK(delta.g.has_edge(a, b) == four_quarterspaces(x, a, b));
          // crossing implies contact
          if (delta.g.has_edge(a, b)) CHECK(gamma.g.has_edge(a, b));
        }
      }
    }
  }

  TEST_CASE("contact graph of a connected complex is connected") {
    for (const char* name : {"tripod", "path-8", "wedge-square-tripod", "rand-9"}) {
      CHECK(contact_graph(fixture(name)).g.connected());
    }
  }

  TEST_CASE("tripod: contact K3, crossing edgeless") {
    CubeComplex t = fixture("tripod");
    CHECK(contact_graph(t).g.edge_count() == 3);
    CHECK(crossing_graph(t).g.edge_count() == 0);
    CHECK(dimension(t) == 1);
    CHECK(degree(t) == 3);
    CHECK(local_dimension(t) == 1);
  }

  TEST_CASE("grid-2x3: crossing K_{2,3}, contact join(K2, P3)") {
    CubeComplex g = fixture("grid-2x3");
    Graph delta = crossing_graph(g).g;
    Graph gamma = contact_graph(g).g;
    CHECK(find_isomorphism(delta, complete_bipartite(2, 3)).has_value());
    CHECK(find_isomorphism(gamma, graph_join(complete_graph(2), path_graph(3))).has_value());
    CHECK(dimension(g) == 2);
    CHECK(degree(g) == 4);
    CHECK(local_dimension(g) == 2);
  }

  TEST_CASE("tripod-x-segment: crossing K_{2,3}, contact join(K2, K3)") {
    CubeComplex p = fixture("tripod-x-segment");
    CHECK(p.num_walls() == 5);
    CHECK(p.num_vertices() == 12);
    Graph delta = crossing_graph(p).g;
    Graph gamma = contact_graph(p).g;
    CHECK(find_isomorphism(delta, complete_bipartite(2, 3)).has_value());
    CHECK(find_isomorphism(gamma, graph_join(complete_graph(2), complete_graph(3))).has_value());
    // same crossing graph as grid-2x3 but different contact graph
    CubeComplex g23 = fixture("grid-2x3");
    CHECK(find_isomorphism(delta, crossing_graph(g23).g).has_value());
    CHECK_FALSE(find_isomorphism(gamma, contact_graph(g23).g).has_value());
    CHECK_FALSE(find_isomorphism(skeleton(p), skeleton(g23)).has_value());
  }

  TEST_CASE("10gon-5squares: contact K5, crossing C5") {
    CubeComplex x = fixture("10gon-5squares");
    CHECK(find_isomorphism(contact_graph(x).g, complete_graph(5)).has_value());
    CHECK(find_isomorphism(crossing_graph(x).g, cycle_graph(5)).has_value());
    CHECK(dimension(x) == 2);
    CHECK(degree(x) == 5);
  }

  TEST_CASE("products join both hyperplane graphs") {
    CubeComplex a = fixture("tripod");
    CubeComplex b = path_complex(2);
    CubeComplex p = product(a, b);
    Graph expect_gamma = graph_join(contact_graph(a).g, contact_graph(b).g);
    Graph expect_delta = graph_join(crossing_graph(a).g, crossing_graph(b).g);
    CHECK(find_isomorphism(contact_graph(p).g, expect_gamma).has_value());
    CHECK(find_isomorphism(crossing_graph(p).g, expect_delta).has_value());
  }

  TEST_CASE("dimension equals local dimension on the whole corpus") {
    for (const auto& name : corpus_names()) {
      CubeComplex x = fixture(name);
      int d = dimension(x);
      CHECK(d == local_dimension(x));
      CHECK(degree(x) >= d);
    }
  }

  TEST_CASE("is_convex separates convex bands from L-shaped sets") {
    CubeComplex g = grid_complex(2, 2);  // 3x3 vertices
    auto coord = [&](int v, char axis) {
      int c = 0;
      for (int w = 0; w < g.num_walls(); ++w)
        if (g.wall_name(w)[0] == axis && g.vertex(v).get(w)) ++c;
      return c;
    };
    Bits band(g.num_vertices()), ell(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (coord(v, 'x') <= 1) band.set(v);                       // 2x3 subgrid
      if (coord(v, 'x') == 0 || coord(v, 'y') == 0) ell.set(v);  // L shape
    }
    CHECK(is_convex(g, band).convex);
    ConvexityResult r = is_convex(g, ell);
    CHECK_FALSE(r.convex);
    CHECK(r.wall_a >= 0);
    CHECK(r.wall_b >= 0);
    // carriers are convex, as used by the helly check
    for (int w = 0; w < g.num_walls(); ++w) CHECK(is_convex(g, carrier_mask(g, w)).convex);
    // a disconnected or empty set is invalid input
    Bits two_corners(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
      if (coord(v, 'x') + coord(v, 'y') == 4 || coord(v, 'x') + coord(v, 'y') == 0)
        two_corners.set(v);
    CHECK_THROWS_AS(is_convex(g, two_corners), invalid_input_error);
    CHECK_THROWS_AS(is_convex(g, Bits(g.num_vertices())), invalid_input_error);
  }

  TEST_CASE("helly: pairwise-meeting carriers share a vertex, disjoint pairs are reported") {
    CubeComplex g = fixture("10gon-5squares");
    std::vector<Bits> carriers;
    for (int w = 0; w < g.num_walls(); ++w) carriers.push_back(carrier_mask(g, w));
    HellyResult r = helly_check(g, carriers);
    REQUIRE(r.found());
    for (const Bits& c : carriers) CHECK(c.get(r.vertex));

    CubeComplex p = path_complex(4);
    std::vector<Bits> far_apart = {carrier_mask(p, 0), carrier_mask(p, 3)};
    HellyResult miss = helly_check(p, far_apart);
    CHECK_FALSE(miss.found());
    CHECK(miss.disjoint_a == 0);
    CHECK(miss.disjoint_b == 1);

    // non-convex members are invalid input: opposite corners of the square
    CubeComplex sq = fixture("square");
    Bits diag(sq.num_vertices());
    diag.set(sq.find_vertex(Bits::from_string("00")));
    diag.set(sq.find_vertex(Bits::from_string("11")));
    CHECK_THROWS_AS(helly_check(sq, {diag, ~Bits(sq.num_vertices())}), invalid_input_error);
  }

  TEST_CASE("inseparability of carrier families") {
    CubeComplex p = path_complex(3);
    // walls 0 and 1 osculate; no third wall separates them
    InseparabilityResult near = is_inseparable(p, {0, 1});
    CHECK(near.inseparable);
    // walls 0 and 2 are separated by wall 1
    InseparabilityResult far = is_inseparable(p, {0, 2});
    CHECK_FALSE(far.inseparable);
    CHECK(far.separator == 1);
    CHECK(far.member_a == 0);
    CHECK(far.member_b == 2);
  }

  TEST_CASE("facing triples: tripod has exactly its wall triple, grids none") {
    auto ft = facing_triples(fixture("tripod"));
    REQUIRE(ft.size() == 1);
    CHECK(ft[0] == std::array<int, 3>{0, 1, 2});
    CHECK(facing_triples(grid_complex(3, 3)).empty());
    CHECK(facing_triples(fixture("10gon-5squares")).empty());
    // two squares only offer triples containing a crossing pair, whose
    // carriers straddle each other
    CHECK(facing_triples(fixture("wedge-squares")).empty());
    // tripod legs plus one wall of a wedged square face each other
    auto wf = facing_triples(fixture("wedge-square-tripod"));
    CHECK(wf.size() == 7);
  }
}
