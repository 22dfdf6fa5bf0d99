#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/constructions.hpp"
#include "ccx/errors.hpp"
#include "ccx/fixtures.hpp"
#include "ccx/graph.hpp"
#include "ccx/hypgraphs.hpp"
#include "ccx/io.hpp"

using namespace ccx;

TEST_SUITE("constructions") {
  TEST_CASE("product multiplies vertex sets and concatenates walls") {
    CubeComplex e1 = CubeComplex::from_vertices(
        {"a"}, {Bits::from_string("0"), Bits::from_string("1")});
    CubeComplex e2 = CubeComplex::from_vertices(
        {"b"}, {Bits::from_string("0"), Bits::from_string("1")});
    CubeComplex sq = product(e1, e2);
    CHECK(sq.num_vertices() == 4);
    CHECK(sq.num_walls() == 2);

    CubeComplex t = fixture("tripod");
    CubeComplex p = product(t, path_complex(2));
    CHECK(p.num_vertices() == t.num_vertices() * 3);
    CHECK(p.num_walls() == 5);
    // distances add coordinatewise: diameter = diam(tripod) + diam(path)
    int diam = 0;
    for (int u = 0; u < p.num_vertices(); ++u)
      for (int v = 0; v < p.num_vertices(); ++v) diam = std::max(diam, p.distance(u, v));
    CHECK(diam == 2 + 2);
    // wall name collision is rejected
    CHECK_THROWS_AS(product(fixture("square"), fixture("square")), invalid_input_error);
  }

  TEST_CASE("wedge glues at the base points") {
    CubeComplex w = generate("wedge", "square,square", 0);
    CHECK(w.num_vertices() == 7);  // 4 + 4 - 1
    CHECK(w.num_walls() == 4);
    std::set<std::string> names(w.wall_names().begin(), w.wall_names().end());
    CHECK(names == std::set<std::string>{"a.x00", "a.y00", "b.x00", "b.y00"});
    // wedge keeps both pieces intact: degree of the hub is 4
    Graph sk = skeleton(w);
    int hub = 0;  // base vertex
    CHECK(sk.degree(hub) == 4);
    CHECK(wedge(fixture("tripod"), path_complex(3)).num_vertices() == 4 + 4 - 1);
  }

  TEST_CASE("grid and path fixtures have the advertised shape") {
    CubeComplex g = grid_complex(2, 3);
    CHECK(g.num_vertices() == 12);
    CHECK(g.num_walls() == 5);
    CubeComplex p = path_complex(8);
    CHECK(p.num_vertices() == 9);
    CHECK(p.num_walls() == 8);
    // degenerate sides collapse to lower-dimensional complexes
    CHECK(grid_complex(0, 2).num_vertices() == 3);
    CHECK(grid_complex(0, 2).num_walls() == 2);
    CHECK(path_complex(0).num_vertices() == 1);
    CHECK(path_complex(0).num_walls() == 0);
    CHECK_THROWS_AS(grid_complex(-1, 2), invalid_input_error);
    CHECK_THROWS_AS(grid_complex(61, 1), invalid_input_error);
    CHECK_THROWS_AS(path_complex(-1), invalid_input_error);
    CHECK_THROWS_AS(path_complex(4001), invalid_input_error);
  }

  TEST_CASE("realize_crossing_graph inverts crossing_graph on small graphs") {
    // a path: two squares sharing an edge
    Graph p3 = path_graph(3);
    CubeComplex rp = realize_crossing_graph(p3);
    CHECK(rp.num_vertices() == 6);
    CHECK(find_isomorphism(crossing_graph(rp).g, p3).has_value());

    // an edge: one square
    CubeComplex rk2 = realize_crossing_graph(complete_graph(2));
    CHECK(rk2.num_vertices() == 4);
    CHECK(rk2.num_walls() == 2);

    // a single vertex: one segment
    CubeComplex r1 = realize_crossing_graph(Graph(1));
    CHECK(r1.num_vertices() == 2);
    CHECK(r1.num_walls() == 1);

    // the empty graph: a single point
    CubeComplex r0 = realize_crossing_graph(Graph(0));
    CHECK(r0.num_vertices() == 1);
    CHECK(r0.num_walls() == 0);

    // a disconnected graph: wedge of the pieces
    CubeComplex r2 = realize_crossing_graph(Graph(2));
    CHECK(r2.num_walls() == 2);
    CHECK(r2.num_vertices() == 3);
    CHECK(crossing_graph(r2).g.edge_count() == 0);

    for (const Graph& g : {cycle_graph(5), complete_graph(4), complete_bipartite(2, 3),
                           cycle_graph(6), path_graph(5)}) {
      CubeComplex r = realize_crossing_graph(g);
      CHECK(find_isomorphism(crossing_graph(r).g, g).has_value());
    }
  }

  TEST_CASE("realize_crossing_graph validates names and honors the cap") {
    Graph dup(std::vector<std::string>{"w", "w"});
    CHECK_THROWS_AS(realize_crossing_graph(dup), invalid_input_error);
    CHECK_THROWS_AS(realize_crossing_graph(complete_graph(10), 50), resource_limit_error);
  }

  TEST_CASE("recubulate completes osculations into squares") {
    // two osculating walls become a crossing pair: the 3-vertex path fills
    // into a square
    CubeComplex path2 = path_complex(2);
    CubeComplex filled = recubulate(path2);
    CHECK(filled.num_vertices() == 4);
    CHECK(crossing_graph(filled).g.edge_count() == 1);
    CHECK(find_isomorphism(crossing_graph(filled).g, contact_graph(path2).g).has_value());

    // the tripod fills into the 3-cube
    CubeComplex t3 = recubulate(fixture("tripod"));
    CHECK(t3.num_vertices() == 8);
    CHECK(dimension(t3) == 3);
    CHECK(find_isomorphism(crossing_graph(t3).g, complete_graph(3)).has_value());

    // a complex without osculations is unchanged
    CubeComplex sq = fixture("square");
    CHECK(io::serialize_complex(recubulate(sq)) == io::serialize_complex(sq));
    CHECK(recubulate(CubeComplex::from_vertices({}, {Bits(0)})).num_vertices() == 1);

    // wall names survive
    CubeComplex rt = recubulate(fixture("tripod"));
    std::set<std::string> names(rt.wall_names().begin(), rt.wall_names().end());
    CHECK(names == std::set<std::string>{"l0", "l1", "l2"});
  }

  TEST_CASE("generate covers every kind deterministically") {
    CHECK(io::serialize_complex(generate("grid", "2,3", 0)) ==
          io::serialize_complex(grid_complex(2, 3)));
    CHECK(io::serialize_complex(generate("fixture", "10gon-5squares", 0)) ==
          io::serialize_complex(fixture("10gon-5squares")));

    // tree kinds: star, random, explicit degree sequence
    CubeComplex star = generate("tree", "4", 0);
    CHECK(star.num_vertices() == 5);
    CHECK(star.num_walls() == 4);
    CHECK(degree(star) == 4);
    CHECK(dimension(star) == 1);

    CubeComplex rt1 = generate("tree", "random,9", 7);  // 9 random edges
    CubeComplex rt2 = generate("tree", "random,9", 7);
    CHECK(io::serialize_complex(rt1) == io::serialize_complex(rt2));
    CHECK(rt1.num_vertices() == 10);
    CHECK(rt1.num_walls() == 9);
    CHECK(io::serialize_complex(generate("tree", "random,9", 8)) !=
          io::serialize_complex(rt1));

    CubeComplex path_tree = generate("tree", "1,2,2,1", 0);
    CHECK(path_tree.num_vertices() == 4);
    CHECK(degree(path_tree) == 2);

    // random wallspace duals are reproducible per seed
    CubeComplex rw1 = generate("random-wallspace", "8,5", 42);
    CubeComplex rw2 = generate("random-wallspace", "8,5", 42);
    CHECK(io::serialize_complex(rw1) == io::serialize_complex(rw2));
    CHECK(rw1.num_walls() <= 5);
    CHECK(rw1.num_walls() >= 1);

    CubeComplex wg = generate("wedge", "tripod,grid-1x2", 0);
    CHECK(wg.num_vertices() == 4 + 6 - 1);
  }

  TEST_CASE("generate rejects malformed requests") {
    CHECK_THROWS_AS(generate("borromean", "1", 0), invalid_input_error);
    CHECK_THROWS_AS(generate("grid", "2", 0), invalid_input_error);
    CHECK_THROWS_AS(generate("grid", "2,x", 0), invalid_input_error);
    CHECK_THROWS_AS(generate("tree", "1,1,1", 0), invalid_input_error);  // degree sum off
    CHECK_THROWS_AS(generate("wedge", "nosuch,square", 0), invalid_input_error);
    CHECK_THROWS_AS(generate("fixture", "nosuch", 0), invalid_input_error);
    CHECK_THROWS_AS(fixture("path-abc"), invalid_input_error);
    CHECK_THROWS_AS(fixture("rand-"), invalid_input_error);
    CHECK_THROWS_AS(fixture("grid-2"), invalid_input_error);
    // parameterized families extend beyond the corpus list on purpose,
    // including degenerate sides
    CHECK(fixture("path-12").num_walls() == 12);
    CHECK(fixture("path-0").num_vertices() == 1);
    CHECK(fixture("grid-0x9").num_vertices() == 10);
  }

  TEST_CASE("the corpus enumerates 72 named complexes, all loadable") {
    const auto& names = corpus_names();
    CHECK(names.size() == 72);
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == 72);
    for (const auto& name : names) {
      CubeComplex x = fixture(name);
      CHECK(x.num_vertices() >= 1);
      CHECK(x.num_vertices() <= 2000);
    }
  }

  TEST_CASE("random fixtures are frozen: spot-check shapes stay stable") {
    // tripwire against accidental recipe changes — these values were read
    // off the first successful generation and must never drift
    CubeComplex r0 = fixture("rand-0");
    CubeComplex r1 = fixture("rand-1");
    CHECK(io::serialize_complex(r0) == io::serialize_complex(fixture("rand-0")));
    CHECK(r0.num_walls() >= 6);
    CHECK(r1.num_walls() >= 6);
  }
}
