#include <doctest.h>

#include <json.hpp>
#include <string>

#include "ccx/complex.hpp"
#include "ccx/errors.hpp"
#include "ccx/fixtures.hpp"
#include "ccx/graph.hpp"
#include "ccx/hyperbolicity.hpp"
#include "ccx/hypgraphs.hpp"
#include "ccx/io.hpp"
#include "ccx/quasitree.hpp"
#include "ccx/wallspace.hpp"

using namespace ccx;
using nlohmann::json;

TEST_SUITE("io") {
  TEST_CASE("sniff_format reads the format field and rejects junk") {
    CHECK(io::sniff_format(R"({"format": "ccx-graph-v1"})") == "ccx-graph-v1");
    CHECK_THROWS_AS(io::sniff_format("not json at all"), invalid_input_error);
    CHECK_THROWS_AS(io::sniff_format(R"({"fmt": "x"})"), invalid_input_error);
  }

  TEST_CASE("wallspace documents roundtrip canonically") {
    std::string doc = R"({
      "format": "ccx-wallspace-v1",
      "elements": ["q", "p"],
      "walls": [{"name": "w", "plus": ["q"]}]
    })";
    Wallspace ws = io::parse_wallspace(doc);
    CHECK(ws.n_elements() == 2);
    CHECK(ws.plus(0).get(0));  // q is element 0 in document order
    std::string canon = io::serialize_wallspace(ws);
    // canonical form sorts elements; reparse and reserialize is stable
    CHECK(io::serialize_wallspace(io::parse_wallspace(canon)) == canon);
    json j = json::parse(canon);
    CHECK(j["elements"] == json::array({"p", "q"}));
    CHECK(j["walls"][0]["plus"] == json::array({"q"}));

    CHECK_THROWS_AS(io::parse_wallspace(R"({"format": "ccx-wallspace-v1",
      "elements": ["a"], "walls": [{"plus": ["zzz"]}]})"),
                    invalid_input_error);
    CHECK_THROWS_AS(io::parse_wallspace(R"({"format": "ccx-complex-v1",
      "elements": ["a"], "walls": []})"),
                    invalid_input_error);
  }

  TEST_CASE("complex documents: canonical wall order with permuted columns") {
    // walls out of name order: z first, a second
    std::string doc = R"({
      "format": "ccx-complex-v1",
      "num_walls": 2,
      "wall_names": ["z", "a"],
      "vertices": ["00", "10", "01", "11"]
    })";
    CubeComplex x = io::parse_complex(doc);
    CHECK(x.num_vertices() == 4);
    std::string canon = io::serialize_complex(x);
    json j = json::parse(canon);
    CHECK(j["wall_names"] == json::array({"a", "z"}));
    // column for 'a' now comes first; the vertex set is unchanged as a set
    CHECK(j["vertices"] == json::array({"00", "01", "10", "11"}));
    CHECK(io::serialize_complex(io::parse_complex(canon)) == canon);
  }

  TEST_CASE("complex documents accept omitted wall names and reject bad rows") {
    CubeComplex x = io::parse_complex(R"({
      "format": "ccx-complex-v1",
      "num_walls": 1,
      "vertices": ["0", "1"]
    })");
    CHECK(x.wall_name(0) == "W0");

    auto bad = [](const char* body) {
      std::string doc = std::string(R"({"format": "ccx-complex-v1", )") + body + "}";
      CHECK_THROWS_AS(io::parse_complex(doc), invalid_input_error);
    };
    bad(R"("num_walls": 1, "vertices": ["1", "0"])");          // base not first
    bad(R"("num_walls": 1, "vertices": [])");                  // empty
    bad(R"("num_walls": 2, "vertices": ["00", "1"])");         // width mismatch
    bad(R"("num_walls": 1, "vertices": ["0", "x"])");          // charset
    bad(R"("num_walls": 2, "vertices": ["00", "11"])");        // disconnected
    bad(R"("num_walls": 1, "wall_names": ["a", "b"], "vertices": ["0", "1"])");
    bad(R"("vertices": ["0", "1"])");                          // no num_walls
  }

  TEST_CASE("graph documents roundtrip and validate") {
    Graph g = contact_graph(fixture("tripod")).g;
    std::string doc = io::serialize_graph(g);
    Graph h = io::parse_graph(doc);
    CHECK(h.n() == 3);
    CHECK(h.edge_count() == 3);
    CHECK(io::serialize_graph(h) == doc);
    json j = json::parse(doc);
    CHECK(j["format"] == "ccx-graph-v1");
    CHECK(j["vertices"] == json::array({"l0", "l1", "l2"}));
    CHECK(j["edges"].size() == 3);

    CHECK_THROWS_AS(io::parse_graph(R"({"format": "ccx-graph-v1",
      "vertices": ["a", "a"], "edges": []})"),
                    invalid_input_error);
    CHECK_THROWS_AS(io::parse_graph(R"({"format": "ccx-graph-v1",
      "vertices": ["a"], "edges": [["a", "b"]]})"),
                    invalid_input_error);
    CHECK_THROWS_AS(io::parse_graph(R"({"format": "ccx-graph-v1",
      "vertices": ["a"], "edges": [["a", "a"]]})"),
                    invalid_input_error);
    // an isolated vertex and no edges is fine
    Graph lone = io::parse_graph(R"({"format": "ccx-graph-v1",
      "vertices": ["only"], "edges": []})");
    CHECK(lone.n() == 1);
  }

  TEST_CASE("complex serialization is deterministic across construction order") {
    CubeComplex a = fixture("grid-2x3");
    CubeComplex b = io::parse_complex(io::serialize_complex(a));
    CHECK(io::serialize_complex(a) == io::serialize_complex(b));
    Wallspace wa = to_wallspace(a);
    CHECK(io::serialize_wallspace(wa) == io::serialize_wallspace(to_wallspace(b)));
  }

  TEST_CASE("dot renderings carry the expected structure") {
    CubeComplex x = fixture("10gon-5squares");
    Graph gamma = contact_graph(x).g;
    Graph delta = crossing_graph(x).g;
    std::string plain = io::dot_graph(gamma);
    CHECK(plain.rfind("graph ccx {", 0) == 0);
    CHECK(plain.find("\"w00\" -- \"w01\";") != std::string::npos);
    std::string overlay = io::dot_overlay(delta, gamma);
    // osculating pairs (pentagon diagonals) are dashed, crossings solid
    CHECK(overlay.find("\"w00\" -- \"w01\";") != std::string::npos);
    CHECK(overlay.find("\"w00\" -- \"w02\" [style=dashed];") != std::string::npos);
    CHECK_THROWS_AS(io::dot_overlay(delta, complete_graph(3)), invalid_input_error);

    HypGraph hg = contact_graph(x);
    Grading gr = grade_hyperplanes(hg, 0);
    RootTree rt = graded_root_tree(gr, hg);
    std::string rd = io::dot_root_tree(rt, gr, hg);
    CHECK(rd.find("rank=same") != std::string::npos);
    CHECK(rd.find("\"C0\" [label=\"C0: w00\"];") != std::string::npos);
    CHECK(rd.find("\"C1\" [label=\"C1: w01,w02,w03,w04\"];") != std::string::npos);
  }

  TEST_CASE("grading and root tree documents expose grades and members") {
    CubeComplex x = fixture("grid-2x2");
    HypGraph gamma = contact_graph(x);
    Grading gr = grade_hyperplanes(gamma, x.wall_index_by_name("x00"));
    json g = json::parse(io::grading_document(gamma, gr));
    CHECK(g["format"] == "ccx-graph-v1");
    CHECK(g["base"] == "x00");
    CHECK(g["grades"]["x00"] == 0);
    CHECK(g["grades"]["y01"] == 1);
    REQUIRE(g["roots"].size() == 2);
    CHECK(g["roots"][0]["grade"] == 0);
    CHECK(g["roots"][1]["members"] == json::array({"x01", "y00", "y01"}));

    RootTree rt = graded_root_tree(gr, gamma);
    json t = json::parse(io::root_tree_document(rt, gr, gamma));
    CHECK(t["vertices"] == json::array({"C0", "C1"}));
    CHECK(t["edges"] == json::array({json::array({"C0", "C1"})}));
    CHECK(t["node_grades"]["C1"] == 1);
    CHECK(t["members"]["C0"] == json::array({"x00"}));
  }

  TEST_CASE("analysis documents are flat and complete") {
    CubeComplex x = grid_complex(2, 2);
    json j = json::parse(io::analysis_document(analyze(x), x));
    CHECK(j["format"] == "ccx-report-v1");
    CHECK(j["num_vertices"] == 9);
    CHECK(j["num_walls"] == 4);
    CHECK(j["dimension"] == 2);
    CHECK(j["degree"] == 4);
    CHECK(j["biclique_p"] == 2);
    CHECK(j["biclique_q"] == 2);
    CHECK(j["biclique_skipped"] == false);
    CHECK(j["four_point_delta_doubled"] == 4);
    CHECK(j["four_point_delta"] == 2.0);
    CHECK(j["largest_grid_r"] == 2);
    CHECK(j["max_root_diameter"] == 1);
    CHECK(j["min_bottleneck_delta_doubled"] == 1);
    CHECK(j["caveat"].is_string());
    // biclique sides split the walls into the two parallel classes
    CHECK(j["biclique_side_h"].size() == 2);
    CHECK(j["biclique_side_v"].size() == 2);
  }
}
