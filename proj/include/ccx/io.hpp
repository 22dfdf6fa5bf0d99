#pragma once

#include <string>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/graph.hpp"
#include "ccx/hyperbolicity.hpp"
#include "ccx/hypgraphs.hpp"
#include "ccx/quasitree.hpp"
#include "ccx/wallspace.hpp"

namespace ccx::io {

// The document's "format" field ("ccx-wallspace-v1", "ccx-complex-v1",
// "ccx-graph-v1"). Throws invalid_input_error on unparsable input.
std::string sniff_format(const std::string& text);

// Serializers emit canonical documents: elements/vertices/edges sorted,
// walls sorted by name with bit columns permuted to match, two-space
// indentation, trailing newline — byte-identical for equal inputs.
Wallspace parse_wallspace(const std::string& text);
std::string serialize_wallspace(const Wallspace& ws);

CubeComplex parse_complex(const std::string& text);
std::string serialize_complex(const CubeComplex& x);

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Undirected DOT renderings.
std::string dot_graph(const Graph& g);
// Crossing edges solid, remaining contact edges (osculations) dashed.
std::string dot_overlay(const Graph& crossing, const Graph& contact);
// Root tree with one rank row per grade; node labels list member walls.
std::string dot_root_tree(const RootTree& t, const Grading& gr, const HypGraph& g);

// Contact graph plus per-wall grades and root membership for one base.
std::string grading_document(const HypGraph& g, const Grading& gr);
// The root tree as a graph document with node grades and member lists.
std::string root_tree_document(const RootTree& t, const Grading& gr, const HypGraph& g);

// Flat key/value report; biclique sides and witnesses by wall name.
std::string analysis_document(const AnalysisReport& r, const CubeComplex& x);

}  // namespace ccx::io
