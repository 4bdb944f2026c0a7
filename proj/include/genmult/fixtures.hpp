#pragma once

// Published values recomputed from scratch. Shared by `genmult fixtures`
// and the test suites.

#include <string>
#include <vector>

#include "genmult/hypergraph.hpp"

namespace genmult {

struct FixtureResult {
  std::string topic;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::vector<FixtureResult> run_fixtures();

/// The 3-uniform hypergraph on x, y, z, w, x1, x2, x3: the boundary of the
/// tetrahedron x x1 x2 x3 plus the triangles xyw, xzw, yzw.
Hypergraph tetrahedron_with_three_triangles();

/// Two triangles sharing one node.
Hypergraph bowtie();

/// Triangle x1 x2 x3 with the path x3 - x4 - x5 attached.
Hypergraph triangle_with_tail();

/// "{a,b},{c}" with classes and members in node order.
std::string format_classes(const Hypergraph& g, const std::vector<NodeSet>& classes);

}  // namespace genmult
