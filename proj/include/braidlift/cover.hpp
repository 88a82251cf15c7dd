#pragma once

#include <string>
#include <vector>

#include "braidlift/braid.hpp"

namespace braidlift {

/// d copies of the cut-open disc glued along the n cuts; gluing i identifies
/// the two sheets swapped by label i.
struct CoverPresentation {
  int d = 0;
  int n = 0;
  LabelTuple labels;
  std::vector<Transposition> gluings;  // gluings[i-1] == labels.at(i)
  std::vector<int> basepoints;         // 1..d
};

/// Graph with vertices at the basepoint lifts and one indexed edge through
/// each branch point; edge i joins the two sheets swapped by label i.  At
/// each vertex the incident edge-ends are ordered by edge index.
struct Spine {
  int vertex_count = 0;
  std::vector<Transposition> edges;  // edge i (1-based) joins edges[i-1].a, edges[i-1].b

  int edge_count() const { return static_cast<int>(edges.size()); }
  int first_betti() const { return edge_count() - vertex_count + 1; }
};

struct CoverTopology {
  int euler_characteristic = 0;
  std::vector<std::vector<int>> boundary_components;  // sheet cycles, min-first
  int genus = 0;
};

CoverPresentation build_cover(const LabelTuple& tuple);

/// Euler characteristic d - n; boundary components found by walking the
/// boundary of the glued sheets, cross-checked against the cycles of the
/// total monodromy; genus from chi = 2 - 2g - b.
CoverTopology cover_topology(const CoverPresentation& cover);
CoverTopology cover_topology(const LabelTuple& tuple);

Spine build_spine(const LabelTuple& tuple);

}  // namespace braidlift
