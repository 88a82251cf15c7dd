#include "braidlift/cover.hpp"

#include <algorithm>
#include <numeric>

namespace braidlift {

CoverPresentation build_cover(const LabelTuple& tuple) {
  CoverPresentation cover{tuple.degree(), tuple.size(), tuple, tuple.labels(), {}};
  cover.basepoints.resize(static_cast<size_t>(tuple.degree()));
  std::iota(cover.basepoints.begin(), cover.basepoints.end(), 1);
  return cover;
}

namespace {

// Boundary walk over the glued sheets.  On each sheet the boundary circle is
// divided into n+1 arcs by the cut endpoints; arc k runs from cut k to cut
// k+1 (arc 0 leaves the basepoint, arc n returns to it).  Crossing cut k
// moves the walk to the sheet glued there; passing a basepoint records it.
std::vector<std::vector<int>> boundary_walk(const CoverPresentation& cover) {
  const int d = cover.d;
  const int n = cover.n;
  std::vector<bool> seen(static_cast<size_t>(d * (n + 1)), false);
  auto state_id = [n](int sheet, int arc) { return (sheet - 1) * (n + 1) + arc; };

  std::vector<std::vector<int>> components;
  for (int start = 1; start <= d; ++start) {
    if (seen[static_cast<size_t>(state_id(start, 0))]) continue;
    std::vector<int> visited_basepoints;
    int sheet = start;
    int arc = 0;
    while (!seen[static_cast<size_t>(state_id(sheet, arc))]) {
      seen[static_cast<size_t>(state_id(sheet, arc))] = true;
      if (arc == 0) visited_basepoints.push_back(sheet);
      if (arc < n) {
        sheet = cover.gluings[static_cast<size_t>(arc)].apply(sheet);
        arc += 1;
      } else {
        arc = 0;
      }
    }
    components.push_back(std::move(visited_basepoints));
  }

  // Rotate each component to start at its minimum; sort components by minimum.
  for (auto& comp : components) {
    const auto it = std::min_element(comp.begin(), comp.end());
    std::rotate(comp.begin(), it, comp.end());
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

}  // namespace

CoverTopology cover_topology(const CoverPresentation& cover) {
  CoverTopology topo;
  topo.euler_characteristic = cover.d - cover.n;
  topo.boundary_components = boundary_walk(cover);

  // Independent route: cycles of the total monodromy.
  const auto mu_cycles = cycles(total_monodromy(cover.labels));
  if (topo.boundary_components != mu_cycles)
    throw std::logic_error("boundary walk disagrees with total monodromy cycles");

  const int b = static_cast<int>(topo.boundary_components.size());
  const int twice_genus = 2 - topo.euler_characteristic - b;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("inconsistent Euler characteristic / boundary count");
  topo.genus = twice_genus / 2;
  return topo;
}

CoverTopology cover_topology(const LabelTuple& tuple) {
  return cover_topology(build_cover(tuple));
}

Spine build_spine(const LabelTuple& tuple) {
  return Spine{tuple.degree(), tuple.labels()};
}

}  // namespace braidlift
