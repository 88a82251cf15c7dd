#pragma once

#include <string>
#include <vector>

#include "braidlift/braid.hpp"
#include "braidlift/graphical.hpp"

namespace braidlift {

/// A labelled generator edge: vertex `source` maps to vertex `target` under
/// sigma_gen^sign.
struct ComplexEdge {
  int source = 0;
  int gen = 0;
  int sign = 0;
  int target = 0;
  bool operator==(const ComplexEdge&) const = default;
};

/// 1-skeleton over the Hurwitz orbit: one vertex per label tuple, one edge
/// per signed generator.
struct LabelComplex {
  std::vector<LabelTuple> vertices;  // sorted
  std::vector<ComplexEdge> edges;    // (source, gen, sign) ascending
  int base = 0;                      // index of the starting tuple
};

/// Radius-bounded ball of the object complex around the canonical object.
struct ObjectBall {
  std::vector<GraphicalObject> vertices;  // by (depth, key)
  std::vector<int> depth;
  std::vector<ComplexEdge> edges;  // both endpoints inside the ball
  int base = 0;
  int radius = 0;
};

LabelComplex label_complex(const LabelTuple& base);

/// BFS to the given word-length radius; object_ball expands layers in
/// parallel when OpenMP is enabled, object_ball_serial is the reference.
ObjectBall object_ball(const LabelTuple& base, int radius);
ObjectBall object_ball_serial(const LabelTuple& base, int radius);

struct AttachingCell {
  int vertex = 0;        // index into LabelComplex::vertices
  int position = 0;      // generator position the cell is attached over
  std::string kind;      // "braid_relation", "far_commutation", "power"
  BraidWord word;        // closed attaching word at that vertex
};

struct TwoCellInventory {
  std::vector<AttachingCell> braid_relation_cells;  // braid relations + far commutations
  std::vector<AttachingCell> power_cells;           // sigma_i^2 / sigma_i^3 by label type
  std::vector<AttachingCell> mcg_relation_cells;    // intentionally empty
  std::string mcg_relation_note;
};

TwoCellInventory two_cell_inventory(const LabelTuple& base);

struct CoveringReport {
  int interior_vertices_checked = 0;
  int closed_loops_checked = 0;
  int open_loops_checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Local covering checks: (a) generator slots at interior ball vertices map
/// bijectively onto the slots at their label image, (b) power and relation
/// loops at the base lift closed, (c) equal-label generator loops lift open.
CoveringReport check_covering(const ObjectBall& ball, const LabelComplex& complex);

std::string to_dot(const std::vector<std::string>& vertex_labels,
                   const std::vector<ComplexEdge>& edges, int base);
std::string to_dot(const LabelComplex& complex);
std::string to_dot(const ObjectBall& ball);

}  // namespace braidlift
