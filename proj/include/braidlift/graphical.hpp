#pragma once

#include <string>
#include <vector>

#include "braidlift/braid.hpp"
#include "braidlift/cover.hpp"

namespace braidlift {

/// A reduced edge path in the spine: letter +k traverses edge k from its
/// smaller to its larger endpoint, -k the reverse.  Arcs are unoriented
/// curves; the stored orientation is bookkeeping and is normalised to the
/// lexicographically smaller of the two readings.
struct ArcWord {
  std::vector<int> letters;
  int start = 0;
  int end = 0;

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const ArcWord&) const = default;

  /// "e1 E2 e3" (capital = reversed edge).
  std::string str() const;
};

/// Letters of the reverse traversal.
std::vector<int> reversed_letters(const std::vector<int>& letters);

/// Free reduction (cancel adjacent e E pairs).
std::vector<int> reduce_letters(std::vector<int> letters);

/// Builds an arc from letters over the given spine: validates that
/// consecutive letters share a vertex, reduces, and normalises orientation.
ArcWord make_arc(const Spine& spine, std::vector<int> letters);

/// An indexed arc system on the cover of the reference labels, encoded by
/// reduced words in the free groupoid on the reference spine.
class GraphicalObject {
public:
  GraphicalObject(LabelTuple reference, std::vector<ArcWord> arcs);

  const LabelTuple& reference() const { return reference_; }
  const Spine& spine() const { return spine_; }
  const std::vector<ArcWord>& arcs() const { return arcs_; }
  const ArcWord& arc(int i) const;  // 1-based

  bool operator==(const GraphicalObject& o) const {
    return reference_ == o.reference_ && arcs_ == o.arcs_;
  }

  /// "(1 2),(2 3) | e1; e2" style key, stable under isotopy representative.
  std::string key() const;

private:
  LabelTuple reference_;
  Spine spine_;
  std::vector<ArcWord> arcs_;
};

/// The distinguished object of a labelling: arc j is the single edge j.
GraphicalObject canonical_object(const LabelTuple& tuple);

/// Reads the label tuple off the arc endpoints.
LabelTuple label_of(const GraphicalObject& object);

/// One arcslide move: slides arc i+1 along arc i at each shared endpoint,
/// then swaps the indices.  The label tuple transforms by hurwitz_step.
GraphicalObject apply_generator(const GraphicalObject& object, int i, int sign);

GraphicalObject apply_morphism(const GraphicalObject& object, const BraidWord& word);

/// Equality of objects: same reference and, for each index, the same reduced
/// word up to whole-word reversal.  Stored arcs are orientation-normalised,
/// so this is plain comparison.
bool objects_equal(const GraphicalObject& a, const GraphicalObject& b);

struct ObjectReport {
  bool endpoints_distinct = false;      // condition 1
  bool basepoints_covered = false;      // condition 2
  bool spanning_connected = false;      // necessary for condition 3
  bool unimodular_substitution = false; // necessary for condition 3
  bool vertex_order_by_index = true;    // condition 4, by construction
  std::vector<std::string> failures;

  bool all_pass() const { return failures.empty(); }
};

ObjectReport validate_object(const GraphicalObject& object);

/// Signed edge counts of each arc: matrix[e-1][j-1] = multiplicity of edge e
/// in arc j (stored orientation).
std::vector<std::vector<long long>> abelianized_matrix(const GraphicalObject& object);

/// Determinant of a square integer matrix (fraction-free elimination).
long long integer_determinant(std::vector<std::vector<long long>> m);

}  // namespace braidlift
