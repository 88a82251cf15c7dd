#pragma once

#include <string>
#include <vector>

#include "braidlift/braid.hpp"
#include "braidlift/graphical.hpp"

namespace braidlift {

/// The lift of a coloured braid, represented by the images of the target
/// spine edges as reduced paths in the source spine (the normalising
/// homeomorphism acts against the braid direction, so these images describe
/// the inverse map on the target spine).  Image j is stored oriented from
/// the smaller endpoint of target edge j, which makes equality exact.
///
/// The braid word that produced the substitution is kept alongside so the
/// inverse can be recomputed; it does not participate in equality.
struct SpineSubstitution {
  LabelTuple source;
  LabelTuple target;
  std::vector<ArcWord> images;
  BraidWord word;

  bool operator==(const SpineSubstitution& o) const {
    return source == o.source && target == o.target && images == o.images;
  }
};

using IntMatrix = std::vector<std::vector<long long>>;

struct LiftFlags {
  bool is_identity = false;
  bool h1_trivial = false;
  bool transvection_shape = false;
};

struct LiftReport {
  bool liftable = false;
  int pi1_rank = 0;
  IntMatrix h1_matrix;  // filled when liftable
  LiftFlags flags;      // meaningful when liftable
};

/// Runs the arcslides of the braid word on the canonical object of the
/// initial labels and reads the resulting arc system as a substitution.
SpineSubstitution compute_lift(const ColoredBraid& braid);

/// g after f: substitutes f's images into g's.  Requires f.target == g.source.
SpineSubstitution compose_lifts(const SpineSubstitution& g, const SpineSubstitution& f);

/// The inverse substitution, recomputed from the reversed-inverted word.
SpineSubstitution invert_lift(const SpineSubstitution& f);

/// Requires source == target.  True iff every image is its own spine edge.
bool is_identity(const SpineSubstitution& f);

/// Action on H1 of the cover in the loop basis determined by the
/// lowest-index spanning tree of the spine.  Requires source == target.
IntMatrix h1_action(const SpineSubstitution& f);

/// Requires source == target.
LiftReport classify(const SpineSubstitution& f);

/// Report for any substitution; flags/h1 are filled only for self-maps.
LiftReport lift_report(const SpineSubstitution& f);

struct ArcTypeResult {
  int type = 0;                // 1 equal, 2 disjoint, 3 distinct non-disjoint
  int min_liftable_power = 0;  // equals type
};

/// Type of the arc that the conjugating braid carries to the elementary arc
/// between branch values i and i+1, read off the labels of conj applied to
/// the tuple.  Internally verified: conj sigma_i^type conj^-1 fixes the tuple.
ArcTypeResult arc_type(const LabelTuple& tuple, const BraidWord& conj, int i);

IntMatrix identity_matrix(int n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
int integer_rank(IntMatrix m);

}  // namespace braidlift
