#pragma once

#include <string>
#include <vector>

#include "braidlift/perm.hpp"

namespace braidlift {

/// n monodromy labels over degree d.  Always transitive (connected cover),
/// with n >= 2 and d >= 3.
class LabelTuple {
public:
  LabelTuple(int degree, std::vector<Transposition> labels);

  int degree() const { return d_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const Transposition& at(int i) const;  // 1-based
  const std::vector<Transposition>& labels() const { return labels_; }

  bool operator==(const LabelTuple&) const = default;
  bool operator<(const LabelTuple& o) const;

  /// "d=3: (1 2),(2 3)"
  std::string str() const;

private:
  int d_;
  std::vector<Transposition> labels_;
};

/// Artin generator s_index^sign, 1-based strand position, sign in {+1,-1}.
struct BraidGenerator {
  int index;
  int sign;
  bool operator==(const BraidGenerator&) const = default;
};

/// Generators in application order: the first element acts first.
struct BraidWord {
  std::vector<BraidGenerator> gens;

  int size() const { return static_cast<int>(gens.size()); }
  BraidWord inverse() const;  // reversed order, flipped signs
  BraidWord then(const BraidWord& next) const;

  bool operator==(const BraidWord&) const = default;

  /// "s1 s2^-1 s1^3" (exponents are expanded on parse, collapsed on print).
  std::string str() const;
};

/// WORD := GEN (SPACE GEN)* ; GEN := "s" INT ["^" ["-"] INT].
/// Indices must lie in [1, strand_count-1].
BraidWord parse_braid(const std::string& text, int strand_count);

/// Accepts "(1 2),(2 3)" or the headed form "d=3: (1 2),(2 3)".
/// When degree == 0 the header is mandatory; when both are given they must agree.
LabelTuple parse_label_tuple(const std::string& text, int degree = 0);

/// A braid word together with the labels it acts on.
struct ColoredBraid {
  LabelTuple initial;
  BraidWord word;

  ColoredBraid(LabelTuple init, BraidWord w);

  LabelTuple terminal() const;
};

LabelTuple hurwitz_step(const LabelTuple& tuple, int i, int sign);
LabelTuple hurwitz_apply(const LabelTuple& tuple, const BraidWord& word);

/// True iff the terminal labels equal the initial labels.
bool is_liftable(const ColoredBraid& braid);

/// Left-to-right product of all labels; invariant under every hurwitz_step.
Permutation total_monodromy(const LabelTuple& tuple);

/// The distinguished normal form of the same length whose total monodromy
/// is conjugate to the input's: one or two copies of each (j j+1) for
/// j < d-1, then an odd number of copies of (d-1 d).  Throws when the
/// class admits no such tuple of this length.
LabelTuple canonical_label(const LabelTuple& tuple);

/// True iff the two tuples present equivalent covers, i.e. their total
/// monodromies are conjugate in S_d.
bool equivalent_covers(const LabelTuple& t1, const LabelTuple& t2);

/// Closure of the tuple under Hurwitz steps over all positions and signs,
/// sorted.  hurwitz_orbit expands BFS layers in parallel when OpenMP is
/// enabled; hurwitz_orbit_serial is the reference implementation.  Both
/// return the identical sorted vector.
std::vector<LabelTuple> hurwitz_orbit(const LabelTuple& tuple);
std::vector<LabelTuple> hurwitz_orbit_serial(const LabelTuple& tuple);

/// Rewrites the braid into an equal element of B_n whose every crossing
/// involves two differently labelled strands, by pulling a non-disjoint
/// differently labelled strand through each offending crossing.
/// Throws DomainError when no such strand exists.
ColoredBraid remove_same_label_crossings(const ColoredBraid& braid);

}  // namespace braidlift
