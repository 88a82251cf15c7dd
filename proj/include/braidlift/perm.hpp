#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidlift {

/// Raised when an operation is asked for mathematically inconsistent input
/// (bad degree, non-bijective image, non-transitive labels, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A transposition (a b) of sheets, 1-based, stored with a < b.
struct Transposition {
  int a;
  int b;

  Transposition(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {
    if (x == y) throw DomainError("transposition needs two distinct points");
    if (a < 1) throw DomainError("transposition indices are 1-based");
  }

  int apply(int x) const { return x == a ? b : (x == b ? a : x); }
  int max_point() const { return b; }

  bool moves(int x) const { return x == a || x == b; }
  bool disjoint_from(const Transposition& o) const {
    return !moves(o.a) && !moves(o.b);
  }

  auto operator<=>(const Transposition&) const = default;

  std::string str() const;
};

/// conj = s t s.  s is an involution, so the composition order is immaterial;
/// the result is the transposition (s(a) s(b)).
Transposition conjugate(const Transposition& t, const Transposition& s);

/// A permutation of {1..d} stored as the image sequence of 1..d.
class Permutation {
public:
  explicit Permutation(int degree);
  explicit Permutation(std::vector<int> image);

  static Permutation from_transposition(const Transposition& t, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const;
  bool is_identity() const;
  Permutation inverse() const;

  const std::vector<int>& image() const { return img_; }

  bool operator==(const Permutation&) const = default;

  /// Cycle notation, fixed points omitted; "id" for the identity.
  std::string str() const;

private:
  std::vector<int> img_;
};

/// Apply p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

/// Disjoint cycles covering {1..d}, singletons included.
/// Each cycle starts at its minimum; cycles sorted by minimum.
std::vector<std::vector<int>> cycles(const Permutation& p);

/// Multiset of cycle lengths, descending.
std::vector<int> cycle_type(const Permutation& p);

/// True iff p and q are conjugate in S_d, i.e. have equal cycle type.
bool conjugate_in_sd(const Permutation& p, const Permutation& q);

/// True iff the graph on {1..d} with one edge per transposition is connected.
bool is_transitive(const std::vector<Transposition>& ts, int d);

}  // namespace braidlift
