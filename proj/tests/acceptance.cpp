// Acceptance suite: runs every stated criterion and prints one line per
// criterion.  Exit status is the number of failed criteria.

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "braidlift/complex.hpp"
#include "braidlift/cover.hpp"
#include "braidlift/lift.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace braidlift;
using testsupport::all_transpositions;
using testsupport::random_label_tuple;
using testsupport::random_word;
using testsupport::valid_dn;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << "  " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

LabelTuple tuple_d3(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Transposition> labels;
  for (auto [a, b] : pairs) labels.emplace_back(a, b);
  return LabelTuple(3, std::move(labels));
}

const LabelTuple kDisc = tuple_d3({{1, 2}, {2, 3}});
const LabelTuple kAnnulus = tuple_d3({{1, 2}, {1, 2}, {2, 3}});
const LabelTuple kTorus = tuple_d3({{1, 2}, {2, 3}, {2, 3}, {2, 3}});

// Extends a label triple to a transitive tuple by appending the standard
// chain; the appended arcs sit beyond the positions under test.
LabelTuple complete_triple(int d, const Transposition& t1, const Transposition& t2,
                           const Transposition& t3) {
  std::vector<Transposition> labels{t1, t2, t3};
  for (int k = 1; k < d; ++k) labels.emplace_back(k, k + 1);
  return LabelTuple(d, std::move(labels));
}

bool hurwitz_soundness(std::string& detail) {
  std::mt19937 rng(101);
  int checked = 0;
  for (int round = 0; round < 1000; ++round) {
    const auto [d, n] = valid_dn(round, 3, 4, 6);
    const LabelTuple t = random_label_tuple(rng, d, n);
    std::uniform_int_distribution<int> pick(1, n - 1);
    const int i = pick(rng);

    if (total_monodromy(hurwitz_step(t, i, +1)) != total_monodromy(t)) return false;
    if (total_monodromy(hurwitz_step(t, i, -1)) != total_monodromy(t)) return false;
    if (n >= 3) {
      std::uniform_int_distribution<int> low(1, n - 2);
      const int j = low(rng);
      const BraidWord lhs{{{j, 1}, {j + 1, 1}, {j, 1}}};
      const BraidWord rhs{{{j + 1, 1}, {j, 1}, {j + 1, 1}}};
      if (hurwitz_apply(t, lhs) != hurwitz_apply(t, rhs)) return false;
    }
    if (n >= 4) {
      const BraidWord fw{{{1, 1}, {n - 1, 1}}};
      const BraidWord wf{{{n - 1, 1}, {1, 1}}};
      if (hurwitz_apply(t, fw) != hurwitz_apply(t, wf)) return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " random instances";
  return checked == 1000;
}

bool graphical_braid_relations(std::string& detail) {
  const BraidWord lhs{{{1, 1}, {2, 1}, {1, 1}}};
  const BraidWord rhs{{{2, 1}, {1, 1}, {2, 1}}};
  int exhaustive = 0;
  for (int d = 3; d <= 4; ++d) {
    const auto pool = all_transpositions(d);
    for (const auto& t1 : pool)
      for (const auto& t2 : pool)
        for (const auto& t3 : pool) {
          const GraphicalObject o = canonical_object(complete_triple(d, t1, t2, t3));
          if (!objects_equal(apply_morphism(o, lhs), apply_morphism(o, rhs))) return false;
          ++exhaustive;
        }
  }

  std::mt19937 rng(102);
  int randomized = 0;
  for (int round = 0; round < 1000; ++round) {
    const int d = 3 + (round % 2);
    const int n = 3 + (round % 4);
    const LabelTuple t = random_label_tuple(rng, d, n);
    const GraphicalObject o = apply_morphism(canonical_object(t), random_word(rng, n, 6));
    std::uniform_int_distribution<int> pick(1, n - 2);
    const int i = pick(rng);
    const BraidWord l{{{i, 1}, {i + 1, 1}, {i, 1}}};
    const BraidWord r{{{i + 1, 1}, {i, 1}, {i + 1, 1}}};
    if (!objects_equal(apply_morphism(o, l), apply_morphism(o, r))) return false;
    if (n >= 4) {
      const BraidWord fw{{{1, 1}, {n - 1, 1}}};
      const BraidWord wf{{{n - 1, 1}, {1, 1}}};
      if (!objects_equal(apply_morphism(o, fw), apply_morphism(o, wf))) return false;
    }
    ++randomized;
  }
  detail = std::to_string(exhaustive) + " exhaustive configurations, " +
           std::to_string(randomized) + " randomized objects";
  return true;
}

bool inverses_and_orders(std::string& detail) {
  std::mt19937 rng(103);
  for (int round = 0; round < 300; ++round) {
    const int d = 3 + (round % 2);
    const int n = 3 + (round % 4);
    const LabelTuple t = random_label_tuple(rng, d, n);
    const GraphicalObject o = apply_morphism(canonical_object(t), random_word(rng, n, 5));
    std::uniform_int_distribution<int> pick(1, n - 1);
    const int i = pick(rng);
    if (!objects_equal(apply_generator(apply_generator(o, i, +1), i, -1), o)) return false;

    const LabelTuple labels = label_of(o);
    const Transposition& s = labels.at(i);
    const Transposition& u = labels.at(i + 1);
    if (s == u) continue;
    const int order = s.disjoint_from(u) ? 2 : 3;
    GraphicalObject walked = o;
    for (int k = 0; k < order; ++k) walked = apply_generator(walked, i, +1);
    if (!objects_equal(walked, o)) return false;
  }

  GraphicalObject twisted = canonical_object(kAnnulus);
  for (int k = 1; k <= 50; ++k) {
    twisted = apply_generator(twisted, 1, +1);
    if (twisted.arc(1).length() != 2 * k + 1) return false;
  }
  detail = "inverse pairs, squared/cubed orders, twist growth to k=50";
  return true;
}

bool homomorphism_law(std::string& detail) {
  std::mt19937 rng(104);
  for (int round = 0; round < 500; ++round) {
    const int d = 3 + (round % 2);
    const int n = 3 + (round % 4);
    const LabelTuple t = random_label_tuple(rng, d, n);
    std::uniform_int_distribution<int> len(0, 20);
    const BraidWord w1 = random_word(rng, n, len(rng));
    const BraidWord w2 = random_word(rng, n, len(rng));
    const SpineSubstitution f = compute_lift(ColoredBraid(t, w1));
    const SpineSubstitution g = compute_lift(ColoredBraid(f.target, w2));
    if (!(compose_lifts(g, f) == compute_lift(ColoredBraid(t, w1.then(w2))))) return false;
  }
  detail = "500 composable pairs, |word| <= 20";
  return true;
}

bool factorization_independence(std::string& detail) {
  std::mt19937 rng(105);
  for (int round = 0; round < 200; ++round) {
    const int d = 3 + (round % 2);
    const int n = 3 + (round % 4);
    const LabelTuple t = random_label_tuple(rng, d, n);
    BraidWord word = random_word(rng, n, 8);
    const SpineSubstitution base = compute_lift(ColoredBraid(t, word));

    std::uniform_int_distribution<size_t> pos(0, word.gens.size());
    const size_t at = pos(rng);
    std::vector<BraidGenerator> patch;
    if (round % 2 == 0) {
      std::uniform_int_distribution<int> pick(1, n - 1);
      const int i = pick(rng);
      const int sign = (round % 4 == 0) ? 1 : -1;
      patch = {{i, sign}, {i, -sign}};
    } else {
      std::uniform_int_distribution<int> pick(1, n - 2);
      const int i = pick(rng);
      patch = {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}};
    }
    word.gens.insert(word.gens.begin() + static_cast<long>(at), patch.begin(), patch.end());
    if (!(compute_lift(ColoredBraid(t, word)) == base)) return false;
  }
  detail = "200 braids, inserted relators and cancelling pairs";
  return true;
}

bool worked_examples(std::string& detail) {
  // (a) sigma^3 over the disc lifts to the identity.
  if (!is_identity(compute_lift(ColoredBraid(kDisc, parse_braid("s1^3", 2))))) return false;

  // (b) the hidden-twist factorisation equals the plain twist, which is
  // twist-shaped but not the identity.
  const SpineSubstitution plain = compute_lift(ColoredBraid(kAnnulus, parse_braid("s1", 3)));
  const SpineSubstitution hidden = compute_lift(ColoredBraid(kAnnulus, parse_braid("s1 s2^3", 3)));
  if (!(hidden == plain)) return false;
  const LiftReport report = classify(plain);
  if (!report.flags.transvection_shape || report.flags.is_identity) return false;

  // (c) powers of the cycle twist compose in the groupoid.
  const LabelTuple square(4, {Transposition(1, 2), Transposition(2, 3), Transposition(3, 4),
                              Transposition(1, 4)});
  if (build_spine(square).first_betti() < 1) return false;
  const BraidWord conj = parse_braid("s1^-1 s2^-1", 4);
  auto braid_for = [&](int power) {
    BraidWord mid;
    for (int k = 0; k < power; ++k) mid.gens.push_back({3, 1});
    return conj.then(mid).then(conj.inverse());
  };
  const SpineSubstitution once = compute_lift(ColoredBraid(square, braid_for(1)));
  if (!(once.source == once.target)) return false;
  SpineSubstitution power = once;
  for (int n = 2; n <= 3; ++n) {
    power = compose_lifts(once, power);
    if (!(power == compute_lift(ColoredBraid(square, braid_for(n))))) return false;
  }
  detail = "identity lift, hidden twist, cycle twist powers";
  return true;
}

bool cover_topology_checks(std::string& detail) {
  std::mt19937 rng(107);
  for (int round = 0; round < 300; ++round) {
    const auto [d, n] = valid_dn(round, 3, 5, 7);
    const LabelTuple t = random_label_tuple(rng, d, n);
    const CoverTopology topo = cover_topology(t);
    if (topo.euler_characteristic != d - n) return false;
    if (topo.boundary_components != cycles(total_monodromy(t))) return false;
  }
  const CoverTopology annulus = cover_topology(kAnnulus);
  if (annulus.genus != 0 || annulus.boundary_components.size() != 2) return false;
  const CoverTopology torus = cover_topology(kTorus);
  if (torus.genus != 1 || torus.boundary_components.size() != 1) return false;
  detail = "chi = d - n, walk == monodromy cycles, annulus and torus shapes";
  return true;
}

bool orbit_oracle(std::string& detail) {
  long long orbits = 0;
  for (int d = 3; d <= 4; ++d) {
    for (int n = 2; n <= 5; ++n) {
      const auto pool = all_transpositions(d);
      std::set<std::vector<Transposition>> remaining;
      std::vector<Transposition> current;
      auto gen = [&](auto&& self, int k) -> void {
        if (k == 0) {
          if (is_transitive(current, d)) remaining.insert(current);
          return;
        }
        for (const auto& t : pool) {
          current.push_back(t);
          self(self, k - 1);
          current.pop_back();
        }
      };
      gen(gen, n);
      while (!remaining.empty()) {
        const LabelTuple base(d, *remaining.begin());
        const auto expected = oracles::transitive_tuples_with_product(d, n, total_monodromy(base));
        const auto orbit = hurwitz_orbit(base);
        if (orbit.size() != expected.size()) return false;
        for (size_t k = 0; k < orbit.size(); ++k)
          if (orbit[k].labels() != expected[k]) return false;
        for (const auto& raw : expected) remaining.erase(raw);
        ++orbits;
      }
    }
  }
  detail = std::to_string(orbits) + " orbits match the exhaustive enumeration";
  return true;
}

bool complex_checks(std::string& detail) {
  const LabelComplex complex = label_complex(kTorus);
  const TwoCellInventory inventory = two_cell_inventory(kTorus);

  bool power_at_base = false;
  for (const auto& cell : inventory.power_cells)
    power_at_base |= cell.vertex == complex.base && cell.word.str() == "s1^3";
  if (!power_at_base) return false;

  bool rel12 = false, rel23 = false;
  for (const auto& cell : inventory.braid_relation_cells) {
    if (cell.vertex != complex.base) continue;
    rel12 |= cell.word.str() == "s1 s2 s1 s2^-1 s1^-1 s2^-1";
    rel23 |= cell.word.str() == "s2 s3 s2 s3^-1 s2^-1 s3^-1";
  }
  if (!rel12 || !rel23) return false;

  for (const auto& cell : inventory.power_cells)
    if (hurwitz_apply(complex.vertices[static_cast<size_t>(cell.vertex)], cell.word) !=
        complex.vertices[static_cast<size_t>(cell.vertex)])
      return false;

  const CoveringReport covering = check_covering(object_ball(kTorus, 3), complex);
  if (!covering.passed()) return false;
  if (covering.open_loops_checked == 0 || covering.closed_loops_checked == 0) return false;
  detail = "s1^3 and both relation loops closed; covering slots and open loops verified";
  return true;
}

bool rewriting_certification(std::string& detail) {
  std::mt19937 rng(110);
  int certified = 0;
  for (const LabelTuple& t : {kAnnulus, kTorus}) {
    for (int round = 0; round < 100; ++round) {
      std::uniform_int_distribution<int> len(1, 8);
      const ColoredBraid braid(t, random_word(rng, t.size(), len(rng)));
      const ColoredBraid rewritten = remove_same_label_crossings(braid);

      std::vector<Transposition> cur = t.labels();
      for (const auto& g : rewritten.word.gens) {
        if (cur[static_cast<size_t>(g.index - 1)] == cur[static_cast<size_t>(g.index)]) return false;
        const LabelTuple stepped = hurwitz_step(LabelTuple(t.degree(), cur), g.index, g.sign);
        cur = stepped.labels();
      }
      if (!(compute_lift(rewritten) == compute_lift(braid))) return false;
      ++certified;
    }
  }
  detail = std::to_string(certified) + " rewritten braids with equal lifts";
  return true;
}

}  // namespace

int main() {
  criterion(1, "hurwitz soundness", hurwitz_soundness);
  criterion(2, "graphical braid relations", graphical_braid_relations);
  criterion(3, "inverses and orders", inverses_and_orders);
  criterion(4, "homomorphism law", homomorphism_law);
  criterion(5, "factorization independence", factorization_independence);
  criterion(6, "worked examples reproduced", worked_examples);
  criterion(7, "cover topology", cover_topology_checks);
  criterion(8, "orbit oracle", orbit_oracle);
  criterion(9, "complex and covering checks", complex_checks);
  criterion(10, "rewriting certification", rewriting_certification);
  if (failures == 0) std::cout << "all criteria passed\n";
  else std::cout << failures << " criteria failed\n";
  return failures;
}
