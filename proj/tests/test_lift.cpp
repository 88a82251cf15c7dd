#include <doctest.h>

#include <random>

#include "braidlift/lift.hpp"
#include "test_support.hpp"

using namespace braidlift;

namespace {

LabelTuple tuple_d3(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Transposition> labels;
  for (auto [a, b] : pairs) labels.emplace_back(a, b);
  return LabelTuple(3, std::move(labels));
}

const LabelTuple kDisc = tuple_d3({{1, 2}, {2, 3}});
const LabelTuple kAnnulus = tuple_d3({{1, 2}, {1, 2}, {2, 3}});
const LabelTuple kTorus = tuple_d3({{1, 2}, {2, 3}, {2, 3}, {2, 3}});

SpineSubstitution lift_of(const LabelTuple& t, const std::string& word) {
  return compute_lift(ColoredBraid(t, parse_braid(word, t.size())));
}

}  // namespace

TEST_CASE("sigma cubed on the disc cover lifts to the identity") {
  const SpineSubstitution f = lift_of(kDisc, "s1^3");
  CHECK(f.source == f.target);
  CHECK(is_identity(f));
}

TEST_CASE("a single slide on the disc cover is a non-liftable substitution") {
  const SpineSubstitution f = lift_of(kDisc, "s1");
  CHECK(f.target == tuple_d3({{1, 3}, {1, 2}}));
  CHECK(f.images[0].letters == std::vector<int>{1, 2});
  CHECK(f.images[1].letters == std::vector<int>{1});
  CHECK_THROWS_AS(is_identity(f), DomainError);
  CHECK_FALSE(lift_report(f).liftable);
}

TEST_CASE("equal-label generator lifts to a twist-shaped map") {
  const SpineSubstitution f = lift_of(kAnnulus, "s1");
  CHECK(f.source == f.target);
  CHECK_FALSE(is_identity(f));
  CHECK(f.images[0].letters == std::vector<int>{1, -2, 1});

  const LiftReport report = classify(f);
  CHECK(report.pi1_rank == 1);
  CHECK(report.h1_matrix == IntMatrix{{1}});
  CHECK(report.flags.h1_trivial);          // boundary twist is invisible in H1
  CHECK_FALSE(report.flags.is_identity);
  CHECK(report.flags.transvection_shape);
}

TEST_CASE("squared disjoint-label generator lifts to the identity") {
  const LabelTuple t(4, {Transposition(1, 2), Transposition(3, 4), Transposition(2, 3)});
  CHECK(is_identity(compute_lift(ColoredBraid(t, parse_braid("s1^2", 3)))));
  CHECK_FALSE(is_liftable(ColoredBraid(t, parse_braid("s1", 3))));  // single swap moves labels
}

TEST_CASE("composition matches lifting the concatenated word") {
  std::mt19937 rng(51);
  for (int round = 0; round < 150; ++round) {
    const int d = 3 + (round % 2);
    const int n = 3 + (round % 3);
    const LabelTuple t = testsupport::random_label_tuple(rng, d, n);
    const BraidWord w1 = testsupport::random_word(rng, n, 1 + round % 8);
    const BraidWord w2 = testsupport::random_word(rng, n, 1 + round % 6);
    const SpineSubstitution f = compute_lift(ColoredBraid(t, w1));
    const SpineSubstitution g = compute_lift(ColoredBraid(f.target, w2));
    CHECK(compose_lifts(g, f) == compute_lift(ColoredBraid(t, w1.then(w2))));
  }
}

TEST_CASE("composition requires matching labels") {
  const SpineSubstitution f = lift_of(kDisc, "s1");
  CHECK_THROWS_AS(compose_lifts(f, f), DomainError);
}

TEST_CASE("inversion is two-sided") {
  std::mt19937 rng(52);
  for (int round = 0; round < 80; ++round) {
    const int d = 3 + (round % 2);
    const int n = 3 + (round % 3);
    const LabelTuple t = testsupport::random_label_tuple(rng, d, n);
    const SpineSubstitution f =
        compute_lift(ColoredBraid(t, testsupport::random_word(rng, n, 1 + round % 8)));
    const SpineSubstitution inv = invert_lift(f);
    CHECK(is_identity(compose_lifts(inv, f)));
    CHECK(is_identity(compose_lifts(f, inv)));
    CHECK(invert_lift(inv) == f);
  }
  CHECK(invert_lift(lift_of(kDisc, "s1")) == lift_of(tuple_d3({{1, 3}, {1, 2}}), "s1^-1"));
  const SpineSubstitution id = lift_of(kDisc, "");
  CHECK(invert_lift(id) == id);
}

TEST_CASE("factorization independence: braid relations leave the lift unchanged") {
  std::mt19937 rng(53);
  for (int round = 0; round < 100; ++round) {
    const int d = 3 + (round % 2);
    const int n = 3 + (round % 3);
    const LabelTuple t = testsupport::random_label_tuple(rng, d, n);
    BraidWord word = testsupport::random_word(rng, n, 6);
    const SpineSubstitution base = compute_lift(ColoredBraid(t, word));

    std::uniform_int_distribution<size_t> pos(0, word.gens.size());
    std::uniform_int_distribution<int> pick(1, n - 1);
    const size_t at = pos(rng);
    BraidWord inserted = word;
    switch (round % 3) {
      case 0: {
        const int i = pick(rng);
        const std::vector<BraidGenerator> pair{{i, 1}, {i, -1}};
        inserted.gens.insert(inserted.gens.begin() + static_cast<long>(at), pair.begin(), pair.end());
        break;
      }
      case 1: {
        std::uniform_int_distribution<int> pick_low(1, n - 2);
        const int i = n >= 3 ? pick_low(rng) : 1;
        const std::vector<BraidGenerator> relator{{i, 1},      {i + 1, 1}, {i, 1},
                                                  {i + 1, -1}, {i, -1},    {i + 1, -1}};
        inserted.gens.insert(inserted.gens.begin() + static_cast<long>(at), relator.begin(), relator.end());
        break;
      }
      default: {
        if (n < 4) continue;
        const std::vector<BraidGenerator> comm{{1, 1}, {n - 1, 1}, {1, -1}, {n - 1, -1}};
        inserted.gens.insert(inserted.gens.begin() + static_cast<long>(at), comm.begin(), comm.end());
        break;
      }
    }
    CHECK(compute_lift(ColoredBraid(t, inserted)) == base);
  }
}

TEST_CASE("trivial braids lift to the identity substitution") {
  std::mt19937 rng(56);
  for (int round = 0; round < 80; ++round) {
    const int d = 3 + (round % 2);
    const int n = 3 + (round % 3);
    const LabelTuple t = testsupport::random_label_tuple(rng, d, n);
    std::uniform_int_distribution<int> pick(1, n - 1);
    const int i = pick(rng);
    CHECK(is_identity(compute_lift(ColoredBraid(t, BraidWord{{{i, 1}, {i, -1}}}))));
    if (n >= 3) {
      std::uniform_int_distribution<int> low(1, n - 2);
      const int j = low(rng);
      const BraidWord relator{{{j, 1}, {j + 1, 1}, {j, 1}, {j + 1, -1}, {j, -1}, {j + 1, -1}}};
      CHECK(is_identity(compute_lift(ColoredBraid(t, relator))));
    }
  }
}

TEST_CASE("the hidden-twist braid equals the plain twist") {
  // s1 first, then three half-twists at position 2.
  const SpineSubstitution factored = lift_of(kAnnulus, "s1 s2^3");
  const SpineSubstitution plain = lift_of(kAnnulus, "s1");
  CHECK(factored == plain);
  CHECK(classify(plain).flags.transvection_shape);
}

TEST_CASE("cycle twist powers compose in the groupoid") {
  const LabelTuple square(4, {Transposition(1, 2), Transposition(2, 3), Transposition(3, 4),
                              Transposition(1, 4)});
  const BraidWord conj = parse_braid("s1^-1 s2^-1", 4);
  auto braid_for = [&](int power) {
    BraidWord mid;
    for (int k = 0; k < power; ++k) mid.gens.push_back({3, 1});
    return conj.then(mid).then(conj.inverse());
  };
  const SpineSubstitution once = compute_lift(ColoredBraid(square, braid_for(1)));
  CHECK(once.source == once.target);

  SpineSubstitution power = once;
  for (int n = 2; n <= 3; ++n) {
    power = compose_lifts(once, power);
    CHECK(power == compute_lift(ColoredBraid(square, braid_for(n))));
  }
  CHECK(h1_action(compose_lifts(once, once)) ==
        multiply(h1_action(once), h1_action(once)));
  CHECK(classify(once).flags.transvection_shape);
}

TEST_CASE("h1 action of the identity is the identity matrix") {
  const SpineSubstitution f = lift_of(kTorus, "s3 s3^-1");
  CHECK(is_identity(f));
  CHECK(h1_action(f) == identity_matrix(2));
  const LiftReport report = classify(f);
  CHECK(report.flags.is_identity);
  CHECK(report.flags.h1_trivial);
  CHECK(report.flags.transvection_shape);
}

TEST_CASE("equal-label twist on the one-holed torus is a transvection") {
  const SpineSubstitution f = lift_of(kTorus, "s3");
  CHECK(f.source == f.target);
  const LiftReport report = classify(f);
  CHECK(report.pi1_rank == 2);
  CHECK_FALSE(report.flags.is_identity);
  CHECK_FALSE(report.flags.h1_trivial);
  CHECK(report.flags.transvection_shape);

  IntMatrix shifted = report.h1_matrix;
  for (size_t i = 0; i < shifted.size(); ++i) shifted[i][i] -= 1;
  CHECK(integer_rank(shifted) == 1);

  // The other equal-label position behaves the same way.
  const LiftReport other = classify(lift_of(kTorus, "s2"));
  CHECK(other.flags.transvection_shape);
  CHECK_FALSE(other.flags.is_identity);
}

TEST_CASE("substitutions abelianize to unimodular matrices") {
  std::mt19937 rng(54);
  for (int round = 0; round < 60; ++round) {
    const int d = 3 + (round % 2);
    const int n = 3 + (round % 3);
    const LabelTuple t = testsupport::random_label_tuple(rng, d, n);
    const BraidWord w = testsupport::random_word(rng, n, 8);
    const SpineSubstitution f = compute_lift(ColoredBraid(t, w));
    IntMatrix m(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int j = 1; j <= n; ++j)
      for (int letter : f.images[static_cast<size_t>(j - 1)].letters)
        m[static_cast<size_t>(std::abs(letter) - 1)][static_cast<size_t>(j - 1)] +=
            letter > 0 ? 1 : -1;
    const long long det = integer_determinant(m);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("arc types read off the conjugated labels") {
  const auto type1 = arc_type(kAnnulus, BraidWord{}, 1);
  CHECK(type1.type == 1);
  CHECK(type1.min_liftable_power == 1);

  const LabelTuple disjoint(4, {Transposition(1, 2), Transposition(3, 4), Transposition(2, 3)});
  CHECK(arc_type(disjoint, BraidWord{}, 1).type == 2);

  const auto type3 = arc_type(kDisc, BraidWord{}, 1);
  CHECK(type3.type == 3);
  CHECK(type3.min_liftable_power == 3);

  // Lower powers do not fix the labels.
  CHECK_FALSE(is_liftable(ColoredBraid(kDisc, parse_braid("s1", 2))));
  CHECK_FALSE(is_liftable(ColoredBraid(kDisc, parse_braid("s1^2", 2))));
  CHECK_FALSE(is_liftable(ColoredBraid(disjoint, parse_braid("s1", 3))));

  // A conjugated position reads the moved labels.
  const auto moved = arc_type(kTorus, parse_braid("s2", 4), 1);
  CHECK(moved.type == arc_type(hurwitz_apply(kTorus, parse_braid("s2", 4)), BraidWord{}, 1).type);
  CHECK_THROWS_AS(arc_type(kDisc, BraidWord{}, 5), DomainError);
}

TEST_CASE("rewritten braids certify against the original lift") {
  std::mt19937 rng(55);
  for (const LabelTuple& t : {kAnnulus, kTorus}) {
    for (int round = 0; round < 25; ++round) {
      const ColoredBraid braid(t, testsupport::random_word(rng, t.size(), 1 + round % 8));
      const ColoredBraid rewritten = remove_same_label_crossings(braid);
      CHECK(compute_lift(rewritten) == compute_lift(braid));
    }
  }
}
