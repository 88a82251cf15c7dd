#include "braidlift/braid.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidlift {

LabelTuple::LabelTuple(int degree, std::vector<Transposition> labels)
    : d_(degree), labels_(std::move(labels)) {
  if (d_ < 3) throw DomainError("label tuple needs degree d >= 3");
  if (labels_.size() < 2) throw DomainError("label tuple needs n >= 2 labels");
  for (const auto& t : labels_)
    if (t.max_point() > d_)
      throw DomainError("label " + t.str() + " exceeds degree " + std::to_string(d_));
  if (!is_transitive(labels_, d_))
    throw DomainError("labels do not generate a transitive subgroup (disconnected cover)");
}

const Transposition& LabelTuple::at(int i) const {
  if (i < 1 || i > size()) throw DomainError("label index out of range");
  return labels_[static_cast<size_t>(i - 1)];
}

bool LabelTuple::operator<(const LabelTuple& o) const {
  if (d_ != o.d_) return d_ < o.d_;
  return labels_ < o.labels_;
}

std::string LabelTuple::str() const {
  std::ostringstream os;
  os << "d=" << d_ << ": ";
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << labels_[static_cast<size_t>(i)].str();
  return os.str();
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.gens.reserve(gens.size());
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    out.gens.push_back({it->index, -it->sign});
  return out;
}

BraidWord BraidWord::then(const BraidWord& next) const {
  BraidWord out = *this;
  out.gens.insert(out.gens.end(), next.gens.begin(), next.gens.end());
  return out;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < gens.size()) {
    size_t j = i;
    while (j < gens.size() && gens[j] == gens[i]) ++j;
    const long long exp = static_cast<long long>(j - i) * gens[i].sign;
    if (!first) os << " ";
    first = false;
    os << "s" << gens[i].index;
    if (exp != 1) os << "^" << exp;
    i = j;
  }
  return os.str();
}

BraidWord parse_braid(const std::string& text, int strand_count) {
  if (strand_count < 2) throw DomainError("braid needs at least 2 strands");
  BraidWord word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] != 's')
      throw DomainError("bad braid token '" + tok + "': expected s<i>[^<exp>]");
    size_t pos = 1;
    size_t used = 0;
    int index = 0;
    long long exp = 1;
    try {
      index = std::stoi(tok.substr(pos), &used);
    } catch (const std::exception&) {
      throw DomainError("bad braid token '" + tok + "'");
    }
    pos += used;
    if (pos < tok.size()) {
      if (tok[pos] != '^') throw DomainError("bad braid token '" + tok + "'");
      try {
        exp = std::stoll(tok.substr(pos + 1), &used);
      } catch (const std::exception&) {
        throw DomainError("bad exponent in '" + tok + "'");
      }
      if (pos + 1 + used != tok.size()) throw DomainError("bad braid token '" + tok + "'");
      if (exp == 0) throw DomainError("zero exponent in '" + tok + "'");
    }
    if (index < 1 || index >= strand_count)
      throw DomainError("generator index " + std::to_string(index) +
                        " out of range [1, " + std::to_string(strand_count - 1) + "]");
    const int sign = exp > 0 ? 1 : -1;
    for (long long k = 0; k < (exp > 0 ? exp : -exp); ++k)
      word.gens.push_back({index, sign});
  }
  return word;
}

LabelTuple parse_label_tuple(const std::string& text, int degree) {
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  auto read_int = [&] {
    skip_ws();
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw DomainError("expected integer at position " + std::to_string(pos) + " in label tuple");
    }
    pos += used;
    return v;
  };

  skip_ws();
  if (pos < text.size() && text[pos] == 'd') {
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != '=') throw DomainError("expected '=' after 'd' in label tuple header");
    ++pos;
    const int head = read_int();
    if (degree != 0 && degree != head)
      throw DomainError("label tuple header d=" + std::to_string(head) +
                        " disagrees with degree " + std::to_string(degree));
    degree = head;
    skip_ws();
    if (pos < text.size() && text[pos] == ':') ++pos;
  }
  if (degree == 0) throw DomainError("label tuple needs a degree (d=<int> header or explicit degree)");

  std::vector<Transposition> labels;
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw DomainError("expected '(' in label tuple");
    ++pos;
    const int a = read_int();
    const int b = read_int();
    skip_ws();
    if (pos >= text.size() || text[pos] != ')') throw DomainError("expected ')' in label tuple");
    ++pos;
    labels.emplace_back(a, b);
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != ',') throw DomainError("expected ',' between label tuple items");
      ++pos;
      skip_ws();
    }
  }
  return LabelTuple(degree, std::move(labels));
}

ColoredBraid::ColoredBraid(LabelTuple init, BraidWord w)
    : initial(std::move(init)), word(std::move(w)) {
  for (const auto& g : word.gens)
    if (g.index < 1 || g.index >= initial.size())
      throw DomainError("braid generator index out of range for n=" + std::to_string(initial.size()));
}

LabelTuple ColoredBraid::terminal() const { return hurwitz_apply(initial, word); }

namespace {

void hurwitz_step_inplace(std::vector<Transposition>& labels, int i, int sign) {
  auto& left = labels[static_cast<size_t>(i - 1)];
  auto& right = labels[static_cast<size_t>(i)];
  if (sign > 0) {
    const Transposition moved = conjugate(right, left);
    right = left;
    left = moved;
  } else {
    const Transposition moved = conjugate(left, right);
    left = right;
    right = moved;
  }
}

}  // namespace

LabelTuple hurwitz_step(const LabelTuple& tuple, int i, int sign) {
  if (i < 1 || i >= tuple.size()) throw DomainError("hurwitz index out of range");
  std::vector<Transposition> labels = tuple.labels();
  hurwitz_step_inplace(labels, i, sign);
  return LabelTuple(tuple.degree(), std::move(labels));
}

LabelTuple hurwitz_apply(const LabelTuple& tuple, const BraidWord& word) {
  std::vector<Transposition> labels = tuple.labels();
  for (const auto& g : word.gens) {
    if (g.index < 1 || g.index >= tuple.size()) throw DomainError("hurwitz index out of range");
    hurwitz_step_inplace(labels, g.index, g.sign);
  }
  return LabelTuple(tuple.degree(), std::move(labels));
}

bool is_liftable(const ColoredBraid& braid) { return braid.terminal() == braid.initial; }

Permutation total_monodromy(const LabelTuple& tuple) {
  Permutation mu(tuple.degree());
  for (const auto& t : tuple.labels())
    mu = compose(mu, Permutation::from_transposition(t, tuple.degree()));
  return mu;
}

LabelTuple canonical_label(const LabelTuple& tuple) {
  const int d = tuple.degree();
  const int n = tuple.size();
  const Permutation mu = total_monodromy(tuple);

  std::vector<LabelTuple> matches;
  // Counts for (j j+1), j < d-1, are 1 or 2; the final transposition takes
  // the remaining odd count >= 1.
  const int choices = d - 2;
  for (int mask = 0; mask < (1 << choices); ++mask) {
    int used = 0;
    for (int j = 0; j < choices; ++j) used += ((mask >> j) & 1) ? 2 : 1;
    const int last = n - used;
    if (last < 1 || last % 2 == 0) continue;
    std::vector<Transposition> labels;
    for (int j = 0; j < choices; ++j) {
      const int copies = ((mask >> j) & 1) ? 2 : 1;
      for (int c = 0; c < copies; ++c) labels.emplace_back(j + 1, j + 2);
    }
    for (int c = 0; c < last; ++c) labels.emplace_back(d - 1, d);
    LabelTuple candidate(d, std::move(labels));
    if (conjugate_in_sd(total_monodromy(candidate), mu)) matches.push_back(std::move(candidate));
  }
  if (matches.empty())
    throw DomainError("no normal-form tuple of length " + std::to_string(n) +
                      " matches the total monodromy of " + tuple.str());
  // The form is unique for d <= 4; for larger d distinct doubling patterns can
  // collide in cycle type, so take the lexicographically least match.
  return *std::min_element(matches.begin(), matches.end());
}

bool equivalent_covers(const LabelTuple& t1, const LabelTuple& t2) {
  if (t1.degree() != t2.degree() || t1.size() != t2.size())
    throw DomainError("cover equivalence needs matching n and d");
  return conjugate_in_sd(total_monodromy(t1), total_monodromy(t2));
}

namespace {

using RawTuple = std::vector<Transposition>;

std::vector<RawTuple> neighbours(const RawTuple& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<RawTuple> out;
  out.reserve(static_cast<size_t>(2 * (n - 1)));
  for (int i = 1; i < n; ++i) {
    for (int sign : {+1, -1}) {
      RawTuple next = labels;
      hurwitz_step_inplace(next, i, sign);
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<LabelTuple> orbit_result(int d, std::vector<RawTuple> visited) {
  std::sort(visited.begin(), visited.end());
  std::vector<LabelTuple> out;
  out.reserve(visited.size());
  for (auto& raw : visited) out.emplace_back(d, std::move(raw));
  return out;
}

}  // namespace

std::vector<LabelTuple> hurwitz_orbit_serial(const LabelTuple& tuple) {
  std::set<RawTuple> visited;
  std::vector<RawTuple> frontier{tuple.labels()};
  visited.insert(tuple.labels());
  while (!frontier.empty()) {
    std::vector<RawTuple> next;
    for (const auto& raw : frontier)
      for (auto& nb : neighbours(raw))
        if (visited.insert(nb).second) next.push_back(std::move(nb));
    frontier = std::move(next);
  }
  return orbit_result(tuple.degree(), {visited.begin(), visited.end()});
}

namespace {

// Packed tuple codec for the parallel kernel: one byte (a<<4)|b per label.
// Byte order preserves the lexicographic order of the label vectors, and
// short tuples stay inside the small-string buffer, so frontier expansion
// does not touch the heap.
std::string pack_tuple(const RawTuple& labels) {
  std::string out;
  out.reserve(labels.size());
  for (const auto& t : labels) out.push_back(static_cast<char>((t.a << 4) | t.b));
  return out;
}

RawTuple unpack_tuple(const std::string& packed) {
  RawTuple labels;
  for (char c : packed) {
    const int byte = static_cast<unsigned char>(c);
    labels.emplace_back(byte >> 4, byte & 0xf);
  }
  return labels;
}

void packed_step(std::string& tuple, int i, int sign) {
  const size_t left = static_cast<size_t>(i - 1);
  auto get = [&](size_t at, int& a, int& b) {
    const int byte = static_cast<unsigned char>(tuple[at]);
    a = byte >> 4;
    b = byte & 0xf;
  };
  auto put = [&](size_t at, int a, int b) {
    if (a > b) std::swap(a, b);
    tuple[at] = static_cast<char>((a << 4) | b);
  };
  int la, lb, ra, rb;
  get(left, la, lb);
  get(left + 1, ra, rb);
  auto swap_through = [](int x, int u, int v) { return x == u ? v : (x == v ? u : x); };
  if (sign > 0) {
    put(left, swap_through(ra, la, lb), swap_through(rb, la, lb));
    put(left + 1, la, lb);
  } else {
    put(left, ra, rb);
    put(left + 1, swap_through(la, ra, rb), swap_through(lb, ra, rb));
  }
}

}  // namespace

std::vector<LabelTuple> hurwitz_orbit(const LabelTuple& tuple) {
  const int n = tuple.size();
  // Orbits beyond d = 15 are out of enumeration reach anyway; keep the
  // packed codec to one byte per label.
  if (tuple.degree() > 15) return hurwitz_orbit_serial(tuple);

  std::vector<std::string> visited{pack_tuple(tuple.labels())};  // kept sorted
  std::vector<std::string> frontier = visited;
  while (!frontier.empty()) {
    // Expand and locally dedup per thread, then merge the sorted runs.
    std::vector<std::vector<std::string>> runs;
#ifdef _OPENMP
#pragma omp parallel
    {
#pragma omp single
      runs.resize(static_cast<size_t>(omp_get_num_threads()));
      std::vector<std::string>& local = runs[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (long long k = 0; k < static_cast<long long>(frontier.size()); ++k) {
        for (int i = 1; i < n; ++i) {
          for (int sign : {+1, -1}) {
            std::string next = frontier[static_cast<size_t>(k)];
            packed_step(next, i, sign);
            local.push_back(std::move(next));
          }
        }
      }
      std::sort(local.begin(), local.end());
      local.erase(std::unique(local.begin(), local.end()), local.end());
    }
#else
    runs.emplace_back();
    for (const auto& raw : frontier) {
      for (int i = 1; i < n; ++i) {
        for (int sign : {+1, -1}) {
          std::string next = raw;
          packed_step(next, i, sign);
          runs.back().push_back(std::move(next));
        }
      }
    }
    std::sort(runs.back().begin(), runs.back().end());
    runs.back().erase(std::unique(runs.back().begin(), runs.back().end()), runs.back().end());
#endif
    std::vector<std::string> candidates = std::move(runs.front());
    for (size_t r = 1; r < runs.size(); ++r) {
      std::vector<std::string> merged;
      merged.reserve(candidates.size() + runs[r].size());
      std::merge(std::make_move_iterator(candidates.begin()), std::make_move_iterator(candidates.end()),
                 std::make_move_iterator(runs[r].begin()), std::make_move_iterator(runs[r].end()),
                 std::back_inserter(merged));
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      candidates = std::move(merged);
    }

    std::vector<char> fresh_flag(candidates.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long k = 0; k < static_cast<long long>(candidates.size()); ++k)
      fresh_flag[static_cast<size_t>(k)] =
          !std::binary_search(visited.begin(), visited.end(), candidates[static_cast<size_t>(k)]);

    std::vector<std::string> fresh;
    for (size_t k = 0; k < candidates.size(); ++k)
      if (fresh_flag[k]) fresh.push_back(std::move(candidates[k]));
    const size_t old = visited.size();
    visited.insert(visited.end(), fresh.begin(), fresh.end());
    std::inplace_merge(visited.begin(), visited.begin() + static_cast<long>(old), visited.end());
    frontier = std::move(fresh);
  }

  std::vector<RawTuple> raw;
  raw.reserve(visited.size());
  for (const auto& packed : visited) raw.push_back(unpack_tuple(packed));
  return orbit_result(tuple.degree(), std::move(raw));
}

namespace {

// A strand label can serve as the pulled-through helper for a crossing of
// two strands labelled t iff it differs from t and does not commute with it.
bool helper_label(const Transposition& candidate, const Transposition& t) {
  return candidate != t && !candidate.disjoint_from(t);
}

void emit(std::vector<BraidGenerator>& out, std::vector<Transposition>& cur,
          int index, int sign) {
  out.push_back({index, sign});
  hurwitz_step_inplace(cur, index, sign);
}

// Replaces sigma_i^sign, whose strands i and i+1 carry equal labels, by an
// equal braid element whose crossings all involve distinct labels.  The
// helper strand sits immediately right (position i+2) or left (position i-1)
// of the crossing pair.
void emit_pull_through(std::vector<BraidGenerator>& out, std::vector<Transposition>& cur,
                       int i, int sign, bool helper_on_right) {
  const int c = helper_on_right ? i + 1 : i - 1;
  if (sign > 0) {
    emit(out, cur, c, -1);
    emit(out, cur, i, +1);
    emit(out, cur, c, +1);
    emit(out, cur, i, +1);
    emit(out, cur, c, -1);
  } else {
    emit(out, cur, c, +1);
    emit(out, cur, i, -1);
    emit(out, cur, c, -1);
    emit(out, cur, i, -1);
    emit(out, cur, c, +1);
  }
}

}  // namespace

ColoredBraid remove_same_label_crossings(const ColoredBraid& braid) {
  const int n = braid.initial.size();
  std::vector<Transposition> cur = braid.initial.labels();
  std::vector<BraidGenerator> out;

  for (const auto& g : braid.word.gens) {
    const int i = g.index;
    const Transposition t = cur[static_cast<size_t>(i - 1)];
    if (cur[static_cast<size_t>(i)] != t) {
      emit(out, cur, i, g.sign);
      continue;
    }

    // Nearest helper strand, alternating right/left from the crossing pair.
    int helper_pos = 0;
    for (int dist = 1; dist <= n && helper_pos == 0; ++dist) {
      const int right = i + 1 + dist;
      const int left = i - dist;
      if (right <= n && helper_label(cur[static_cast<size_t>(right - 1)], t)) helper_pos = right;
      else if (left >= 1 && helper_label(cur[static_cast<size_t>(left - 1)], t)) helper_pos = left;
    }
    if (helper_pos == 0)
      throw DomainError("no differently-labelled non-disjoint strand available to pull through "
                        "the crossing at position " + std::to_string(i));

    const std::vector<Transposition> before = cur;
    if (helper_pos > i + 1) {
      // Strands strictly between carry labels equal to t or disjoint from t,
      // so transporting the helper over them crosses distinct labels only.
      for (int m = helper_pos - 1; m >= i + 2; --m) emit(out, cur, m, -1);
      emit_pull_through(out, cur, i, g.sign, /*helper_on_right=*/true);
      for (int m = i + 2; m <= helper_pos - 1; ++m) emit(out, cur, m, +1);
    } else {
      for (int m = helper_pos; m <= i - 2; ++m) emit(out, cur, m, +1);
      emit_pull_through(out, cur, i, g.sign, /*helper_on_right=*/false);
      for (int m = i - 2; m >= helper_pos; --m) emit(out, cur, m, -1);
    }
    if (cur != before)
      throw std::logic_error("pull-through block failed to restore the label tuple");
  }

  // Every emitted crossing was checked good at emission time; re-verify.
  {
    std::vector<Transposition> check = braid.initial.labels();
    for (const auto& g : out) {
      if (check[static_cast<size_t>(g.index - 1)] == check[static_cast<size_t>(g.index)])
        throw std::logic_error("rewriting left an equal-label crossing");
      hurwitz_step_inplace(check, g.index, g.sign);
    }
  }
  return ColoredBraid(braid.initial, BraidWord{std::move(out)});
}

}  // namespace braidlift
