#include "braidlift/graphical.hpp"

#include <algorithm>
#include <sstream>

namespace braidlift {

namespace {

int letter_edge(int letter) { return letter > 0 ? letter : -letter; }

int letter_source(const Spine& spine, int letter) {
  const auto& e = spine.edges[static_cast<size_t>(letter_edge(letter) - 1)];
  return letter > 0 ? e.a : e.b;
}

int letter_target(const Spine& spine, int letter) {
  const auto& e = spine.edges[static_cast<size_t>(letter_edge(letter) - 1)];
  return letter > 0 ? e.b : e.a;
}

// Orientation-normalisation order: by edge index, then forward before reversed.
bool letter_less(int x, int y) {
  if (letter_edge(x) != letter_edge(y)) return letter_edge(x) < letter_edge(y);
  return x > 0 && y < 0;
}

bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
  const size_t m = std::min(a.size(), b.size());
  for (size_t k = 0; k < m; ++k) {
    if (a[k] != b[k]) return letter_less(a[k], b[k]);
  }
  return a.size() < b.size();
}

}  // namespace

std::string ArcWord::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < letters.size(); ++k) {
    if (k) os << " ";
    const int letter = letters[k];
    os << (letter > 0 ? "e" : "E") << letter_edge(letter);
  }
  return os.str();
}

std::vector<int> reversed_letters(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(-*it);
  return out;
}

std::vector<int> reduce_letters(std::vector<int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int letter : letters) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

ArcWord make_arc(const Spine& spine, std::vector<int> letters) {
  for (int letter : letters) {
    const int e = letter_edge(letter);
    if (e < 1 || e > spine.edge_count()) throw DomainError("arc letter names a missing edge");
  }
  for (size_t k = 0; k + 1 < letters.size(); ++k)
    if (letter_target(spine, letters[k]) != letter_source(spine, letters[k + 1]))
      throw DomainError("arc letters do not form a path");
  letters = reduce_letters(std::move(letters));
  if (letters.empty()) throw DomainError("arc reduces to a point");

  std::vector<int> rev = reversed_letters(letters);
  if (word_less(rev, letters)) letters = std::move(rev);

  ArcWord arc;
  arc.start = letter_source(spine, letters.front());
  arc.end = letter_target(spine, letters.back());
  arc.letters = std::move(letters);
  return arc;
}

GraphicalObject::GraphicalObject(LabelTuple reference, std::vector<ArcWord> arcs)
    : reference_(std::move(reference)), spine_(build_spine(reference_)), arcs_(std::move(arcs)) {
  if (static_cast<int>(arcs_.size()) != reference_.size())
    throw DomainError("object needs one arc per branch value");
  for (auto& arc : arcs_) arc = make_arc(spine_, arc.letters);
}

const ArcWord& GraphicalObject::arc(int i) const {
  if (i < 1 || i > static_cast<int>(arcs_.size())) throw DomainError("arc index out of range");
  return arcs_[static_cast<size_t>(i - 1)];
}

std::string GraphicalObject::key() const {
  std::ostringstream os;
  os << reference_.str() << " | ";
  for (size_t j = 0; j < arcs_.size(); ++j) os << (j ? "; " : "") << arcs_[j].str();
  return os.str();
}

GraphicalObject canonical_object(const LabelTuple& tuple) {
  const Spine spine = build_spine(tuple);
  std::vector<ArcWord> arcs;
  arcs.reserve(static_cast<size_t>(tuple.size()));
  for (int j = 1; j <= tuple.size(); ++j) arcs.push_back(make_arc(spine, {j}));
  return GraphicalObject(tuple, std::move(arcs));
}

LabelTuple label_of(const GraphicalObject& object) {
  std::vector<Transposition> labels;
  labels.reserve(object.arcs().size());
  for (const auto& arc : object.arcs()) labels.emplace_back(arc.start, arc.end);
  return LabelTuple(object.reference().degree(), std::move(labels));
}

namespace {

// Letters of the arc read from the given endpoint.
std::vector<int> oriented_from(const ArcWord& arc, int from) {
  if (arc.start == from) return arc.letters;
  if (arc.end == from) return reversed_letters(arc.letters);
  throw std::logic_error("arc is not incident to the requested basepoint");
}

int other_endpoint(const ArcWord& arc, int v) {
  return arc.start == v ? arc.end : arc.start;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

GraphicalObject apply_generator(const GraphicalObject& object, int i, int sign) {
  const int n = static_cast<int>(object.arcs().size());
  if (i < 1 || i >= n) throw DomainError("generator index out of range");
  if (sign != 1 && sign != -1) throw DomainError("generator sign must be +1 or -1");

  const Spine& spine = object.spine();
  const ArcWord& a = object.arc(i);
  const ArcWord& b = object.arc(i + 1);
  if (a.start == a.end || b.start == b.end)
    throw DomainError("arcslide needs arcs with distinct endpoints");

  std::vector<int> shared;
  for (int v : {a.start, a.end})
    if (v == b.start || v == b.end) shared.push_back(v);

  std::vector<ArcWord> arcs = object.arcs();
  ArcWord& slot_i = arcs[static_cast<size_t>(i - 1)];
  ArcWord& slot_next = arcs[static_cast<size_t>(i)];

  if (shared.empty()) {
    // Disjoint arcs: pure index swap.
    slot_i = b;
    slot_next = a;
  } else if (shared.size() == 1) {
    const int v = shared.front();
    const int free_a = other_endpoint(a, v);
    const ArcWord through = make_arc(spine, concat(oriented_from(a, free_a), oriented_from(b, v)));
    if (sign > 0) {
      slot_i = through;
      slot_next = a;
    } else {
      const int free_b = other_endpoint(b, v);
      slot_i = b;
      slot_next = make_arc(spine, concat(oriented_from(b, free_b), oriented_from(a, v)));
    }
  } else {
    // Equal labels: orient both arcs from the smaller endpoint.
    const int u = std::min(shared[0], shared[1]);
    const std::vector<int> aw = oriented_from(a, u);
    const std::vector<int> bw = oriented_from(b, u);
    if (sign > 0) {
      slot_i = make_arc(spine, concat(concat(aw, reversed_letters(bw)), aw));
      slot_next = a;
    } else {
      slot_i = b;
      slot_next = make_arc(spine, concat(concat(bw, reversed_letters(aw)), bw));
    }
  }
  return GraphicalObject(object.reference(), std::move(arcs));
}

GraphicalObject apply_morphism(const GraphicalObject& object, const BraidWord& word) {
  GraphicalObject out = object;
  for (const auto& g : word.gens) out = apply_generator(out, g.index, g.sign);
  return out;
}

bool objects_equal(const GraphicalObject& a, const GraphicalObject& b) { return a == b; }

std::vector<std::vector<long long>> abelianized_matrix(const GraphicalObject& object) {
  const int n = static_cast<int>(object.arcs().size());
  std::vector<std::vector<long long>> m(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
  for (int j = 1; j <= n; ++j)
    for (int letter : object.arc(j).letters)
      m[static_cast<size_t>(letter_edge(letter) - 1)][static_cast<size_t>(j - 1)] += letter > 0 ? 1 : -1;
  return m;
}

long long integer_determinant(std::vector<std::vector<long long>> m) {
  const size_t n = m.size();
  long long sign = 1;
  long long prev = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (size_t r = k + 1; r < n; ++r) {
      for (size_t c = k + 1; c < n; ++c)
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

ObjectReport validate_object(const GraphicalObject& object) {
  ObjectReport report;
  const int d = object.reference().degree();

  report.endpoints_distinct = true;
  for (int j = 1; j <= static_cast<int>(object.arcs().size()); ++j) {
    if (object.arc(j).start == object.arc(j).end) {
      report.endpoints_distinct = false;
      report.failures.push_back("arc " + std::to_string(j) + " has equal endpoints");
    }
  }

  std::vector<bool> hit(static_cast<size_t>(d), false);
  for (const auto& arc : object.arcs()) {
    if (arc.start >= 1 && arc.start <= d) hit[static_cast<size_t>(arc.start - 1)] = true;
    if (arc.end >= 1 && arc.end <= d) hit[static_cast<size_t>(arc.end - 1)] = true;
  }
  report.basepoints_covered = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  if (!report.basepoints_covered)
    report.failures.push_back("some basepoint is not an endpoint of any arc");

  std::vector<Transposition> endpoint_pairs;
  bool pairs_ok = report.endpoints_distinct;
  if (pairs_ok) {
    for (const auto& arc : object.arcs()) endpoint_pairs.emplace_back(arc.start, arc.end);
    report.spanning_connected = is_transitive(endpoint_pairs, d);
  }
  if (!report.spanning_connected)
    report.failures.push_back("arc endpoints do not connect all basepoints");

  const long long det = integer_determinant(abelianized_matrix(object));
  report.unimodular_substitution = (det == 1 || det == -1);
  if (!report.unimodular_substitution)
    report.failures.push_back("abelianized substitution has determinant " + std::to_string(det));

  return report;
}

}  // namespace braidlift
