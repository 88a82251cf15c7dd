#include "braidlift/lift.hpp"

#include <algorithm>

namespace braidlift {

namespace {

// Re-orients an arc to run from the smaller endpoint of the matching edge.
ArcWord oriented_image(const ArcWord& arc, const Transposition& edge) {
  if (!((arc.start == edge.a && arc.end == edge.b) || (arc.start == edge.b && arc.end == edge.a)))
    throw std::logic_error("image endpoints do not match the target edge");
  if (arc.start == edge.a) return arc;
  ArcWord out;
  out.letters = reversed_letters(arc.letters);
  out.start = edge.a;
  out.end = edge.b;
  return out;
}

}  // namespace

SpineSubstitution compute_lift(const ColoredBraid& braid) {
  const GraphicalObject moved = apply_morphism(canonical_object(braid.initial), braid.word);
  const LabelTuple target = label_of(moved);
  if (target != braid.terminal())
    throw std::logic_error("arc endpoints disagree with the Hurwitz action");

  std::vector<ArcWord> images;
  images.reserve(moved.arcs().size());
  for (int j = 1; j <= target.size(); ++j)
    images.push_back(oriented_image(moved.arc(j), target.at(j)));
  return SpineSubstitution{braid.initial, target, std::move(images), braid.word};
}

SpineSubstitution compose_lifts(const SpineSubstitution& g, const SpineSubstitution& f) {
  if (f.target != g.source)
    throw DomainError("lifts are not composable: intermediate labels disagree");
  std::vector<ArcWord> images;
  images.reserve(g.images.size());
  for (int j = 1; j <= g.target.size(); ++j) {
    std::vector<int> letters;
    for (int letter : g.images[static_cast<size_t>(j - 1)].letters) {
      const auto& piece = f.images[static_cast<size_t>(letter > 0 ? letter - 1 : -letter - 1)];
      if (letter > 0) letters.insert(letters.end(), piece.letters.begin(), piece.letters.end());
      else {
        const auto rev = reversed_letters(piece.letters);
        letters.insert(letters.end(), rev.begin(), rev.end());
      }
    }
    ArcWord image;
    image.letters = reduce_letters(std::move(letters));
    if (image.letters.empty()) throw std::logic_error("composed image reduced to a point");
    image.start = g.target.at(j).a;
    image.end = g.target.at(j).b;
    images.push_back(oriented_image(image, g.target.at(j)));
  }
  return SpineSubstitution{f.source, g.target, std::move(images), f.word.then(g.word)};
}

SpineSubstitution invert_lift(const SpineSubstitution& f) {
  return compute_lift(ColoredBraid(f.target, f.word.inverse()));
}

bool is_identity(const SpineSubstitution& f) {
  if (f.source != f.target) throw DomainError("identity test needs source == target");
  for (int j = 1; j <= f.target.size(); ++j)
    if (f.images[static_cast<size_t>(j - 1)].letters != std::vector<int>{j}) return false;
  return true;
}

namespace {

struct TreeData {
  std::vector<bool> in_tree;           // per edge
  std::vector<int> parent_vertex;      // per vertex (1-based), 0 at root
  std::vector<int> parent_letter;      // signed edge letter leading to parent
  std::vector<int> loop_edges;         // non-tree edge indices, ascending
};

TreeData lowest_index_tree(const Spine& spine) {
  const int d = spine.vertex_count;
  const int n = spine.edge_count();
  TreeData tree;
  tree.in_tree.assign(static_cast<size_t>(n), false);
  std::vector<int> root(static_cast<size_t>(d));
  for (int v = 0; v < d; ++v) root[static_cast<size_t>(v)] = v;
  auto find = [&](int x) {
    while (root[static_cast<size_t>(x)] != x) x = root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
    return x;
  };
  for (int e = 1; e <= n; ++e) {
    const auto& t = spine.edges[static_cast<size_t>(e - 1)];
    const int ra = find(t.a - 1);
    const int rb = find(t.b - 1);
    if (ra != rb) {
      root[static_cast<size_t>(ra)] = rb;
      tree.in_tree[static_cast<size_t>(e - 1)] = true;
    } else {
      tree.loop_edges.push_back(e);
    }
  }

  tree.parent_vertex.assign(static_cast<size_t>(d + 1), 0);
  tree.parent_letter.assign(static_cast<size_t>(d + 1), 0);
  std::vector<bool> placed(static_cast<size_t>(d + 1), false);
  placed[1] = true;
  std::vector<int> frontier{1};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int e = 1; e <= n; ++e) {
        if (!tree.in_tree[static_cast<size_t>(e - 1)]) continue;
        const auto& t = spine.edges[static_cast<size_t>(e - 1)];
        int w = 0;
        int letter = 0;
        if (t.a == v) { w = t.b; letter = -e; }   // parent step w -> v uses reversed edge
        else if (t.b == v) { w = t.a; letter = e; }
        else continue;
        if (!placed[static_cast<size_t>(w)]) {
          placed[static_cast<size_t>(w)] = true;
          tree.parent_vertex[static_cast<size_t>(w)] = v;
          tree.parent_letter[static_cast<size_t>(w)] = letter;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

// Chain of the tree path from u to v (signed edge counts).
std::vector<long long> tree_path_chain(const TreeData& tree, int n, int u, int v) {
  std::vector<long long> chain(static_cast<size_t>(n), 0);
  // Walk both vertices to the root, recording chains; path u->v = u->root - v->root.
  auto add_to_root = [&](int x, long long s) {
    while (tree.parent_vertex[static_cast<size_t>(x)] != 0) {
      const int letter = tree.parent_letter[static_cast<size_t>(x)];
      chain[static_cast<size_t>((letter > 0 ? letter : -letter) - 1)] += letter > 0 ? s : -s;
      x = tree.parent_vertex[static_cast<size_t>(x)];
    }
  };
  add_to_root(u, +1);
  add_to_root(v, -1);
  return chain;
}

std::vector<long long> image_chain(const SpineSubstitution& f, int edge) {
  std::vector<long long> chain(static_cast<size_t>(f.source.size()), 0);
  for (int letter : f.images[static_cast<size_t>(edge - 1)].letters)
    chain[static_cast<size_t>((letter > 0 ? letter : -letter) - 1)] += letter > 0 ? 1 : -1;
  return chain;
}

}  // namespace

IntMatrix h1_action(const SpineSubstitution& f) {
  if (f.source != f.target) throw DomainError("H1 action needs source == target");
  const Spine spine = build_spine(f.source);
  const int n = spine.edge_count();
  const TreeData tree = lowest_index_tree(spine);
  const int rank = static_cast<int>(tree.loop_edges.size());

  IntMatrix m(static_cast<size_t>(rank), std::vector<long long>(static_cast<size_t>(rank), 0));
  for (int col = 0; col < rank; ++col) {
    const int loop_edge = tree.loop_edges[static_cast<size_t>(col)];
    const auto& ends = spine.edges[static_cast<size_t>(loop_edge - 1)];
    // Loop generator: the edge itself plus the tree path closing it up.
    std::vector<long long> loop_chain = tree_path_chain(tree, n, ends.b, ends.a);
    loop_chain[static_cast<size_t>(loop_edge - 1)] += 1;

    std::vector<long long> image(static_cast<size_t>(n), 0);
    for (int e = 1; e <= n; ++e) {
      const long long c = loop_chain[static_cast<size_t>(e - 1)];
      if (c == 0) continue;
      const auto chain = image_chain(f, e);
      for (int k = 0; k < n; ++k) image[static_cast<size_t>(k)] += c * chain[static_cast<size_t>(k)];
    }
    // A 1-cycle is determined by its coefficients on the non-tree edges.
    for (int row = 0; row < rank; ++row)
      m[static_cast<size_t>(row)][static_cast<size_t>(col)] =
          image[static_cast<size_t>(tree.loop_edges[static_cast<size_t>(row)] - 1)];
  }
  return m;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size();
  const size_t p = b.empty() ? 0 : b[0].size();
  const size_t k = b.size();
  IntMatrix out(n, std::vector<long long>(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j)
      if (a[i][j] != 0)
        for (size_t c = 0; c < p; ++c) out[i][c] += a[i][j] * b[j][c];
  return out;
}

int integer_rank(IntMatrix m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  size_t rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const long long f1 = m[row][col];
      const long long f2 = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] * f1 - m[row][c] * f2;
    }
    ++row;
    ++rank;
  }
  return static_cast<int>(rank);
}

LiftReport classify(const SpineSubstitution& f) {
  if (f.source != f.target) throw DomainError("classification needs source == target");
  LiftReport report;
  report.liftable = true;
  report.pi1_rank = f.source.size() - f.source.degree() + 1;
  report.h1_matrix = h1_action(f);
  report.flags.is_identity = is_identity(f);
  const int rank = static_cast<int>(report.h1_matrix.size());
  report.flags.h1_trivial = report.h1_matrix == identity_matrix(rank);

  IntMatrix shifted = report.h1_matrix;
  for (int i = 0; i < rank; ++i) shifted[static_cast<size_t>(i)][static_cast<size_t>(i)] -= 1;
  const bool square_zero =
      multiply(shifted, shifted) == IntMatrix(static_cast<size_t>(rank), std::vector<long long>(static_cast<size_t>(rank), 0));
  report.flags.transvection_shape = square_zero && integer_rank(shifted) <= 1;
  return report;
}

LiftReport lift_report(const SpineSubstitution& f) {
  if (f.source == f.target) return classify(f);
  LiftReport report;
  report.liftable = false;
  report.pi1_rank = f.source.size() - f.source.degree() + 1;
  return report;
}

ArcTypeResult arc_type(const LabelTuple& tuple, const BraidWord& conj, int i) {
  const LabelTuple moved = hurwitz_apply(tuple, conj);
  if (i < 1 || i >= moved.size()) throw DomainError("arc position out of range");
  const Transposition& s = moved.at(i);
  const Transposition& t = moved.at(i + 1);

  ArcTypeResult result;
  if (s == t) result.type = 1;
  else if (s.disjoint_from(t)) result.type = 2;
  else result.type = 3;
  result.min_liftable_power = result.type;

  BraidWord power;
  for (int k = 0; k < result.type; ++k) power.gens.push_back({i, +1});
  const BraidWord whole = conj.then(power).then(conj.inverse());
  if (hurwitz_apply(tuple, whole) != tuple)
    throw std::logic_error("conjugated power of the twist fails to fix the labels");
  return result;
}

}  // namespace braidlift
