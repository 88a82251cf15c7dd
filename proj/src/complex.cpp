#include "braidlift/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidlift {

LabelComplex label_complex(const LabelTuple& base) {
  LabelComplex out;
  out.vertices = hurwitz_orbit(base);
  const auto index_of = [&](const LabelTuple& t) {
    const auto it = std::lower_bound(out.vertices.begin(), out.vertices.end(), t);
    return static_cast<int>(it - out.vertices.begin());
  };
  out.base = index_of(base);
  const int n = base.size();
  for (int v = 0; v < static_cast<int>(out.vertices.size()); ++v)
    for (int i = 1; i < n; ++i)
      for (int sign : {+1, -1})
        out.edges.push_back({v, i, sign, index_of(hurwitz_step(out.vertices[static_cast<size_t>(v)], i, sign))});
  return out;
}

namespace {

std::vector<GraphicalObject> object_neighbours(const GraphicalObject& o) {
  const int n = o.reference().size();
  std::vector<GraphicalObject> out;
  out.reserve(static_cast<size_t>(2 * (n - 1)));
  for (int i = 1; i < n; ++i)
    for (int sign : {+1, -1}) out.push_back(apply_generator(o, i, sign));
  return out;
}

struct FoundObject {
  int depth;
  std::string key;
  GraphicalObject object;
};

ObjectBall assemble_ball(const LabelTuple& base, int radius, std::vector<FoundObject> found) {
  // Order by (depth, key); then wire up every in-ball edge.
  std::stable_sort(found.begin(), found.end(), [](const FoundObject& a, const FoundObject& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.key < b.key;
  });
  ObjectBall ball;
  ball.radius = radius;
  std::map<std::string, int> index;
  for (auto& f : found) {
    index.emplace(f.key, static_cast<int>(ball.vertices.size()));
    ball.depth.push_back(f.depth);
    ball.vertices.push_back(std::move(f.object));
  }
  ball.base = index.at(canonical_object(base).key());
  const int n = base.size();
  const int vertex_count = static_cast<int>(ball.vertices.size());
  std::vector<std::vector<ComplexEdge>> per_vertex(static_cast<size_t>(vertex_count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int v = 0; v < vertex_count; ++v) {
    for (int i = 1; i < n; ++i) {
      for (int sign : {+1, -1}) {
        const auto it = index.find(apply_generator(ball.vertices[static_cast<size_t>(v)], i, sign).key());
        if (it != index.end()) per_vertex[static_cast<size_t>(v)].push_back({v, i, sign, it->second});
      }
    }
  }
  for (auto& edges : per_vertex)
    ball.edges.insert(ball.edges.end(), edges.begin(), edges.end());
  return ball;
}

}  // namespace

ObjectBall object_ball_serial(const LabelTuple& base, int radius) {
  if (radius < 0) throw DomainError("ball radius must be >= 0");
  std::set<std::string> seen;
  std::vector<FoundObject> found;
  std::vector<GraphicalObject> frontier{canonical_object(base)};
  seen.insert(frontier.front().key());
  found.push_back({0, frontier.front().key(), frontier.front()});
  for (int layer = 1; layer <= radius && !frontier.empty(); ++layer) {
    std::vector<GraphicalObject> next;
    for (const auto& o : frontier) {
      for (auto& nb : object_neighbours(o)) {
        if (seen.insert(nb.key()).second) {
          found.push_back({layer, nb.key(), nb});
          next.push_back(std::move(nb));
        }
      }
    }
    frontier = std::move(next);
  }
  return assemble_ball(base, radius, std::move(found));
}

ObjectBall object_ball(const LabelTuple& base, int radius) {
  if (radius < 0) throw DomainError("ball radius must be >= 0");
  std::set<std::string> seen;
  std::vector<FoundObject> found;
  std::vector<GraphicalObject> frontier{canonical_object(base)};
  seen.insert(frontier.front().key());
  found.push_back({0, frontier.front().key(), frontier.front()});
  for (int layer = 1; layer <= radius && !frontier.empty(); ++layer) {
    // Expand and key the neighbours in parallel, dedup on the sorted keys.
    std::vector<std::vector<FoundObject>> runs;
#ifdef _OPENMP
#pragma omp parallel
    {
#pragma omp single
      runs.resize(static_cast<size_t>(omp_get_num_threads()));
      std::vector<FoundObject>& local = runs[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
      for (long long k = 0; k < static_cast<long long>(frontier.size()); ++k)
        for (auto& nb : object_neighbours(frontier[static_cast<size_t>(k)]))
          local.push_back({layer, nb.key(), std::move(nb)});
      std::sort(local.begin(), local.end(),
                [](const FoundObject& a, const FoundObject& b) { return a.key < b.key; });
      local.erase(std::unique(local.begin(), local.end(),
                              [](const FoundObject& a, const FoundObject& b) { return a.key == b.key; }),
                  local.end());
    }
#else
    runs.emplace_back();
    for (const auto& o : frontier)
      for (auto& nb : object_neighbours(o)) runs.back().push_back({layer, nb.key(), std::move(nb)});
    std::sort(runs.back().begin(), runs.back().end(),
              [](const FoundObject& a, const FoundObject& b) { return a.key < b.key; });
    runs.back().erase(
        std::unique(runs.back().begin(), runs.back().end(),
                    [](const FoundObject& a, const FoundObject& b) { return a.key == b.key; }),
        runs.back().end());
#endif
    std::vector<FoundObject> candidates = std::move(runs.front());
    for (size_t r = 1; r < runs.size(); ++r) {
      std::vector<FoundObject> merged;
      merged.reserve(candidates.size() + runs[r].size());
      std::merge(std::make_move_iterator(candidates.begin()), std::make_move_iterator(candidates.end()),
                 std::make_move_iterator(runs[r].begin()), std::make_move_iterator(runs[r].end()),
                 std::back_inserter(merged),
                 [](const FoundObject& a, const FoundObject& b) { return a.key < b.key; });
      merged.erase(std::unique(merged.begin(), merged.end(),
                               [](const FoundObject& a, const FoundObject& b) { return a.key == b.key; }),
                   merged.end());
      candidates = std::move(merged);
    }

    std::vector<GraphicalObject> next;
    for (auto& nb : candidates) {
      if (seen.insert(nb.key).second) {
        next.push_back(nb.object);
        found.push_back(std::move(nb));
      }
    }
    frontier = std::move(next);
  }
  return assemble_ball(base, radius, std::move(found));
}

TwoCellInventory two_cell_inventory(const LabelTuple& base) {
  TwoCellInventory inventory;
  inventory.mcg_relation_note =
      "mapping-class relations over the twist generating set: out of scope, inventoried empty";
  const LabelComplex complex = label_complex(base);
  const int n = base.size();

  auto closed_at = [](const LabelTuple& v, const BraidWord& w) {
    return hurwitz_apply(v, w) == v;
  };

  for (int v = 0; v < static_cast<int>(complex.vertices.size()); ++v) {
    const LabelTuple& tuple = complex.vertices[static_cast<size_t>(v)];
    for (int i = 1; i + 1 < n; ++i) {
      BraidWord w{{{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}}};
      if (!closed_at(tuple, w)) throw std::logic_error("braid relation cell is not a loop");
      inventory.braid_relation_cells.push_back({v, i, "braid_relation", std::move(w)});
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        BraidWord w{{{i, 1}, {j, 1}, {i, -1}, {j, -1}}};
        if (!closed_at(tuple, w)) throw std::logic_error("far commutation cell is not a loop");
        inventory.braid_relation_cells.push_back({v, i, "far_commutation", std::move(w)});
      }
    }
    for (int i = 1; i < n; ++i) {
      const Transposition& s = tuple.at(i);
      const Transposition& t = tuple.at(i + 1);
      if (s == t) continue;  // type 1: the generator edge is already a loop
      const int power = s.disjoint_from(t) ? 2 : 3;
      BraidWord w;
      for (int k = 0; k < power; ++k) w.gens.push_back({i, 1});
      if (!closed_at(tuple, w)) throw std::logic_error("power cell is not a loop");
      inventory.power_cells.push_back({v, i, "power", std::move(w)});
    }
  }
  return inventory;
}

CoveringReport check_covering(const ObjectBall& ball, const LabelComplex& complex) {
  CoveringReport report;
  const LabelTuple base = complex.vertices[static_cast<size_t>(complex.base)];
  const GraphicalObject canon = canonical_object(base);
  if (!objects_equal(ball.vertices[static_cast<size_t>(ball.base)], canon))
    throw DomainError("ball and complex were built over different labels");
  const int n = base.size();

  std::map<std::tuple<int, int, int>, int> ball_edge;
  for (const auto& e : ball.edges) ball_edge[{e.source, e.gen, e.sign}] = e.target;
  const auto label_index = [&](const LabelTuple& t) {
    const auto it = std::lower_bound(complex.vertices.begin(), complex.vertices.end(), t);
    if (it == complex.vertices.end() || !(*it == t))
      throw std::logic_error("object label missing from the orbit complex");
    return static_cast<int>(it - complex.vertices.begin());
  };
  std::map<std::tuple<int, int, int>, int> complex_edge;
  for (const auto& e : complex.edges) complex_edge[{e.source, e.gen, e.sign}] = e.target;

  // (a) every generator slot at an interior vertex lifts, and the label map
  // matches slot for slot.
  for (int v = 0; v < static_cast<int>(ball.vertices.size()); ++v) {
    if (ball.depth[static_cast<size_t>(v)] >= ball.radius) continue;
    ++report.interior_vertices_checked;
    const int image = label_index(label_of(ball.vertices[static_cast<size_t>(v)]));
    for (int i = 1; i < n; ++i) {
      for (int sign : {+1, -1}) {
        const auto it = ball_edge.find({v, i, sign});
        if (it == ball_edge.end()) {
          report.failures.push_back("missing slot s" + std::to_string(i) + (sign > 0 ? "" : "^-1") +
                                    " at interior ball vertex " + std::to_string(v));
          continue;
        }
        const int down = complex_edge.at({image, i, sign});
        if (label_index(label_of(ball.vertices[static_cast<size_t>(it->second)])) != down)
          report.failures.push_back("slot s" + std::to_string(i) + " at ball vertex " +
                                    std::to_string(v) + " does not cover its label image");
      }
    }
  }

  // (b) attaching loops at the base lift closed.
  const TwoCellInventory inventory = two_cell_inventory(base);
  auto check_closed = [&](const AttachingCell& cell) {
    if (cell.vertex != complex.base) return;
    ++report.closed_loops_checked;
    if (!objects_equal(apply_morphism(canon, cell.word), canon))
      report.failures.push_back(cell.kind + " loop '" + cell.word.str() + "' fails to lift closed");
  };
  for (const auto& cell : inventory.power_cells) check_closed(cell);
  for (const auto& cell : inventory.braid_relation_cells) check_closed(cell);

  // (c) equal-label generator loops lift to open paths.
  for (int i = 1; i < n; ++i) {
    if (!(base.at(i) == base.at(i + 1))) continue;
    ++report.open_loops_checked;
    if (objects_equal(apply_generator(canon, i, +1), canon))
      report.failures.push_back("equal-label loop s" + std::to_string(i) + " lifted closed");
  }
  return report;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const std::vector<std::string>& vertex_labels,
                   const std::vector<ComplexEdge>& edges, int base) {
  std::ostringstream os;
  os << "digraph complex {\n";
  for (int v = 0; v < static_cast<int>(vertex_labels.size()); ++v) {
    os << "  v" << v << " [label=" << dot_quote(vertex_labels[static_cast<size_t>(v)]);
    if (v == base) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : edges) {
    os << "  v" << e.source << " -> v" << e.target << " [label=\"s" << e.gen
       << (e.sign > 0 ? "" : "^-1") << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const LabelComplex& complex) {
  std::vector<std::string> labels;
  labels.reserve(complex.vertices.size());
  for (const auto& v : complex.vertices) labels.push_back(v.str());
  return to_dot(labels, complex.edges, complex.base);
}

std::string to_dot(const ObjectBall& ball) {
  std::vector<std::string> labels;
  labels.reserve(ball.vertices.size());
  for (const auto& v : ball.vertices) labels.push_back(v.key());
  return to_dot(labels, ball.edges, ball.base);
}

}  // namespace braidlift
