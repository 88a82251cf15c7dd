#include "braidlift/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braidlift {

std::string Transposition::str() const {
  std::ostringstream os;
  os << "(" << a << " " << b << ")";
  return os.str();
}

Transposition conjugate(const Transposition& t, const Transposition& s) {
  return Transposition(s.apply(t.a), s.apply(t.b));
}

Permutation::Permutation(int degree) : img_(static_cast<size_t>(degree)) {
  if (degree < 1) throw DomainError("permutation degree must be positive");
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > degree() || seen[static_cast<size_t>(v - 1)])
      throw DomainError("image sequence is not a bijection of {1..d}");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::from_transposition(const Transposition& t, int degree) {
  if (t.max_point() > degree)
    throw DomainError("transposition exceeds permutation degree");
  Permutation p(degree);
  std::swap(p.img_[static_cast<size_t>(t.a - 1)], p.img_[static_cast<size_t>(t.b - 1)]);
  return p;
}

int Permutation::apply(int x) const {
  if (x < 1 || x > degree()) throw DomainError("point out of range");
  return img_[static_cast<size_t>(x - 1)];
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if (apply(x) != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int x = 1; x <= degree(); ++x) inv[static_cast<size_t>(apply(x) - 1)] = x;
  return Permutation(std::move(inv));
}

std::string Permutation::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles(*this)) {
    if (c.size() < 2) continue;
    any = true;
    os << "(";
    for (size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ")";
  }
  return any ? os.str() : "id";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DomainError("cannot compose permutations of different degree");
  std::vector<int> img(static_cast<size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x)
    img[static_cast<size_t>(x - 1)] = q.apply(p.apply(x));
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(p.degree()), false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[static_cast<size_t>(start - 1)]) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[static_cast<size_t>(x - 1)]; x = p.apply(x)) {
      seen[static_cast<size_t>(x - 1)] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> type;
  for (const auto& c : cycles(p)) type.push_back(static_cast<int>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool conjugate_in_sd(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DomainError("conjugacy test needs equal degrees");
  return cycle_type(p) == cycle_type(q);
}

bool is_transitive(const std::vector<Transposition>& ts, int d) {
  if (d < 2) throw DomainError("transitivity test needs d >= 2");
  std::vector<int> root(static_cast<size_t>(d));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<size_t>(x)] != x) {
      root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
      x = root[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const auto& t : ts) {
    if (t.max_point() > d) throw DomainError("transposition exceeds degree");
    root[static_cast<size_t>(find(t.a - 1))] = find(t.b - 1);
  }
  const int r = find(0);
  for (int v = 1; v < d; ++v)
    if (find(v) != r) return false;
  return true;
}

}  // namespace braidlift
