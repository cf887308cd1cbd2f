#include "glrack/rack.hpp"

#include <algorithm>
#include <numeric>

namespace glrack {

std::string RackViolation::describe() const {
  switch (kind) {
    case Kind::WrongShape:
      return "structure does not have n rows of length n (row " + std::to_string(x + 1) + ")";
    case Kind::NotABijection:
      return "s_" + std::to_string(x + 1) + " is not a bijection";
    case Kind::SelfDistributivityFails:
      return "self-distributivity fails at (x, y) = (" + std::to_string(x + 1) + ", " +
             std::to_string(y + 1) + ")";
  }
  return "unknown violation";
}

Rack trusted_rack(std::vector<Permutation> s) { return Rack(std::move(s), Rack::Trusted{}); }

namespace {

std::optional<RackViolation> self_distributivity_violation(
    const std::vector<std::vector<Point>>& rows) {
  const std::size_t n = rows.size();
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      const auto& sx = rows[x];
      const auto& sy = rows[y];
      const auto& sxy = rows[sx[y]];
      for (Point z = 0; z < n; ++z)
        if (sx[sy[z]] != sxy[sx[z]])
          return RackViolation{RackViolation::Kind::SelfDistributivityFails, x, y};
    }
  return std::nullopt;
}

std::vector<std::vector<Point>> rows_of(const std::vector<Permutation>& s) {
  std::vector<std::vector<Point>> rows;
  rows.reserve(s.size());
  for (const auto& p : s) rows.emplace_back(p.images().begin(), p.images().end());
  return rows;
}

}  // namespace

std::optional<RackViolation> find_rack_violation(std::size_t n,
                                                 const std::vector<std::vector<Point>>& rows) {
  if (rows.size() != n) return RackViolation{RackViolation::Kind::WrongShape, 0, 0};
  for (Point x = 0; x < n; ++x) {
    if (rows[x].size() != n) return RackViolation{RackViolation::Kind::WrongShape, x, 0};
    if (!is_bijection(rows[x])) return RackViolation{RackViolation::Kind::NotABijection, x, 0};
  }
  return self_distributivity_violation(rows);
}

RackCheck check_rack(std::size_t n, const std::vector<std::vector<Point>>& rows) {
  RackCheck result;
  result.violation = find_rack_violation(n, rows);
  if (!result.violation) {
    std::vector<Permutation> s;
    s.reserve(n);
    for (const auto& r : rows) s.push_back(from_images_unchecked(r));
    result.rack = trusted_rack(std::move(s));
  }
  return result;
}

Rack::Rack(std::vector<Permutation> s) : s_(std::move(s)) {
  if (auto v = find_rack_violation(s_.size(), rows_of(s_))) throw InvalidStructure(v->describe());
}

bool is_quandle(const Rack& R) {
  for (Point x = 0; x < R.order(); ++x)
    if (R.act(x, x) != x) return false;
  return true;
}

bool is_medial(const Rack& R) {
  // s_{s_x(z)} s_y == s_{s_x(y)} s_z
  const std::size_t n = R.order();
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z) {
        const Permutation& a = R.s(R.act(x, z));
        const Permutation& b = R.s(R.act(x, y));
        for (Point w = 0; w < n; ++w)
          if (a(R.act(y, w)) != b(R.act(z, w))) return false;
      }
  return true;
}

bool is_left_distributive(const Rack& R) {
  // s_{s_a(b)}(x) == s_{s_a(x)}(s_b(x))
  const std::size_t n = R.order();
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      for (Point x = 0; x < n; ++x)
        if (R.act(R.act(a, b), x) != R.act(R.act(a, x), R.act(b, x))) return false;
  return true;
}

bool is_subrack(const Rack& R, const std::vector<Point>& subset) {
  std::vector<bool> in(R.order(), false);
  for (Point y : subset) {
    if (y >= R.order()) return false;
    in[y] = true;
  }
  for (Point y : subset) {
    Permutation inv = inverse(R.s(y));
    for (Point z : subset)
      if (!in[R.act(y, z)] || !in[inv(z)]) return false;
  }
  return true;
}

SmallGroup transvection_group(const Rack& R, std::size_t cap) {
  std::vector<Permutation> gens;
  for (Point x = 0; x < R.order(); ++x)
    for (Point y = 0; y < R.order(); ++y) {
      Permutation t = compose(R.s(x), inverse(R.s(y)));
      if (!t.is_identity()) gens.push_back(std::move(t));
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(gens, R.order(), cap);
}

Rack dual(const Rack& R) {
  std::vector<Permutation> s;
  s.reserve(R.order());
  for (const auto& p : R.structure()) s.push_back(inverse(p));
  return trusted_rack(std::move(s));
}

Permutation theta(const Rack& R) {
  std::vector<Point> img(R.order());
  for (Point x = 0; x < R.order(); ++x) img[x] = R.act(x, x);
  if (!is_bijection(img)) throw std::logic_error("theta is not a bijection: input is not a rack");
  return from_images_unchecked(std::move(img));
}

Permutation theta_inverse(const Rack& R) {
  std::vector<Point> img(R.order());
  for (Point x = 0; x < R.order(); ++x) img[x] = inverse(R.s(x))(x);
  if (!is_bijection(img)) throw std::logic_error("theta is not a bijection: input is not a rack");
  return from_images_unchecked(std::move(img));
}

Rack permutation_rack(const Permutation& sigma) {
  return trusted_rack(std::vector<Permutation>(sigma.degree(), sigma));
}

Rack trivial_quandle(std::size_t n) { return permutation_rack(Permutation::identity(n)); }

Rack takasaki(std::size_t m) {
  if (m == 0) throw std::invalid_argument("takasaki: modulus must be positive");
  std::vector<Permutation> s;
  for (std::size_t b = 0; b < m; ++b) {
    std::vector<Point> img(m);
    for (std::size_t a = 0; a < m; ++a) img[a] = static_cast<Point>((2 * b + m - a) % m);
    s.push_back(from_images_unchecked(std::move(img)));
  }
  return trusted_rack(std::move(s));
}

Rack dihedral(std::size_t m) { return takasaki(m); }

Rack conjugation_quandle(const std::vector<std::vector<Point>>& cayley,
                         const std::vector<Point>& subset) {
  const std::size_t g = cayley.size();
  for (const auto& row : cayley) {
    if (row.size() != g) throw InvalidStructure("cayley table is not square");
    for (Point v : row)
      if (v >= g) throw InvalidStructure("cayley table entry out of range");
  }
  for (Point a = 0; a < g; ++a)
    for (Point b = 0; b < g; ++b)
      for (Point c = 0; c < g; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw InvalidStructure("cayley table is not associative");
  std::optional<Point> e;
  for (Point a = 0; a < g && !e; ++a) {
    bool ok = true;
    for (Point b = 0; b < g && ok; ++b) ok = cayley[a][b] == b && cayley[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw InvalidStructure("cayley table has no identity");
  std::vector<Point> inv(g);
  for (Point a = 0; a < g; ++a) {
    auto it = std::find(cayley[a].begin(), cayley[a].end(), *e);
    if (it == cayley[a].end()) throw InvalidStructure("cayley table has no inverses");
    inv[a] = static_cast<Point>(it - cayley[a].begin());
  }

  std::vector<long> pos(g, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= g || pos[subset[i]] != -1)
      throw InvalidStructure("conjugation subset has a repeated or out-of-range element");
    pos[subset[i]] = static_cast<long>(i);
  }
  std::vector<Permutation> s;
  for (Point x : subset) {
    std::vector<Point> img(subset.size());
    for (std::size_t j = 0; j < subset.size(); ++j) {
      Point c = cayley[cayley[x][subset[j]]][inv[x]];
      if (pos[c] < 0) throw InvalidStructure("subset is not closed under conjugation");
      img[j] = static_cast<Point>(pos[c]);
    }
    s.push_back(from_images_unchecked(std::move(img)));
  }
  return trusted_rack(std::move(s));
}

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // smaller element stays root
    return true;
  }
};

}  // namespace

std::vector<Point> finest_congruence(const Rack& R,
                                     const std::vector<std::pair<Point, Point>>& pairs) {
  const std::size_t n = R.order();
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  std::vector<Permutation> inv;
  for (const auto& p : R.structure()) inv.push_back(inverse(p));

  bool changed = true;
  while (changed) {
    changed = false;
    for (Point x = 0; x < n; ++x) {
      Point r = uf.find(x);
      if (r == x) continue;
      for (Point z = 0; z < n; ++z) {
        changed |= uf.unite(R.act(z, x), R.act(z, r));
        changed |= uf.unite(inv[z](x), inv[z](r));
        changed |= uf.unite(R.act(x, z), R.act(r, z));
        changed |= uf.unite(inv[x](z), inv[r](z));
      }
    }
  }
  std::vector<Point> label(n), rank(n, 0);
  Point next = 0;
  for (Point x = 0; x < n; ++x)
    if (uf.find(x) == x) rank[x] = next++;
  for (Point x = 0; x < n; ++x) label[x] = rank[uf.find(x)];
  return label;
}

Quotient quotient(const Rack& R, const std::vector<Point>& classes) {
  const std::size_t n = R.order();
  Point k = 0;
  for (Point c : classes) k = std::max<Point>(k, c + 1);
  std::vector<Point> rep(k, 0);
  for (Point x = n; x-- > 0;) rep[classes[x]] = x;
  std::vector<Permutation> s;
  for (Point c = 0; c < k; ++c) {
    std::vector<Point> img(k);
    for (Point d = 0; d < k; ++d) img[d] = classes[R.act(rep[c], rep[d])];
    s.push_back(Permutation(std::move(img)));
  }
  return {Rack(std::move(s)), classes};
}

Quotient associated_quandle(const Rack& R) {
  std::vector<std::pair<Point, Point>> pairs;
  for (Point x = 0; x < R.order(); ++x) pairs.emplace_back(x, R.act(x, x));
  return quotient(R, finest_congruence(R, pairs));
}

Quotient medialization(const Rack& R) {
  const std::size_t n = R.order();
  std::vector<std::pair<Point, Point>> pairs;
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z) {
        const Permutation& lhs = R.s(R.act(x, z));
        const Permutation& rhs = R.s(R.act(x, y));
        for (Point a = 0; a < n; ++a) {
          Point l = lhs(R.act(y, a));
          Point r = rhs(R.act(z, a));
          if (l != r) pairs.emplace_back(l, r);
        }
      }
  return quotient(R, finest_congruence(R, pairs));
}

RackProfile profile(const Rack& R, std::size_t cap) {
  RackProfile p;
  p.quandle = is_quandle(R);
  p.medial = is_medial(R);
  p.theta_cycle_type = cycle_type(theta(R));
  for (const auto& s : R.structure()) p.s_cycle_types.push_back(cycle_type(s));
  std::sort(p.s_cycle_types.begin(), p.s_cycle_types.end());
  try {
    p.inn_order = closure(R.structure(), R.order(), cap).order();
  } catch (const CapExceeded&) {
    p.inn_order.reset();
  }
  return p;
}

}  // namespace glrack
