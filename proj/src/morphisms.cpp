#include "glrack/morphisms.hpp"

#include <algorithm>
#include <functional>

namespace glrack {

bool is_rack_hom(const Rack& R, const Rack& S, std::span<const Point> phi) {
  if (phi.size() != R.order()) return false;
  for (Point v : phi)
    if (v >= S.order()) return false;
  for (Point x = 0; x < R.order(); ++x)
    for (Point y = 0; y < R.order(); ++y)
      if (phi[R.act(x, y)] != S.act(phi[x], phi[y])) return false;
  return true;
}

bool is_gl_hom(const GLRack& G1, const GLRack& G2, std::span<const Point> phi) {
  if (!is_rack_hom(G1.rack(), G2.rack(), phi)) return false;
  for (Point x = 0; x < G1.order(); ++x)
    if (phi[G1.u()(x)] != G2.u()(phi[x])) return false;
  return true;
}

namespace {

constexpr long unassigned = -1;

// Backtracking over maps X -> Y.  Whenever phi(x) and phi(y) are both known,
// the images of s_x^{+-1}(y) are forced, and with GL data so are the images
// of u_1^{+-1}(x).
class HomSearch {
 public:
  HomSearch(const Rack& R, const Rack& S, bool injective, const Permutation* u1,
            const Permutation* u2, std::uint64_t budget)
      : R_(R), S_(S), injective_(injective), u1_(u1), u2_(u2), budget_(budget) {
    const std::size_t m = R.order(), k = S.order();
    for (const auto& p : R.structure()) r_inv_.push_back(inverse(p));
    for (const auto& p : S.structure()) s_inv_.push_back(inverse(p));
    if (u1_) {
      u1_inv_ = inverse(*u1_);
      u2_inv_ = inverse(*u2_);
    }
    phi_.assign(m, unassigned);
    used_.assign(k, false);
    candidates_.resize(m);
    if (injective_) {
      std::vector<std::vector<std::size_t>> r_types, s_types;
      for (const auto& p : R.structure()) r_types.push_back(cycle_type(p));
      for (const auto& p : S.structure()) s_types.push_back(cycle_type(p));
      for (Point x = 0; x < m; ++x)
        for (Point a = 0; a < k; ++a)
          if (r_types[x] == s_types[a]) candidates_[x].push_back(a);
    } else {
      for (Point x = 0; x < m; ++x)
        for (Point a = 0; a < k; ++a) candidates_[x].push_back(a);
    }
  }

  // Calls visit(phi) for each solution in lexicographic order until visit
  // returns false.
  void run(const std::function<bool(const Map&)>& visit) {
    visit_ = &visit;
    if (injective_ && R_.order() != S_.order()) return;
    if (R_.order() > 0 && S_.order() == 0) return;
    recurse(0);
  }

 private:
  bool recurse(Point start) {
    Point x = start;
    while (x < phi_.size() && phi_[x] != unassigned) ++x;
    if (x == phi_.size()) {
      Map m(phi_.begin(), phi_.end());
      return (*visit_)(m);
    }
    for (Point a : candidates_[x]) {
      if (injective_ && used_[a]) continue;
      if (++nodes_ > budget_) throw BudgetExceeded("homomorphism search exceeded node budget");
      std::size_t mark = trail_.size();
      bool ok = assign(x, a);
      bool keep_going = true;
      if (ok) keep_going = recurse(x + 1);
      undo(mark);
      if (!keep_going) return false;
    }
    return true;
  }

  bool set(Point x, Point a) {
    if (phi_[x] != unassigned) return static_cast<Point>(phi_[x]) == a;
    if (injective_) {
      if (used_[a]) return false;
      used_[a] = true;
    }
    phi_[x] = a;
    trail_.push_back(x);
    queue_.push_back(x);
    return true;
  }

  bool assign(Point x0, Point a0) {
    queue_.clear();
    if (!set(x0, a0)) return false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Point x = queue_[head];
      Point a = static_cast<Point>(phi_[x]);
      if (u1_) {
        if (!set((*u1_)(x), (*u2_)(a))) return false;
        if (!set(u1_inv_(x), u2_inv_(a))) return false;
      }
      for (Point y = 0; y < phi_.size(); ++y) {
        if (phi_[y] == unassigned) continue;
        Point b = static_cast<Point>(phi_[y]);
        if (!set(R_.act(x, y), S_.act(a, b))) return false;
        if (!set(R_.act(y, x), S_.act(b, a))) return false;
        if (!set(r_inv_[x](y), s_inv_[a](b))) return false;
        if (!set(r_inv_[y](x), s_inv_[b](a))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Point x = trail_.back();
      trail_.pop_back();
      if (injective_) used_[phi_[x]] = false;
      phi_[x] = unassigned;
    }
  }

  const Rack& R_;
  const Rack& S_;
  bool injective_;
  const Permutation* u1_;
  const Permutation* u2_;
  Permutation u1_inv_, u2_inv_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Permutation> r_inv_, s_inv_;
  std::vector<long> phi_;
  std::vector<bool> used_;
  std::vector<std::vector<Point>> candidates_;
  std::vector<Point> trail_;
  std::vector<Point> queue_;
  const std::function<bool(const Map&)>* visit_ = nullptr;
};

// Every map X -> Y in lexicographic order, filtered by `keep`.
std::vector<Map> brute_force_maps(std::size_t m, std::size_t k, std::uint64_t budget,
                                  const std::function<bool(const Map&)>& keep) {
  std::vector<Map> out;
  if (m > 0 && k == 0) return out;
  Map phi(m, 0);
  std::uint64_t count = 0;
  while (true) {
    if (++count > budget) throw BudgetExceeded("brute-force map enumeration exceeded budget");
    if (keep(phi)) out.push_back(phi);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++phi[i] < k) break;
      phi[i] = 0;
      if (i == 0) return out;
    }
    if (m == 0) return out;
  }
}

void require_same_degree(const GLRack& G) {
  if (G.u().degree() != G.order()) throw InvalidStructure("GL-structure has wrong degree");
}

}  // namespace

std::vector<Map> enumerate_homs(const Rack& R, const Rack& S, HomAlgorithm algorithm,
                                std::uint64_t budget) {
  if (algorithm == HomAlgorithm::brute_force)
    return brute_force_maps(R.order(), S.order(), budget,
                            [&](const Map& phi) { return is_rack_hom(R, S, phi); });
  std::vector<Map> out;
  HomSearch search(R, S, false, nullptr, nullptr, budget);
  search.run([&](const Map& phi) {
    out.push_back(phi);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Map> enumerate_gl_homs(const GLRack& G1, const GLRack& G2, HomAlgorithm algorithm,
                                   std::uint64_t budget) {
  require_same_degree(G1);
  require_same_degree(G2);
  if (algorithm == HomAlgorithm::brute_force)
    return brute_force_maps(G1.order(), G2.order(), budget,
                            [&](const Map& phi) { return is_gl_hom(G1, G2, phi); });
  std::vector<Map> out;
  HomSearch search(G1.rack(), G2.rack(), false, &G1.u(), &G2.u(), budget);
  search.run([&](const Map& phi) {
    out.push_back(phi);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Permutation> search_iso(const Rack& R, const Rack& S, std::uint64_t budget) {
  std::optional<Permutation> found;
  HomSearch search(R, S, true, nullptr, nullptr, budget);
  search.run([&](const Map& phi) {
    found = Permutation(phi);
    return false;
  });
  return found;
}

std::optional<Permutation> find_iso(const Rack& R, const Rack& S, std::uint64_t budget) {
  if (R.order() != S.order()) return std::nullopt;
  if (!(profile(R) == profile(S))) return std::nullopt;
  return search_iso(R, S, budget);
}

bool is_isomorphic(const Rack& R, const Rack& S) { return find_iso(R, S).has_value(); }

std::optional<Permutation> find_gl_iso(const GLRack& G1, const GLRack& G2, std::uint64_t budget) {
  if (G1.order() != G2.order()) return std::nullopt;
  if (cycle_type(G1.u()) != cycle_type(G2.u())) return std::nullopt;
  std::optional<Permutation> found;
  HomSearch search(G1.rack(), G2.rack(), true, &G1.u(), &G2.u(), budget);
  search.run([&](const Map& phi) {
    found = Permutation(phi);
    return false;
  });
  return found;
}

std::vector<Permutation> automorphisms(const Rack& R, std::uint64_t budget) {
  std::vector<Permutation> out;
  HomSearch search(R, R, true, nullptr, nullptr, budget);
  search.run([&](const Map& phi) {
    out.push_back(from_images_unchecked(phi));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

SmallGroup aut_group(const Rack& R, std::uint64_t budget) {
  return SmallGroup::from_elements(R.order(), automorphisms(R, budget));
}

SmallGroup inn_group(const Rack& R, std::size_t cap) {
  return closure(R.structure(), R.order(), cap);
}

SmallGroup aut_glr(const GLRack& G, std::uint64_t budget) {
  std::vector<Permutation> out;
  HomSearch search(G.rack(), G.rack(), true, &G.u(), &G.u(), budget);
  search.run([&](const Map& phi) {
    out.push_back(from_images_unchecked(phi));
    return true;
  });
  return SmallGroup::from_elements(G.order(), std::move(out));
}

SmallGroup aut_glr_via_centralizer(const GLRack& G, std::uint64_t budget) {
  return centralizer(aut_group(G.rack(), budget), G.u());
}

namespace {

Point index_in(const std::vector<Map>& sorted, const Map& m) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
  if (it == sorted.end() || *it != m)
    throw std::logic_error("hom set is not closed under the induced operation");
  return static_cast<Point>(it - sorted.begin());
}

// t~_g(f)(x) = t_{g(x)} f(x) on a sorted set of maps.
std::vector<Permutation> pointwise_structure(const Rack& M, const std::vector<Map>& carrier) {
  std::vector<Permutation> s;
  s.reserve(carrier.size());
  for (const Map& g : carrier) {
    std::vector<Point> img(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      const Map& f = carrier[i];
      Map h(f.size());
      for (std::size_t x = 0; x < f.size(); ++x) h[x] = M.act(g[x], f[x]);
      img[i] = index_in(carrier, h);
    }
    s.push_back(Permutation(std::move(img)));
  }
  return s;
}

}  // namespace

HomRack hom_rack(const Rack& R, const Rack& M, std::uint64_t budget) {
  if (!is_medial(M)) throw InvalidStructure("hom_rack: target is not medial");
  HomRack H;
  H.carrier = enumerate_homs(R, M, HomAlgorithm::backtracking, budget);
  H.rack = Rack(pointwise_structure(M, H.carrier));
  return H;
}

HomGLRack hom_glrack(const GLRack& G1, const GLRack& G2, std::uint64_t budget) {
  if (!is_medial(G2.rack())) throw InvalidStructure("hom_glrack: target is not medial");
  std::vector<Map> carrier = enumerate_gl_homs(G1, G2, HomAlgorithm::backtracking, budget);
  Rack rack(pointwise_structure(G2.rack(), carrier));
  std::vector<Point> u(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    Map h(carrier[i].size());
    for (std::size_t x = 0; x < h.size(); ++x) h[x] = G2.u()(carrier[i][x]);
    u[i] = index_in(carrier, h);
  }
  GLRack gl(std::move(rack), Permutation(std::move(u)));
  return {std::move(carrier), std::move(gl)};
}

namespace {

template <typename SlotCheck>
bool bihom_slots(std::size_t n1, std::size_t n2, const std::vector<std::vector<Point>>& beta,
                 SlotCheck&& first_slot, SlotCheck&& second_slot) {
  if (beta.size() != n1) return false;
  for (const auto& row : beta)
    if (row.size() != n2) return false;
  for (std::size_t y = 0; y < n2; ++y) {
    Map col(n1);
    for (std::size_t x = 0; x < n1; ++x) col[x] = beta[x][y];
    if (!first_slot(col)) return false;
  }
  for (std::size_t x = 0; x < n1; ++x)
    if (!second_slot(beta[x])) return false;
  return true;
}

}  // namespace

bool is_bihom(const Rack& R1, const Rack& R2, const Rack& R3,
              const std::vector<std::vector<Point>>& beta) {
  using Check = std::function<bool(const Map&)>;
  return bihom_slots(R1.order(), R2.order(), beta,
                     Check([&](const Map& m) { return is_rack_hom(R1, R3, m); }),
                     Check([&](const Map& m) { return is_rack_hom(R2, R3, m); }));
}

bool is_gl_bihom(const GLRack& G1, const GLRack& G2, const GLRack& G3,
                 const std::vector<std::vector<Point>>& beta) {
  using Check = std::function<bool(const Map&)>;
  return bihom_slots(G1.order(), G2.order(), beta,
                     Check([&](const Map& m) { return is_gl_hom(G1, G3, m); }),
                     Check([&](const Map& m) { return is_gl_hom(G2, G3, m); }));
}

}  // namespace glrack
