#include "glrack/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace glrack {

bool is_bijection(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) throw std::invalid_argument("image array is not a bijection");
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation from_images_unchecked(std::vector<Point> images) {
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.images_[b.images_[i]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& a) {
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[a.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation power(const Permutation& a, long long k) {
  Permutation base = k < 0 ? inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : k;
  Permutation result = Permutation::identity(a.degree());
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& g, const Permutation& a) {
  // (g a g^-1)(g(x)) = g(a(x))
  if (g.degree() != a.degree()) throw std::invalid_argument("conjugate: degree mismatch");
  std::vector<Point> img(a.degree());
  for (Point x = 0; x < a.degree(); ++x) img[g(x)] = g(a(x));
  return from_images_unchecked(std::move(img));
}

std::vector<std::size_t> cycle_type(const Permutation& a) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(a.degree(), false);
  for (Point x = 0; x < a.degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point y = x; !seen[y]; y = a(y)) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t element_order(const Permutation& a) {
  std::size_t result = 1;
  for (std::size_t len : cycle_type(a)) result = std::lcm(result, len);
  return result;
}

namespace {

[[noreturn]] void cycle_error(std::string_view text, std::string_view what) {
  throw std::invalid_argument("bad cycle notation '" + std::string(text) + "': " +
                              std::string(what));
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || !compact.empty()) compact += c;
  while (!compact.empty() && std::isspace(static_cast<unsigned char>(compact.back())))
    compact.pop_back();

  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  if (compact == "id" || compact == "()") return Permutation(std::move(img));
  if (compact.empty()) cycle_error(text, "empty");

  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  while (pos < compact.size()) {
    char c = compact[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') cycle_error(text, "expected '('");
    std::size_t close = compact.find(')', pos);
    if (close == std::string::npos) cycle_error(text, "unbalanced parenthesis");
    std::string_view body(compact.data() + pos + 1, close - pos - 1);
    if (body.find('(') != std::string_view::npos) cycle_error(text, "nested parenthesis");

    std::vector<std::size_t> cycle;
    bool separated = body.find_first_of(", \t") != std::string_view::npos;
    if (separated) {
      std::size_t i = 0;
      while (i < body.size()) {
        while (i < body.size() && (body[i] == ',' || std::isspace(static_cast<unsigned char>(body[i]))))
          ++i;
        if (i == body.size()) break;
        std::size_t j = i;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
        if (j == i) cycle_error(text, "expected a point");
        cycle.push_back(std::stoul(std::string(body.substr(i, j - i))));
        i = j;
      }
    } else {
      for (char d : body) {
        if (!std::isdigit(static_cast<unsigned char>(d))) cycle_error(text, "expected a digit");
        cycle.push_back(static_cast<std::size_t>(d - '0'));
      }
    }
    if (cycle.empty()) cycle_error(text, "empty cycle");
    for (std::size_t p : cycle) {
      if (p < 1 || p > degree) cycle_error(text, "point out of range");
      if (used[p - 1]) cycle_error(text, "repeated point");
      used[p - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i] - 1] = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
    pos = close + 1;
  }
  return Permutation(std::move(img));
}

std::string print_cycles(const Permutation& a) {
  const bool commas = a.degree() >= 10;
  std::string out;
  std::vector<bool> seen(a.degree(), false);
  for (Point x = 0; x < a.degree(); ++x) {
    if (seen[x] || a(x) == x) continue;
    out += '(';
    bool first = true;
    for (Point y = x; !seen[y]; y = a(y)) {
      seen[y] = true;
      if (commas && !first) out += ',';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

SmallGroup::SmallGroup(std::size_t degree)
    : degree_(degree), elements_{Permutation::identity(degree)} {}

namespace {

// Greedy generating set: keep each element (in order) that is not already in
// the subgroup generated by the ones kept so far.
std::vector<Permutation> pick_generators(const std::vector<Permutation>& elements,
                                         std::size_t degree) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> reached{Permutation::identity(degree)};
  std::vector<Permutation> members{Permutation::identity(degree)};
  for (const Permutation& e : elements) {
    if (reached.count(e)) continue;
    gens.push_back(e);
    // Extend the subgroup: right-multiply every member by every generator
    // until closed.
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < members.size(); ++i) queue.push_back(i);
    while (!queue.empty()) {
      Permutation m = members[queue.front()];
      queue.pop_front();
      for (const Permutation& g : gens) {
        Permutation p = compose(m, g);
        if (reached.insert(p).second) {
          members.push_back(p);
          queue.push_back(members.size() - 1);
        }
      }
    }
    if (members.size() == elements.size()) break;
  }
  return gens;
}

}  // namespace

SmallGroup SmallGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  SmallGroup G(degree);
  std::sort(elements.begin(), elements.end());
  G.generators_ = pick_generators(elements, degree);
  G.elements_ = std::move(elements);
  return G;
}

bool SmallGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> SmallGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool SmallGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (compose(generators_[i], generators_[j]) != compose(generators_[j], generators_[i]))
        return false;
  return true;
}

bool SmallGroup::is_symmetric() const { return order() == factorial(degree_); }

SmallGroup closure(std::span<const Permutation> generators, std::size_t degree, std::size_t cap) {
  for (const Permutation& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("closure: degree mismatch");
  std::unordered_set<Permutation, PermutationHash> seen{Permutation::identity(degree)};
  std::vector<Permutation> elements{Permutation::identity(degree)};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Permutation& g : generators) {
      Permutation p = compose(g, elements[head]);
      if (seen.insert(p).second) {
        if (elements.size() >= cap) throw CapExceeded("group exceeds materialization cap");
        elements.push_back(std::move(p));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  SmallGroup G(degree);
  G.generators_.assign(generators.begin(), generators.end());
  G.elements_ = std::move(elements);
  return G;
}

SmallGroup symmetric_group(std::size_t degree, std::size_t cap) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<Point> t(degree), c(degree);
    std::iota(t.begin(), t.end(), Point{0});
    std::swap(t[0], t[1]);
    for (Point i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
    gens.emplace_back(t);
    if (degree > 2) gens.emplace_back(c);
  }
  return closure(gens, degree, cap);
}

SmallGroup centralizer(const SmallGroup& G, std::span<const Permutation> S) {
  for (const Permutation& s : S)
    if (s.degree() != G.degree()) throw std::invalid_argument("centralizer: degree mismatch");
  std::vector<Permutation> kept;
  for (const Permutation& g : G.elements()) {
    bool ok = true;
    for (const Permutation& s : S) {
      for (Point x = 0; x < g.degree() && ok; ++x)
        if (g(s(x)) != s(g(x))) ok = false;
      if (!ok) break;
    }
    if (ok) kept.push_back(g);
  }
  return SmallGroup::from_elements(G.degree(), std::move(kept));
}

SmallGroup centralizer(const SmallGroup& G, const Permutation& s) {
  return centralizer(G, std::span<const Permutation>(&s, 1));
}

namespace {

std::vector<std::vector<Point>> cycles_by_length(const Permutation& a) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> seen(a.degree(), false);
  for (Point x = 0; x < a.degree(); ++x) {
    if (seen[x]) continue;
    std::vector<Point> cyc;
    for (Point y = x; !seen[y]; y = a(y)) {
      seen[y] = true;
      cyc.push_back(y);
    }
    cycles.push_back(std::move(cyc));
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& l, const auto& r) { return l.size() > r.size(); });
  return cycles;
}

}  // namespace

std::optional<Permutation> conjugating_element(const SmallGroup& G, const Permutation& a,
                                               const Permutation& b) {
  if (a.degree() != G.degree() || b.degree() != G.degree())
    throw std::invalid_argument("conjugating_element: degree mismatch");
  if (G.is_symmetric()) {
    if (cycle_type(a) != cycle_type(b)) return std::nullopt;
    // Map the cycles of a onto the cycles of b of equal length.
    auto ca = cycles_by_length(a);
    auto cb = cycles_by_length(b);
    std::vector<Point> img(a.degree());
    for (std::size_t i = 0; i < ca.size(); ++i)
      for (std::size_t j = 0; j < ca[i].size(); ++j) img[ca[i][j]] = cb[i][j];
    return Permutation(std::move(img));
  }
  for (const Permutation& g : G.elements())
    if (conjugate(g, a) == b) return g;
  return std::nullopt;
}

bool are_conjugate(const SmallGroup& G, const Permutation& a, const Permutation& b) {
  return conjugating_element(G, a, b).has_value();
}

std::vector<std::vector<Permutation>> conjugation_orbits(const SmallGroup& acting,
                                                         std::span<const Permutation> subset) {
  std::vector<Permutation> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  std::unordered_map<Permutation, bool, PermutationHash> done;
  std::vector<std::vector<Permutation>> orbits;
  for (const Permutation& a : sorted) {
    if (done.count(a)) continue;
    std::unordered_set<Permutation, PermutationHash> orbit_set;
    std::vector<Permutation> orbit{a};
    orbit_set.insert(a);
    // Orbit under the generators is the orbit under the group.
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Permutation& g : acting.generators()) {
        Permutation c = conjugate(g, orbit[head]);
        if (orbit_set.insert(c).second) orbit.push_back(std::move(c));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    for (const Permutation& c : orbit) done.emplace(c, true);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const SmallGroup& G) {
  return conjugation_orbits(G, G.elements());
}

std::vector<std::vector<Point>> cayley_table(const SmallGroup& G) {
  const auto& el = G.elements();
  std::vector<std::vector<Point>> table(el.size(), std::vector<Point>(el.size()));
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j)
      table[i][j] = static_cast<Point>(*G.index_of(compose(el[i], el[j])));
  return table;
}

}  // namespace glrack
