#pragma once

// Permutations of {0, ..., n-1} and explicitly materialized permutation groups.
//
// Composition is right-to-left: compose(a, b) is "b, then a", so that
// compose(a, b)(x) == a(b(x)).  Points are 0-based internally; the cycle
// notation produced and accepted here is 1-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glrack {

using Point = std::uint32_t;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const& noexcept { return images_; }
  std::span<const Point> images() && = delete;
  bool is_identity() const noexcept;

  // Lexicographic on image arrays.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation from_images_unchecked(std::vector<Point>);
};

bool is_bijection(std::span<const Point> images);

// Trusted construction for hot paths that already know `images` is a bijection.
Permutation from_images_unchecked(std::vector<Point> images);

// (a * b)(x) = a(b(x)).  Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

Permutation inverse(const Permutation& a);
Permutation power(const Permutation& a, long long k);

// g a g^-1
Permutation conjugate(const Permutation& g, const Permutation& a);

// Cycle lengths including fixed points, sorted in decreasing order.
std::vector<std::size_t> cycle_type(const Permutation& a);
std::size_t element_order(const Permutation& a);

// "id" or disjoint cycles such as "(13)(24)"; points are 1-based.  Points
// above 9 are separated by commas inside a cycle, e.g. "(1,10,3)".
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string print_cycles(const Permutation& a);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// A permutation group stored as its full, lexicographically sorted element
// list together with a generating set.
class SmallGroup {
 public:
  static constexpr std::size_t default_cap = 3628800;  // 10!

  // The trivial group of the given degree.
  explicit SmallGroup(std::size_t degree = 0);

  // Trusts that `elements` is a group; sorts it and picks a generating set.
  static SmallGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const& noexcept { return elements_; }
  // Safe in range-for over a temporary group.
  std::vector<Permutation> elements() && noexcept { return std::move(elements_); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  bool contains(const Permutation& p) const;
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool is_abelian() const;
  bool is_symmetric() const;  // order == degree!

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;

  friend SmallGroup closure(std::span<const Permutation>, std::size_t, std::size_t);
};

// Breadth-first product closure.  Throws CapExceeded once more than `cap`
// elements have been produced.
SmallGroup closure(std::span<const Permutation> generators, std::size_t degree,
                   std::size_t cap = SmallGroup::default_cap);

SmallGroup symmetric_group(std::size_t degree, std::size_t cap = SmallGroup::default_cap);

// {g in G : g s = s g for all s in S}
SmallGroup centralizer(const SmallGroup& G, std::span<const Permutation> S);
SmallGroup centralizer(const SmallGroup& G, const Permutation& s);

// Some g in G with g a g^-1 == b, or nothing.  Full symmetric groups are
// decided by cycle type.
std::optional<Permutation> conjugating_element(const SmallGroup& G, const Permutation& a,
                                               const Permutation& b);
bool are_conjugate(const SmallGroup& G, const Permutation& a, const Permutation& b);

// Classes of G under its own conjugation action.  Each class is sorted, so its
// least element comes first; classes are ordered by that element.
std::vector<std::vector<Permutation>> conjugacy_classes(const SmallGroup& G);

// Orbits of `subset` (assumed closed under the action) under conjugation by
// `acting`, in the same canonical order as conjugacy_classes.
std::vector<std::vector<Permutation>> conjugation_orbits(const SmallGroup& acting,
                                                         std::span<const Permutation> subset);

// Multiplication table of G indexed by G.elements(): table[i][j] = e_i * e_j.
std::vector<std::vector<Point>> cayley_table(const SmallGroup& G);

std::size_t factorial(std::size_t n);

}  // namespace glrack
