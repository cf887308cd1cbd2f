#pragma once

// Finite racks stored as one permutation s_x per point x, with
//   s_x s_y == s_{s_x(y)} s_x   for all x, y.

#include <optional>
#include <string>
#include <vector>

#include "glrack/perm.hpp"

namespace glrack {

struct RackViolation {
  enum class Kind { WrongShape, NotABijection, SelfDistributivityFails };
  Kind kind;
  Point x = 0;
  Point y = 0;

  std::string describe() const;  // 1-based coordinates
};

class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rack {
 public:
  Rack() = default;  // the empty rack

  // Throws InvalidStructure on the first violated axiom.
  explicit Rack(std::vector<Permutation> s);

  std::size_t order() const noexcept { return s_.size(); }
  const Permutation& s(Point x) const { return s_[x]; }
  const std::vector<Permutation>& structure() const& noexcept { return s_; }
  std::vector<Permutation> structure() && noexcept { return std::move(s_); }

  // s_x(y)
  Point act(Point x, Point y) const { return s_[x](y); }

  friend bool operator==(const Rack&, const Rack&) = default;
  friend auto operator<=>(const Rack&, const Rack&) = default;

 private:
  struct Trusted {};
  Rack(std::vector<Permutation> s, Trusted) : s_(std::move(s)) {}

  std::vector<Permutation> s_;

  friend Rack trusted_rack(std::vector<Permutation>);
};

// For callers that have already verified the axioms.
Rack trusted_rack(std::vector<Permutation> s);

struct RackCheck {
  std::optional<Rack> rack;
  std::optional<RackViolation> violation;
  explicit operator bool() const { return rack.has_value(); }
};

// rows[x] is the image array of s_x.
RackCheck check_rack(std::size_t n, const std::vector<std::vector<Point>>& rows);
std::optional<RackViolation> find_rack_violation(std::size_t n,
                                                 const std::vector<std::vector<Point>>& rows);

bool is_quandle(const Rack& R);
bool is_medial(const Rack& R);
bool is_left_distributive(const Rack& R);

// Y is a subrack when s_y^{+-1}(z) stays in Y for y, z in Y.
bool is_subrack(const Rack& R, const std::vector<Point>& subset);

// <s_x s_y^-1 | x, y>
SmallGroup transvection_group(const Rack& R, std::size_t cap = SmallGroup::default_cap);

Rack dual(const Rack& R);

// x -> s_x(x) and its inverse x -> s_x^-1(x).
Permutation theta(const Rack& R);
Permutation theta_inverse(const Rack& R);

// Constructors for the standard families.
Rack permutation_rack(const Permutation& sigma);
Rack trivial_quandle(std::size_t n);
Rack takasaki(std::size_t m);  // s_b(a) = 2b - a on Z/m
Rack dihedral(std::size_t m);  // same as takasaki(m)

// Conjugation quandle on `subset` (indices into the table) of a finite group
// given by its multiplication table; s_x(y) = x y x^-1.  Points of the result
// are positions in `subset`.
Rack conjugation_quandle(const std::vector<std::vector<Point>>& cayley,
                         const std::vector<Point>& subset);

// Quotient of R by a congruence, and the projection onto it.
struct Quotient {
  Rack rack;
  std::vector<Point> projection;  // x -> class index
};

// Finest congruence containing `pairs`, as a class label for each point.
// Classes are numbered by their smallest member.
std::vector<Point> finest_congruence(const Rack& R,
                                     const std::vector<std::pair<Point, Point>>& pairs);
Quotient quotient(const Rack& R, const std::vector<Point>& classes);

Quotient associated_quandle(const Rack& R);
Quotient medialization(const Rack& R);

struct RackProfile {
  bool quandle = false;
  bool medial = false;
  std::vector<std::size_t> theta_cycle_type;
  std::vector<std::vector<std::size_t>> s_cycle_types;  // sorted multiset
  std::optional<std::size_t> inn_order;                 // empty if over cap

  friend bool operator==(const RackProfile&, const RackProfile&) = default;
};

RackProfile profile(const Rack& R, std::size_t cap = SmallGroup::default_cap);

}  // namespace glrack
