#pragma once

// GL-racks: a rack together with an automorphism u that commutes with every
// s_x.  The down map d = theta^-1 u^-1 is always derived from (s, u).

#include <optional>
#include <string>

#include "glrack/rack.hpp"

namespace glrack {

struct GLViolation {
  enum class Kind { WrongDegree, NotAutomorphism, DoesNotCommute };
  Kind kind;
  Point x = 0;

  std::string describe() const;
};

class GLRack {
 public:
  GLRack() = default;

  // Throws InvalidStructure when u is not a GL-structure on R.
  GLRack(Rack R, Permutation u);

  const Rack& rack() const noexcept { return rack_; }
  const Permutation& u() const noexcept { return u_; }
  std::size_t order() const noexcept { return rack_.order(); }

  friend bool operator==(const GLRack&, const GLRack&) = default;

 private:
  struct Trusted {};
  GLRack(Rack R, Permutation u, Trusted) : rack_(std::move(R)), u_(std::move(u)) {}

  Rack rack_;
  Permutation u_;

  friend GLRack trusted_glrack(Rack, Permutation);
};

GLRack trusted_glrack(Rack R, Permutation u);

std::optional<GLViolation> find_gl_violation(const Rack& R, const Permutation& u);

struct GLCheck {
  std::optional<GLRack> glrack;
  std::optional<GLViolation> violation;
  explicit operator bool() const { return glrack.has_value(); }
};

GLCheck check_gl(const Rack& R, const Permutation& u);

// d = theta^-1 u^-1
Permutation down_map(const GLRack& G);

// theta == u^-2
bool is_legendrian(const GLRack& G);

struct GLFlags {
  bool gl_quandle = false;
  bool medial = false;
  bool legendrian = false;

  friend bool operator==(const GLFlags&, const GLFlags&) = default;
};

GLFlags flags(const GLRack& G);

// Checks the three bi-Legendrian axioms for arbitrary maps u, d:
//   (1) u d s_x(x) = x = d u s_x(x)
//   (2) u s_x = s_x u and d s_x = s_x d
//   (3) s_{u(x)} = s_x = s_{d(x)}
// Returns the number (1..3) of the first failing axiom.
std::optional<int> bilegendrian_failure(const Rack& R, std::span<const Point> u,
                                        std::span<const Point> d);

}  // namespace glrack
