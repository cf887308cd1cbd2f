#include "glrack/gl.hpp"

namespace glrack {

std::string GLViolation::describe() const {
  switch (kind) {
    case Kind::WrongDegree:
      return "u has the wrong degree";
    case Kind::NotAutomorphism:
      return "u is not a rack automorphism at x = " + std::to_string(x + 1);
    case Kind::DoesNotCommute:
      return "u does not commute with s_" + std::to_string(x + 1);
  }
  return "unknown violation";
}

std::optional<GLViolation> find_gl_violation(const Rack& R, const Permutation& u) {
  if (u.degree() != R.order()) return GLViolation{GLViolation::Kind::WrongDegree, 0};
  const std::size_t n = R.order();
  for (Point x = 0; x < n; ++x) {
    const Permutation& sx = R.s(x);
    const Permutation& sux = R.s(u(x));
    for (Point y = 0; y < n; ++y)
      if (u(sx(y)) != sux(u(y))) return GLViolation{GLViolation::Kind::NotAutomorphism, x};
  }
  for (Point x = 0; x < n; ++x) {
    const Permutation& sx = R.s(x);
    for (Point y = 0; y < n; ++y)
      if (u(sx(y)) != sx(u(y))) return GLViolation{GLViolation::Kind::DoesNotCommute, x};
  }
  return std::nullopt;
}

GLRack trusted_glrack(Rack R, Permutation u) {
  return GLRack(std::move(R), std::move(u), GLRack::Trusted{});
}

GLRack::GLRack(Rack R, Permutation u) : rack_(std::move(R)), u_(std::move(u)) {
  if (auto v = find_gl_violation(rack_, u_)) throw InvalidStructure(v->describe());
}

GLCheck check_gl(const Rack& R, const Permutation& u) {
  GLCheck result;
  result.violation = find_gl_violation(R, u);
  if (!result.violation) result.glrack = trusted_glrack(R, u);
  return result;
}

Permutation down_map(const GLRack& G) {
  return compose(theta_inverse(G.rack()), inverse(G.u()));
}

bool is_legendrian(const GLRack& G) { return theta(G.rack()) == power(G.u(), -2); }

GLFlags flags(const GLRack& G) {
  return {is_quandle(G.rack()), is_medial(G.rack()), is_legendrian(G)};
}

std::optional<int> bilegendrian_failure(const Rack& R, std::span<const Point> u,
                                        std::span<const Point> d) {
  const std::size_t n = R.order();
  if (u.size() != n || d.size() != n) return 1;
  for (Point x = 0; x < n; ++x) {
    Point t = R.act(x, x);
    if (u[d[t]] != x || d[u[t]] != x) return 1;
  }
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      if (u[R.act(x, y)] != R.act(x, u[y]) || d[R.act(x, y)] != R.act(x, d[y])) return 2;
  for (Point x = 0; x < n; ++x)
    if (R.s(u[x]) != R.s(x) || R.s(d[x]) != R.s(x)) return 3;
  return std::nullopt;
}

}  // namespace glrack
