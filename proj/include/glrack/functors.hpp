#pragma once

// The object maps between racks and GL-quandles.
//
//   F(R)   = (X, x -> theta^-1 s_x, theta)
//   G(R,u) = (X, x -> u s_x)
//
// G is defined on every GL-rack.  On GL-quandles the two maps are mutually
// inverse on the nose.

#include <string>
#include <vector>

#include "glrack/morphisms.hpp"

namespace glrack {

GLRack functor_f(const Rack& R);
Rack functor_g(const GLRack& G);

struct RoundtripReport {
  std::size_t racks_checked = 0;
  std::size_t glquandles_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// G(F(R)) == R and medial(R) == medial(F(R)) for every rack; F(G(Q)) == Q for
// every GL-quandle.  Entries of `glquandles` that are not GL-quandles are
// reported as failures.
RoundtripReport roundtrip_check(const std::vector<Rack>& racks,
                                const std::vector<GLRack>& glquandles);

// phi: R -> S is a rack hom exactly when it is a GL-hom F(R) -> F(S).
bool hom_transport_check(const Rack& R, const Rack& S, std::span<const Point> phi);

}  // namespace glrack
