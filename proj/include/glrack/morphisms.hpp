#pragma once

// Homomorphisms and isomorphisms of racks and GL-racks, automorphism groups,
// Hom racks into medial targets and bihomomorphism checks.
//
// A map phi: X -> Y is stored as its image array.  Searches are complete
// backtracking searches with an explicit node budget; running out of budget
// throws BudgetExceeded rather than returning a partial answer.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "glrack/gl.hpp"

namespace glrack {

using Map = std::vector<Point>;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_node_budget = 200'000'000;

enum class HomAlgorithm { backtracking, brute_force };

// phi s_x == t_{phi(x)} phi for every x.
bool is_rack_hom(const Rack& R, const Rack& S, std::span<const Point> phi);

// Rack hom that also satisfies phi u_1 == u_2 phi.
bool is_gl_hom(const GLRack& G1, const GLRack& G2, std::span<const Point> phi);

// All rack homomorphisms R -> S in lexicographic order.
std::vector<Map> enumerate_homs(const Rack& R, const Rack& S,
                                HomAlgorithm algorithm = HomAlgorithm::backtracking,
                                std::uint64_t budget = default_node_budget);

std::vector<Map> enumerate_gl_homs(const GLRack& G1, const GLRack& G2,
                                   HomAlgorithm algorithm = HomAlgorithm::backtracking,
                                   std::uint64_t budget = default_node_budget);

// An isomorphism R -> S, or nothing.  Profiles are compared first.
std::optional<Permutation> find_iso(const Rack& R, const Rack& S,
                                    std::uint64_t budget = default_node_budget);
bool is_isomorphic(const Rack& R, const Rack& S);

// Same search without the profile pre-check.
std::optional<Permutation> search_iso(const Rack& R, const Rack& S,
                                      std::uint64_t budget = default_node_budget);

std::optional<Permutation> find_gl_iso(const GLRack& G1, const GLRack& G2,
                                       std::uint64_t budget = default_node_budget);

// Every automorphism, sorted.
std::vector<Permutation> automorphisms(const Rack& R, std::uint64_t budget = default_node_budget);

SmallGroup aut_group(const Rack& R, std::uint64_t budget = default_node_budget);
SmallGroup inn_group(const Rack& R, std::size_t cap = SmallGroup::default_cap);

// GL-rack automorphisms found by direct search.
SmallGroup aut_glr(const GLRack& G, std::uint64_t budget = default_node_budget);
// The same group as the centralizer of u in Aut R.
SmallGroup aut_glr_via_centralizer(const GLRack& G, std::uint64_t budget = default_node_budget);

struct HomRack {
  std::vector<Map> carrier;  // lexicographic
  Rack rack;                 // t~_g(f)(x) = t_{g(x)} f(x)
};

// Requires M medial; throws InvalidStructure otherwise.
HomRack hom_rack(const Rack& R, const Rack& M, std::uint64_t budget = default_node_budget);

struct HomGLRack {
  std::vector<Map> carrier;  // GL-homs, lexicographic
  GLRack glrack;             // u(f) = u_2 f
};

HomGLRack hom_glrack(const GLRack& G1, const GLRack& G2,
                     std::uint64_t budget = default_node_budget);

// beta[x][y] for x in R1, y in R2, landing in R3.  True iff every
// beta(-, y) and every beta(x, -) is a homomorphism.
bool is_bihom(const Rack& R1, const Rack& R2, const Rack& R3,
              const std::vector<std::vector<Point>>& beta);
bool is_gl_bihom(const GLRack& G1, const GLRack& G2, const GLRack& G3,
                 const std::vector<std::vector<Point>>& beta);

}  // namespace glrack
