#include <doctest.h>

#include <numeric>
#include <random>

#include "glrack/classify.hpp"
#include "support.hpp"

using namespace glrack;
using testing_support::affine;
using testing_support::cyc;
using testing_support::rack_of_cycles;

namespace {

std::size_t euler_phi(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

std::vector<GLRack> gl_corpus(std::size_t max_n) {
  std::vector<GLRack> out;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (const Rack& R : enumerate_racks(n))
      for (const Permutation& u : gl_structures(R).elements()) out.push_back(trusted_glrack(R, u));
  return out;
}

}  // namespace

TEST_CASE("hom predicates") {
  const Rack R3 = takasaki(3);
  CHECK(is_rack_hom(R3, R3, std::vector<Point>{0, 0, 0}));
  CHECK(is_rack_hom(R3, R3, std::vector<Point>{2, 1, 0}));
  CHECK_FALSE(is_rack_hom(R3, R3, std::vector<Point>{0, 0, 1}));
  CHECK_FALSE(is_rack_hom(R3, R3, std::vector<Point>{0, 1}));
  CHECK_FALSE(is_rack_hom(R3, R3, std::vector<Point>{0, 1, 3}));
}

TEST_CASE("backtracking agrees with brute force on all pairs of order <= 3") {
  std::vector<Rack> racks;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const Rack& R : enumerate_racks(n)) racks.push_back(R);
  for (const Rack& R : racks)
    for (const Rack& S : racks)
      CHECK(enumerate_homs(R, S) == enumerate_homs(R, S, HomAlgorithm::brute_force));
}

TEST_CASE("GL hom search agrees with brute force") {
  const auto corpus = gl_corpus(3);
  for (const GLRack& G1 : corpus)
    for (const GLRack& G2 : corpus)
      CHECK(enumerate_gl_homs(G1, G2) == enumerate_gl_homs(G1, G2, HomAlgorithm::brute_force));
}

TEST_CASE("endomorphisms of R_3") {
  // 3 constant maps plus the 6 affine bijections.
  CHECK(enumerate_homs(takasaki(3), takasaki(3)).size() == 9);
  CHECK(enumerate_homs(Rack(), takasaki(3)).size() == 1);
  CHECK(enumerate_homs(takasaki(3), Rack()).empty());
}

TEST_CASE("budget exhaustion throws") {
  CHECK_THROWS_AS(enumerate_homs(trivial_quandle(6), trivial_quandle(6), HomAlgorithm::backtracking, 100),
                  BudgetExceeded);
}

TEST_CASE("automorphisms of dihedral quandles form the affine group") {
  for (std::size_t n = 3; n <= 12; ++n) {
    const SmallGroup A = aut_group(takasaki(n));
    CHECK(A.order() == n * euler_phi(n));
    CHECK(A.contains(affine(n, 1, n - 1)));
  }
  CHECK(aut_group(trivial_quandle(5)).order() == 120);
  CHECK(automorphisms(Rack()).size() == 1);
}

TEST_CASE("isomorphism search") {
  std::mt19937 rng(5);
  for (const Rack& R : enumerate_racks(5)) {
    const Permutation pi = testing_support::random_permutation(5, rng);
    const Rack S = relabel(R, pi);
    auto iso = find_iso(R, S);
    REQUIRE(iso);
    CHECK(is_rack_hom(R, S, iso->images()));
    CHECK(search_iso(R, S));
  }
  const auto racks = enumerate_racks(4);
  for (std::size_t i = 0; i < racks.size(); ++i)
    for (std::size_t j = 0; j < racks.size(); ++j)
      CHECK(is_isomorphic(racks[i], racks[j]) == (i == j));
}

TEST_CASE("GL isomorphism") {
  const Rack T = trivial_quandle(3);
  CHECK(find_gl_iso(GLRack(T, cyc("(12)", 3)), GLRack(T, cyc("(23)", 3))));
  CHECK_FALSE(find_gl_iso(GLRack(T, cyc("(12)", 3)), GLRack(T, cyc("(123)", 3))));
}

TEST_CASE("GL automorphisms equal the centralizer of u in Aut R") {
  for (const GLRack& G : gl_corpus(4)) CHECK(aut_glr(G).elements() == aut_glr_via_centralizer(G).elements());
  // R_4 with k -> 3k
  CHECK(aut_glr(GLRack(takasaki(4), affine(4, 0, 3))).order() == 4);
}

TEST_CASE("Inn R") {
  CHECK(inn_group(takasaki(3)).order() == 6);
  CHECK(inn_group(trivial_quandle(4)).order() == 1);
  CHECK(inn_group(permutation_rack(cyc("(1234)", 4))).order() == 4);
}

TEST_CASE("Hom rack into a medial target") {
  const HomRack H = hom_rack(takasaki(3), takasaki(3));
  CHECK(H.carrier.size() == 9);
  CHECK(H.rack.order() == 9);
  CHECK(is_quandle(H.rack));
  CHECK(is_medial(H.rack));
  CHECK(std::is_sorted(H.carrier.begin(), H.carrier.end()));
  // pointwise: t~_g(f)(x) = t_{g(x)}(f(x))
  const Rack R3 = takasaki(3);
  for (std::size_t g = 0; g < 9; ++g)
    for (std::size_t f = 0; f < 9; ++f) {
      const Map& img = H.carrier[H.rack.act(static_cast<Point>(g), static_cast<Point>(f))];
      for (Point x = 0; x < 3; ++x) CHECK(img[x] == R3.act(H.carrier[g][x], H.carrier[f][x]));
    }
  const Rack nm = rack_of_cycles({"id", "(34)", "(24)", "(23)"});
  CHECK_THROWS_AS(hom_rack(takasaki(3), nm), InvalidStructure);
}

TEST_CASE("Hom GL-rack") {
  const GLRack G(trivial_quandle(2), cyc("(12)", 2));
  const HomGLRack H = hom_glrack(G, G);
  CHECK(H.carrier.size() == 2);  // the GL-homs commute with the swap
  CHECK(check_gl(H.glrack.rack(), H.glrack.u()));
}

TEST_CASE("bihomomorphisms") {
  // (x, y) -> s_y(x) is a bihom R x R -> R iff R is left distributive.
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Rack& R : enumerate_racks(n)) {
      std::vector<std::vector<Point>> beta(n, std::vector<Point>(n));
      for (Point x = 0; x < n; ++x)
        for (Point y = 0; y < n; ++y) beta[x][y] = R.act(y, x);
      CHECK(is_bihom(R, R, R, beta) == is_left_distributive(R));
    }
  const Rack T = trivial_quandle(2);
  CHECK(is_bihom(T, T, T, {{0, 1}, {1, 0}}));
  CHECK_FALSE(is_bihom(T, T, T, {{0}, {1}}));
  const GLRack G(T, cyc("(12)", 2));
  CHECK_FALSE(is_gl_bihom(G, G, G, {{0, 0}, {0, 0}}));
}
