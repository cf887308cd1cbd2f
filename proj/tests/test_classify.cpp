#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "glrack/classify.hpp"
#include "glrack/io.hpp"
#include "support.hpp"

using namespace glrack;
using testing_support::affine;
using testing_support::cyc;
using testing_support::rack_of_cycles;

TEST_CASE("GL-structures on dihedral quandles") {
  for (std::size_t n : {3, 5, 7, 9}) {
    const SmallGroup U = gl_structures(takasaki(n));
    CHECK(U.order() == 1);
  }
  const SmallGroup U4 = gl_structures(takasaki(4));
  CHECK(U4.order() == 4);
  for (std::size_t a : {0, 2})
    for (std::size_t v : {1, 3}) CHECK(U4.contains(affine(4, a, v)));
  CHECK(gl_classes(takasaki(4)).classes.size() == 3);
  CHECK(gl_classes(takasaki(6)).classes.size() == 2);
}

TEST_CASE("GL-structures on trivial quandles") {
  const std::size_t partitions[] = {1, 1, 2, 3, 5, 7};
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(gl_structures(trivial_quandle(n)).order() == factorial(n));
    CHECK(gl_classes(trivial_quandle(n)).classes.size() == partitions[n]);
  }
}

TEST_CASE("classes are taken under Aut R, not U_R") {
  // In R_4, (0, 3) and (2, 3) are conjugate in Aut R but U_R is abelian.
  const GLClasses gc = gl_classes(takasaki(4));
  CHECK(gc.structures.is_abelian());
  bool merged = false;
  for (const auto& cls : gc.classes)
    if (cls.size() == 2) {
      merged = true;
      CHECK(std::find(cls.begin(), cls.end(), affine(4, 0, 3)) != cls.end());
      CHECK(std::find(cls.begin(), cls.end(), affine(4, 2, 3)) != cls.end());
    }
  CHECK(merged);
}

TEST_CASE("centralizer matches the brute force filter") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const Rack& R : enumerate_racks(n))
      CHECK(gl_structures(R).elements() == gl_structures_brute_force(R));
}

TEST_CASE("dual racks carry the same GL-structures") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Rack& R : enumerate_racks(n)) {
      const GLClasses a = gl_classes(R), b = gl_classes(dual(R));
      CHECK(a.structures.elements() == b.structures.elements());
      CHECK(a.classes == b.classes);
    }
}

TEST_CASE("permutation racks") {
  for (const char* s : {"(12)", "(123)", "(12)(34)", "(1234)", "(12)(345)"}) {
    const Permutation sigma = cyc(s, 6);
    const Rack P = permutation_rack(sigma);
    const SmallGroup C = centralizer(symmetric_group(6), sigma);
    CHECK(gl_structures(P).elements() == C.elements());
    CHECK(gl_classes(P).classes.size() == conjugacy_classes(C).size());
  }
}

TEST_CASE("enumeration counts") {
  const std::size_t r[] = {1, 1, 2, 6, 19, 74};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto racks = enumerate_racks(n);
    CHECK(racks.size() == r[n]);
    CHECK(std::is_sorted(racks.begin(), racks.end()));
    for (const Rack& R : racks) CHECK(canonical_form(R).rack == R);
  }
  CHECK_THROWS(enumerate_racks(11));
}

TEST_CASE("enumeration can stop early") {
  std::size_t seen = 0;
  EnumerateOptions opts;
  opts.on_rack = [&](const Rack&) { return ++seen < 5; };
  CHECK(enumerate_racks(5, opts).size() == 5);
  EnumerateOptions tiny;
  tiny.node_budget = 10;
  CHECK_THROWS_AS(enumerate_racks(5, tiny), BudgetExceeded);
}

TEST_CASE("canonical forms are relabeling invariant") {
  std::mt19937 rng(17);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Rack& R : enumerate_racks(n)) {
      const Permutation pi = testing_support::random_permutation(n, rng);
      const Rack S = relabel(R, pi);
      const CanonicalForm c = canonical_form(S);
      CHECK(c.rack == R);
      CHECK(relabel(S, c.relabeling) == c.rack);
    }
}

TEST_CASE("relabel follows s'_{pi(x)} = pi s_x pi^-1") {
  const Rack R = rack_of_cycles({"(23)", "id", "id"});
  const Rack S = relabel(R, cyc("(13)", 3));
  CHECK(S == rack_of_cycles({"id", "id", "(12)"}));
}

TEST_CASE("library parsing") {
  auto one = parse_rack_library("[[[1,2],[1,2]]]");
  REQUIRE(one.size() == 1);
  CHECK(one[0] == trivial_quandle(2));
  CHECK(parse_rack_library("  ").empty());
  CHECK(parse_rack_library("[]").empty());

  try {
    parse_rack_library("[[[1,2],\n [1,2]]");
    FAIL("expected a parse error");
  } catch (const LibraryError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_rack_library("[[[1,2],[1,x]]]"), LibraryError);
  CHECK_THROWS_AS(parse_rack_library("[[[1,2],[1,3]]]"), LibraryError);
  CHECK_THROWS_AS(parse_rack_library("[[[1,2],[1]]]"), LibraryError);
  CHECK_THROWS_AS(parse_rack_library("[[[1,2],[1,2]]] ]"), LibraryError);
  // Not a rack either way.
  CHECK_THROWS_AS(parse_rack_library("[[[1,1,2],[1,2,2],[3,3,3]]]"), LibraryError);
}

TEST_CASE("library orientation") {
  // Rows s_1 = (23), s_2 = s_3 = id, i.e. [[1,3,2],[1,2,3],[1,2,3]].
  const std::string rows = "[[[1,3,2],[1,2,3],[1,2,3]]]";
  const Rack expected = rack_of_cycles({"(23)", "id", "id"});
  CHECK(parse_rack_library(rows, TableOrientation::row_is_s_x)[0] == expected);
  // The same structure written column-wise: T[x][y] = s_y(x).
  const std::string cols = "[[[1,1,1],[3,2,2],[2,3,3]]]";
  CHECK(parse_rack_library(cols)[0] == expected);
  CHECK_THROWS_AS(parse_rack_library(cols, TableOrientation::row_is_s_x), LibraryError);
  CHECK(parse_rack_library(rows)[0] == expected);

  // Symmetric table: both readings agree.
  CHECK(parse_rack_library("[[[1,3,2],[3,2,1],[2,1,3]]]")[0] == takasaki(3));
  // A rack read either way, with different readings.
  const std::string ambiguous = "[[[1,3,4,2],[4,2,1,3],[2,4,3,1],[3,1,2,4]]]";
  CHECK_THROWS_AS(parse_rack_library(ambiguous), LibraryError);
  CHECK(parse_rack_library(ambiguous, TableOrientation::row_is_s_x).size() == 1);
}

TEST_CASE("ingesting all racks of order 3") {
  const auto racks = enumerate_racks(3);
  std::string text = "[\n";
  for (std::size_t i = 0; i < racks.size(); ++i) {
    text += "  [";
    for (Point x = 0; x < 3; ++x) {
      text += x ? ",[" : "[";
      for (Point y = 0; y < 3; ++y) text += (y ? "," : "") + std::to_string(racks[i].act(x, y) + 1);
      text += "]";
    }
    text += i + 1 < racks.size() ? "],\n" : "]\n";
  }
  text += "]\n";
  const auto path = std::filesystem::temp_directory_path() / "glrack_order3_library.txt";
  std::ofstream(path) << text;
  const auto back = ingest_rack_library(path, TableOrientation::row_is_s_x);
  CHECK(back == racks);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(ingest_rack_library("/nonexistent/file"), LibraryError);
}

TEST_CASE("classification of small orders") {
  const std::size_t g[] = {1, 1, 4, 13, 62};
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto racks = enumerate_racks(n);
    const Classification c = classify_gl(racks);
    CHECK(c.exhaustive);
    CHECK(c.records.size() == g[n]);
    for (const ClassRecord& rec : c.records) {
      CHECK(check_gl(rec.rack, rec.u));
      CHECK(rec.d == down_map(rec.glrack()));
      CHECK(rec.flags == flags(rec.glrack()));
      CHECK(rec.aut_glr_order == aut_glr(rec.glrack()).order());
    }
    // No two records of one rack are GL-isomorphic.
    for (std::size_t i = 0; i < c.records.size(); ++i)
      for (std::size_t j = i + 1; j < c.records.size(); ++j)
        if (c.records[i].rack_index == c.records[j].rack_index)
          CHECK_FALSE(find_gl_iso(c.records[i].glrack(), c.records[j].glrack()));
  }
}

TEST_CASE("classification is independent of the number of workers") {
  const auto racks = enumerate_racks(5);
  ClassifyOptions one, four;
  four.jobs = 4;
  const auto a = classify_gl(racks, one), b = classify_gl(racks, four);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].rack_index == b.records[i].rack_index);
    CHECK(a.records[i].u == b.records[i].u);
  }
}

TEST_CASE("filters and ranges") {
  const auto racks = enumerate_racks(4);
  ClassifyOptions q;
  q.quandles_only = true;
  CHECK(classify_gl(racks, q).records.size() == 19);
  ClassifyOptions m;
  m.medial_only = true;
  CHECK(classify_gl(racks, m).records.size() == 61);
  const auto part = classify_gl(racks, {}, 3, 5);
  for (const auto& rec : part.records) CHECK((rec.rack_index == 3 || rec.rack_index == 4));
}

TEST_CASE("budget failures are recorded per rack") {
  const std::vector<Rack> racks{trivial_quandle(5), takasaki(3)};
  ClassifyOptions o;
  o.node_budget = 3;
  const Classification c = classify_gl(racks, o);
  CHECK_FALSE(c.exhaustive);
  REQUIRE(c.diagnostics.size() >= 1);
  CHECK(c.diagnostics.front().rack_index == 0);
}

TEST_CASE("count reports") {
  CHECK(count_report(0) == CountReport{0, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(count_report(5) == CountReport{5, 308, 298, 74, 68, 74, 68, 22, 18});
  const CountReport c6 = count_report(6);
  CHECK(c6.g == 2132);
  CHECK(c6.g_q == 353);
}
