#include <doctest.h>

#include "glrack/io.hpp"
#include "support.hpp"

using namespace glrack;
using testing_support::cyc;

TEST_CASE("records round trip") {
  const auto racks = enumerate_racks(3);
  const Classification c = classify_gl(racks);
  std::string text;
  for (const auto& rec : c.records) text += to_record_line(rec) + "\n";
  const auto back = parse_records(text);
  REQUIRE(back.size() == c.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(validate(back[i]).empty());
    CHECK(glrack_of(back[i]) == c.records[i].glrack());
    CHECK(back[i].rack_index == c.records[i].rack_index);
    CHECK(back[i].aut_glr_order == c.records[i].aut_glr_order);
  }
}

TEST_CASE("record format") {
  const GLRack G(permutation_rack(cyc("(12)", 2)), Permutation::identity(2));
  CHECK(to_record_line(G) ==
        R"({"n":2,"s":[[2,1],[2,1]],"u":[1,2],"d":[2,1],"flags":{"quandle":false,"medial":true,"legendrian":false}})");
  CHECK(to_record_line(trivial_quandle(1)) == R"({"n":1,"s":[[1]]})");
}

TEST_CASE("validation issues") {
  auto recs = parse_records(
      "{\"n\":2,\"s\":[[2,1],[2,1]],\"u\":[1,2],\"d\":[1,2]}\n"
      "\n"
      "{\"n\":3,\"s\":[[1,3,2],[3,2,1],[1,2,3]]}\n"
      "{\"n\":3,\"s\":[[1,3,2],[1,2,3],[1,2,3]],\"u\":[2,1,3]}\n"
      "{\"watermark\":4}\n"
      "{\"n\":2,\"s\":[[1,2],[1,2]],\"flags\":{\"quandle\":false}}\n");
  REQUIRE(recs.size() == 4);
  auto d = validate(recs[0]);
  REQUIRE(d.size() == 1);
  CHECK(d[0].line == 1);
  CHECK(d[0].message.find("theta") != std::string::npos);
  CHECK(validate(recs[1]).size() == 1);
  CHECK(validate(recs[1])[0].line == 3);
  CHECK(validate(recs[2]).size() == 1);
  CHECK(validate(recs[3]).size() == 1);
  CHECK_THROWS_AS(glrack_of(recs[0]), InvalidStructure);
}

TEST_CASE("malformed lines") {
  CHECK_THROWS_AS(parse_records("{\"n\":2,"), ParseError);
  CHECK_THROWS_AS(parse_records("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_records("{\"s\":[]}"), ParseError);
  CHECK_THROWS_AS(parse_records("{\"n\":2,\"s\":[[1,2]]}"), ParseError);
  CHECK_THROWS_AS(parse_records("{\"n\":2,\"s\":[[1,2],[1,3]]}"), ParseError);
  CHECK_THROWS_AS(parse_records("{\"n\":2,\"s\":[[1,2],[1,2]],\"d\":[1,2]}"), ParseError);
  CHECK(parse_records("").empty());
  try {
    parse_records("\n\n{oops}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 3", 0) == 0);
  }
}

TEST_CASE("cycle table") {
  const auto c = classify_gl(enumerate_racks(2));
  CHECK(cycle_table(c.records) ==
        "rack 1  [id, id]  GL-quandle: yes  medial: yes\n"
        "    [id, id]\n"
        "    [(12), (12)]\n"
        "rack 2  [(12), (12)]  GL-quandle: no  medial: yes\n"
        "    [id, (12)]\n"
        "    [(12), id]\n");
}
