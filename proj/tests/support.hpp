#pragma once

// Shared helpers for the test binaries.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "glrack/classify.hpp"

#ifndef GLRACK_TEST_DATA
#define GLRACK_TEST_DATA "tests/data"
#endif

namespace testing_support {

using namespace glrack;

inline Permutation cyc(const char* text, std::size_t n) { return parse_cycles(text, n); }

inline Rack rack_of_cycles(std::initializer_list<const char*> s) {
  std::vector<Permutation> perms;
  for (const char* c : s) perms.push_back(parse_cycles(c, s.size()));
  return Rack(std::move(perms));
}

inline Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

// Affine map k -> a + v k on Z/n.
inline Permutation affine(std::size_t n, std::size_t a, std::size_t v) {
  std::vector<Point> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<Point>((a + v * k) % n);
  return Permutation(std::move(img));
}

struct GoldenRow {
  Rack rack;
  Permutation u, d;
  bool gl_quandle = false, medial = false;
  std::size_t line = 0;
};

// Lines "s_1 ... s_n | u | d | quandle medial" in cycle notation.
inline std::vector<GoldenRow> load_golden(const std::string& name) {
  std::ifstream in(std::string(GLRACK_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::vector<GoldenRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts;
    std::stringstream ss(line);
    for (std::string p; std::getline(ss, p, '|');) parts.push_back(p);
    if (parts.size() != 4) throw std::runtime_error(name + ": bad line " + std::to_string(line_no));
    std::vector<std::string> cycles;
    std::stringstream sc(parts[0]);
    for (std::string c; sc >> c;) cycles.push_back(c);
    const std::size_t n = cycles.size();
    std::vector<Permutation> s;
    for (const auto& c : cycles) s.push_back(parse_cycles(c, n));
    GoldenRow row;
    row.rack = Rack(std::move(s));
    row.u = parse_cycles(parts[1], n);
    row.d = parse_cycles(parts[2], n);
    std::stringstream sf(parts[3]);
    std::string q, m;
    sf >> q >> m;
    row.gl_quandle = q == "yes";
    row.medial = m == "yes";
    row.line = line_no;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace testing_support
