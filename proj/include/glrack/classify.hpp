#pragma once

// GL-structures on a rack, their isomorphism classes, enumeration of racks up
// to isomorphism, and the classification of all GL-racks of a given order.
//
// The GL-structures on R form the centralizer of Inn R in Aut R, and two of
// them give isomorphic GL-racks exactly when they are conjugate in Aut R.
// Classification therefore only needs Aut R for one rack per isomorphism
// class.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glrack/gl.hpp"
#include "glrack/morphisms.hpp"

namespace glrack {

// U_R as a group.
SmallGroup gl_structures(const Rack& R, std::uint64_t budget = default_node_budget);

// Every u in S_n passing check_gl; the oracle for gl_structures.
std::vector<Permutation> gl_structures_brute_force(const Rack& R);

// U_R split into Aut R-conjugacy classes.  Each class is sorted, so its
// representative (least member) comes first; classes are ordered by
// representative.  Witnesses come from conjugating_element(aut, ...).
struct GLClasses {
  SmallGroup aut;
  SmallGroup structures;
  std::vector<std::vector<Permutation>> classes;
};

GLClasses gl_classes(const Rack& R, std::uint64_t budget = default_node_budget);

// ---------------------------------------------------------------------------
// Canonical forms and rack enumeration

// The relabeling of R whose concatenated image arrays (s_0, ..., s_{n-1}) are
// lexicographically least over all of S_n.
struct CanonicalForm {
  Rack rack;
  Permutation relabeling;  // rack == relabel(R, relabeling)
};

CanonicalForm canonical_form(const Rack& R);

// s'_{pi(x)} = pi s_x pi^-1
Rack relabel(const Rack& R, const Permutation& pi);

struct EnumerateOptions {
  std::uint64_t node_budget = 50'000'000'000ull;
  // Called for each rack as it is found; return false to stop early.
  std::function<bool(const Rack&)> on_rack;
};

inline constexpr std::size_t max_enumeration_order = 10;

// One canonical rack per isomorphism class, in lexicographic order.
std::vector<Rack> enumerate_racks(std::size_t n, const EnumerateOptions& options = {});

// ---------------------------------------------------------------------------
// External rack libraries: a bracketed list of n x n tables of 1-based entries.

enum class TableOrientation {
  automatic,
  row_is_s_x,     // T[x][y] = s_x(y)
  column_is_s_y,  // T[x][y] = s_y(x)
};

class LibraryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rack> parse_rack_library(std::string_view text,
                                     TableOrientation orientation = TableOrientation::automatic);
std::vector<Rack> ingest_rack_library(const std::filesystem::path& path,
                                      TableOrientation orientation = TableOrientation::automatic);

// ---------------------------------------------------------------------------
// Classification

struct ClassRecord {
  std::size_t rack_index = 0;
  Rack rack;
  Permutation u;
  Permutation d;
  GLFlags flags;
  std::optional<std::size_t> aut_glr_order;

  GLRack glrack() const { return trusted_glrack(rack, u); }
};

struct RackDiagnostic {
  std::size_t rack_index = 0;
  std::string message;
};

struct ClassifyOptions {
  bool quandles_only = false;
  bool medial_only = false;
  unsigned jobs = 1;
  std::uint64_t node_budget = default_node_budget;
};

struct Classification {
  std::vector<ClassRecord> records;  // sorted by (rack_index, u)
  std::vector<RackDiagnostic> diagnostics;
  bool exhaustive = true;
};

// Class representatives of GL-structures on a single rack.
std::vector<ClassRecord> classify_rack(const Rack& R, std::size_t rack_index,
                                       std::uint64_t budget = default_node_budget);

bool passes_filters(const Rack& R, const ClassifyOptions& options);

// Racks in [first, last) of `racks`; the full list by default.
Classification classify_gl(const std::vector<Rack>& racks, const ClassifyOptions& options = {},
                           std::size_t first = 0, std::optional<std::size_t> last = {});

struct CountReport {
  std::size_t n = 0;
  std::size_t g = 0, g_m = 0, g_q = 0, g_qm = 0;
  std::size_t r = 0, r_m = 0, r_q = 0, r_qm = 0;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

CountReport count_report(std::size_t n, const std::vector<Rack>& racks,
                         const std::vector<ClassRecord>& records);
CountReport count_report(std::size_t n, unsigned jobs = 1);

}  // namespace glrack
