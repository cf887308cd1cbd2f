#pragma once

// Line-oriented record files.  Every non-blank line is a JSON object
//
//   {"n":3,"rack_index":2,"s":[[1,3,2],[1,2,3],[1,2,3]],"u":[1,3,2],"d":[1,3,2],
//    "flags":{"quandle":true,"medial":true,"legendrian":false},"aut_glr_order":2}
//
// with 1-based image arrays.  Only n and s are required.  Checkpoint files
// also carry {"watermark":k} lines, which loaders skip.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glrack/classify.hpp"

namespace glrack {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flags as stored; absent entries are not checked.
struct StoredFlags {
  std::optional<bool> quandle, medial, legendrian;
};

struct StructureRecord {
  std::size_t line = 0;  // 1-based line in the source file
  std::size_t n = 0;
  std::vector<std::vector<Point>> s;  // 0-based images
  std::optional<std::vector<Point>> u, d;
  std::optional<StoredFlags> flags;
  std::optional<std::size_t> rack_index;  // 0-based
  std::optional<std::size_t> aut_glr_order;
};

std::string to_record_line(const Rack& R);
std::string to_record_line(const GLRack& G);
std::string to_record_line(const ClassRecord& rec);

// Throws ParseError for malformed lines; does not validate the algebra.
std::vector<StructureRecord> parse_records(std::string_view text);
std::vector<StructureRecord> read_records(const std::filesystem::path& path);

struct RecordIssue {
  std::size_t line = 0;
  std::string message;
};

// Every failed condition: s is a rack, u is a GL-structure, d is the down
// map, stored flags match.
std::vector<RecordIssue> validate(const StructureRecord& rec);

// Strict conversions; throw InvalidStructure with the first issue.
Rack rack_of(const StructureRecord& rec);
GLRack glrack_of(const StructureRecord& rec);

// Cycle notation, e.g. "[id, (23), (23)]".
std::string cycles_of(const Rack& R);

// One block per rack: its s, then every [u, d] with quandle and medial flags.
std::string cycle_table(const std::vector<ClassRecord>& records);

std::string read_file(const std::filesystem::path& path);

}  // namespace glrack
