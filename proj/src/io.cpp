#include "glrack/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace glrack {

using json = nlohmann::ordered_json;

namespace {

json images(const Permutation& p) {
  json a = json::array();
  for (Point v : p.images()) a.push_back(v + 1);
  return a;
}

json structure(const Rack& R) {
  json s = json::array();
  for (const Permutation& sx : R.structure()) s.push_back(images(sx));
  return s;
}

json flag_object(const GLFlags& f) {
  return json{{"quandle", f.gl_quandle}, {"medial", f.medial}, {"legendrian", f.legendrian}};
}

std::string dump(const json& j) { return j.dump(); }

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<Point> read_array(const json& j, std::size_t n, std::size_t line, const char* field) {
  if (!j.is_array()) bad(line, std::string(field) + " must be an array");
  if (j.size() != n)
    bad(line, std::string(field) + " has length " + std::to_string(j.size()) + ", expected " +
                  std::to_string(n));
  std::vector<Point> out;
  for (const json& v : j) {
    if (!v.is_number_integer()) bad(line, std::string(field) + " entries must be integers");
    const long long x = v.get<long long>();
    if (x < 1 || x > static_cast<long long>(n))
      bad(line, std::string(field) + " entry " + std::to_string(x) + " out of range 1.." +
                    std::to_string(n));
    out.push_back(static_cast<Point>(x - 1));
  }
  return out;
}

std::size_t read_count(const json& j, std::size_t line, const char* field) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    bad(line, std::string(field) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

std::string to_record_line(const Rack& R) {
  return dump(json{{"n", R.order()}, {"s", structure(R)}});
}

std::string to_record_line(const GLRack& G) {
  json j;
  j["n"] = G.order();
  j["s"] = structure(G.rack());
  j["u"] = images(G.u());
  j["d"] = images(down_map(G));
  j["flags"] = flag_object(flags(G));
  return dump(j);
}

std::string to_record_line(const ClassRecord& rec) {
  json j;
  j["n"] = rec.rack.order();
  j["rack_index"] = rec.rack_index + 1;
  j["s"] = structure(rec.rack);
  j["u"] = images(rec.u);
  j["d"] = images(rec.d);
  j["flags"] = flag_object(rec.flags);
  if (rec.aut_glr_order) j["aut_glr_order"] = *rec.aut_glr_order;
  return dump(j);
}

std::vector<StructureRecord> parse_records(std::string_view text) {
  std::vector<StructureRecord> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      bad(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) bad(line_no, "expected a JSON object");
    if (j.contains("watermark") && !j.contains("s")) continue;

    StructureRecord rec;
    rec.line = line_no;
    if (!j.contains("n")) bad(line_no, "missing field n");
    rec.n = read_count(j["n"], line_no, "n");
    if (!j.contains("s") || !j["s"].is_array()) bad(line_no, "missing array field s");
    if (j["s"].size() != rec.n)
      bad(line_no, "s has " + std::to_string(j["s"].size()) + " entries, expected " +
                       std::to_string(rec.n));
    for (const json& row : j["s"]) rec.s.push_back(read_array(row, rec.n, line_no, "s"));
    if (j.contains("u")) rec.u = read_array(j["u"], rec.n, line_no, "u");
    if (j.contains("d")) {
      if (!rec.u) bad(line_no, "d given without u");
      rec.d = read_array(j["d"], rec.n, line_no, "d");
    }
    if (j.contains("flags")) {
      const json& f = j["flags"];
      if (!f.is_object()) bad(line_no, "flags must be an object");
      StoredFlags g;
      auto get = [&](const char* key, std::optional<bool>& dst) {
        if (!f.contains(key)) return;
        if (!f[key].is_boolean()) bad(line_no, std::string("flag ") + key + " must be boolean");
        dst = f[key].get<bool>();
      };
      get("quandle", g.quandle);
      get("medial", g.medial);
      get("legendrian", g.legendrian);
      rec.flags = g;
    }
    if (j.contains("rack_index")) {
      const std::size_t k = read_count(j["rack_index"], line_no, "rack_index");
      if (k == 0) bad(line_no, "rack_index is 1-based");
      rec.rack_index = k - 1;
    }
    if (j.contains("aut_glr_order"))
      rec.aut_glr_order = read_count(j["aut_glr_order"], line_no, "aut_glr_order");
    out.push_back(std::move(rec));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<StructureRecord> read_records(const std::filesystem::path& path) {
  return parse_records(read_file(path));
}

std::vector<RecordIssue> validate(const StructureRecord& rec) {
  std::vector<RecordIssue> issues;
  auto issue = [&](std::string msg) { issues.push_back({rec.line, std::move(msg)}); };
  RackCheck rc = check_rack(rec.n, rec.s);
  if (!rc) {
    issue(rc.violation->describe());
    return issues;
  }
  const Rack& R = *rc.rack;
  if (!rec.u) {
    if (rec.flags) {
      if (rec.flags->quandle && *rec.flags->quandle != is_quandle(R))
        issue("stored quandle flag is wrong");
      if (rec.flags->medial && *rec.flags->medial != is_medial(R))
        issue("stored medial flag is wrong");
      if (rec.flags->legendrian) issue("legendrian flag given without u");
    }
    return issues;
  }
  if (!is_bijection(*rec.u)) {
    issue("u is not a permutation");
    return issues;
  }
  const Permutation u(*rec.u);
  GLCheck gc = check_gl(R, u);
  if (!gc) {
    issue(gc.violation->describe());
    return issues;
  }
  if (rec.d) {
    const Permutation d = down_map(*gc.glrack);
    const auto expected = d.images();
    if (!std::equal(expected.begin(), expected.end(), rec.d->begin(), rec.d->end()))
      issue("d differs from theta^-1 u^-1 (expected " + print_cycles(d) + ")");
  }
  if (rec.flags) {
    const GLFlags f = flags(*gc.glrack);
    if (rec.flags->quandle && *rec.flags->quandle != f.gl_quandle)
      issue("stored quandle flag is wrong");
    if (rec.flags->medial && *rec.flags->medial != f.medial) issue("stored medial flag is wrong");
    if (rec.flags->legendrian && *rec.flags->legendrian != f.legendrian)
      issue("stored legendrian flag is wrong");
  }
  return issues;
}

Rack rack_of(const StructureRecord& rec) {
  RackCheck rc = check_rack(rec.n, rec.s);
  if (!rc) throw InvalidStructure("line " + std::to_string(rec.line) + ": " + rc.violation->describe());
  return std::move(*rc.rack);
}

GLRack glrack_of(const StructureRecord& rec) {
  auto issues = validate(rec);
  if (!issues.empty())
    throw InvalidStructure("line " + std::to_string(rec.line) + ": " + issues.front().message);
  Rack R = rack_of(rec);
  if (!rec.u) return trusted_glrack(R, Permutation::identity(R.order()));
  return trusted_glrack(std::move(R), Permutation(*rec.u));
}

std::string cycles_of(const Rack& R) {
  std::string out = "[";
  for (std::size_t x = 0; x < R.order(); ++x) {
    if (x) out += ", ";
    out += print_cycles(R.s(x));
  }
  return out + "]";
}

std::string cycle_table(const std::vector<ClassRecord>& records) {
  std::string out;
  for (std::size_t i = 0; i < records.size();) {
    std::size_t j = i;
    while (j < records.size() && records[j].rack_index == records[i].rack_index) ++j;
    const ClassRecord& head = records[i];
    out += "rack " + std::to_string(head.rack_index + 1) + "  " + cycles_of(head.rack) +
           "  GL-quandle: " + (head.flags.gl_quandle ? "yes" : "no") +
           "  medial: " + (head.flags.medial ? "yes" : "no") + "\n";
    for (std::size_t k = i; k < j; ++k)
      out += "    [" + print_cycles(records[k].u) + ", " + print_cycles(records[k].d) + "]\n";
    i = j;
  }
  return out;
}

}  // namespace glrack
