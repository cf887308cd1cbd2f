#include "glrack/classify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <cctype>
#include <sstream>
#include <thread>

namespace glrack {

SmallGroup gl_structures(const Rack& R, std::uint64_t budget) {
  SmallGroup aut = aut_group(R, budget);
  SmallGroup U = centralizer(aut, R.structure());
  for (const Permutation& g : aut.generators())
    for (const Permutation& u : U.generators())
      if (!U.contains(conjugate(g, u)))
        throw std::logic_error("gl_structures: centralizer is not normal in Aut R");
  return U;
}

std::vector<Permutation> gl_structures_brute_force(const Rack& R) {
  std::vector<Permutation> out;
  for (const Permutation& u : symmetric_group(R.order()).elements())
    if (!find_gl_violation(R, u)) out.push_back(u);
  return out;
}

GLClasses gl_classes(const Rack& R, std::uint64_t budget) {
  GLClasses result;
  result.aut = aut_group(R, budget);
  result.structures = centralizer(result.aut, R.structure());
  result.classes = conjugation_orbits(result.aut, result.structures.elements());
  return result;
}

std::vector<ClassRecord> classify_rack(const Rack& R, std::size_t rack_index,
                                       std::uint64_t budget) {
  GLClasses gc = gl_classes(R, budget);
  const Permutation theta_inv = theta_inverse(R);
  std::vector<ClassRecord> records;
  records.reserve(gc.classes.size());
  for (const auto& cls : gc.classes) {
    ClassRecord rec;
    rec.rack_index = rack_index;
    rec.rack = R;
    rec.u = cls.front();
    rec.d = compose(theta_inv, inverse(rec.u));
    rec.flags = flags(rec.glrack());
    rec.aut_glr_order = gc.aut.order() / cls.size();
    records.push_back(std::move(rec));
  }
  return records;
}

bool passes_filters(const Rack& R, const ClassifyOptions& options) {
  if (options.quandles_only && !is_quandle(R)) return false;
  if (options.medial_only && !is_medial(R)) return false;
  return true;
}

Classification classify_gl(const std::vector<Rack>& racks, const ClassifyOptions& options,
                           std::size_t first, std::optional<std::size_t> last) {
  const std::size_t end = std::min(last.value_or(racks.size()), racks.size());
  first = std::min(first, end);
  const std::size_t count = end - first;

  std::vector<std::vector<ClassRecord>> per_rack(count);
  std::vector<std::optional<std::string>> failures(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      const std::size_t idx = first + k;
      const Rack& R = racks[idx];
      if (!passes_filters(R, options)) continue;
      try {
        per_rack[k] = classify_rack(R, idx, options.node_budget);
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, count ? count : 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Classification out;
  for (std::size_t k = 0; k < count; ++k) {
    if (failures[k]) {
      out.diagnostics.push_back({first + k, *failures[k]});
      out.exhaustive = false;
    }
    for (auto& rec : per_rack[k]) out.records.push_back(std::move(rec));
  }
  return out;
}

CountReport count_report(std::size_t n, const std::vector<Rack>& racks,
                         const std::vector<ClassRecord>& records) {
  CountReport c;
  c.n = n;
  for (const Rack& R : racks) {
    const bool q = is_quandle(R), m = is_medial(R);
    ++c.r;
    c.r_m += m;
    c.r_q += q;
    c.r_qm += q && m;
  }
  for (const ClassRecord& rec : records) {
    ++c.g;
    c.g_m += rec.flags.medial;
    c.g_q += rec.flags.gl_quandle;
    c.g_qm += rec.flags.gl_quandle && rec.flags.medial;
  }
  return c;
}

CountReport count_report(std::size_t n, unsigned jobs) {
  std::vector<Rack> racks = enumerate_racks(n);
  ClassifyOptions options;
  options.jobs = jobs;
  Classification cl = classify_gl(racks, options);
  if (!cl.exhaustive)
    throw BudgetExceeded("count_report: classification incomplete at rack " +
                         std::to_string(cl.diagnostics.front().rack_index + 1) + ": " +
                         cl.diagnostics.front().message);
  return count_report(n, racks, cl.records);
}

// ---------------------------------------------------------------------------
// Library parsing

namespace {

struct Node {
  bool is_list = false;
  long long value = 0;
  std::vector<Node> items;
  std::size_t line = 1, column = 1;
};

class ListParser {
 public:
  explicit ListParser(std::string_view text) : text_(text) {}

  Node parse_document() {
    skip_space();
    Node root;
    if (at_end()) {
      root.is_list = true;
      return root;
    }
    root = parse_node();
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return root;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw LibraryError("parse error at line " + std::to_string(line_) + ", column " +
                       std::to_string(column_) + ": " + what);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  Node parse_node() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    Node node;
    node.line = line_;
    node.column = column_;
    const char c = text_[pos_];
    if (c == '[') {
      node.is_list = true;
      advance();
      skip_space();
      if (!at_end() && text_[pos_] == ']') {
        advance();
        return node;
      }
      for (;;) {
        node.items.push_back(parse_node());
        skip_space();
        if (at_end()) fail("unterminated list");
        if (text_[pos_] == ',') {
          advance();
          continue;
        }
        if (text_[pos_] == ']') {
          advance();
          return node;
        }
        fail(std::string("expected ',' or ']' but found '") + text_[pos_] + "'");
      }
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t start = pos_;
      advance();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
      std::string digits(text_.substr(start, pos_ - start));
      if (digits == "-") fail("expected digits after '-'");
      if (digits.size() > 12) fail("integer out of range");
      node.value = std::stoll(digits);
      return node;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
};

std::string where(const Node& n) {
  return "line " + std::to_string(n.line) + ", column " + std::to_string(n.column);
}

using Table = std::vector<std::vector<long long>>;

Table to_table(const Node& node) {
  if (!node.is_list) throw LibraryError("expected a table at " + where(node));
  const std::size_t n = node.items.size();
  Table t;
  for (const Node& row : node.items) {
    if (!row.is_list) throw LibraryError("expected a table row at " + where(row));
    if (row.items.size() != n)
      throw LibraryError("table row of length " + std::to_string(row.items.size()) +
                         " in a table of order " + std::to_string(n) + " at " + where(row));
    std::vector<long long> r;
    for (const Node& e : row.items) {
      if (e.is_list) throw LibraryError("expected an integer at " + where(e));
      if (e.value < 1 || e.value > static_cast<long long>(n))
        throw LibraryError("entry " + std::to_string(e.value) + " out of range 1.." +
                           std::to_string(n) + " at " + where(e));
      r.push_back(e.value);
    }
    t.push_back(std::move(r));
  }
  return t;
}

RackCheck read_table(const Table& t, bool rows) {
  const std::size_t n = t.size();
  std::vector<std::vector<Point>> s(n, std::vector<Point>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto v = static_cast<Point>(t[x][y] - 1);
      if (rows)
        s[x][y] = v;  // s_x(y)
      else
        s[y][x] = v;  // s_y(x)
    }
  return check_rack(n, s);
}

}  // namespace

std::vector<Rack> parse_rack_library(std::string_view text, TableOrientation orientation) {
  Node root = ListParser(text).parse_document();
  if (!root.is_list) throw LibraryError("expected a list of tables at " + where(root));
  std::vector<Table> tables;
  for (const Node& item : root.items) tables.push_back(to_table(item));

  auto read_all = [&](bool rows, std::string* error) -> std::optional<std::vector<Rack>> {
    std::vector<Rack> racks;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      RackCheck c = read_table(tables[i], rows);
      if (!c) {
        if (error)
          *error = "table " + std::to_string(i + 1) + " at " + where(root.items[i]) + ": " +
                   c.violation->describe();
        return std::nullopt;
      }
      racks.push_back(std::move(*c.rack));
    }
    return racks;
  };

  std::string row_error, column_error;
  switch (orientation) {
    case TableOrientation::row_is_s_x:
      if (auto r = read_all(true, &row_error)) return *r;
      throw LibraryError(row_error);
    case TableOrientation::column_is_s_y:
      if (auto r = read_all(false, &column_error)) return *r;
      throw LibraryError(column_error);
    case TableOrientation::automatic:
      break;
  }
  auto by_row = read_all(true, &row_error);
  auto by_column = read_all(false, &column_error);
  if (by_row && by_column) {
    if (*by_row == *by_column) return *by_row;
    throw LibraryError(
        "ambiguous table orientation: both readings give valid racks; pass an explicit "
        "orientation");
  }
  if (by_row) return *by_row;
  if (by_column) return *by_column;
  throw LibraryError("no table orientation is valid; as rows: " + row_error +
                     "; as columns: " + column_error);
}

std::vector<Rack> ingest_rack_library(const std::filesystem::path& path,
                                      TableOrientation orientation) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LibraryError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_rack_library(buf.str(), orientation);
}

}  // namespace glrack
