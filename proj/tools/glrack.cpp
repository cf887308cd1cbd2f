// glrack: command-line front end.
//
// Exit status: 0 success, 1 validation failure, 2 budget exhausted or
// incomplete result, 3 I/O or parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "glrack/functors.hpp"
#include "glrack/io.hpp"

namespace fs = std::filesystem;
using namespace glrack;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_incomplete = 2;
constexpr int exit_io = 3;

constexpr std::size_t max_order = 8;
constexpr std::size_t max_quick_order = 6;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string maps_line(const Map& phi) {
  std::string out = "[";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(phi[i] + 1);
  }
  return out + "]";
}

void require_order(std::size_t n, bool long_run) {
  if (n > max_order)
    throw UsageError("orders above " + std::to_string(max_order) + " are not supported");
  if (n > max_quick_order && !long_run)
    throw UsageError("order " + std::to_string(n) + " needs --long-run");
}

std::vector<StructureRecord> load(const std::string& path) { return read_records(path); }

void print_counts(std::ostream& os, const CountReport& c) {
  os << "n=" << c.n << " g=" << c.g << " g_m=" << c.g_m << " g_q=" << c.g_q
     << " g_qm=" << c.g_qm << " r=" << c.r << " r_m=" << c.r_m << " r_q=" << c.r_q
     << " r_qm=" << c.r_qm << "\n";
}

// ---------------------------------------------------------------------------

int run_check(const std::string& path) {
  auto records = load(path);
  std::size_t bad = 0;
  for (const auto& rec : records) {
    auto issues = validate(rec);
    if (!issues.empty()) ++bad;
    for (const auto& is : issues) std::cout << path << ":" << is.line << ": " << is.message << "\n";
  }
  std::cout << records.size() << " structures, " << bad << " invalid\n";
  return bad ? exit_invalid : exit_ok;
}

struct ClassifyArgs {
  std::size_t n = 0;
  std::string source = "enumerate";
  std::string orientation = "auto";
  bool quandles = false, medial = false, long_run = false;
  unsigned jobs = 1;
  std::string out;
  std::string format = "records";
  std::size_t checkpoint_every = 1000;
  std::size_t stop_after = 0;
  std::uint64_t budget = default_node_budget;
};

TableOrientation parse_orientation(const std::string& s) {
  if (s == "rows") return TableOrientation::row_is_s_x;
  if (s == "columns") return TableOrientation::column_is_s_y;
  return TableOrientation::automatic;
}

std::vector<Rack> rack_source(std::size_t n, const std::string& source,
                              const std::string& orientation) {
  if (source == "enumerate") return enumerate_racks(n);
  std::vector<Rack> racks = ingest_rack_library(source, parse_orientation(orientation));
  for (std::size_t i = 0; i < racks.size(); ++i)
    if (racks[i].order() != n)
      throw LibraryError(source + ": table " + std::to_string(i + 1) + " has order " +
                         std::to_string(racks[i].order()) + ", expected " + std::to_string(n));
  return racks;
}

std::string checkpoint_header(const ClassifyArgs& a) {
  return std::string("{\"checkpoint\":{\"n\":") + std::to_string(a.n) + ",\"source\":\"" +
         a.source + "\",\"quandles\":" + (a.quandles ? "true" : "false") +
         ",\"medial\":" + (a.medial ? "true" : "false") + "}}";
}

// Records up to the last complete watermark.  Anything after it came from an
// interrupted chunk and is recomputed.
std::size_t resume_from(const fs::path& ckpt, const ClassifyArgs& a,
                        std::vector<std::string>& lines) {
  std::string text = read_file(ckpt);
  std::vector<std::string> all;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) break;  // torn final line
    all.push_back(text.substr(pos, eol - pos));
    pos = eol + 1;
  }
  if (all.empty() || all.front() != checkpoint_header(a))
    throw ParseError(ckpt.string() + " belongs to a different run; remove it to start over");
  std::size_t watermark = 0, keep = 1;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const std::string& l = all[i];
    if (l.rfind("{\"watermark\":", 0) == 0) {
      watermark = std::stoul(l.substr(13));
      keep = i + 1;
    }
  }
  for (std::size_t i = 1; i < keep; ++i)
    if (all[i].rfind("{\"watermark\":", 0) != 0) lines.push_back(all[i]);
  // Rewrite so the file ends on the watermark.
  std::ofstream os(ckpt, std::ios::trunc);
  for (std::size_t i = 0; i < keep; ++i) os << all[i] << "\n";
  if (!os) throw ParseError("cannot rewrite " + ckpt.string());
  return watermark;
}

int run_classify(const ClassifyArgs& a) {
  require_order(a.n, a.long_run);
  if (a.checkpoint_every == 0) throw UsageError("--checkpoint-every must be positive");
  std::vector<Rack> racks = rack_source(a.n, a.source, a.orientation);

  ClassifyOptions options;
  options.quandles_only = a.quandles;
  options.medial_only = a.medial;
  options.jobs = a.jobs;
  options.node_budget = a.budget;

  std::vector<std::string> lines;  // serialized records, in rack order
  std::vector<RackDiagnostic> diagnostics;
  std::size_t done = 0;

  std::optional<fs::path> ckpt;
  std::ofstream ckpt_stream;
  if (!a.out.empty()) {
    ckpt = fs::path(a.out + ".ckpt");
    if (fs::exists(*ckpt)) {
      done = resume_from(*ckpt, a, lines);
      std::cerr << "resuming after rack " << done << " of " << racks.size() << "\n";
      ckpt_stream.open(*ckpt, std::ios::app);
    } else {
      ckpt_stream.open(*ckpt, std::ios::trunc);
      ckpt_stream << checkpoint_header(a) << "\n" << std::flush;
    }
    if (!ckpt_stream) throw ParseError("cannot write " + ckpt->string());
  }

  std::vector<ClassRecord> table_records;
  while (done < racks.size()) {
    const std::size_t last = std::min(racks.size(), done + a.checkpoint_every);
    Classification part = classify_gl(racks, options, done, last);
    for (const auto& rec : part.records) {
      lines.push_back(to_record_line(rec));
      if (ckpt) ckpt_stream << lines.back() << "\n";
      if (a.format == "table") table_records.push_back(rec);
    }
    for (auto& d : part.diagnostics) diagnostics.push_back(std::move(d));
    done = last;
    if (ckpt) {
      ckpt_stream << "{\"watermark\":" << done << "}\n" << std::flush;
      if (!ckpt_stream) throw ParseError("cannot write " + ckpt->string());
    }
    if (a.stop_after && done >= a.stop_after && done < racks.size()) {
      std::cerr << "stopped after " << done << " racks; rerun to resume\n";
      return exit_incomplete;
    }
  }

  for (const auto& d : diagnostics)
    std::cerr << "rack " << d.rack_index + 1 << ": " << d.message << "\n";

  // Counts over the filtered rack list, recomputed from the serialized
  // records so resumed runs report the same numbers.
  std::vector<Rack> kept;
  for (const Rack& R : racks)
    if (passes_filters(R, options)) kept.push_back(R);
  CountReport c;
  c.n = a.n;
  for (const Rack& R : kept) {
    const bool q = is_quandle(R), m = is_medial(R);
    ++c.r;
    c.r_m += m;
    c.r_q += q;
    c.r_qm += q && m;
  }
  std::string body;
  for (const auto& l : lines) body += l + "\n";
  for (const auto& rec : parse_records(body)) {
    ++c.g;
    const bool q = *rec.flags->quandle, m = *rec.flags->medial;
    c.g_m += m;
    c.g_q += q;
    c.g_qm += q && m;
  }

  if (a.format == "table" && !ckpt) {
    std::cout << cycle_table(table_records);
  } else if (!ckpt) {
    std::cout << body;
  } else {
    const fs::path tmp = a.out + ".tmp";
    {
      std::ofstream os(tmp, std::ios::trunc | std::ios::binary);
      os << body;
      if (!os) throw ParseError("cannot write " + tmp.string());
    }
    fs::rename(tmp, a.out);
    ckpt_stream.close();
    fs::remove(*ckpt);
  }
  print_counts(a.out.empty() ? std::cerr : std::cout, c);
  if (!diagnostics.empty()) {
    std::cerr << diagnostics.size() << " racks failed; result is not exhaustive\n";
    return exit_incomplete;
  }
  return exit_ok;
}

int run_enumerate(std::size_t n, bool long_run, const std::string& format) {
  require_order(n, long_run);
  for (const Rack& R : enumerate_racks(n))
    std::cout << (format == "table" ? cycles_of(R) : to_record_line(R)) << "\n";
  return exit_ok;
}

int run_aut(const std::string& path) {
  for (const auto& rec : load(path)) {
    const GLRack G = glrack_of(rec);
    const SmallGroup A = rec.u ? aut_glr(G) : aut_group(G.rack());
    std::cout << "line " << rec.line << ": |Aut| = " << A.order() << "\n";
    for (const Permutation& g : A.elements()) std::cout << "  " << print_cycles(g) << "\n";
  }
  return exit_ok;
}

int run_glstructures(const std::string& path) {
  for (const auto& rec : load(path)) {
    const Rack R = rack_of(rec);
    const GLClasses gc = gl_classes(R);
    std::cout << "line " << rec.line << ": " << gc.structures.order() << " GL-structures, "
              << gc.classes.size() << " classes, |Aut| = " << gc.aut.order() << "\n";
    for (const auto& cls : gc.classes) {
      std::cout << "  class of " << print_cycles(cls.front()) << " (size " << cls.size() << "):";
      for (const Permutation& u : cls) std::cout << " " << print_cycles(u);
      std::cout << "\n";
    }
  }
  return exit_ok;
}

int run_functor(const std::string& which, const std::string& path) {
  for (const auto& rec : load(path)) {
    if (which == "f")
      std::cout << to_record_line(functor_f(rack_of(rec))) << "\n";
    else
      std::cout << to_record_line(functor_g(glrack_of(rec))) << "\n";
  }
  return exit_ok;
}

int run_hom(const std::string& path_r, const std::string& path_s, bool rack_structure) {
  auto rs = load(path_r), ss = load(path_s);
  if (rs.empty() || ss.empty()) throw ParseError("hom needs one structure in each file");
  const bool gl = rs.front().u && ss.front().u;
  if (gl) {
    const GLRack G1 = glrack_of(rs.front()), G2 = glrack_of(ss.front());
    if (rack_structure) {
      HomGLRack H = hom_glrack(G1, G2);
      std::cout << to_record_line(H.glrack) << "\n";
      for (std::size_t i = 0; i < H.carrier.size(); ++i)
        std::cout << "  " << i + 1 << " = " << maps_line(H.carrier[i]) << "\n";
      return exit_ok;
    }
    auto homs = enumerate_gl_homs(G1, G2);
    std::cout << homs.size() << " GL-homomorphisms\n";
    for (const Map& m : homs) std::cout << "  " << maps_line(m) << "\n";
    return exit_ok;
  }
  const Rack R = rack_of(rs.front()), S = rack_of(ss.front());
  if (rack_structure) {
    HomRack H = hom_rack(R, S);
    std::cout << to_record_line(H.rack) << "\n";
    for (std::size_t i = 0; i < H.carrier.size(); ++i)
      std::cout << "  " << i + 1 << " = " << maps_line(H.carrier[i]) << "\n";
    return exit_ok;
  }
  auto homs = enumerate_homs(R, S);
  std::cout << homs.size() << " homomorphisms\n";
  for (const Map& m : homs) std::cout << "  " << maps_line(m) << "\n";
  return exit_ok;
}

int run_quotient(const std::string& which, const std::string& path) {
  for (const auto& rec : load(path)) {
    const Rack R = rack_of(rec);
    Quotient q = which == "assoc" ? associated_quandle(R) : medialization(R);
    std::cout << to_record_line(q.rack) << "\n";
    std::cout << "  projection " << maps_line(q.projection) << "\n";
  }
  return exit_ok;
}

int run_count(std::size_t n, unsigned jobs, bool long_run) {
  require_order(n, long_run);
  print_counts(std::cout, count_report(n, jobs));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GL-racks: validation, enumeration and classification"};
  app.require_subcommand(1);

  std::string file, file2, which;
  std::size_t n = 0;
  bool long_run = false;
  unsigned jobs = 1;
  std::string format = "records";

  auto* check = app.add_subcommand("check", "Validate a record file");
  check->add_option("file", file)->required();

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Classify GL-racks of order n");
  classify->add_option("-n", ca.n, "Order")->required();
  classify->add_option("--source", ca.source, "'enumerate' or a rack library file");
  classify->add_option("--orientation", ca.orientation, "Library tables: auto, rows, columns")
      ->check(CLI::IsMember({"auto", "rows", "columns"}));
  classify->add_flag("--quandles", ca.quandles, "Only racks that are quandles");
  classify->add_flag("--medial", ca.medial, "Only medial racks");
  classify->add_option("--jobs", ca.jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_flag("--long-run", ca.long_run, "Allow n = 7, 8");
  classify->add_option("--out", ca.out, "Results file (enables checkpointing)");
  classify->add_option("--format", ca.format, "records or table")
      ->check(CLI::IsMember({"records", "table"}));
  classify->add_option("--checkpoint-every", ca.checkpoint_every, "Racks per checkpoint");
  classify->add_option("--stop-after", ca.stop_after, "Stop once this many racks are done")
      ->group("");
  classify->add_option("--node-budget", ca.budget, "Search budget per rack");

  auto* enumerate = app.add_subcommand("enumerate-racks", "Racks of order n up to isomorphism");
  enumerate->add_option("-n", n, "Order")->required();
  enumerate->add_flag("--long-run", long_run, "Allow n = 7, 8");
  enumerate->add_option("--format", format, "records or table")
      ->check(CLI::IsMember({"records", "table"}));

  auto* aut = app.add_subcommand("aut", "Automorphism groups");
  aut->add_option("file", file)->required();

  auto* gls = app.add_subcommand("glstructures", "GL-structures and their classes");
  gls->add_option("file", file)->required();

  auto* functor = app.add_subcommand("functor", "Apply F (racks) or G (GL-racks)");
  functor->add_option("which", which)->required()->check(CLI::IsMember({"f", "g"}));
  functor->add_option("file", file)->required();

  bool rack_structure = false;
  auto* hom = app.add_subcommand("hom", "Homomorphisms between the first structures of two files");
  hom->add_option("source", file)->required();
  hom->add_option("target", file2)->required();
  hom->add_flag("--rack-structure", rack_structure, "Build the Hom rack");

  auto* quot = app.add_subcommand("quotient", "Associated quandle or medialization");
  quot->add_option("which", which)->required()->check(CLI::IsMember({"assoc", "medial"}));
  quot->add_option("file", file)->required();

  auto* count = app.add_subcommand("count", "The eight counts for order n");
  count->add_option("-n", n, "Order")->required();
  count->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  count->add_flag("--long-run", long_run, "Allow n = 7, 8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_io;
  }

  try {
    if (*check) return run_check(file);
    if (*classify) return run_classify(ca);
    if (*enumerate) return run_enumerate(n, long_run, format);
    if (*aut) return run_aut(file);
    if (*gls) return run_glstructures(file);
    if (*functor) return run_functor(which, file);
    if (*hom) return run_hom(file, file2, rack_structure);
    if (*quot) return run_quotient(which, file);
    if (*count) return run_count(n, jobs, long_run);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const InvalidStructure& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return exit_invalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return exit_incomplete;
  } catch (const CapExceeded& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return exit_incomplete;
  }
  return exit_ok;
}
