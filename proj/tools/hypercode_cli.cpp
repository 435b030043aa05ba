// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypercode/hypercode.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitResource = 4;

struct CommandError {
  hc_status status;
  std::string message;
};

int exit_code_for(hc_status status) {
  switch (status) {
    case HC_OK:
      return kExitOk;
    case HC_ERR_PARSE:
      return kExitParse;
    case HC_ERR_ENGINE_DISAGREEMENT:
      return kExitDisagreement;
    case HC_ERR_RESOURCE:
      return kExitResource;
    default:
      return kExitFailure;
  }
}

void check(hc_status status) {
  if (status != HC_OK) throw CommandError{status, hc_last_error()};
}

struct MatrixDeleter {
  void operator()(hc_matrix* m) const { hc_matrix_free(m); }
};
struct HypergraphDeleter {
  void operator()(hc_hypergraph* h) const { hc_hypergraph_free(h); }
};
struct ReportDeleter {
  void operator()(hc_report* r) const { hc_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { hc_string_free(s); }
};

using MatrixPtr = std::unique_ptr<hc_matrix, MatrixDeleter>;
using HypergraphPtr = std::unique_ptr<hc_hypergraph, HypergraphDeleter>;
using ReportPtr = std::unique_ptr<hc_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take_string(char* raw) { return std::string(StringPtr(raw).get()); }

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{HC_ERR_INVALID_ARGUMENT, "cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CommandError{HC_ERR_INVALID_ARGUMENT, "cannot write '" + path + "'"};
  out << text;
}

HypergraphPtr load_hypergraph(const std::string& path) {
  hc_hypergraph* h = nullptr;
  check(hc_hypergraph_parse(read_input(path).c_str(), &h));
  return HypergraphPtr(h);
}

// family ---------------------------------------------------------------------

struct FamilyArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::string row;
  std::string output;
};

int run_family(const FamilyArgs& args) {
  hc_hypergraph* raw = nullptr;
  auto need = [&](bool given, const char* flag) {
    if (!given) throw CommandError{HC_ERR_INVALID_ARGUMENT, "family " + args.kind + " requires " + flag};
  };
  if (args.kind == "k3partite") {
    need(args.n > 0, "--n >= 1");
    check(hc_family_k3partite(args.n, &raw));
  } else if (args.kind == "pg") {
    need(args.n > 0, "--n >= 3");
    check(hc_family_projective_geometry(args.n, &raw));
  } else if (args.kind == "fano") {
    check(hc_family_fano(&raw));
  } else if (args.kind == "circulant") {
    need(!args.row.empty(), "--row");
    check(hc_family_circulant(args.row.c_str(), &raw));
  } else {
    need(args.k > 0 && args.m > 0, "--k >= 1 and --m >= 1");
    check(hc_family_block_circulant(args.k, args.m, &raw));
  }
  const HypergraphPtr h(raw);
  char* text = nullptr;
  check(hc_hypergraph_format(h.get(), &text));
  write_output(args.output, take_string(text));
  return kExitOk;
}

// analyze --------------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string format = "auto";
  std::string method = "auto";
  bool weights = false;
  std::optional<std::size_t> early_exit;
  unsigned threads = 1;
  bool csv = false;
};

const char* method_label(hc_method m) {
  switch (m) {
    case HC_METHOD_EONV:
      return "eonv";
    case HC_METHOD_BOTH:
      return "both";
    case HC_METHOD_AUTO:
      return "auto";
    default:
      return "codeword";
  }
}

json report_json(const hc_report* r) {
  json out;
  out["length"] = hc_report_length(r);
  out["dimension"] = hc_report_dimension(r);
  out["min_distance"] = hc_report_has_min_distance(r) ? json(hc_report_min_distance(r)) : json(nullptr);
  out["min_distance_method"] = method_label(hc_report_method(r));
  out["min_distance_exact"] = hc_report_has_min_distance(r) ? json(hc_report_min_distance_exact(r) != 0) : json(nullptr);
  if (hc_report_has_witness(r)) {
    json witness = json::array();
    for (std::size_t i = 0; i < hc_report_witness_size(r); ++i) witness.push_back(hc_report_witness_vertex(r, i) + 1);
    out["witness_subset"] = witness;
  } else {
    out["witness_subset"] = nullptr;
  }
  out["self_orthogonal"] = hc_report_self_orthogonal(r) != 0;
  out["self_dual"] = hc_report_self_dual(r) != 0;
  if (hc_report_has_weight_distribution(r)) {
    json dist = json::object();
    for (std::size_t i = 0; i < hc_report_weight_distribution_size(r); ++i) {
      std::size_t weight = 0;
      std::uint64_t count = 0;
      check(hc_report_weight_distribution_entry(r, i, &weight, &count));
      dist[std::to_string(weight)] = count;
    }
    out["weight_distribution"] = dist;
  }
  return out;
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.dump();
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [key, count] : v.items()) s += (s.empty() ? "" : " ") + key + ":" + count.dump();
    return s;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string to_csv(const json& object) {
  std::string header;
  std::string row;
  for (const auto& [key, value] : object.items()) {
    header += (header.empty() ? "" : ",") + key;
    row += (row.empty() && header == key ? "" : ",") + csv_cell(value);
  }
  return header + "\n" + row + "\n";
}

bool looks_like_matrix(const std::string& text) {
  hc_matrix* m = nullptr;
  if (hc_matrix_parse(text.c_str(), &m) != HC_OK) return false;
  hc_matrix_free(m);
  return true;
}

int run_analyze(const AnalyzeArgs& args) {
  hc_analysis_options options;
  hc_analysis_options_init(&options);
  uint64_t cap = 0;
  check(hc_enum_cap_from_env(&cap));
  options.enum_cap = cap;
  options.method = args.method == "codeword" ? HC_METHOD_CODEWORD
                   : args.method == "eonv"   ? HC_METHOD_EONV
                   : args.method == "both"   ? HC_METHOD_BOTH
                                             : HC_METHOD_AUTO;
  options.weights = args.weights ? 1 : 0;
  options.threads = args.threads;
  if (args.early_exit) {
    options.has_early_exit = 1;
    options.early_exit = *args.early_exit;
  }

  const std::string text = read_input(args.input);
  bool as_matrix = args.format == "matrix";
  if (args.format == "auto") as_matrix = looks_like_matrix(text);

  hc_report* raw = nullptr;
  if (as_matrix) {
    hc_matrix* m = nullptr;
    check(hc_matrix_parse(text.c_str(), &m));
    const MatrixPtr matrix(m);
    check(hc_analyze_matrix(matrix.get(), &options, &raw));
  } else {
    hc_hypergraph* h = nullptr;
    check(hc_hypergraph_parse(text.c_str(), &h));
    const HypergraphPtr hypergraph(h);
    check(hc_analyze_hypergraph(hypergraph.get(), &options, &raw));
  }
  const ReportPtr report(raw);
  const json out = report_json(report.get());
  std::cout << (args.csv ? to_csv(out) : out.dump() + "\n");
  return kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string only;
  std::string fano_fixture;
  unsigned threads = 1;
};

void print_criterion(const hc_criterion_result* r, void* user) {
  auto* failed = static_cast<std::vector<std::string>*>(user);
  if (r->passed == 0) failed->emplace_back(r->tag);
  std::printf("%s %-16s %7.3fs (limit %.0fs)  %s\n", r->passed != 0 ? "PASS" : "FAIL", r->tag, r->seconds,
              r->time_limit, r->title);
  std::printf("     observed: %s\n     expected: %s\n", r->observed, r->expected);
  std::fflush(stdout);
}

int run_verify(const VerifyArgs& args) {
  HypergraphPtr fixture;
  if (!args.fano_fixture.empty()) fixture = load_hypergraph(args.fano_fixture);
  std::vector<std::string> failed;
  int all_passed = 0;
  check(hc_verify(args.only.c_str(), fixture.get(), args.threads, print_criterion, &failed, &all_passed));
  if (all_passed != 0) {
    std::printf("all criteria passed\n");
    return kExitOk;
  }
  std::string names;
  for (const auto& f : failed) names += (names.empty() ? "" : ", ") + f;
  std::fprintf(stderr, "failed criteria: %s\n", names.c_str());
  return kExitFailure;
}

// selfdual-scan --------------------------------------------------------------

struct ScanArgs {
  std::size_t n_max = 0;
  std::size_t uniformity = 2;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  bool csv = false;
};

struct ScanSink {
  bool csv;
  std::uint64_t findings = 0;
};

void print_finding(const hc_scan_finding* f, void* user) {
  auto* sink = static_cast<ScanSink*>(user);
  ++sink->findings;
  json edges = json::array();
  for (std::size_t j = 0; j < hc_hypergraph_num_edges(f->hypergraph); ++j) {
    json edge = json::array();
    for (std::size_t i = 0; i < hc_hypergraph_edge_size(f->hypergraph, j); ++i) {
      edge.push_back(hc_hypergraph_edge_vertex(f->hypergraph, j, i) + 1);
    }
    edges.push_back(edge);
  }
  json row;
  row["sample"] = f->sample_index;
  row["num_vertices"] = hc_hypergraph_num_vertices(f->hypergraph);
  row["num_edges"] = hc_hypergraph_num_edges(f->hypergraph);
  row["rank"] = f->rank;
  row["self_orthogonal"] = f->self_orthogonal != 0;
  row["self_dual"] = f->self_dual != 0;
  row["structural"] = f->structural != 0;
  row["graph_criterion"] = f->graph_criterion < 0 ? json(nullptr) : json(f->graph_criterion != 0);
  row["criterion_agrees"] =
      f->graph_criterion < 0 ? json(nullptr) : json((f->graph_criterion != 0) == (f->self_dual != 0));
  if (sink->csv) {
    std::string cells;
    for (const auto& [key, value] : row.items()) cells += (cells.empty() ? "" : ",") + csv_cell(value);
    std::string e;
    for (const auto& edge : edges) {
      std::string members;
      for (const auto& v : edge) members += (members.empty() ? "" : "-") + v.dump();
      e += (e.empty() ? "" : " ") + members;
    }
    std::cout << cells << "," << e << "\n";
  } else {
    row["edges"] = edges;
    std::cout << row.dump() << "\n";
  }
}

int run_scan(const ScanArgs& args) {
  if (args.csv) {
    std::cout << "sample,num_vertices,num_edges,rank,self_orthogonal,self_dual,structural,graph_criterion,"
                 "criterion_agrees,edges\n";
  }
  hc_scan_options options{args.n_max, args.uniformity, args.budget, args.seed};
  ScanSink sink{args.csv};
  check(hc_selfdual_scan(&options, print_finding, &sink));
  std::cerr << "scanned " << args.budget << " samples, " << sink.findings << " findings\n";
  return kExitOk;
}

// poly -----------------------------------------------------------------------

struct PolyArgs {
  std::string op;
  std::vector<std::string> operands;
  std::size_t n = 0;
};

int run_poly(const PolyArgs& args) {
  if (args.op == "cyclic-dimension") {
    if (args.operands.size() != 1) throw CommandError{HC_ERR_INVALID_ARGUMENT, "cyclic-dimension takes one polynomial"};
    const std::size_t n = args.n != 0 ? args.n : args.operands[0].size();
    std::size_t dim = 0;
    check(hc_poly_cyclic_dimension(args.operands[0].c_str(), n, &dim));
    std::cout << dim << "\n";
    return kExitOk;
  }
  if (args.operands.size() != 2) throw CommandError{HC_ERR_INVALID_ARGUMENT, args.op + " takes two polynomials"};
  char* out = nullptr;
  const char* a = args.operands[0].c_str();
  const char* b = args.operands[1].c_str();
  if (args.op == "gcd") {
    check(hc_poly_gcd(a, b, &out));
  } else if (args.op == "mul") {
    check(hc_poly_mul(a, b, &out));
  } else {
    check(hc_poly_rem(a, b, &out));
  }
  std::cout << take_string(out) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary linear codes from hypergraph incidence matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hc_version()));

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("family", "Generate a hypergraph family in hypergraph text format");
  family_cmd->add_option("kind", family.kind, "Family")
      ->required()
      ->check(CLI::IsMember({"k3partite", "pg", "fano", "circulant", "block-circulant"}));
  family_cmd->add_option("--n", family.n, "Part size (k3partite) or vector-space dimension (pg)");
  family_cmd->add_option("--row", family.row, "First row of the circulant incidence matrix, e.g. 1000101");
  family_cmd->add_option("--k", family.k, "Number of blocks (block-circulant)");
  family_cmd->add_option("--m", family.m, "Block width (block-circulant)");
  family_cmd->add_option("-o,--output", family.output, "Output file (default: stdout)");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report [n,k,d] and duality properties of rs(M)");
  analyze_cmd->add_option("input", analyze.input, "Hypergraph or matrix file ('-' for stdin)")->required();
  analyze_cmd->add_option("--format", analyze.format, "Input format")
      ->check(CLI::IsMember({"auto", "hypergraph", "matrix"}));
  analyze_cmd->add_option("--method", analyze.method, "Minimum-distance engine")
      ->check(CLI::IsMember({"auto", "codeword", "eonv", "both"}));
  analyze_cmd->add_flag("--weights", analyze.weights, "Include the weight distribution");
  analyze_cmd->add_option("--early-exit", analyze.early_exit, "Stop at the first codeword of weight <= t");
  analyze_cmd->add_option("--threads", analyze.threads, "Worker threads")->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--csv", analyze.csv, "Emit one CSV row instead of JSON");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction criteria");
  verify_cmd->add_option("--only", verify.only, "Run a single criterion by tag");
  verify_cmd->add_option("--fano-fixture", verify.fano_fixture, "Hypergraph file replacing the built-in Fano plane");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads")->check(CLI::PositiveNumber);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("selfdual-scan", "Sample connected uniform hypergraphs with self-orthogonal codes");
  scan_cmd->add_option("--n-max", scan.n_max, "Largest vertex count")->required()->check(CLI::Range(2, 62));
  scan_cmd->add_option("--uniformity", scan.uniformity, "Edge size")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--budget", scan.budget, "Number of samples")->required();
  scan_cmd->add_option("--seed", scan.seed, "Random seed")->required();
  scan_cmd->add_flag("--csv", scan.csv, "Emit CSV rows instead of JSON lines");

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Polynomial arithmetic over GF(2) (ascending coefficient strings)");
  poly_cmd->add_option("op", poly.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"gcd", "mul", "rem", "cyclic-dimension"}));
  poly_cmd->add_option("operands", poly.operands, "Polynomials, e.g. 1000101")->required();
  poly_cmd->add_option("--n", poly.n, "Code length for cyclic-dimension (default: operand length)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*family_cmd) return run_family(family);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*verify_cmd) return run_verify(verify);
    if (*scan_cmd) return run_scan(scan);
    if (*poly_cmd) return run_poly(poly);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
