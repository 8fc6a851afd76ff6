// Command-line front end. Exit codes: 0 success or found, 1 verified
// negative, 2 usage or I/O error, 3 precondition violated, 4 cap exceeded,
// 5 internal invariant failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "twoblock/detection.hpp"
#include "twoblock/error.hpp"
#include "twoblock/exact_color.hpp"
#include "twoblock/ham_degeneracy.hpp"
#include "twoblock/harness.hpp"
#include "twoblock/io.hpp"
#include "twoblock/json_io.hpp"
#include "twoblock/pipeline.hpp"

namespace tb = twoblock;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kPrecondition = 3, kCap = 4, kInternal = 5 };

struct Options {
  bool heuristic = false;
  std::optional<int> cap;
  bool json = false;
  std::string dot;
  std::string file;
  int k = 2;
  int ell = 1;
};

tb::SearchConfig make_config(const Options& o) {
  tb::SearchConfig c = tb::default_config();
  if (o.cap) c = c.with_cap(*o.cap);
  c.strict = !o.heuristic;
  return c;
}

void write_dot_file(const Options& o, const tb::Digraph& d, const tb::Coloring* coloring) {
  if (o.dot.empty()) return;
  std::ofstream out(o.dot);
  if (!out) throw tb::Error(tb::ErrorKind::ParseError, "cannot write " + o.dot);
  out << tb::write_dot(d, coloring);
}

std::string path_text(const tb::DiPath& p) {
  std::string s;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    s += (i ? " -> " : "") + std::to_string(p.vertices[i]);
  }
  return s;
}

void print_certificate(const Options& o, const tb::TwoBlockCertificate& c) {
  if (o.json) {
    std::cout << tb::json{{"found", true}, {"certificate", c}}.dump() << "\n";
    return;
  }
  std::cout << "c(" << c.k_req << "," << c.ell_req << ") from " << c.u << " to " << c.v << "\n"
            << "  path A (" << c.path_a.length() << "): " << path_text(c.path_a) << "\n"
            << "  path B (" << c.path_b.length() << "): " << path_text(c.path_b) << "\n";
}

// Re-checks a colouring with the independent checker before reporting it.
int emit_coloring(const Options& o, const tb::Digraph& d, const tb::Coloring& c,
                  const tb::json& extra = tb::json::object()) {
  if (!tb::is_proper_coloring(tb::underlying_graph(d), c)) {
    std::cerr << "error: produced colouring is not proper\n";
    return kInternal;
  }
  write_dot_file(o, d, &c);
  if (o.json) {
    tb::json j = extra;
    j["coloring"] = c;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [key, value] : extra.items()) std::cout << key << ": " << value.dump() << "\n";
    std::cout << "palette: " << c.palette_size << "\ncolors:";
    for (int x : c.colors) std::cout << " " << x;
    std::cout << "\n";
  }
  return kOk;
}

int run_detect(const Options& o) {
  const tb::Digraph d = tb::read_edge_list(o.file);
  const tb::DetectionResult r = tb::find_two_block_cycle(d, o.k, o.ell, make_config(o));
  write_dot_file(o, d, nullptr);
  if (const auto* cert = std::get_if<tb::TwoBlockCertificate>(&r)) {
    if (!tb::verify_certificate(d, *cert, o.k, o.ell)) return kInternal;
    print_certificate(o, *cert);
    return kOk;
  }
  const auto& absent = std::get<tb::AbsenceReport>(r);
  if (o.json) {
    std::cout << tb::detection_json(r).dump() << "\n";
  } else {
    std::cout << "no c(" << o.k << "," << o.ell << ") ("
              << (absent.mode == tb::SearchMode::Exhaustive ? "exhaustive" : "capped, unverified")
              << ", " << absent.pairs_checked << " pairs)\n";
  }
  return kNegative;
}

int run_color(const Options& o) {
  const tb::Digraph d = tb::read_edge_list(o.file);
  const tb::PipelineOutcome r = tb::run_pipeline(d, o.k, o.ell, make_config(o));
  if (const auto* cert = std::get_if<tb::TwoBlockCertificate>(&r)) {
    if (!o.json) std::cout << "input contains a c(k,ell); no colouring guarantee applies\n";
    print_certificate(o, *cert);
    return kNegative;
  }
  const auto& res = std::get<tb::PipelineResult>(r);
  tb::json extra{{"m", res.trace.step_count()},
                 {"lengths", res.trace.lengths()},
                 {"classes", res.classes.size()},
                 {"bound", res.palette_bound},
                 {"verified_construction", res.trace.verified_construction}};
  if (o.json) extra["trace"] = res.trace;
  return emit_coloring(o, d, res.coloring, extra);
}

int run_ham_color(const Options& o) {
  const tb::SearchConfig config = make_config(o);
  const tb::Digraph d = tb::read_edge_list(o.file);
  const auto ham = tb::hamiltonian_cycle(d, config);
  if (!ham) throw tb::Error(tb::ErrorKind::NotHamiltonian, "input has no Hamiltonian cycle");
  if (o.k == 1 && o.ell == 1) {
    // Without c(1,1) a Hamiltonian digraph is exactly its cycle.
    if (static_cast<int>(d.arc_count()) == d.vertex_count()) {
      const tb::ChromaticResult r = tb::chromatic_number(tb::underlying_graph(d), config);
      return emit_coloring(o, d, r.witness, tb::json{{"induced_cycle", true}});
    }
    const tb::DetectionResult r = tb::find_two_block_cycle(d, 1, 1, config);
    if (const auto* cert = std::get_if<tb::TwoBlockCertificate>(&r)) {
      print_certificate(o, *cert);
      return kNegative;
    }
    return kInternal;
  }
  const tb::HamOrderOutcome r = tb::ham_degeneracy_order(d, *ham, o.k, o.ell, config);
  if (const auto* cert = std::get_if<tb::TwoBlockCertificate>(&r)) {
    print_certificate(o, *cert);
    return kNegative;
  }
  const auto& order = std::get<tb::EliminationOrder>(r);
  const tb::UGraph g = tb::underlying_graph(d);
  if (!tb::is_valid_elimination(g, order)) return kInternal;
  return emit_coloring(o, d, tb::greedy_color_by_order(g, order),
                       tb::json{{"order", order}, {"bound", o.k + o.ell}});
}

int run_chromatic(const Options& o) {
  const tb::Digraph d = tb::read_edge_list(o.file);
  const tb::ChromaticResult r = tb::chromatic_number(tb::underlying_graph(d), make_config(o));
  return emit_coloring(o, d, r.witness, tb::json{{"chi", r.chi}});
}

int run_longest(const Options& o) {
  const tb::Digraph d = tb::read_edge_list(o.file);
  const tb::CycleSearch r = tb::longest_cycle_search(d, make_config(o));
  if (o.json) {
    std::cout << tb::json{{"length", r.cycle.length()}, {"cycle", r.cycle.vertices}, {"exact", r.exact}}.dump()
              << "\n";
  } else {
    std::cout << "length " << r.cycle.length() << (r.exact ? "" : " (heuristic)") << "\ncycle:";
    for (tb::Vertex v : r.cycle.vertices) std::cout << " " << v;
    std::cout << "\n";
  }
  return kOk;
}

int run_figure1(const Options& o) {
  tb::SearchConfig config = make_config(o);
  config.strict = true;
  const tb::Digraph t = tb::figure1_tournament();
  const bool strong = tb::is_strong(t);
  const bool tournament = tb::is_tournament(t);
  const int chi = tb::chromatic_number(tb::underlying_graph(t), config).chi;
  const tb::DetectionResult r = tb::find_two_block_cycle(t, 4, 1, config);
  const bool no_c41 = !tb::found(r) && std::get<tb::AbsenceReport>(r).mode == tb::SearchMode::Exhaustive;
  const bool ok = strong && tournament && chi == 5 && no_c41;
  if (o.json) {
    std::cout << tb::json{{"strong", strong}, {"tournament", tournament}, {"chi", chi},
                          {"no_c41_exhaustive", no_c41}, {"ok", ok}}.dump()
              << "\n";
  } else {
    auto mark = [](bool b) { return b ? "yes" : "NO"; };
    std::cout << "strong: " << mark(strong) << "\n"
              << "tournament: " << mark(tournament) << "\n"
              << "chi = " << chi << ": " << mark(chi == 5) << "\n"
              << "no c(4,1) (exhaustive): " << mark(no_c41) << "\n";
  }
  return ok ? kOk : kNegative;
}

int run_search(const Options& o, int n, const std::string& out_path, int workers) {
  const tb::Problem1Result r = tb::search_problem1(n, make_config(o), workers);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw tb::Error(tb::ErrorKind::ParseError, "cannot write " + out_path);
    for (const auto& rec : r.hits) out << tb::json(rec).dump() << "\n";
  }
  tb::json summary{{"n", r.n}, {"labeled", r.labeled}, {"strong", r.strong},
                   {"hits", r.hits.size()}, {"hit_classes", r.hit_classes}};
  if (o.json) {
    std::cout << summary.dump() << "\n";
  } else {
    for (const auto& [key, value] : summary.items()) std::cout << key << ": " << value.dump() << "\n";
  }
  return r.hits.empty() ? kNegative : kOk;
}

int run_bondy(const Options& o, int count, int max_n, std::uint64_t seed, int workers) {
  if (count < 0 || max_n < 2) throw tb::Error(tb::ErrorKind::PreconditionViolated, "need count >= 0, max-n >= 2");
  std::vector<tb::Digraph> instances;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>((seed + i) % static_cast<std::uint64_t>(max_n - 1));
    const double density = 0.05 + 0.05 * static_cast<double>(i % 8);
    instances.push_back(tb::random_strong_digraph(n, density, seed * 1000003ULL + i));
  }
  const tb::BondyReport r = tb::audit_bondy(instances, seed, make_config(o), workers);
  if (o.json) {
    std::cout << tb::json{{"instances", r.records.size()}, {"violations", r.violations}}.dump() << "\n";
  } else {
    std::cout << "instances: " << r.records.size() << "\nviolations: " << r.violations << "\n";
  }
  return r.violations == 0 ? kOk : kNegative;
}

int run_bw(const Options& o, int n, const std::string& out_path) {
  const tb::BwReport r = tb::audit_bw_claim(n, make_config(o));
  const std::string csv = r.csv();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw tb::Error(tb::ErrorKind::ParseError, "cannot write " + out_path);
    out << csv;
  }
  if (o.json) {
    std::cout << tb::json{{"n", r.n}, {"labeled", r.labeled}, {"classes", r.classes},
                          {"rows", r.rows.size()}, {"violations", r.violations}}.dump()
              << "\n";
  } else {
    std::cout << csv;
  }
  return kOk;
}

int exit_code_for(tb::ErrorKind kind) {
  switch (kind) {
    case tb::ErrorKind::ParseError:
      return kUsage;
    case tb::ErrorKind::CapExceeded:
      return kCap;
    case tb::ErrorKind::NotStrong:
    case tb::ErrorKind::NotHamiltonian:
    case tb::ErrorKind::PreconditionViolated:
    case tb::ErrorKind::Acyclic:
    case tb::ErrorKind::LoopArc:
    case tb::ErrorKind::DuplicateArc:
    case tb::ErrorKind::VertexOutOfRange:
    case tb::ErrorKind::EmptySet:
      return kPrecondition;
    default:
      return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycles with two blocks: detection, colouring and audits"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--heuristic,!--strict", o.heuristic, "Budgeted search beyond the caps (default strict)");
    sub->add_option("--cap", o.cap, "Use one cap for every exact solver");
    sub->add_flag("--json", o.json, "Machine-readable output");
  };
  auto add_kl = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Length required of the first path")->required();
    sub->add_option("--ell", o.ell, "Length required of the second path")->required();
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Edge-list file")->required();
    sub->add_option("--dot", o.dot, "Write Graphviz output here");
  };

  auto* detect = app.add_subcommand("detect", "Find a c(k,ell) or prove absence");
  auto* color = app.add_subcommand("color", "Colour a strong c(k,ell)-free digraph");
  auto* ham = app.add_subcommand("ham-color", "Colour a Hamiltonian c(k,ell)-free digraph");
  auto* chrom = app.add_subcommand("chromatic", "Exact chromatic number");
  auto* longest = app.add_subcommand("longest-cycle", "Exact longest cycle");
  auto* fig = app.add_subcommand("verify-figure1", "Check the five-vertex tournament without c(4,1)");
  auto* search = app.add_subcommand("search", "Strong tournaments missing some c(k,n-k)");
  auto* bondy = app.add_subcommand("bondy-check", "Longest cycle versus chromatic number");
  auto* bw = app.add_subcommand("bw-audit", "Truth table of c(k,n-k) over tournaments");

  for (auto* sub : {detect, color, ham, chrom, longest, fig, search, bondy, bw}) add_common(sub);
  for (auto* sub : {detect, color, ham}) add_kl(sub);
  for (auto* sub : {detect, color, ham, chrom, longest}) add_file(sub);

  int n = 5;
  std::string out_path;
  int workers = 0;
  int count = 500;
  int max_n = 12;
  std::uint64_t seed = 1;
  search->add_option("--n", n, "Tournament order (4..7)")->required();
  search->add_option("--out", out_path, "JSON-lines output");
  search->add_option("--workers", workers, "Worker threads (0: hardware)");
  bondy->add_option("--count", count, "Number of random strong digraphs");
  bondy->add_option("--max-n", max_n, "Largest order");
  bondy->add_option("--seed", seed, "Seed");
  bondy->add_option("--workers", workers, "Worker threads (0: hardware)");
  bw->add_option("--n", n, "Tournament order (4..6)")->required();
  bw->add_option("--out", out_path, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*detect) return run_detect(o);
    if (*color) return run_color(o);
    if (*ham) return run_ham_color(o);
    if (*chrom) return run_chromatic(o);
    if (*longest) return run_longest(o);
    if (*fig) return run_figure1(o);
    if (*search) return run_search(o, n, out_path, workers);
    if (*bondy) return run_bondy(o, count, max_n, seed, workers);
    if (*bw) return run_bw(o, n, out_path);
  } catch (const tb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
