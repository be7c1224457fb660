#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>

#include <CLI11.hpp>

#include "flagsh/flagsh.hpp"

namespace fs = std::filesystem;
using namespace flagsh;

namespace {

// Exit codes
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUnknown = 2;
constexpr int kError = 3;

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::Yes: return kYes;
    case Outcome::No: return kNo;
    case Outcome::Unknown: return kUnknown;
  }
  return kError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

// Structure kind from --kind, else from the file extension.
std::string kind_of(const std::string& path, const std::string& given) {
  if (!given.empty()) return given;
  auto ext = fs::path(path).extension().string();
  if (ext == ".graph" || ext == ".poset" || ext == ".complex") return ext.substr(1);
  throw Error("cannot infer the kind of '" + path + "'; pass --kind");
}

std::string verdict_header(Outcome o, const SearchStats& stats) {
  return "# verdict=" + std::string(to_string(o)) + " nodes=" + std::to_string(stats.nodes) +
         " budget=" + std::to_string(stats.budget) + "\n";
}

struct Options {
  std::string kind;
  std::string file;
  std::string out;
  std::string mode = "s";
  std::string target;
  std::size_t budget = kDefaultSearchBudget;
  std::string functor;
  std::string cert;
  std::string start;
  std::string end;
  std::uint64_t seed = 0;
  std::size_t max_size = 8;
  std::size_t instances = 200;
  std::vector<std::string> properties;
  std::string dir;
};

int run_check(const Options& o) {
  const auto kind = kind_of(o.file, o.kind);
  const auto text = read_file(o.file);
  try {
    if (kind == "graph") {
      auto g = parse_graph(text);
      std::cout << "graph: " << g.size() << " vertices, " << g.edge_count() << " edges\n";
    } else if (kind == "poset") {
      auto p = parse_poset(text);
      std::cout << "poset: " << p.size() << " elements, " << p.covers().size() << " covers\n";
    } else if (kind == "complex") {
      auto k = parse_complex(text);
      std::cout << "complex: " << k.size() << " simplices, " << k.maximal_simplices().size() << " maximal\n";
    } else {
      throw Error("unknown kind '" + kind + "'");
    }
  } catch (const ParseError& e) {
    std::cerr << o.file << ": " << e.what() << "\n";
    return kNo;
  } catch (const InvalidStructure& e) {
    std::cerr << o.file << ": " << e.what() << "\n";
    return kNo;
  }
  return kYes;
}

int run_reduce(const Options& o) {
  const Graph g = parse_graph(read_file(o.file));
  std::optional<Graph> target;
  if (!o.target.empty()) target = parse_graph(read_file(o.target));

  if (o.mode == "dismantle") {
    SearchVerdict<DismantlingOrder> verdict;
    if (target) {
      verdict = dismantles_onto(g, *target, o.budget);
    } else {
      auto r = is_dismantlable(g);
      verdict.outcome = r.dismantlable ? Outcome::Yes : Outcome::No;
      if (r.dismantlable) verdict.certificate = *r.order;
      verdict.stats.nodes = g.size();
      verdict.stats.budget = o.budget;
    }
    std::string text = verdict_header(verdict.outcome, verdict.stats);
    if (verdict.yes()) text += to_text(detail::dismantling_as_moves(g, *verdict.certificate));
    write_output(o.out, text);
    return exit_code(verdict.outcome);
  }

  SearchVerdict<MoveCertificate> verdict;
  if (o.mode == "s") {
    verdict = target ? s_reduction_search(g, *target, o.budget) : s_collapse_search(g, o.budget);
  } else if (o.mode == "ws") {
    verdict = ws_reduction_search(g, target, o.budget);
  } else {
    throw Error("unknown mode '" + o.mode + "'");
  }
  std::string text = verdict_header(verdict.outcome, verdict.stats);
  if (verdict.yes()) text += to_text(verdict.certificate->moves);
  write_output(o.out, text);
  return exit_code(verdict.outcome);
}

int run_map(const Options& o) {
  const auto kind = kind_of(o.file, o.kind);
  const auto text = read_file(o.file);
  auto need = [&](const char* k) {
    if (kind != k) throw Error("'" + o.functor + "' expects a " + k + ", got a " + kind);
  };
  std::string result;
  const auto& f = o.functor;
  if (f == "delta-g") {
    need("graph");
    result = to_text(delta_g(parse_graph(text)));
  } else if (f == "gamma") {
    need("complex");
    result = to_text(gamma(parse_complex(text)));
  } else if (f == "sk") {
    need("complex");
    result = to_text(sk(parse_complex(text)));
  } else if (f == "comp") {
    need("poset");
    result = to_text(comp(parse_poset(text)));
  } else if (f == "clique-poset") {
    need("graph");
    result = to_text(clique_poset(parse_graph(text)));
  } else if (f == "order-complex") {
    need("poset");
    result = to_text(order_complex(parse_poset(text)));
  } else if (f == "face-poset") {
    need("complex");
    result = to_text(face_poset(parse_complex(text)));
  } else if (f == "bd") {
    if (kind == "graph") result = to_text(bd_graph(parse_graph(text)));
    else if (kind == "poset") result = to_text(bd_poset(parse_poset(text)));
    else result = to_text(bd_complex(parse_complex(text)));
  } else {
    throw Error("unknown map '" + f + "'");
  }
  write_output(o.out, result);
  return kYes;
}

// Without a stated end the replayed end is used, so only the witnesses are
// checked. Moves naming absent labels fail at the first such step.
template <class Certificate, class End>
CheckResult replay_and_check(Certificate& cert, const std::optional<End>& end) {
  if (end) {
    cert.end = *end;
  } else {
    try {
      cert.end = replay(cert.start, cert.moves);
    } catch (const Error&) {
      cert.end = cert.start;
    }
  }
  CheckResult check;
  try {
    if constexpr (std::is_same_v<Certificate, MoveCertificate>)
      check = check_certificate(cert);
    else
      check = check_complex_certificate(cert);
  } catch (const Error& e) {
    return CheckResult::fail(0, e.what());
  }
  return check;
}

int run_certify(const Options& o) {
  const auto kind = kind_of(o.start, o.kind);
  const auto cert_text = read_file(o.cert);
  CheckResult check;
  std::string summary;
  if (kind == "graph") {
    MoveCertificate cert{parse_graph(read_file(o.start)), parse_moves(cert_text), {}};
    check = replay_and_check(cert, o.end.empty() ? std::nullopt : std::optional(parse_graph(read_file(o.end))));
    if (check && o.end.empty())
      summary = "end: " + std::to_string(cert.end.size()) + " vertices, " + std::to_string(cert.end.edge_count()) +
                " edges";
  } else if (kind == "complex") {
    ComplexCertificate cert{parse_complex(read_file(o.start)), parse_complex_moves(cert_text), {}};
    check = replay_and_check(cert, o.end.empty() ? std::nullopt : std::optional(parse_complex(read_file(o.end))));
    if (check && o.end.empty()) summary = "end: " + std::to_string(cert.end.size()) + " simplices";
  } else {
    throw Error("certificates are replayed on graphs or complexes, not on a " + kind);
  }
  if (!check) {
    std::cout << "invalid: step " << check.step << ": " << check.reason << "\n";
    return kNo;
  }
  std::cout << "valid" << (summary.empty() ? "" : "; " + summary) << "\n";
  return kYes;
}

int run_identities(const Options& o) {
  SuiteConfig config;
  config.seed = o.seed;
  config.max_size = o.max_size;
  config.instances = o.instances;
  config.budget = o.budget;
  config.only = o.properties;
  auto reports = run_property_suite(config);
  std::string text;
  for (const auto& r : reports) text += to_text(r) + "\n";
  write_output(o.out, text);
  return all_passed(reports) ? kYes : kNo;
}

int run_corpus_verify(const Options& o) {
  bool ok = true;
  std::string text;
  for (const auto& r : corpus::verify_corpus()) {
    ok = ok && r.passed;
    text += "fixture=" + r.fixture + " assertion=" + r.id + " result=" + (r.passed ? "pass" : "fail");
    if (!r.detail.empty()) text += " detail=\"" + r.detail + "\"";
    text += "\n";
  }
  // Shipped files must match the built-in fixtures.
  if (!o.dir.empty()) {
    for (const auto& f : corpus::fixtures()) {
      const auto path = fs::path(o.dir) / (f.name + "." + f.kind);
      bool same = false;
      std::string detail;
      try {
        const auto content = read_file(path.string());
        same = f.kind == "graph" ? parse_graph(content) == parse_graph(f.payload)
                                 : parse_poset(content) == parse_poset(f.payload);
      } catch (const Error& e) {
        detail = e.what();
      }
      ok = ok && same;
      text += "fixture=" + f.name + " file=" + path.string() + " result=" + (same ? "pass" : "fail");
      if (!detail.empty()) text += " detail=\"" + detail + "\"";
      text += "\n";
    }
  }
  write_output(o.out, text);
  return ok ? kYes : kNo;
}

int run_corpus_export(const Options& o) {
  fs::create_directories(o.dir);
  for (const auto& f : corpus::fixtures()) {
    const auto path = fs::path(o.dir) / (f.name + "." + f.kind);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << f.payload;
    std::cout << path.string() << "\n";
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagsh: graphs, posets and simplicial complexes up to s-homotopy"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "parse a structure file and validate its invariants");
  check->add_option("kind", o.kind, "graph, poset or complex")->required()
      ->check(CLI::IsMember({"graph", "poset", "complex"}));
  check->add_option("file", o.file)->required();

  auto* reduce = app.add_subcommand("reduce", "search for a reduction of a graph");
  reduce->add_option("graph", o.file)->required();
  reduce->add_option("--mode", o.mode, "s, ws or dismantle")->check(CLI::IsMember({"s", "ws", "dismantle"}));
  reduce->add_option("--budget", o.budget)->envname("FLAGSH_BUDGET");
  reduce->add_option("--target", o.target, "graph file to reduce onto");
  reduce->add_option("--out", o.out);

  auto* map = app.add_subcommand("map", "apply a map between graphs, posets and complexes");
  map->add_option("functor", o.functor)->required()->check(CLI::IsMember(
      {"delta-g", "gamma", "sk", "comp", "clique-poset", "order-complex", "face-poset", "bd"}));
  map->add_option("file", o.file)->required();
  map->add_option("--kind", o.kind, "input kind when the extension does not tell");
  map->add_option("--out", o.out);

  auto* certify = app.add_subcommand("certify", "replay a certificate");
  certify->add_option("cert", o.cert)->required();
  certify->add_option("--start", o.start)->required();
  certify->add_option("--end", o.end);
  certify->add_option("--kind", o.kind, "kind of the start structure");

  auto* identities = app.add_subcommand("identities", "run the property suite");
  identities->add_option("--seed", o.seed)->envname("FLAGSH_SEED");
  identities->add_option("--max-size", o.max_size);
  identities->add_option("--instances", o.instances);
  identities->add_option("--budget", o.budget)->envname("FLAGSH_BUDGET");
  identities->add_option("--property", o.properties, "run only these properties");
  identities->add_option("--out", o.out);

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in fixtures");
  corpus_cmd->require_subcommand(1);
  auto* verify = corpus_cmd->add_subcommand("verify", "check every fixture assertion");
  verify->add_option("--dir", o.dir, "also compare the fixture files in this directory");
  verify->add_option("--out", o.out);
  auto* exporter = corpus_cmd->add_subcommand("export", "write the fixture files");
  exporter->add_option("dir", o.dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*check) return run_check(o);
    if (*reduce) return run_reduce(o);
    if (*map) return run_map(o);
    if (*certify) return run_certify(o);
    if (*identities) return run_identities(o);
    if (*verify) return run_corpus_verify(o);
    if (*exporter) return run_corpus_export(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
