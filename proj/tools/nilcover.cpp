#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilcover/catalog.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/pair_graph.hpp"
#include "nilcover/report.hpp"
#include "nilcover/structure.hpp"
#include "nilcover/verification.hpp"

namespace {

using namespace nilcover;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct Tunables {
  std::optional<std::size_t> cap;
  std::optional<std::size_t> nilpotent_cap;
  std::optional<std::size_t> abelian_cap;
  std::optional<double> timeout_seconds;
  unsigned threads = 1;
};

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

template <typename T>
T from_env(const std::optional<T>& flag, const char* name, T fallback) {
  if (flag) return *flag;
  if (auto v = env(name)) {
    try {
      std::size_t used = 0;
      T parsed;
      if constexpr (std::is_floating_point_v<T>) {
        parsed = static_cast<T>(std::stod(*v, &used));
      } else {
        parsed = static_cast<T>(std::stoull(*v, &used));
      }
      if (used != v->size()) throw std::invalid_argument(*v);
      return parsed;
    } catch (const std::exception&) {
      throw ParseError(std::string("invalid value for ") + name + ": '" + *v + "'");
    }
  }
  return fallback;
}

verification::Settings resolve(const Tunables& t) {
  verification::Settings s;
  s.build.cap = from_env(t.cap, "NILCOVER_CAP", s.build.cap);
  s.limits.nilpotent_cap = from_env(t.nilpotent_cap, "NILCOVER_NILPOTENT_CAP", s.limits.nilpotent_cap);
  s.limits.abelian_cap = from_env(t.abelian_cap, "NILCOVER_ABELIAN_CAP", s.limits.abelian_cap);
  const double seconds = from_env(t.timeout_seconds, "NILCOVER_TIMEOUT", 60.0);
  if (!(seconds > 0)) throw ParseError("timeout must be positive");
  s.clique.timeout = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  s.limits.threads = t.threads;
  return s;
}

std::string default_certificate_path(const std::string& spec, ClassKind kind, std::size_t n) {
  std::string stem;
  for (char c : spec) stem += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return stem + "." + std::string(to_string(kind)) + ".n" + std::to_string(n) + ".witness.json";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_elements(const std::vector<std::string>& elements) {
  for (const auto& e : elements) std::cout << "  " << e << "\n";
}

int cmd_check(const verification::Settings& s, const std::string& spec, ClassKind kind, std::size_t n,
              std::string certificate) {
  auto g = catalog::build(spec, s.build);
  auto graph = build_graph(*g, kind, s.limits);
  auto res = check_condition(graph, n, s.clique);
  const std::string cond = std::string("(") + (kind == ClassKind::Abelian ? "A" : "N") + "," + std::to_string(n) + ")";
  if (res.satisfied) {
    std::cout << "SATISFIES " << g->label() << " " << cond << "\n";
    return kExitTrue;
  }
  if (certificate.empty()) certificate = default_certificate_path(spec, kind, n);
  write_file(certificate, dump(to_json(res.violation)));
  std::cout << "VIOLATES " << g->label() << " " << cond << "\n";
  std::cout << "witness of size " << res.violation.size() << (res.violation.verified ? " (verified)" : " (NOT verified)")
            << ": " << certificate << "\n";
  return kExitFalse;
}

bool is_centre_times_a5(const FiniteGroup& g) {
  auto z = center(g);
  if (g.order() != 60 * z.order()) return false;
  auto q = quotient(g, z);
  if (recognize(*q.group) != Recognition::A5) return false;
  auto series = derived_series(g);
  const Subgroup& d = series.size() > 1 ? series[1] : series[0];
  return d.order() == 60 && intersection(d, z).is_trivial();
}

int cmd_analyze(const verification::Settings& s, const std::string& spec, ClassKind kind, bool json) {
  auto g = catalog::build(spec, s.build);
  auto graph = build_graph(*g, kind, s.limits);
  auto omega = clique_number(graph, s.clique);
  if (!omega.exact) {
    throw Timeout("clique number of " + g->label() + " exceeded its time budget", omega.omega);
  }
  auto report = analyze_structure(*g, json);
  const auto q = quotient(*g, report.hypercentre);
  const auto rec = recognize(*q.group);
  if (json) {
    nlohmann::ordered_json j;
    j["group"] = g->label();
    j["order"] = g->order();
    j["kind"] = std::string(to_string(kind));
    j["omega"] = omega.omega;
    j["witness"] = to_json(omega.witness);
    j["structure"] = to_json(report);
    std::cout << dump(j);
    return kExitTrue;
  }
  std::cout << "group: " << g->label() << "\n";
  std::cout << "order: " << g->order() << "\n";
  std::cout << "class: " << to_string(kind) << "\n";
  std::cout << "omega: " << omega.omega << "\n";
  std::cout << "least n with " << (kind == ClassKind::Abelian ? "(A,n)" : "(N,n)") << ": " << omega.omega << "\n";
  std::cout << "abelian: " << yes_no(is_abelian(whole_group(*g))) << "\n";
  std::cout << "nilpotent: " << yes_no(report.is_nilpotent) << "\n";
  std::cout << "soluble: " << yes_no(report.is_soluble) << "\n";
  std::cout << "supersoluble: " << yes_no(report.is_supersoluble) << "\n";
  std::cout << "derived length: "
            << (report.derived_length ? std::to_string(*report.derived_length) : std::string("insoluble")) << "\n";
  std::cout << "|Z(G)|: " << report.center.order() << "\n";
  std::cout << "|Z*(G)|: " << report.hypercentre.order() << "\n";
  std::cout << "|Sol(G)|: " << report.soluble_radical.order() << "\n";
  std::cout << "|F(G)|: " << report.fitting.order() << "\n";
  std::cout << "|CR(G)|: " << report.cr_radical.order() << "\n";
  std::cout << "G/Z*(G) ≅ A5: " << yes_no(rec == Recognition::A5) << "\n";
  std::cout << "G/Z*(G) ≅ S3: " << yes_no(rec == Recognition::S3) << "\n";
  if (!report.is_soluble && kind == ClassKind::Abelian) {
    std::cout << "G ≅ Z(G)×A5: " << yes_no(is_centre_times_a5(*g)) << "\n";
  }
  std::cout << "witness:\n";
  print_elements(omega.witness.elements);
  return kExitTrue;
}

int cmd_witness(const verification::Settings& s, const std::string& spec, ClassKind kind, bool json) {
  auto g = catalog::build(spec, s.build);
  auto omega = clique_number(build_graph(*g, kind, s.limits), s.clique);
  if (!omega.exact) {
    throw Timeout("clique number of " + g->label() + " exceeded its time budget", omega.omega);
  }
  if (json) {
    std::cout << dump(to_json(omega.witness));
    return kExitTrue;
  }
  std::cout << "group: " << g->label() << "\n";
  std::cout << "class: " << to_string(kind) << "\n";
  std::cout << "size: " << omega.witness.size() << "\n";
  std::cout << "verified: " << (omega.witness.verified ? "true" : "false") << "\n";
  print_elements(omega.witness.elements);
  return omega.witness.verified ? kExitTrue : kExitFalse;
}

int cmd_sylow(const verification::Settings& s, const std::string& spec, unsigned p, bool json) {
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not a prime");
  const auto parsed = catalog::GroupSpec::parse(spec);
  auto g = catalog::build(parsed, s.build);
  auto rep = sylow(*g, p);
  if (json) {
    nlohmann::ordered_json j;
    j["group"] = g->label();
    j["sylow"] = to_json(rep);
    std::cout << dump(j);
    return kExitTrue;
  }
  std::cout << "group: " << g->label() << "\n";
  std::cout << "prime: " << p << "\n";
  std::cout << "sylow order: " << rep.sylow_order << "\n";
  std::cout << "count: " << rep.count << "\n";
  std::cout << "normalizer order: " << rep.normalizer_order << "\n";
  std::cout << "TI: " << (rep.pairwise_trivial_intersection ? "true" : "false") << "\n";
  if (parsed.kind() != catalog::GroupSpec::Kind::PSL2 || rep.count == 0) return kExitTrue;

  const std::size_t q = parsed.parameter();
  const unsigned c = prime_divisors(q).front();
  std::string text;
  std::size_t expected = 0;
  if (p == c) {
    expected = q + 1;
    text = std::to_string(q) + "+1";
  } else if (p != 2 && (q + 1) % p == 0) {
    expected = q * (q - 1) / 2;
    text = std::to_string(q) + "·" + std::to_string(q - 1) + "/2";
  } else if (p != 2 && (q - 1) % p == 0) {
    expected = q * (q + 1) / 2;
    text = std::to_string(q) + "·" + std::to_string(q + 1) + "/2";
  } else {
    std::cout << "formula: none for p = " << p << "\n";
    return kExitTrue;
  }
  const bool match = expected == rep.count;
  std::cout << "formula: " << text << " = " << expected << " " << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? kExitTrue : kExitFalse;
}

int cmd_export(const verification::Settings& s, const std::string& spec, ClassKind kind, const std::string& format,
               const std::string& path, bool isolated) {
  auto g = catalog::build(spec, s.build);
  auto graph = build_graph(*g, kind, s.limits);
  std::string text;
  if (format == "dot") {
    text = to_dot(graph, isolated);
  } else {
    auto omega = clique_number(graph, s.clique);
    if (!omega.exact) {
      throw Timeout("clique number of " + g->label() + " exceeded its time budget", omega.omega);
    }
    text = dump(to_json(omega.witness));
  }
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
    std::cerr << "wrote " << path << "\n";
  }
  return kExitTrue;
}

int cmd_verify_paper(const verification::Settings& s, const std::vector<std::string>& only, bool parallel,
                     bool verbose, bool list) {
  if (list) {
    for (const auto& c : verification::checks()) std::cout << c.id << "  " << c.title << "\n";
    return kExitTrue;
  }
  auto results = verification::run_checks(only, s, parallel);
  bool failed = false;
  bool broken = false;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.id.size());
  for (const auto& r : results) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%8.3fs", r.seconds);
    std::cout << std::string(to_string(r.status)) << std::string(13 - to_string(r.status).size(), ' ') << r.id
              << std::string(width - r.id.size() + 2, ' ') << timing << "  " << r.title << "\n";
    const bool bad = r.status != verification::Status::Pass;
    if (verbose || bad) {
      for (const auto& line : r.details) std::cout << "    " << line << "\n";
    }
    failed = failed || r.status == verification::Status::Fail;
    broken = broken || r.status == verification::Status::Error || r.status == verification::Status::Inconclusive;
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.status == verification::Status::Pass;
  std::cout << passed << "/" << results.size() << " checks passed\n";
  if (broken) return kExitError;
  return failed ? kExitFalse : kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide the conditions (N,n) and (A,n) for finite permutation groups"};
  app.require_subcommand(1);
  Tunables t;
  app.add_option("--cap", t.cap, "closure cap on group order (env NILCOVER_CAP)");
  app.add_option("--nilpotent-cap", t.nilpotent_cap, "largest order for nilpotent pair graphs (env NILCOVER_NILPOTENT_CAP)");
  app.add_option("--abelian-cap", t.abelian_cap, "largest order for abelian pair graphs (env NILCOVER_ABELIAN_CAP)");
  app.add_option("--timeout", t.timeout_seconds, "seconds per clique search (env NILCOVER_TIMEOUT)");
  app.add_option("--threads", t.threads, "threads for pair classification")->capture_default_str();

  std::string spec;
  std::string kind_text = "nilpotent";
  std::size_t n = 0;
  std::string certificate;
  unsigned prime = 0;
  std::string format;
  std::string output;
  bool isolated = false;
  bool json = false;
  std::vector<std::string> only;
  bool parallel = false;
  bool verbose = false;
  bool list = false;
  const std::vector<std::string> kinds = {"abelian", "nilpotent"};

  auto* check = app.add_subcommand("check", "decide the condition (X,n)");
  check->add_option("group", spec, "group expression")->required();
  check->add_option("--class", kind_text, "abelian or nilpotent")->required()->check(CLI::IsMember(kinds));
  check->add_option("--n", n, "n >= 1")->required()->check(CLI::PositiveNumber);
  check->add_option("--certificate", certificate, "where to write the witness on violation");

  auto* analyze = app.add_subcommand("analyze", "clique number and structure summary");
  analyze->add_option("group", spec, "group expression")->required();
  analyze->add_option("--class", kind_text, "abelian or nilpotent")->capture_default_str()->check(CLI::IsMember(kinds));
  analyze->add_flag("--json", json, "print a JSON report");

  auto* witness = app.add_subcommand("witness", "print a maximum clique certificate");
  witness->add_option("group", spec, "group expression")->required();
  witness->add_option("--class", kind_text, "abelian or nilpotent")->required()->check(CLI::IsMember(kinds));
  witness->add_flag("--json", json, "print the certificate as JSON");

  auto* sylow_cmd = app.add_subcommand("sylow", "Sylow p-subgroup data");
  sylow_cmd->add_option("group", spec, "group expression")->required();
  sylow_cmd->add_option("--p", prime, "prime")->required();
  sylow_cmd->add_flag("--json", json, "print the Sylow report as JSON");

  auto* export_cmd = app.add_subcommand("export", "write the pair graph (dot) or a maximum clique certificate (json)");
  export_cmd->add_option("group", spec, "group expression")->required();
  export_cmd->add_option("--class", kind_text, "abelian or nilpotent")->required()->check(CLI::IsMember(kinds));
  export_cmd->add_option("--format", format, "dot or json")->required()->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("-o,--output", output, "output path (stdout when omitted)");
  export_cmd->add_flag("--isolated", isolated, "include isolated vertices in dot output");

  auto* verify = app.add_subcommand("verify-paper", "run the named verification checks");
  verify->add_option("--only", only, "run only these check ids");
  verify->add_flag("--parallel", parallel, "run checks concurrently");
  verify->add_flag("-v,--verbose", verbose, "print every assertion");
  verify->add_flag("--list", list, "list check ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitTrue : kExitError;
  }

  try {
    const auto settings = resolve(t);
    const ClassKind kind = parse_class_kind(kind_text);
    if (*check) return cmd_check(settings, spec, kind, n, certificate);
    if (*analyze) return cmd_analyze(settings, spec, kind, json);
    if (*witness) return cmd_witness(settings, spec, kind, json);
    if (*sylow_cmd) return cmd_sylow(settings, spec, prime, json);
    if (*export_cmd) return cmd_export(settings, spec, kind, format, output, isolated);
    if (*verify) return cmd_verify_paper(settings, only, parallel, verbose, list);
  } catch (const Timeout& e) {
    std::cerr << "error: " << e.what() << " (best lower bound " << e.lower_bound() << ")\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
