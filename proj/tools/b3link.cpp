// b3link: exponent-3 quotients of link groups from braid words or planar
// diagrams, with the order/homology obstruction against trivial links.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "b3/burnside.hpp"
#include "b3/errors.hpp"
#include "b3/invariants.hpp"
#include "b3/liering.hpp"
#include "b3/linkio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitViolation = 3;

struct DiagramOptions {
  std::string braid_text;
  std::string pd_path;
  int strands = 0;  // 0: infer from the letters
  bool two_cable = false;
};

void add_format_option(CLI::App* cmd, std::string* format) {
  cmd->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_diagram_options(CLI::App* cmd, DiagramOptions* opt) {
  cmd->add_option("--braid", opt->braid_text,
                  "braid word, signed generators with (..)^k groups, e.g. \"(1 2 3 4)^10\"");
  cmd->add_option("--pd", opt->pd_path, "path to a planar diagram file, one crossing per line");
  cmd->add_option("--strands", opt->strands, "strand count override for --braid")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--two-cable", opt->two_cable, "replace the braid by its blackboard 2-parallel");
}

// Closure presentation of whichever diagram the flags selected, plus a stable
// one-line description of the input for the report.
b3::LinkPresentation load_presentation(const CLI::App& cmd, const DiagramOptions& opt,
                                       std::string* description) {
  const bool braid_given = cmd.count("--braid") > 0;
  const bool pd_given = cmd.count("--pd") > 0;
  if (braid_given == pd_given) {
    throw b3::Error("exactly one of --braid or --pd is required");
  }
  if (pd_given && opt.two_cable) {
    throw b3::Error("--two-cable applies only to --braid input");
  }
  if (pd_given && cmd.count("--strands") > 0) {
    throw b3::Error("--strands applies only to --braid input");
  }

  if (braid_given) {
    b3::BraidWord braid = b3::parse_braid(opt.braid_text, opt.strands);
    std::ostringstream desc;
    desc << "braid \"" << opt.braid_text << "\"";
    if (opt.two_cable) {
      braid = b3::two_cable(braid);
      desc << " 2-cabled";
    }
    desc << " on " << braid.strands << " strands";
    *description = desc.str();
    return b3::closed_braid_presentation(braid);
  }

  std::ifstream file(opt.pd_path);
  if (!file) {
    throw b3::Error("cannot open diagram file '" + opt.pd_path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  *description = "pd \"" + opt.pd_path + "\"";
  return b3::pd_presentation(b3::parse_pd(buffer.str()));
}

int run_order(const CLI::App& cmd, const DiagramOptions& opt, const std::string& format) {
  std::string description;
  const b3::LinkPresentation p = load_presentation(cmd, opt, &description);
  b3::QuotientReport report = b3::burnside_group(p);
  report.input = description;
  std::cout << (format == "json" ? b3::to_json(report) : b3::to_text(report));
  return kExitOk;
}

int run_h1(const CLI::App& cmd, const DiagramOptions& opt, const std::string& format) {
  std::string description;
  const b3::LinkPresentation p = load_presentation(cmd, opt, &description);
  const int rank = b3::h1_z3(p);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["input"] = description;
    j["h1_rank"] = rank;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "input: " << description << "\n"
              << "h1_rank: " << rank << "\n";
  }
  return kExitOk;
}

int signed_residue(int v) { return v == 2 ? -1 : v; }

int run_lemma7(const std::string& format) {
  const b3::RelatorBasisMatrix m = b3::third_layer_relator_matrix();
  const auto triples = b3::e_basis_triples();
  if (format == "json") {
    nlohmann::ordered_json j;
    j["basis"] = triples;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : m.rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto v : row) r.push_back(signed_residue(v));
      rows.push_back(r);
    }
    j["rows"] = rows;
    j["det"] = static_cast<int>(m.det);
    j["rank"] = m.rank;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "basis:\n";
  for (std::size_t i = 0; i < triples.size(); ++i) {
    std::cout << "  e" << i + 1 << " = [[x" << triples[i][0] << ", x" << triples[i][1] << "], x"
              << triples[i][2] << "]\n";
  }
  std::cout << "rows:\n";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    std::cout << "  P" << i + 1 << ":";
    for (const auto v : m.rows[i]) std::cout << " " << signed_residue(v);
    std::cout << "\n";
  }
  std::cout << "det: " << static_cast<int>(m.det) << "\n"
            << "rank: " << m.rank << "\n";
  return kExitOk;
}

int run_invariance(std::uint64_t trials, int max_strands, int max_length, std::uint64_t seed,
                   bool corrupt, const std::string& format) {
  if (trials < 1) {
    throw b3::RangeError("--trials must be at least 1");
  }
  const b3::InvarianceReport report =
      b3::invariance_suite(trials, max_strands, max_length, seed, corrupt);
  std::cout << (format == "json" ? b3::to_json(report) : b3::to_text(report));
  return report.passed ? kExitOk : kExitViolation;
}

int run_consistency(const std::string& format) {
  bool all_passed = true;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  std::ostringstream text;
  for (int n = 0; n <= 5; ++n) {
    const b3::BurnsideContext ctx(n);
    const b3::ConsistencyReport report = ctx.consistency_check();
    all_passed = all_passed && report.passed;
    if (format == "json") {
      nlohmann::ordered_json entry;
      entry["n"] = n;
      entry["passed"] = report.passed;
      entry["witnesses_checked"] = report.witnesses_checked;
      entry["first_violation"] = report.first_violation;
      results.push_back(entry);
    } else {
      text << "n " << n << ": " << (report.passed ? "PASS" : "FAIL") << " ("
           << report.witnesses_checked << " witnesses)";
      if (!report.passed) text << " first violation: " << report.first_violation;
      text << "\n";
    }
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["results"] = results;
    j["passed"] = all_passed;
    std::cout << j.dump(2) << "\n";
  } else {
    text << "all: " << (all_passed ? "PASS" : "FAIL") << "\n";
    std::cout << text.str();
  }
  return all_passed ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exponent-3 quotients of link groups, with the trivial-link obstruction"};
  app.require_subcommand(1);

  std::string format = "text";

  DiagramOptions order_opt;
  CLI::App* order_cmd =
      app.add_subcommand("order", "group order, layer ranks, homology, and verdict");
  add_diagram_options(order_cmd, &order_opt);
  add_format_option(order_cmd, &format);

  DiagramOptions h1_opt;
  CLI::App* h1_cmd = app.add_subcommand("h1", "Z3-homology rank of the double branched cover");
  add_diagram_options(h1_cmd, &h1_opt);
  add_format_option(h1_cmd, &format);

  CLI::App* lemma7_cmd =
      app.add_subcommand("lemma7", "relator matrix of the doubled full twist in the e-basis");
  add_format_option(lemma7_cmd, &format);

  std::uint64_t trials = 100;
  int max_strands = 5;
  int max_length = 20;
  std::uint64_t seed = 0;
  bool corrupt = false;
  CLI::App* invariance_cmd =
      app.add_subcommand("invariance", "random 3-move trials comparing quotient summaries");
  invariance_cmd->add_option("--trials", trials, "number of random (braid, move) pairs")
      ->capture_default_str();
  invariance_cmd->add_option("--max-strands", max_strands, "largest braid width sampled")
      ->check(CLI::Range(2, 31))
      ->capture_default_str();
  invariance_cmd->add_option("--max-length", max_length, "largest braid length sampled")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  invariance_cmd->add_option("--seed", seed, "random generator seed")->capture_default_str();
  invariance_cmd->add_flag("--corrupt", corrupt)->group("");  // test hook: insert squares
  add_format_option(invariance_cmd, &format);

  CLI::App* consistency_cmd =
      app.add_subcommand("consistency", "presentation consistency witnesses for small ranks");
  add_format_option(consistency_cmd, &format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (order_cmd->parsed()) return run_order(*order_cmd, order_opt, format);
    if (h1_cmd->parsed()) return run_h1(*h1_cmd, h1_opt, format);
    if (lemma7_cmd->parsed()) return run_lemma7(format);
    if (invariance_cmd->parsed())
      return run_invariance(trials, max_strands, max_length, seed, corrupt, format);
    if (consistency_cmd->parsed()) return run_consistency(format);
  } catch (const b3::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const b3::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
