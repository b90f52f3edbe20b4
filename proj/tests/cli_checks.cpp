// Black-box checks of the command-line tool: exit codes, determinism, and
// agreement between the text and json renderings.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

std::string g_cli_binary;
int g_failures = 0;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command = g_cli_binary + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

void expect(bool condition, const std::string& what) {
  if (condition) {
    std::cout << "[ok] " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "[FAILED] " << what << "\n";
  }
}

// Value of a "key: value" line in the text rendering.
std::string text_field(const std::string& out, const std::string& key) {
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return "<missing>";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_checks <path-to-b3link>\n";
    return 64;
  }
  g_cli_binary = argv[1];

  // Repeated invocations are byte-identical.
  {
    const auto first = run_cli("order --braid '(1 2 3 4)^10' --format json");
    const auto second = run_cli("order --braid '(1 2 3 4)^10' --format json");
    expect(first.exit_code == 0, "order exits 0");
    expect(first.out == second.out, "order output is byte-stable across runs");

    const auto inv1 = run_cli("invariance --trials 25 --seed 77");
    const auto inv2 = run_cli("invariance --trials 25 --seed 77");
    expect(inv1.exit_code == 0, "invariance exits 0");
    expect(inv1.out == inv2.out, "seeded invariance output is byte-stable");
  }

  // Text and json renderings carry the same values.
  {
    const auto text = run_cli("order --braid '(1 2 3 4)^10'");
    const auto json = run_cli("order --braid '(1 2 3 4)^10' --format json");
    const auto j = nlohmann::json::parse(json.out);
    expect(text_field(text.out, "order_exponent") == "10" &&
               j.at("order_exponent").get<int>() == 10,
           "order_exponent 10 in both renderings");
    expect(text_field(text.out, "h1_rank") == "4" && j.at("h1_rank").get<int>() == 4,
           "h1_rank 4 in both renderings");
    expect(text_field(text.out, "closure_ranks") == "0 0 4" &&
               j.at("closure_ranks") == nlohmann::json::array({0, 0, 4}),
           "closure_ranks (0,0,4) in both renderings");
    expect(text_field(text.out, "verdict") == "OBSTRUCTED" &&
               j.at("verdict").get<std::string>() == "OBSTRUCTED",
           "verdict OBSTRUCTED in both renderings");
    expect(text_field(text.out, "component_count") == "5" &&
               j.at("component_count").get<int>() == 5,
           "component_count 5 in both renderings");
    expect(j.size() == 8, "json report carries exactly the eight documented fields");
    expect(text.out.find("certificate: ") != std::string::npos,
           "text rendering includes the certificate narrative");
  }

  // Documented command examples.
  {
    const auto trefoil = run_cli("order --braid '1 1 1'");
    expect(trefoil.exit_code == 0 && text_field(trefoil.out, "order_exponent") == "1" &&
               text_field(trefoil.out, "verdict") == "CONSISTENT_WITH_TRIVIAL",
           "trefoil closure is order 3^1, consistent with trivial");

    const auto unknot = run_cli("order --braid ''");
    expect(unknot.exit_code == 0 && text_field(unknot.out, "order_exponent") == "0",
           "empty braid gives the trivial quotient");

    const auto cabled = run_cli("h1 --braid '(1 -2)^3' --two-cable");
    expect(cabled.exit_code == 0 && text_field(cabled.out, "h1_rank") == "5",
           "2-cabled Borromean homology rank 5");

    const auto identity3 = run_cli("h1 --braid '' --strands 3");
    expect(identity3.exit_code == 0 && text_field(identity3.out, "h1_rank") == "2",
           "identity 3-braid homology rank 2");

    const auto lemma = run_cli("lemma7 --format json");
    const auto lj = nlohmann::json::parse(lemma.out);
    expect(lemma.exit_code == 0 && lj.at("det").get<int>() == 1 &&
               lj.at("rank").get<int>() == 4 &&
               lj.at("rows") == nlohmann::json::parse(
                                    "[[-1,0,0,0],[1,1,0,0],[1,-1,-1,0],[1,-1,1,1]]"),
           "basis-change matrix rows, determinant, and rank");

    const auto lemma_text = run_cli("lemma7");
    expect(lemma_text.out.find("P1: -1 0 0 0") != std::string::npos &&
               lemma_text.out.find("det: 1") != std::string::npos,
           "matrix text rendering shows signed rows and determinant");

    const auto consistency = run_cli("consistency");
    expect(consistency.exit_code == 0 &&
               consistency.out.find("all: PASS") != std::string::npos,
           "consistency command passes for ranks 0..5");
  }

  // Planar diagram input from a file.
  {
    const std::string path = "cli_checks_trefoil.pd";
    std::ofstream file(path);
    file << "# trefoil\nX 1 2 3\nX 3 1 2\nX 2 3 1\n";
    file.close();
    const auto pd = run_cli("order --pd " + path);
    expect(pd.exit_code == 0 && text_field(pd.out, "order_exponent") == "1" &&
               text_field(pd.out, "component_count") == "1",
           "planar diagram file drives the same pipeline");
    std::remove(path.c_str());

    const auto missing = run_cli("order --pd no_such_file.pd");
    expect(missing.exit_code == 1, "missing diagram file exits 1");
  }

  // Exit-code contract: 1 usage/parse, 2 capacity, 3 violation.
  {
    expect(run_cli("order --braid 'x y'").exit_code == 1, "unparseable braid exits 1");
    expect(run_cli("order").exit_code == 1, "missing input source exits 1");
    expect(run_cli("order --braid '1' --pd foo.pd").exit_code == 1, "two input sources exit 1");
    expect(run_cli("order --braid '1' --two-cable --pd foo.pd").exit_code == 1,
           "conflicting flags exit 1");
    expect(run_cli("order --braid '1' --format yaml").exit_code == 1, "unknown format exits 1");
    expect(run_cli("nosuchcommand").exit_code == 1, "unknown command exits 1");
    expect(run_cli("order --braid '' --strands 40").exit_code == 2,
           "past the generator cap exits 2");
    expect(run_cli("invariance --trials 25 --seed 3 --corrupt").exit_code == 3,
           "corrupted moves are detected and exit 3");
    expect(run_cli("--help").exit_code == 0, "help exits 0");
    expect(run_cli("invariance --trials 0").exit_code == 1, "zero trials exits 1");
  }

  if (g_failures == 0) {
    std::cout << "all cli checks passed\n";
  } else {
    std::cout << g_failures << " cli check(s) failed\n";
  }
  return g_failures;
}
