// End-to-end checks of the command-line surface: exit codes, JSON and CSV
// output. argv[1] is the path to the binary under test.

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

int g_failures = 0;

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) {                                                         \
      std::cout << "FAIL " << __FILE__ << ":" << __LINE__ << "  " << #cond \
                << "\n";                                                   \
      ++g_failures;                                                        \
    }                                                                      \
  } while (0)

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cout << "usage: cli_tests <binary>\n";
    return 2;
  }
  const std::string bin = argv[1];

  {
    const RunResult r = run(bin + " certify --builtin s2 --xi-n 3");
    EXPECT(r.exit_code == 0);
    const json doc = json::parse(r.out);
    EXPECT(doc["xi"] == "3");
    EXPECT(doc["perfect"] == true);
    EXPECT(doc["circumscribed"] == true);
  }
  {
    const RunResult r = run(bin + " certify --builtin perfect5 --xi-n 5");
    EXPECT(r.exit_code == 0);
    const json doc = json::parse(r.out);
    EXPECT(doc["xi"] == "5");
    EXPECT(doc["alpha"] == "5");
    EXPECT(doc["perfect"] == true);
  }
  {
    const RunResult r = run(bin + " certify --builtin sstar:4");
    EXPECT(r.exit_code == 0);
    EXPECT(json::parse(r.out)["xi"] == "13/3");
  }

  // Document input, both from a file and from stdin.
  const char* doc_text =
      R"({"n": 3, "vertices": [["0","0","0"],["1","1","0"],["1","0","1"],["0","1","1"]]})";
  {
    std::ofstream out("cli_test_simplex.json");
    out << doc_text;
    out.close();
    const RunResult r =
        run(bin + " certify --input cli_test_simplex.json --xi-n 3");
    EXPECT(r.exit_code == 0);
    const json doc = json::parse(r.out);
    EXPECT(doc["xi"] == "3");
    EXPECT(doc["perfect"] == false);
    std::remove("cli_test_simplex.json");
  }
  {
    const RunResult r = run(std::string("echo '") + doc_text + "' | " + bin +
                            " certify --input -");
    EXPECT(r.exit_code == 0);
    EXPECT(json::parse(r.out)["xi"] == "3");
  }

  // Error paths and exit codes.
  {
    std::ofstream out("cli_test_degenerate.json");
    out << R"({"n": 2, "vertices": [["0","0"],["1","0"],["1/2","0"]]})";
    out.close();
    EXPECT(run(bin + " certify --input cli_test_degenerate.json").exit_code == 2);
    std::remove("cli_test_degenerate.json");
  }
  EXPECT(run("echo 'not json' | " + bin + " certify --input -").exit_code == 3);
  EXPECT(run(bin + " certify --builtin nosuch").exit_code == 3);
  EXPECT(run(bin + " certify --builtin s1 --xi-n 3/0").exit_code == 3);
  EXPECT(run(bin + " certify --builtin R:1/10:1/2").exit_code == 3);
  EXPECT(run(bin + " certify").exit_code == 3);
  EXPECT(run(bin + " certify --builtin s1 --input -").exit_code == 3);
  EXPECT(run(bin + " nosuchcommand").exit_code == 3);
  EXPECT(run(bin + " hadamard -m 6").exit_code == 4);
  EXPECT(run(bin + " certify --builtin regular:6").exit_code == 4);
  EXPECT(run(bin + " search -n 0 -D 2").exit_code == 3);
  EXPECT(run(bin + " sweep --family X --t-min 0 --t-max 1 --steps 3").exit_code == 3);
  EXPECT(run(bin + " sweep --family R --t-min 0 --t-max 1 --steps 3").exit_code == 3);
  EXPECT(run(bin + " sweep --family T --s-min 0 --s-max 1 --t-min 0 --t-max 1 --steps 3")
             .exit_code == 3);
  EXPECT(run(bin + " sweep --family T --t-min 0 --t-max 1 --steps 1").exit_code == 3);

  // Hadamard output format.
  {
    const RunResult r = run(bin + " hadamard -m 1");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out == "+\n");
  }
  {
    const RunResult r = run(bin + " hadamard -m 4");
    EXPECT(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    EXPECT(rows.size() == 4);
    EXPECT(rows[0] == "++++");
    for (const auto& row : rows) EXPECT(row.size() == 4);
  }
  {
    const RunResult r = run(bin + " hadamard -m 12");
    EXPECT(r.exit_code == 0);
    EXPECT(lines_of(r.out).size() == 12);
  }

  // Sweep CSV: header, row count, exact values with float renderings.
  {
    const RunResult r =
        run(bin + " sweep --family T --t-min 0 --t-max 1 --steps 5");
    EXPECT(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    EXPECT(rows.size() == 6);
    EXPECT(rows[0] == "s,t,xi,alpha,xi_float,alpha_float");
    EXPECT(rows[1] == ",0,10,31/4,10,7.75");
    EXPECT(rows[2] == ",1/4,7,7,7,7");
    EXPECT(rows[3] == ",1/2,7,7,7,7");
    EXPECT(rows[4] == ",3/4,7,7,7,7");
    EXPECT(rows[5] == ",1,10,31/4,10,7.75");
  }
  {
    const RunResult r =
        run(bin + " sweep --family S9 --t-min 2/5 --t-max 3/5 --steps 5");
    EXPECT(r.exit_code == 0);
    for (const auto& row : lines_of(r.out)) {
      if (row.empty() || row[0] != ',') continue;
      EXPECT(row.find(",9,9,") != std::string::npos);
    }
  }
  {
    const RunResult r = run(
        bin + " sweep --family R --s-min 1/3 --s-max 1/2 --t-min 1/3 --t-max "
              "2/3 --steps 4");
    EXPECT(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    EXPECT(rows.size() == 17);
    // The (4/9, 4/9) grid point sits on the flat part of the surface.
    bool found = false;
    for (const auto& row : rows) {
      if (row.rfind("4/9,4/9,", 0) == 0) {
        EXPECT(row == "4/9,4/9,5,5,5,5");
        found = true;
      }
    }
    EXPECT(found);
  }

  // Search JSON and trace CSV.
  {
    const RunResult r =
        run(bin + " search -n 1 -D 1 --restarts 1 --seed 0");
    EXPECT(r.exit_code == 0);
    EXPECT(json::parse(r.out)["xi_exact"] == "1");
  }
  {
    const RunResult r = run(bin +
                            " search -n 3 -D 2 --restarts 50 --seed 1 "
                            "--trace-csv cli_test_trace.csv");
    EXPECT(r.exit_code == 0);
    const json doc = json::parse(r.out);
    EXPECT(doc["xi_exact"] == "3");
    EXPECT(doc["best"]["n"] == 3);
    std::ifstream trace("cli_test_trace.csv");
    EXPECT(trace.good());
    std::string header;
    std::getline(trace, header);
    EXPECT(header == "step,xi,xi_float");
    std::size_t data_rows = 0;
    for (std::string line; std::getline(trace, line);) ++data_rows;
    EXPECT(data_rows == doc["trace"].size());
    trace.close();
    std::remove("cli_test_trace.csv");
  }

  if (g_failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cout << g_failures << " cli checks failed\n";
  return 1;
}
