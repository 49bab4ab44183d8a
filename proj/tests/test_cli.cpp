#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the installed binary with the given argument string; env_prefix may
// carry VAR=value assignments.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* bin = std::getenv("EGDIFF_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "EGDIFF_BIN must point at the egdiff binary");
  const std::string err_file = "/tmp/egdiff_cli_stderr.txt";
  const std::string cmd = env_prefix + "'" + bin + "' " + args + " 2>" + err_file;

  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream err(err_file);
  std::stringstream collected;
  collected << err.rdbuf();
  result.err = collected.str();
  return result;
}

}  // namespace

TEST_CASE("delta subcommand") {
  const RunResult r = run_cli("delta 6,5,3,3,3,1,1,1,1");
  CHECK(r.code == 0);
  CHECK(r.out == "m=4 Δ=(2,1,2,2) Δ*=2 graphical=true\n");

  const RunResult j = run_cli("delta 2,2,1,1 --json");
  CHECK(j.code == 0);
  const json parsed = json::parse(j.out);
  CHECK(parsed["m"] == 2);
  CHECK(parsed["delta"] == json::array({1, 0}));
  CHECK(parsed["delta_star"] == 1);
  CHECK(parsed["graphical"] == true);

  // analysis of a non-graphical sequence still succeeds
  const RunResult odd = run_cli("delta 1,1,1");
  CHECK(odd.code == 0);
  CHECK(odd.out.find("graphical=false") != std::string::npos);

  // whitespace-separated input parses the same way
  CHECK(run_cli("delta '6 5 3 3 3 1 1 1 1'").out == r.out);
}

TEST_CASE("classify subcommand") {
  const RunResult r = run_cli("classify 2,2,1,1");
  CHECK(r.code == 0);
  CHECK(r.out == "split=true threshold=false weakly_threshold=true splittance=0\n");

  CHECK(run_cli("classify 3,1,1,1").out.find("threshold=true") != std::string::npos);

  const RunResult bad = run_cli("classify 3,3,1,1");
  CHECK(bad.code == 3);
  CHECK(bad.err.find("not graphical") != std::string::npos);
}

TEST_CASE("sigma and complement subcommands") {
  CHECK(run_cli("sigma 6,5,3,3,3,1,1,1,1").out == "0,2,1,2,2,1,2,2,1,0\n");
  CHECK(run_cli("complement 6,5,3,3,3,1,1,1,1").out == "7,7,7,7,5,5,5,3,2\n");
  CHECK(run_cli("complement 4,1,1,1").code == 3);  // term exceeds n-1
}

TEST_CASE("matrix subcommand") {
  CHECK(run_cli("matrix 1,1").out == "* 1\n1 *\n");
  const RunResult m = run_cli("matrix 6,5,3,3,3,1,1,1,1 --which M");
  CHECK(m.out.substr(0, m.out.find('\n')) == " *  0  0  0  0  0  0  1  1");
  const json parsed = json::parse(run_cli("matrix 2,2,1,1 --which M --json").out);
  CHECK(parsed["kind"] == "M");
  CHECK(parsed["n"] == 4);
  CHECK(parsed["rows"].size() == 4);
}

TEST_CASE("order subcommands") {
  CHECK(run_cli("dominance 3,1,1,1 2,2,1,1").out == "true\n");
  CHECK(run_cli("dominance 2,2,1,1 3,1,1,1").out == "false\n");
  CHECK(run_cli("dominance 2,2 1,1").code == 3);

  CHECK(run_cli("rao 2,2,2,1,1 4,3,3,2,2,2").out == "true\n");
  CHECK(run_cli("rao 3,3,3,3 2,2,2,2,2").out == "false\n");

  CHECK(run_cli("chain 3,1,1,1 2,2,1,1").out == "3,1,1,1\n2,2,1,1\n");
  CHECK(run_cli("chain 2,2,1,1 3,1,1,1").code == 3);
}

TEST_CASE("realization subcommands") {
  CHECK(run_cli("realize 2,2,1,1").out == "4\n1 2\n1 3\n2 4\n");
  CHECK(run_cli("realize 3,3,1,1").code == 3);

  const RunResult e = run_cli("enumerate 2,2,1,1");
  CHECK(e.out == "count=2\n1-2 1-4 2-3\n1-2 1-3 2-4\n");
  CHECK(run_cli("enumerate 3,3,1,1").code == 3);

  CHECK(run_cli("forcible 2,2,1,1").out ==
        "1 2 forced-adjacent\n3 4 forced-nonadjacent\n");
  const json pairs = json::parse(run_cli("forcible 4,4,3,3,3,1 --json").out)["pairs"];
  bool found = false;
  for (const auto& p : pairs) {
    found = found || (p["i"] == 1 && p["j"] == 2 && p["kind"] == "adjacent");
  }
  CHECK(found);
}

TEST_CASE("empty sequences and length padding") {
  CHECK(run_cli("delta ''").out == "m=0 Δ=() Δ*=- graphical=true\n");
  const json j = json::parse(run_cli("delta '' --json").out);
  CHECK(j["m"] == 0);
  CHECK(j["delta"] == json::array());
  CHECK(j["delta_star"].is_null());
  CHECK(run_cli("complement ''").out == "\n");
  // dominance and chains zero-pad to a common length
  CHECK(run_cli("dominance 2,2 2,1,1").out == "true\n");
  CHECK(run_cli("chain 2,2 2,1,1").out == "2,2,0\n2,1,1\n");
}

TEST_CASE("exit codes for parse failures and size caps") {
  CHECK(run_cli("delta 2,x,1").code == 2);
  CHECK(run_cli("delta 2,-1,1").code == 2);
  CHECK(run_cli("unknown-subcommand 1,1").code == 2);

  CHECK(run_cli("enumerate 1,1,1,1,1,1,1,1,1,1").code == 4);
  CHECK(run_cli("rao 1,1 1,1,1,1,1,1,1,1,1,1").code == 4);
  // --limit raises the cap up to the documented ceiling
  CHECK(run_cli("enumerate 1,1,1,1,1,1,1,1,1,1 --limit 10").code == 0);
  CHECK(run_cli("enumerate 1,1 --limit 13").code == 2);
}

TEST_CASE("EGDIFF_LIMIT environment variable") {
  CHECK(run_cli("enumerate 1,1,1,1,1,1", "EGDIFF_LIMIT=5 ").code == 4);
  CHECK(run_cli("enumerate 1,1,1,1,1,1", "EGDIFF_LIMIT=7 ").code == 0);
  // an explicit flag wins over the environment
  CHECK(run_cli("enumerate 1,1,1,1,1,1 --limit 9", "EGDIFF_LIMIT=5 ").code == 0);
  // invalid environment values produce a note unless --quiet
  CHECK(run_cli("enumerate 1,1", "EGDIFF_LIMIT=banana ").err.find("note:") !=
        std::string::npos);
  CHECK(run_cli("enumerate 1,1 --quiet", "EGDIFF_LIMIT=banana ").err.empty());
}

TEST_CASE("json output round-trips against plain output") {
  // delta
  {
    const std::string plain = run_cli("delta 6,5,3,3,3,1,1,1,1").out;
    const json j = json::parse(run_cli("delta 6,5,3,3,3,1,1,1,1 --json").out);
    std::ostringstream rebuilt;
    rebuilt << "m=" << j["m"].get<std::size_t>() << " Δ=(";
    for (std::size_t i = 0; i < j["delta"].size(); ++i) {
      rebuilt << (i ? "," : "") << j["delta"][i].get<std::int64_t>();
    }
    rebuilt << ") Δ*=" << j["delta_star"].get<std::int64_t>()
            << " graphical=" << (j["graphical"].get<bool>() ? "true" : "false") << '\n';
    CHECK(rebuilt.str() == plain);
  }
  // classify
  {
    const json j = json::parse(run_cli("classify 2,2,1,1 --json").out);
    std::ostringstream rebuilt;
    auto flag = [&](const char* k) { return j[k].get<bool>() ? "true" : "false"; };
    rebuilt << "split=" << flag("split") << " threshold=" << flag("threshold")
            << " weakly_threshold=" << flag("weakly_threshold")
            << " splittance=" << j["splittance"].get<std::int64_t>() << '\n';
    CHECK(rebuilt.str() == run_cli("classify 2,2,1,1").out);
  }
  // sigma, complement, dominance, rao
  {
    const json j = json::parse(run_cli("sigma 6,5,3,3,3,1,1,1,1 --json").out);
    std::ostringstream rebuilt;
    for (std::size_t i = 0; i < j["sigma"].size(); ++i) {
      rebuilt << (i ? "," : "") << j["sigma"][i].get<std::int64_t>();
    }
    CHECK(rebuilt.str() + "\n" == run_cli("sigma 6,5,3,3,3,1,1,1,1").out);

    CHECK(json::parse(run_cli("complement 6,5,3,3,3,1,1,1,1 --json").out)["complement"] ==
          json::array({7, 7, 7, 7, 5, 5, 5, 3, 2}));
    CHECK(json::parse(run_cli("dominance 3,1,1,1 2,2,1,1 --json").out)["dominates"] == true);
    CHECK(json::parse(run_cli("rao 2,2,2,1,1 4,3,3,2,2,2 --json").out)["rao_leq"] == true);
  }
  // enumerate
  {
    const json j = json::parse(run_cli("enumerate 2,2,1,1 --json").out);
    CHECK(j["count"] == 2);
    CHECK(j["graphs"].size() == 2);
    CHECK(j["graphs"][0] == json::array({{1, 2}, {1, 4}, {2, 3}}));
  }
  // matrix: the starred plain grid carries the same numbers as the JSON rows
  {
    const json j = json::parse(run_cli("matrix 2,2,1,1 --which M --json").out);
    std::stringstream plain(run_cli("matrix 2,2,1,1 --which M").out);
    std::string cell;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j_col = 0; j_col < 4; ++j_col) {
        plain >> cell;
        const std::int64_t expected = j["rows"][i][j_col].get<std::int64_t>();
        if (i == j_col) {
          CHECK(cell == "*");
          CHECK(expected == 0);
        } else {
          CHECK(std::stoll(cell) == expected);
        }
      }
    }
  }
  // chain and realize
  {
    const json j = json::parse(run_cli("chain 3,1,1,1 2,2,1,1 --json").out);
    CHECK(j["chain"] == json::array({{3, 1, 1, 1}, {2, 2, 1, 1}}));
    const json r = json::parse(run_cli("realize 2,2,1,1 --json").out);
    CHECK(r["n"] == 4);
    CHECK(r["edges"] == json::array({{1, 2}, {1, 3}, {2, 4}}));
  }
}

TEST_CASE("batch mode") {
  const std::string input_path = "/tmp/egdiff_batch_input.txt";
  {
    std::ofstream input(input_path);
    input << "2,2,1,1\n"
          << "3,3,1,1\n"
          << "not a sequence\n"
          << "6 5 3 3 3 1 1 1 1\n"
          << "\n";
  }

  const RunResult csv = run_cli("batch " + input_path + " delta");
  CHECK(csv.code == 0);
  std::vector<std::string> lines;
  std::stringstream stream(csv.out);
  for (std::string line; std::getline(stream, line);) lines.push_back(line);
  REQUIRE(lines.size() == 5);  // one output line per input line
  CHECK(lines[0] == "1,ok,m=2,delta=(1 0),delta_star=1,graphical=true");
  CHECK(lines[1].find("graphical=false") != std::string::npos);
  CHECK(lines[2].rfind("3,error,", 0) == 0);
  CHECK(lines[3] == "4,ok,m=4,delta=(2 1 2 2),delta_star=2,graphical=true");
  CHECK(lines[4] == "5,ok,m=0,delta=(),delta_star=-,graphical=true");

  // classify annotates non-graphical lines without aborting the batch
  const RunResult classify = run_cli("batch " + input_path + " classify");
  CHECK(classify.code == 0);
  std::stringstream cstream(classify.out);
  lines.clear();
  for (std::string line; std::getline(cstream, line);) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0].find("split=true") != std::string::npos);
  CHECK(lines[1].rfind("2,error,", 0) == 0);

  // JSON-lines variant
  const RunResult jsonl = run_cli("batch " + input_path + " delta --json");
  CHECK(jsonl.code == 0);
  std::stringstream jstream(jsonl.out);
  lines.clear();
  for (std::string line; std::getline(jstream, line);) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const json row = json::parse(lines[i]);
    CHECK(row["line"] == i + 1);
  }
  CHECK(json::parse(lines[2]).contains("error"));
  CHECK(json::parse(lines[3])["delta"] == json::array({2, 1, 2, 2}));

  CHECK(run_cli("batch /tmp/definitely_missing_egdiff_input.txt delta").code == 2);
}
