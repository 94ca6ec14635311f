// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

// End-to-end tests that drive the installed command-line binary through a
// shell, checking exit codes, stream parsing, JSON structure and
// reproducibility. The binary path is injected at compile time.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "test_util.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with `args`, optionally piping `stdin_text` in and merging
// stderr into the captured output. stderr is discarded otherwise.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  bool merge_stderr = false) {
  std::string command;
  if (!stdin_text.empty()) {
    command += "printf '%s' '" + stdin_text + "' | ";
  }
  command += "'";
  command += FAIRTOSS_CLI_PATH;
  command += "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  if (stdin_text.empty()) command += " < /dev/null";

  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

json parse_document(const RunResult& result) {
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  REQUIRE(doc.at("schema_version") == "1.0");
  REQUIRE(doc.contains("command"));
  REQUIRE(doc.contains("inputs"));
  REQUIRE(doc.contains("results"));
  REQUIRE(doc.at("notes").is_array());
  return doc;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("version and top-level usage") {
  const RunResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.output == "fairtoss 1.0.0\n");

  CHECK(run_cli("").exit_code == 2);             // no subcommand
  CHECK(run_cli("frobnicate").exit_code == 2);   // unknown subcommand
  CHECK(run_cli("exact --bogus 1").exit_code == 2);
  const RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("exact") != std::string::npos);
}

TEST_CASE("exact --p reports the full coin table") {
  const json doc = parse_document(run_cli("exact --p 0.5 --quiet"));
  CHECK(doc.at("command") == "exact");
  CHECK(doc.at("inputs").at("p") == 0.5);
  const json& results = doc.at("results");
  CHECK(results.at("advantage").get<double>() == 0.0);
  CHECK(results.at("pr_match").get<double>() == 0.5);
  CHECK(results.at("pr_match_given_mismatch").get<double>() == 0.5);
  CHECK(results.at("expected_tosses").at("von-neumann").get<double>() == 4.0);
  CHECK(results.at("expected_tosses").at("blind").get<double>() == 5.0);
  CHECK(results.at("expected_tosses").at("single-sound").get<double>() == 1.0);
  CHECK(results.at("expected_tosses_total").at("single-sound").get<double>() ==
        2.0);
  CHECK(results.at("p1_win").at("von-neumann").get<double>() == 0.5);
  CHECK(results.at("p1_win").at("single-sound").get<double>() == 0.5);
}

TEST_CASE("exact --dist with the oracle cross-check") {
  const json doc =
      parse_document(run_cli("exact --dist 0.8,0.1,0.1 --oracle --quiet"));
  const json& results = doc.at("results");
  CHECK(fairtoss::test::close(results.at("pr_match").get<double>(), 0.66,
                              1e-12));
  CHECK(fairtoss::test::close(
      results.at("pr_match_given_mismatch").get<double>(), 0.146 / 0.34,
      1e-12));
  CHECK(fairtoss::test::close(results.at("pr_triple").get<double>(), 0.514,
                              1e-12));
  // Three faces: no coin-protocol tables.
  CHECK_FALSE(results.contains("expected_tosses"));
  CHECK(results.at("oracle").at("max_abs_deviation").get<double>() < 1e-12);
}

TEST_CASE("exact at a degenerate bias nulls the undefined quantities") {
  const json doc = parse_document(run_cli("exact --p 1 --quiet"));
  const json& results = doc.at("results");
  CHECK(results.at("pr_match_given_mismatch").is_null());
  CHECK(results.at("expected_tosses").is_null());
  CHECK(results.at("p1_win").is_null());
  CHECK_FALSE(doc.at("notes").empty());

  // The same degeneracy through the --dist spelling.
  const json doc2 = parse_document(run_cli("exact --dist 1,0 --quiet"));
  CHECK(doc2.at("results").at("expected_tosses").is_null());
}

TEST_CASE("exact input validation") {
  CHECK(run_cli("exact").exit_code == 2);                  // neither input
  CHECK(run_cli("exact --dist 0.5,0.5 --p 0.5").exit_code == 2);  // both
  CHECK(run_cli("exact --dist 0.5,0.6").exit_code == 2);   // sums to 1.1
  CHECK(run_cli("exact --dist 0.7").exit_code == 2);       // single face
  CHECK(run_cli("exact --dist 0.5,abc").exit_code == 2);   // not a number
  CHECK(run_cli("exact --p 1.5").exit_code == 2);          // out of range
  CHECK(run_cli("exact --p 0.5 --json --csv").exit_code == 2);
}

TEST_CASE("exact forgives sub-tolerance probability drift and says so") {
  const json doc = parse_document(
      run_cli("exact --dist 0.5,0.5000000001 --quiet"));
  double sum = 0.0;
  for (const auto& entry : doc.at("inputs").at("dist")) {
    sum += entry.get<double>();
  }
  CHECK(sum == 1.0);  // exact renormalization, echoed back
  bool noted = false;
  for (const auto& note : doc.at("notes")) {
    if (note.get<std::string>().find("renormalized") != std::string::npos) {
      noted = true;
    }
  }
  CHECK(noted);
}

TEST_CASE("transduce maps tosses to sounds through stdin") {
  const RunResult basic = run_cli("transduce --input - --quiet", "HTTH");
  CHECK(basic.exit_code == 0);
  CHECK(basic.output == "WCW\n");

  // One toss makes no sound; the output is an empty line.
  CHECK(run_cli("transduce --input - --quiet", "T").output == "\n");

  // Whitespace is ignored, case is not significant.
  CHECK(run_cli("transduce --input - --quiet", "h t\tth").output == "WCW\n");

  // With --quiet nothing is written to stderr at all.
  const RunResult quiet =
      run_cli("transduce --input - --quiet", "HTTH", /*merge_stderr=*/true);
  CHECK(quiet.output == "WCW\n");
  // Without it, a one-line summary lands on stderr.
  const RunResult loud =
      run_cli("transduce --input - ", "HTTH", /*merge_stderr=*/true);
  CHECK(loud.output.find("4 tosses -> 3 sounds") != std::string::npos);
}

TEST_CASE("transduce rejects bad bytes with their offset") {
  const RunResult bad =
      run_cli("transduce --input -", "HX", /*merge_stderr=*/true);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("byte offset 1") != std::string::npos);

  CHECK(run_cli("transduce --input -", " ").exit_code == 2);  // no tosses
  CHECK(run_cli("transduce --input /nonexistent/file").exit_code == 2);
  CHECK(run_cli("transduce").exit_code == 2);  // --input is required
}

TEST_CASE("extract emits one bit per decision") {
  const RunResult vn = run_cli("extract --mode vn --input - --quiet", "HTTH");
  CHECK(vn.exit_code == 0);
  CHECK(vn.output == "10\n");

  CHECK(run_cli("extract --mode von-neumann --input - --quiet", "HTTH")
            .output == "10\n");
  CHECK(run_cli("extract --mode blind --input - --quiet", "THH").output ==
        "0\n");
  // Sound-alphabet input with the protocol-name alias.
  CHECK(run_cli("extract --mode sound-vn --format cw --input - --quiet", "CW")
            .output == "1\n");
  CHECK(run_cli("extract --mode single --format cw --input - --quiet", "CWC")
            .output == "101\n");

  // Too short for even one game: empty bit line, still success.
  const RunResult empty =
      run_cli("extract --mode blind --input - --quiet", "HH");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output == "\n");
}

TEST_CASE("extract validation") {
  // Toss-pair decisions cannot be reconstructed from sounds alone.
  CHECK(run_cli("extract --mode vn --format cw --input - --quiet", "CW")
            .exit_code == 2);
  CHECK(run_cli("extract --mode bogus --input - --quiet", "HT").exit_code ==
        2);
  CHECK(run_cli("extract --mode vn --format xy --input - --quiet", "HT")
            .exit_code == 2);
  CHECK(run_cli("extract --mode vn --input - --quiet", "HX").exit_code == 2);
  CHECK(run_cli("extract --input - --quiet", "HT").exit_code == 2);  // no mode
}

TEST_CASE("simulate reports seeded Monte Carlo results as JSON") {
  const std::string args =
      "simulate --protocol blind --p 0.5 --trials 5000 --seed 7 --quiet";
  const json doc = parse_document(run_cli(args));
  CHECK(doc.at("command") == "simulate");
  CHECK(doc.at("inputs").at("protocol") == "blind");
  CHECK(doc.at("inputs").at("ci_method") == "normal");
  const json& results = doc.at("results");
  CHECK(results.at("trials").get<std::uint64_t>() == 5000);
  const auto p1 = results.at("p1_wins").get<std::uint64_t>();
  const auto p2 = results.at("p2_wins").get<std::uint64_t>();
  const auto undecided = results.at("undecided").get<std::uint64_t>();
  CHECK(p1 + p2 + undecided == 5000);
  CHECK(results.at("exact_p1_win").get<double>() == 0.5);
  CHECK(results.at("exact_mean_tosses").get<double>() == 5.0);
  CHECK(std::abs(results.at("z_vs_exact").get<double>()) < 5.0);
  CHECK(results.at("ci_low").get<double>() <=
        results.at("p1_rate").get<double>());

  // The Wilson variant swaps the interval and says so.
  const json wilson = parse_document(run_cli(args + " --wilson"));
  CHECK(wilson.at("inputs").at("ci_method") == "wilson");
  CHECK(wilson.at("results").at("ci_low").get<double>() >= 0.0);
  CHECK(wilson.at("results").at("ci_high").get<double>() <= 1.0);

  // The initial-toss protocols report totals including the base toss.
  const json ss = parse_document(run_cli(
      "simulate --protocol single-sound --p 0.8 --trials 1000 --seed 3"
      " --quiet"));
  CHECK(ss.at("results").at("exact_mean_tosses").get<double>() == 2.0);
  CHECK(ss.at("results").at("exact_p1_win").get<double>() ==
        doctest::Approx(0.68).epsilon(1e-12));
}

TEST_CASE("simulate output is byte-identical across reruns and thread"
          " counts") {
  const std::string base =
      "simulate --protocol sound-vn --p 0.7 --trials 20000 --seed 42 --quiet";
  const RunResult once = run_cli(base + " --threads 1");
  CHECK(once.exit_code == 0);
  const std::string variants[] = {base + " --threads 2",
                                  base + " --threads 4", base,
                                  base + " --threads 1"};
  for (const std::string& variant : variants) {
    const RunResult again = run_cli(variant);
    REQUIRE(again.exit_code == 0);
    REQUIRE(again.output == once.output);
  }
  // A different seed must change the sample.
  const RunResult other = run_cli(
      "simulate --protocol sound-vn --p 0.7 --trials 20000 --seed 43 --quiet");
  CHECK(other.output != once.output);
}

TEST_CASE("simulate validation") {
  CHECK(run_cli("simulate --protocol blind --p 0").exit_code == 2);
  CHECK(run_cli("simulate --protocol blind --p 1").exit_code == 2);
  CHECK(run_cli("simulate --protocol blind --p 1.5").exit_code == 2);
  CHECK(run_cli("simulate --protocol nope --p 0.5").exit_code == 2);
  CHECK(run_cli("simulate --p 0.5").exit_code == 2);      // missing protocol
  CHECK(run_cli("simulate --protocol blind").exit_code == 2);  // missing p
  CHECK(run_cli("simulate --protocol blind --p 0.5 --trials 0").exit_code ==
        2);
}

TEST_CASE("csv output flattens the document into key,value rows") {
  const RunResult csv = run_cli(
      "simulate --protocol blind --p 0.5 --trials 200 --seed 1 --csv"
      " --quiet");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find('{') == std::string::npos);
  CHECK(csv.output.find("results.trials,200\n") != std::string::npos);
  CHECK(csv.output.find("inputs.protocol,") != std::string::npos);
  CHECK(csv.output.find("results.p1_rate,") != std::string::npos);

  const RunResult exact_csv = run_cli("exact --dist 0.8,0.1,0.1 --csv --quiet");
  CHECK(exact_csv.exit_code == 0);
  CHECK(exact_csv.output.find("inputs.dist.0,") != std::string::npos);
  CHECK(exact_csv.output.find("results.pr_match,0.66") != std::string::npos);
}

TEST_CASE("dice-game simulates the match and cross-checks the closed"
          " forms") {
  const json doc = parse_document(run_cli(
      "dice-game --dist 1,0 --rounds 200 --seed 1 --quiet"));
  CHECK(doc.at("command") == "dice-game");
  const json& results = doc.at("results");
  CHECK(results.at("rounds").get<std::uint64_t>() == 200);
  CHECK(results.at("triple_points").get<std::uint64_t>() == 200);
  CHECK(results.at("doubles_points").get<std::uint64_t>() == 200);
  CHECK(results.at("outcome") == "draw");
  CHECK(results.at("exact_pr_triple").get<double>() == 1.0);

  // Determinism across thread counts.
  const std::string base =
      "dice-game --dist 0.8536,0.1464 --rounds 30000 --seed 5 --quiet";
  const RunResult one = run_cli(base + " --threads 1");
  const RunResult four = run_cli(base + " --threads 4");
  REQUIRE(one.exit_code == 0);
  CHECK(one.output == four.output);
  const json skew = json::parse(one.output);
  CHECK(skew.at("results").at("outcome") == "triple-wins");

  CHECK(run_cli("dice-game --dist 0.5,0.6 --rounds 10").exit_code == 2);
  CHECK(run_cli("dice-game --rounds 10").exit_code == 2);  // --dist required
}

}  // TEST_SUITE
