#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "splitov/cli.hpp"

using namespace splitov;
using namespace splitov::cli;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

RunReport report_of(const std::vector<std::string>& args) {
  auto r = run(args);
  INFO(r.err);
  return RunReport::parse_text(r.out);
}

}  // namespace

TEST_CASE("analyze") {
  auto rep = report_of({"analyze", "0001110", "--n", "2"});
  CHECK(rep.get("disjoint") == "no disjoint length-2 pair");
  CHECK(rep.get("period") == "6");
  CHECK(rep.get("borders") == "1");
  rep = report_of({"analyze", "0011", "--t", "1", "--split"});
  CHECK(rep.get("split") == "no split 1-overlap");
  CHECK_FALSE(rep.get("reversed"));
  rep = report_of({"analyze", "alfalfa", "--text"});
  CHECK(rep.get("word") == "0120120");
  CHECK(rep.get("period") == "3");
  CHECK(rep.get("borders") == "4 1");
  rep = report_of({"analyze", "00110", "--t", "1"});
  CHECK(rep.get("split")->find("repetition=000") != std::string::npos);

  CHECK(run({"analyze", ""}).code == exit_code::kUsage);
  CHECK(run({"analyze", "01x"}).code == exit_code::kUsage);
  CHECK(run({"analyze", "0123", "--k", "2"}).code == exit_code::kUsage);
  CHECK(run({"analyze"}).code == exit_code::kUsage);
}

TEST_CASE("search") {
  auto r = run({"search", "C", "--k", "2", "--n", "3"});
  CHECK(r.code == exit_code::kOk);
  auto rep = RunReport::parse_text(r.out);
  CHECK(rep.status == "Exact");
  CHECK(rep.get("value") == "16");
  CHECK(rep.get("witness") == "0000010101111100");

  rep = report_of({"search", "S", "--k", "3", "--t", "1"});
  CHECK(rep.get("value") == "9");
  CHECK(rep.get("witness") == "012021012");
  rep = report_of({"search", "R", "--k", "4", "--t", "1"});
  CHECK(rep.get("value") == "30");
  CHECK(rep.get("witness") == "012031231032021030231321023013");

  r = run({"search", "C", "--k", "2", "--n", "6", "--budget", "1000"});
  CHECK(r.code == exit_code::kLowerBound);
  CHECK(RunReport::parse_text(r.out).status == "LowerBound");

  r = run({"search", "S", "--k", "3", "--t", "2", "--frontier", "--budget", "20000", "--pass-nodes",
           "5000"});
  CHECK(r.code == exit_code::kLowerBound);

  CHECK(run({"search", "C", "--k", "0", "--n", "3"}).code == exit_code::kUsage);
  CHECK(run({"search", "C", "--k", "2"}).code == exit_code::kUsage);
  CHECK(run({"search", "Q", "--k", "2", "--n", "2"}).code == exit_code::kUsage);
  CHECK(run({"search", "S", "--k", "2", "--t", "1", "--convention", "sideways"}).code ==
        exit_code::kUsage);
  CHECK(run({"search", "S", "--k", "2", "--t", "2", "--frontier"}).code == exit_code::kUsage);
}

TEST_CASE("search is deterministic across thread counts") {
  auto a = run({"search", "C", "--k", "2", "--n", "4", "--budget", "2000", "--threads", "1",
                "--format", "json"});
  auto b = run({"search", "C", "--k", "2", "--n", "4", "--budget", "2000", "--threads", "8",
                "--format", "json"});
  auto ra = RunReport::parse_json(a.out), rb = RunReport::parse_json(b.out);
  ra.elapsed_ns.reset();
  rb.elapsed_ns.reset();
  CHECK(ra.render_json() == rb.render_json());
}

TEST_CASE("search checkpoints resume to the uninterrupted answer") {
  const auto path = std::filesystem::temp_directory_path() / "splitov_cli_checkpoint.txt";
  std::filesystem::remove(path);
  const std::vector<std::string> base{"search", "S", "--k", "2", "--t", "2", "--checkpoint",
                                      path.string()};
  auto args = base;
  args.insert(args.end(), {"--budget", "40"});
  auto first = run(args);
  CHECK(first.code == exit_code::kLowerBound);
  REQUIRE(std::filesystem::exists(path));
  auto resumed = run(base);
  CHECK(resumed.code == exit_code::kOk);
  auto rep = RunReport::parse_text(resumed.out);
  CHECK(rep.get("value") == "12");
  CHECK(rep.get("witness") == "000110100111");
  std::filesystem::remove(path);
}

TEST_CASE("bounds") {
  auto rep = report_of({"bounds", "--family", "C", "--k", "2", "--n", "2"});
  CHECK(rep.get("occurrence-cap sum")->rfind("7 ", 0) == 0);
  CHECK(rep.get("pigeonhole")->rfind("9 ", 0) == 0);
  CHECK(rep.get("split-sum estimate")->rfind("14 ", 0) == 0);
  rep = report_of({"bounds", "--family", "S", "--k", "2", "--t", "0"});
  CHECK(rep.get("best") == "2 (exact)");
  rep = report_of({"bounds", "--family", "S", "--k", "1", "--t", "4"});
  CHECK(rep.get("best") == "11 (exact)");
  rep = report_of({"bounds", "--family", "C", "--k", "3", "--n", "20"});
  CHECK(rep.get("note"));
  CHECK(run({"bounds", "--family", "C", "--k", "2"}).code == exit_code::kUsage);
}

TEST_CASE("construct") {
  auto r = run({"construct", "c3", "--k", "3"});
  CHECK(r.code == exit_code::kOk);
  auto rep = RunReport::parse_text(r.out);
  CHECK(rep.get("length") == "41");
  CHECK(rep.get("no disjoint length-3 pair") == "PASS");
  rep = report_of({"construct", "debruijn", "--k", "2", "--n", "3"});
  CHECK(rep.get("length") == "10");
  CHECK(rep.get("window census") == "PASS");
  rep = report_of({"construct", "witness", "--x", "010"});
  CHECK(rep.get("word") == "01010");
  rep = report_of({"construct", "c2", "--k", "5"});
  CHECK(rep.get("length") == "31");
  CHECK(run({"construct", "c2"}).code == exit_code::kUsage);
  CHECK(run({"construct", "c9", "--k", "2"}).code == exit_code::kUsage);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "S", "0011", "--k", "2", "--t", "1"}).code == exit_code::kOk);
  auto r = run({"verify", "S", "00110", "--k", "2", "--t", "1"});
  CHECK(r.code == exit_code::kValidation);
  CHECK(RunReport::parse_text(r.out).status == "invalid");
}

TEST_CASE("table") {
  auto r = run({"table", "2"});
  CHECK(r.code == exit_code::kOk);
  auto rep = RunReport::parse_text(r.out);
  CHECK(rep.get("mismatched") == "0");
  CHECK(rep.get("S(2,3)")->find("computed 47 Exact") != std::string::npos);
  CHECK(rep.get("S(3,2)")->find("Skipped") != std::string::npos);
  CHECK(run({"table", "4"}).code == exit_code::kUsage);
}

TEST_CASE("reference data") {
  const auto& cells = reference_cells();
  CHECK(cells.size() == 55);
  int lex = 0;
  for (const auto& c : cells) lex += c.lex_least ? 1 : 0;
  CHECK(lex == 19);
  CHECK_THROWS_AS(parse_reference_data("C 2 2 ~ 7 - -\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_reference_data("C 2 2\n"), std::invalid_argument);
}

TEST_CASE("reports round trip through text and json") {
  RunReport r;
  r.command = "search C --k 2 --n 4";
  r.parameters = {{"k", "2"}, {"n", "4"}};
  r.outcome = {{"value", "32"}, {"witness", "0101"}, {"witness", "0110"}, {"note", "a: b"}, {"empty", ""}};
  r.status = "Exact";
  r.nodes = 12;
  r.elapsed_ns = 999;
  r.exit_code = 0;
  CHECK(RunReport::parse_text(r.render_text()) == r);
  CHECK(RunReport::parse_json(r.render_json()) == r);
  r.nodes.reset();
  r.elapsed_ns.reset();
  CHECK(RunReport::parse_text(r.render_text()) == r);
  CHECK(RunReport::parse_json(r.render_json()) == r);
  for (const char* cmd : {"calibrate"}) {
    auto out = run({cmd, "--format", "json"});
    auto rep = RunReport::parse_json(out.out);
    CHECK(RunReport::parse_json(rep.render_json()) == rep);
    CHECK(RunReport::parse_text(rep.render_text()) == rep);
  }
  CHECK_THROWS_AS(RunReport::parse_text("hello"), std::invalid_argument);
  CHECK_THROWS_AS(RunReport::parse_json("{"), std::invalid_argument);
}

TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).code == exit_code::kOk); }
