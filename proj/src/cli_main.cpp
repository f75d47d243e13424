#include <CLI11.hpp>
#include <ostream>

#include "splitov/cli.hpp"

namespace splitov::cli {

namespace {

Family family_arg(const std::string& s) {
  try {
    return parse_family(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

GapConvention convention_arg(const std::string& s) {
  try {
    return parse_gap_convention(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// --n for C, --t for S and R; either spelling is accepted.
int family_param(Family family, const std::optional<int>& n, const std::optional<int>& t) {
  if (n && t) throw UsageError("give either --n or --t, not both");
  if (!n && !t) throw UsageError(family == Family::C ? "--n is required" : "--t is required");
  return n ? *n : *t;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split overlaps and disjoint factors: detectors, bounds, constructions, searches"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Periods, borders and violations of one word");
  a->add_option("word", analyze.word, "Word (digits, or comma-separated symbols)")->required();
  a->add_option("--k", analyze.k, "Alphabet size (default: largest symbol + 1)");
  a->add_flag("--text", analyze.text, "Map arbitrary characters to symbols by first occurrence");
  a->add_option("--t", analyze.t, "Report t-overlaps");
  a->add_option("--n", analyze.n, "Report disjoint occurrences of length-n factors");
  a->add_flag("--split", analyze.split, "Only split t-overlaps");
  a->add_flag("--reversed", analyze.reversed, "Only reversed split t-overlaps");
  std::string analyze_conv = "empty-pieces";
  a->add_option("--convention", analyze_conv, "empty-pieces, empty-gap or nonempty-gap");

  SearchArgs search;
  std::string search_family;
  std::optional<int> search_n, search_t;
  std::string search_conv = "empty-pieces";
  auto* s = app.add_subcommand("search", "Longest word avoiding a pattern family");
  s->add_option("family", search_family, "C, S or R")->required();
  s->add_option("--k", search.k, "Alphabet size")->required();
  s->add_option("--n", search_n, "Factor length (C)");
  s->add_option("--t", search_t, "Overlap parameter (S, R)");
  s->add_option("--budget", search.budget, "Node budget (per subtree task)");
  s->add_option("--time-limit", search.time_limit_ms, "Wall-clock limit in milliseconds");
  s->add_option("--threads", search.threads, "Worker threads")->capture_default_str();
  s->add_option("--split-depth", search.split_depth, "Depth at which the tree is split into tasks")
      ->capture_default_str();
  s->add_option("--checkpoint", search.checkpoint, "Resume from and save to this file");
  s->add_flag("--all-witnesses", search.all_witnesses, "Report every maximal word");
  s->add_flag("--frontier", search.frontier, "Randomised lower-bound search");
  s->add_option("--pass-nodes", search.pass_nodes, "Frontier: nodes per pass")->capture_default_str();
  s->add_option("--seed", search.seed, "Frontier: random seed")->capture_default_str();
  s->add_option("--convention", search_conv, "empty-pieces, empty-gap or nonempty-gap");

  BoundsArgs bounds;
  std::string bounds_family;
  std::optional<int> bounds_n, bounds_t;
  auto* b = app.add_subcommand("bounds", "Closed-form bounds");
  b->add_option("--family", bounds_family, "C, S or R")->required();
  b->add_option("--k", bounds.k, "Alphabet size")->required();
  b->add_option("--n", bounds_n, "Factor length (C)");
  b->add_option("--t", bounds_t, "Overlap parameter (S, R)");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Lower-bound constructions");
  c->add_option("what", construct.what, "c2, c3, debruijn or witness")->required();
  c->add_option("--k", construct.k, "Alphabet size");
  c->add_option("--n", construct.n, "Order (debruijn)");
  c->add_option("--x", construct.x, "Factor (witness)");

  TableArgs table;
  auto* t = app.add_subcommand("table", "Recompute a table and diff it against the reference values");
  t->add_option("table", table.table, "1 (C), 2 (S) or 3 (R)")->required();
  t->add_option("--budget-per-cell", table.budget_per_cell,
                "Frontier node budget for cells beyond exhaustive reach");
  t->add_option("--exact-budget", table.exact_budget, "Node budget for exhaustive cells")
      ->capture_default_str();

  VerifyArgs verify;
  std::string verify_family;
  std::optional<int> verify_n, verify_t;
  std::string verify_conv = "empty-pieces";
  auto* v = app.add_subcommand("verify", "Check that a word avoids a pattern family");
  v->add_option("family", verify_family, "C, S or R")->required();
  v->add_option("word", verify.word, "Word")->required();
  v->add_option("--k", verify.k, "Alphabet size")->required();
  v->add_option("--n", verify_n, "Factor length (C)");
  v->add_option("--t", verify_t, "Overlap parameter (S, R)");
  v->add_option("--convention", verify_conv, "empty-pieces, empty-gap or nonempty-gap");

  auto* cal = app.add_subcommand("calibrate", "Compare gap conventions on S(2,1..2), R(2,1..2)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    RunReport report;
    if (a->parsed()) {
      analyze.convention = convention_arg(analyze_conv);
      report = cmd_analyze(analyze);
    } else if (s->parsed()) {
      search.family = family_arg(search_family);
      search.param = family_param(search.family, search_n, search_t);
      search.convention = convention_arg(search_conv);
      report = cmd_search(search);
    } else if (b->parsed()) {
      bounds.family = family_arg(bounds_family);
      bounds.param = family_param(bounds.family, bounds_n, bounds_t);
      report = cmd_bounds(bounds);
    } else if (c->parsed()) {
      report = cmd_construct(construct);
    } else if (t->parsed()) {
      report = cmd_table(table);
    } else if (v->parsed()) {
      verify.family = family_arg(verify_family);
      verify.param = family_param(verify.family, verify_n, verify_t);
      verify.convention = convention_arg(verify_conv);
      report = cmd_verify(verify);
    } else if (cal->parsed()) {
      report = cmd_calibrate();
    }
    out << (format == "json" ? report.render_json() : report.render_text());
    return report.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kValidation;
  }
}

}  // namespace splitov::cli
