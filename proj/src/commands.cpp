#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "splitov/cli.hpp"
#include "splitov/debruijn.hpp"

namespace splitov::cli {

extern const char* const kReferenceData;

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

std::string span_str(const Span& s) {
  return "[" + std::to_string(s.start) + ".." + std::to_string(s.end) + "]";
}

std::string param_name(Family family) { return family == Family::C ? "n" : "t"; }

std::string render_rational(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  std::ostringstream out;
  out << r.str() << " (~" << std::fixed;
  out.precision(3);
  out << static_cast<double>(r) << ")";
  return out.str();
}

// Words given on the command line: digits, or comma-separated symbols.
Word parse_word_arg(const std::string& text, std::optional<int> k, bool free_text = false) {
  if (text.empty()) throw UsageError("empty word");
  if (free_text) return Word::from_text(text, k.value_or(1));
  int inferred = 1;
  if (text.find(',') != std::string::npos) {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 4)
        throw UsageError("malformed word: " + text);
      inferred = std::max(inferred, std::stoi(item) + 1);
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw UsageError("malformed word: " + text + " (use --text for letters)");
      inferred = std::max(inferred, c - '0' + 1);
    }
  }
  const int alphabet = k.value_or(inferred);
  try {
    return Word::parse(text, alphabet);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed word: ") + e.what());
  }
}

SearchProblem make_problem(Family family, int k, int param, GapConvention convention) {
  SearchProblem p = SearchProblem::from_family(family, k, param, convention);
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

std::string describe(const Violation& v, const Word& w) {
  std::string s = to_string(v.kind) + " x=" + w.factor(v.x_span.start, v.x_span.length()).str() +
                  span_str(v.x_span);
  if (v.z_span) {
    s += " z=" + w.factor(v.z_span->start, v.z_span->length()).str() + span_str(*v.z_span);
  }
  s += " repetition=" + v.repetition.str();
  return s;
}

std::string violation_line(const std::optional<Violation>& v, const Word& w,
                           const std::string& none_message) {
  return v ? describe(*v, w) : none_message;
}

std::string run_mode(const SearchArgs& a) { return a.frontier ? "frontier" : "exhaustive"; }

}  // namespace

RunReport cmd_analyze(const AnalyzeArgs& args) {
  const Word w = parse_word_arg(args.word, args.k, args.text);
  RunReport r;
  r.command = "analyze " + w.str();
  r.parameters = {{"k", std::to_string(w.alphabet_size())}};
  if (args.t) r.parameters.emplace_back("t", std::to_string(*args.t));
  if (args.n) r.parameters.emplace_back("n", std::to_string(*args.n));
  if (args.t) r.parameters.emplace_back("convention", to_string(args.convention));
  if (args.t && *args.t < 0) throw UsageError("t must be nonnegative");
  if (args.n && *args.n < 1) throw UsageError("n must be positive");

  const BorderTable borders = border_array(w);
  std::vector<int> all_borders;
  for (int b = borders.longest_border.back(); b > 0; b = borders.longest_border[b - 1])
    all_borders.push_back(b);
  std::string border_list;
  for (int b : all_borders) border_list += (border_list.empty() ? "" : " ") + std::to_string(b);
  std::string table;
  for (int b : borders.longest_border) table += (table.empty() ? "" : " ") + std::to_string(b);

  r.outcome = {{"word", w.str()},
               {"length", std::to_string(w.size())},
               {"period", std::to_string(period(w))},
               {"borders", border_list.empty() ? "none" : border_list},
               {"border array", table},
               {"primitive", yes_no(is_primitive(w))},
               {"unbordered", yes_no(is_unbordered(w))}};
  if (args.n) {
    const std::string n = std::to_string(*args.n);
    r.outcome.emplace_back("disjoint",
                           violation_line(find_disjoint_pair(w, *args.n), w,
                                          "no disjoint length-" + n + " pair"));
  }
  if (args.t) {
    const int t = *args.t;
    const std::string ts = std::to_string(t);
    const bool all = !args.split && !args.reversed;
    if (all)
      r.outcome.emplace_back("overlap", violation_line(find_t_overlap_factor(w, t), w,
                                                       "no " + ts + "-overlap"));
    if (all || args.split)
      r.outcome.emplace_back("split", violation_line(find_split_t_overlap(w, t, args.convention), w,
                                                     "no split " + ts + "-overlap"));
    if (all || args.reversed)
      r.outcome.emplace_back("reversed",
                             violation_line(find_reversed_split_t_overlap(w, t, args.convention), w,
                                            "no reversed split " + ts + "-overlap"));
  }
  r.status = "ok";
  r.exit_code = exit_code::kOk;
  return r;
}

RunReport cmd_search(const SearchArgs& args) {
  const SearchProblem problem = make_problem(args.family, args.k, args.param, args.convention);
  if (args.threads < 1) throw UsageError("threads must be at least 1");
  if (args.split_depth < 0) throw UsageError("split depth must be nonnegative");

  Budget budget;
  budget.max_nodes = args.budget;
  if (args.time_limit_ms) budget.wall_clock = std::chrono::milliseconds(*args.time_limit_ms);

  RunReport r;
  r.command = "search " + to_string(args.family) + " --k " + std::to_string(args.k) + " --" +
              param_name(args.family) + " " + std::to_string(args.param);
  r.parameters = {{"family", to_string(args.family)},
                  {"k", std::to_string(args.k)},
                  {param_name(args.family), std::to_string(args.param)}};
  if (args.family != Family::C) {
    r.parameters.emplace_back("convention", to_string(args.convention));
    r.command += " --convention " + to_string(args.convention);
  }
  r.parameters.emplace_back("mode", run_mode(args));
  r.parameters.emplace_back("budget", budget.describe());
  if (args.budget) r.command += " --budget " + std::to_string(*args.budget);
  if (args.time_limit_ms) r.command += " --time-limit " + std::to_string(*args.time_limit_ms);

  SearchOutcome outcome;
  if (args.frontier) {
    if (!args.budget && !args.time_limit_ms) throw UsageError("--frontier needs --budget or --time-limit");
    r.command += " --frontier --pass-nodes " + std::to_string(args.pass_nodes) + " --seed " +
                 std::to_string(args.seed);
    r.parameters.emplace_back("pass nodes", std::to_string(args.pass_nodes));
    r.parameters.emplace_back("seed", std::to_string(args.seed));
    try {
      outcome = frontier_lower_bound(problem, budget, std::nullopt,
                                     FrontierOptions{args.seed, args.pass_nodes});
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    SearchOptions options;
    options.threads = args.threads;
    options.split_depth = args.split_depth;
    options.collect_all_witnesses = args.all_witnesses;
    if (args.checkpoint) {
      options.split_depth = 0;
      options.checkpointable = true;
      if (std::filesystem::exists(*args.checkpoint)) {
        std::ifstream in(*args.checkpoint);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
          options.resume = Checkpoint::parse(buf.str());
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("bad checkpoint: ") + e.what());
        }
        r.parameters.emplace_back("resumed from", *args.checkpoint);
      }
      r.command += " --checkpoint " + *args.checkpoint;
    }
    r.parameters.emplace_back("split depth", std::to_string(options.split_depth));
    r.command += " --split-depth " + std::to_string(options.split_depth);
    if (args.all_witnesses) r.command += " --all-witnesses";
    try {
      outcome = longest_avoiding(problem, budget, options);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (args.checkpoint && outcome.checkpoint) {
      std::ofstream out(*args.checkpoint);
      out << outcome.checkpoint->render();
      if (!out) throw std::runtime_error("cannot write checkpoint " + *args.checkpoint);
    }
  }

  r.outcome.emplace_back("value", std::to_string(outcome.max_length));
  for (const Word& w : outcome.witnesses) r.outcome.emplace_back("witness", w.str());
  r.outcome.emplace_back("a priori bound", std::to_string(a_priori_upper_bound(problem)));
  r.outcome.emplace_back("budget used", outcome.budget_used);
  r.status = to_string(outcome.status);
  r.nodes = outcome.nodes_explored;
  r.elapsed_ns = static_cast<std::uint64_t>(outcome.elapsed.count());
  r.exit_code = outcome.status == SearchStatus::Exact ? exit_code::kOk : exit_code::kLowerBound;
  return r;
}

RunReport cmd_bounds(const BoundsArgs& args) {
  if (args.k < 1) throw UsageError("k must be positive");
  if (args.family == Family::C && args.param < 1) throw UsageError("n must be positive");
  if (args.family != Family::C && args.param < 0) throw UsageError("t must be nonnegative");
  const std::string p = param_name(args.family);
  RunReport r;
  r.command = "bounds --family " + to_string(args.family) + " --k " + std::to_string(args.k) +
              " --" + p + " " + std::to_string(args.param);
  r.parameters = {{"family", to_string(args.family)},
                  {"k", std::to_string(args.k)},
                  {p, std::to_string(args.param)}};
  BoundReport b;
  try {
    b = args.family == Family::C ? c_bounds(args.k, args.param)
                                 : s_upper_bounds(args.k, args.param, std::nullopt, args.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const BoundEntry& e : b.entries) {
    r.outcome.emplace_back(e.name, render_rational(e.value) + " (" +
                                       (e.relation == BoundRelation::Exact ? "exact" : "upper") +
                                       "; " + e.formula + ")");
  }
  if (args.family == Family::C) {
    if (b.lemma_per_word_caps.empty()) {
      r.outcome.emplace_back("note", "period census skipped: k^n too large to enumerate");
    } else {
      for (const auto& [per, count] : b.lemma_per_word_caps)
        r.outcome.emplace_back("words with period " + std::to_string(per), count.str());
    }
  }
  r.outcome.emplace_back("best", b.best().str() + (b.exact() ? " (exact)" : " (upper)"));
  r.status = "ok";
  return r;
}

RunReport cmd_construct(const ConstructArgs& args) {
  RunReport r;
  r.command = "construct " + args.what;
  auto need_k = [&](int min_k) {
    if (!args.k) throw UsageError("--k is required for " + args.what);
    if (*args.k < min_k) throw UsageError("k must be at least " + std::to_string(min_k));
    r.command += " --k " + std::to_string(*args.k);
    r.parameters.emplace_back("k", std::to_string(*args.k));
    return *args.k;
  };
  bool ok = true;
  auto check = [&](const std::string& name, bool passed) {
    ok = ok && passed;
    r.outcome.emplace_back(name, pass_fail(passed));
  };

  try {
    if (args.what == "c2" || args.what == "c3") {
      const int n = args.what == "c2" ? 2 : 3;
      const int k = need_k(n == 2 ? 1 : 2);
      const Word w = n == 2 ? construct_C2_lower(k) : construct_C3_lower(k);
      const BigInt target = theorem_sum_bound(k, n);
      r.outcome.emplace_back("word", w.str());
      r.outcome.emplace_back("length", std::to_string(w.size()));
      r.outcome.emplace_back("sum bound", target.str());
      check("length equals sum bound", BigInt(w.size()) == target);
      check("no disjoint length-" + std::to_string(n) + " pair", !find_disjoint_pair(w, n));
    } else if (args.what == "debruijn") {
      const int k = need_k(1);
      const int n = args.n.value_or(3);
      if (n < 1) throw UsageError("n must be positive");
      if (power(k, n) > 100000) throw UsageError("k^n above 100000");
      r.command += " --n " + std::to_string(n);
      r.parameters.emplace_back("n", std::to_string(n));
      const bool special = n == 3 && k >= 2;
      const Word w = special ? debruijn_order3_special(k) : debruijn_order_n(k, n);
      r.outcome.emplace_back("word", w.str());
      r.outcome.emplace_back("length", std::to_string(w.size()));
      r.outcome.emplace_back("rule", special ? "successor rule" : "prefer smallest");
      check("window census", is_linear_debruijn(w, n));
      if (special) {
        const auto cycle_len = static_cast<std::size_t>(k) * k * k;
        check("cyclic window census", is_cyclic_debruijn(w.factor(0, cycle_len), 3));
        check("abab or baba for every pair", covers_all_alternating_pairs(w));
      }
    } else if (args.what == "witness") {
      if (!args.x) throw UsageError("--x is required for witness");
      const Word x = parse_word_arg(*args.x, args.k);
      r.command += " --x " + x.str();
      r.parameters.emplace_back("x", x.str());
      const Word w = occurrence_witness(x);
      const int cap = max_nondisjoint_cap(x);
      const auto occ = occurrences(w, x);
      bool disjoint = false;
      for (std::size_t a = 0; a < occ.size(); ++a) {
        for (std::size_t b = a + 1; b < occ.size(); ++b) disjoint |= occ[a] + x.size() <= occ[b];
      }
      r.outcome.emplace_back("word", w.str());
      r.outcome.emplace_back("length", std::to_string(w.size()));
      r.outcome.emplace_back("cap", std::to_string(cap));
      r.outcome.emplace_back("occurrences", std::to_string(occ.size()));
      check("occurrences equal cap", static_cast<int>(occ.size()) == cap);
      check("no disjoint occurrences", !disjoint);
    } else {
      throw UsageError("unknown construction: " + args.what + " (c2, c3, debruijn, witness)");
    }
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    r.outcome.emplace_back("error", e.what());
    ok = false;
  }
  r.status = ok ? "valid" : "validation failed";
  r.exit_code = ok ? exit_code::kOk : exit_code::kValidation;
  return r;
}

std::string ReferenceCell::label() const {
  return to_string(family) + "(" + std::to_string(k) + "," + std::to_string(param) + ")";
}

std::vector<ReferenceCell> parse_reference_data(std::string_view text) {
  std::vector<ReferenceCell> cells;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string family, relation, witness, lex;
    ReferenceCell c;
    if (!(fields >> family >> c.k >> c.param >> relation >> c.value >> witness >> lex))
      throw std::invalid_argument("reference data line " + std::to_string(line_no) + " malformed");
    c.family = parse_family(family);
    if (relation != "=" && relation != ">=")
      throw std::invalid_argument("reference data line " + std::to_string(line_no) + ": bad relation");
    c.exact = relation == "=";
    if (witness != "-") c.witness = witness;
    c.lex_least = lex == "yes";
    cells.push_back(c);
  }
  return cells;
}

const std::vector<ReferenceCell>& reference_cells() {
  static const std::vector<ReferenceCell> cells = parse_reference_data(kReferenceData);
  return cells;
}

namespace {

// Exact cells an exhaustive search cannot settle at desk scale.
bool out_of_exhaustive_reach(const ReferenceCell& c) {
  return !c.exact || (c.family == Family::C && c.k == 2 && c.param >= 6);
}

std::string expected_str(const ReferenceCell& c) {
  return (c.exact ? "=" : ">=") + std::to_string(c.value);
}

}  // namespace

RunReport cmd_table(const TableArgs& args) {
  if (args.table < 1 || args.table > 3) throw UsageError("table must be 1, 2 or 3");
  const Family family = args.table == 1 ? Family::C : args.table == 2 ? Family::S : Family::R;
  RunReport r;
  r.command = "table " + std::to_string(args.table) + " --exact-budget " +
              std::to_string(args.exact_budget);
  if (args.budget_per_cell) r.command += " --budget-per-cell " + std::to_string(*args.budget_per_cell);
  r.parameters = {{"family", to_string(family)},
                  {"exact budget", std::to_string(args.exact_budget)},
                  {"budget per cell",
                   args.budget_per_cell ? std::to_string(*args.budget_per_cell) : "none"}};

  int matched = 0, mismatched = 0, skipped = 0, lower = 0;
  std::uint64_t nodes = 0;
  std::uint64_t elapsed = 0;
  for (const ReferenceCell& cell : reference_cells()) {
    if (cell.family != family) continue;
    const SearchProblem problem = SearchProblem::from_family(family, cell.k, cell.param);
    std::string row = "expected " + expected_str(cell);
    bool good = true;

    if (cell.witness) {
      bool valid = false;
      try {
        const Word w = Word::parse(*cell.witness, cell.k);
        valid = static_cast<int>(w.size()) == cell.value && verify_witness(problem, w);
      } catch (const std::invalid_argument&) {
        valid = false;
      }
      row += valid ? ", reference witness valid" : ", reference witness INVALID";
      good = good && valid;
    }

    std::optional<SearchOutcome> outcome;
    if (!out_of_exhaustive_reach(cell)) {
      outcome = longest_avoiding(problem, Budget::nodes(args.exact_budget));
    } else if (args.budget_per_cell) {
      outcome = frontier_lower_bound(problem, Budget::nodes(*args.budget_per_cell));
    }

    if (!outcome) {
      row += ", Skipped";
      if (good) {
        ++skipped;
      } else {
        row += ", MISMATCH";
        ++mismatched;
      }
      r.outcome.emplace_back(cell.label(), row);
      continue;
    }
    {
      nodes += outcome->nodes_explored;
      elapsed += static_cast<std::uint64_t>(outcome->elapsed.count());
      const int got = outcome->max_length;
      row += ", computed " + std::to_string(got) + " " + to_string(outcome->status);
      if (outcome->status == SearchStatus::Exact) {
        const bool value_ok = cell.exact ? got == cell.value : got >= cell.value;
        good = good && value_ok;
        if (cell.witness && !outcome->witnesses.empty()) {
          const bool same = outcome->witnesses.front().str() == *cell.witness;
          if (cell.lex_least) {
            row += same ? ", lex-least witness matches" : ", lex-least witness DIFFERS";
            good = good && same;
          } else {
            row += same ? ", witness equals reference" : ", witness differs from reference";
          }
        }
      } else {
        ++lower;
        // A lower bound may never exceed an exact value.
        if (cell.exact && got > cell.value) good = false;
        if (!outcome->witnesses.empty() && !verify_witness(problem, outcome->witnesses.front()))
          good = false;
      }
    }
    row += good ? ", match" : ", MISMATCH";
    if (good) ++matched;
    else ++mismatched;
    r.outcome.emplace_back(cell.label(), row);
  }
  r.outcome.emplace_back("cells", std::to_string(matched + mismatched + skipped));
  r.outcome.emplace_back("consistent", std::to_string(matched));
  r.outcome.emplace_back("mismatched", std::to_string(mismatched));
  r.outcome.emplace_back("lower bound only", std::to_string(lower));
  r.outcome.emplace_back("skipped", std::to_string(skipped));
  r.nodes = nodes;
  r.elapsed_ns = elapsed;
  r.status = mismatched == 0 ? "match" : "mismatch";
  r.exit_code = mismatched == 0 ? exit_code::kOk : exit_code::kTableMismatch;
  return r;
}

RunReport cmd_verify(const VerifyArgs& args) {
  const SearchProblem problem = make_problem(args.family, args.k, args.param, args.convention);
  const Word w = parse_word_arg(args.word, args.k);
  RunReport r;
  const std::string p = param_name(args.family);
  r.command = "verify " + to_string(args.family) + " --k " + std::to_string(args.k) + " --" + p +
              " " + std::to_string(args.param) + " " + w.str();
  r.parameters = {{"family", to_string(args.family)},
                  {"k", std::to_string(args.k)},
                  {p, std::to_string(args.param)}};
  if (args.family != Family::C) r.parameters.emplace_back("convention", to_string(args.convention));
  r.outcome = {{"word", w.str()}, {"length", std::to_string(w.size())}};
  std::optional<Violation> v;
  switch (problem.kind) {
    case ProblemKind::DisjointFactors: v = find_disjoint_pair(w, args.param); break;
    case ProblemKind::SplitOverlap: v = find_split_t_overlap(w, args.param, args.convention); break;
    case ProblemKind::ReversedSplitOverlap:
      v = find_reversed_split_t_overlap(w, args.param, args.convention);
      break;
  }
  r.outcome.emplace_back("violation", v ? describe(*v, w) : "none");
  r.status = v ? "invalid" : "valid";
  r.exit_code = v ? exit_code::kValidation : exit_code::kOk;
  return r;
}

RunReport cmd_calibrate() {
  struct Target {
    Family family;
    int t;
    int value;
  };
  const Target targets[] = {{Family::S, 1, 4}, {Family::S, 2, 12}, {Family::R, 1, 4}, {Family::R, 2, 15}};
  const GapConvention conventions[] = {GapConvention::EmptyPieces, GapConvention::EmptyGap,
                                       GapConvention::NonemptyGap};
  RunReport r;
  r.command = "calibrate";
  r.parameters = {{"k", "2"}, {"budget", "50000000 nodes"}};
  std::optional<GapConvention> adopted;
  std::uint64_t nodes = 0;
  for (GapConvention conv : conventions) {
    bool all = true;
    for (const Target& target : targets) {
      const auto problem = SearchProblem::from_family(target.family, 2, target.t, conv);
      const auto outcome = longest_avoiding(problem, Budget::nodes(50'000'000));
      nodes += outcome.nodes_explored;
      const bool match = outcome.status == SearchStatus::Exact && outcome.max_length == target.value;
      all = all && match;
      std::string row = std::to_string(outcome.max_length) + " " + to_string(outcome.status) +
                        ", reference " + std::to_string(target.value) +
                        (match ? ", match" : ", differs");
      if (!outcome.witnesses.empty()) row += ", witness " + outcome.witnesses.front().str();
      r.outcome.emplace_back(problem.label() + " " + to_string(conv), row);
    }
    r.outcome.emplace_back(to_string(conv), all ? "reproduces all four" : "does not reproduce all four");
    if (all && !adopted) adopted = conv;
  }
  r.outcome.emplace_back("adopted", adopted ? to_string(*adopted) : "none");
  r.nodes = nodes;
  const bool ok = adopted == GapConvention::EmptyPieces;
  r.status = ok ? "calibrated" : "calibration failed";
  r.exit_code = ok ? exit_code::kOk : exit_code::kTableMismatch;
  return r;
}

}  // namespace splitov::cli
