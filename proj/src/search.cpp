#include "splitov/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace splitov {

namespace {

using Clock = std::chrono::steady_clock;

struct TaskResult {
  int best_len = -1;
  std::vector<Word> witnesses;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  bool timed_out = false;
  std::optional<Word> resume;
};

struct DfsConfig {
  std::optional<std::uint64_t> max_nodes;
  std::optional<Clock::time_point> deadline;
  bool collect_all = false;
  std::int64_t upper = 0;
  std::int64_t target = 0;  // only words at least this long are of interest
  std::mt19937_64* shuffle = nullptr;  // random letter order when set
};

struct Frame {
  std::size_t next = 0;
  std::size_t count = 0;
};

// Depth-first search below the current word of `state`. Nodes visited here are
// the proper extensions of the root; the root itself is recorded but not
// counted. When `resume_at` is given the search continues from that
// not-yet-visited node instead of starting at the root.
TaskResult run_dfs(SearchState& state, const DfsConfig& cfg, TaskResult result,
                   const std::optional<Word>& resume_at = std::nullopt) {
  const std::size_t root = state.size();
  const int k = state.problem().k;
  std::vector<Frame> frames;
  std::vector<std::vector<Symbol>> orders;
  bool stopped = false;
  bool proved = false;

  auto record = [&] {
    const int len = static_cast<int>(state.size());
    if (len > result.best_len) {
      result.best_len = len;
      result.witnesses.assign(1, state.word());
    } else if (cfg.collect_all && len == result.best_len) {
      result.witnesses.push_back(state.word());
    }
  };
  auto order_for = [&](std::size_t depth) -> std::vector<Symbol>& {
    if (orders.size() <= depth) orders.resize(depth + 1);
    auto& order = orders[depth];
    const int limit = std::min(k - 1, state.max_symbol() + 1);
    order.resize(static_cast<std::size_t>(limit) + 1);
    std::iota(order.begin(), order.end(), Symbol{0});
    if (cfg.shuffle) std::shuffle(order.begin(), order.end(), *cfg.shuffle);
    return order;
  };
  auto open_children = [&] {
    const auto len = static_cast<std::int64_t>(state.size());
    if (len >= cfg.upper) return;
    const std::int64_t floor =
        std::max<std::int64_t>(cfg.target, cfg.collect_all ? result.best_len : result.best_len + 1);
    if (state.completion_bound() < floor) return;
    frames.push_back({0, order_for(state.size() - root).size()});
  };
  auto budget_exceeded = [&] {
    if (cfg.max_nodes && result.nodes >= *cfg.max_nodes) return true;
    if (cfg.deadline && (result.nodes & 1023) == 0 && Clock::now() >= *cfg.deadline) {
      result.timed_out = true;
      return true;
    }
    return false;
  };
  auto reached_upper = [&] { return !cfg.collect_all && result.best_len >= cfg.upper; };

  if (resume_at) {
    for (std::size_t i = root; i < resume_at->size(); ++i) {
      const std::size_t depth = i - root;
      auto& order = order_for(depth);
      auto pos = std::find(order.begin(), order.end(), (*resume_at)[i]);
      if (cfg.shuffle || pos == order.end() || !state.push(*pos))
        throw std::invalid_argument("checkpoint prefix is not a canonical avoiding word");
      frames.push_back({static_cast<std::size_t>(pos - order.begin()) + 1, order.size()});
    }
    if (budget_exceeded()) {
      result.resume = state.word();
      return result;
    }
    ++result.nodes;
    record();
    if (reached_upper()) proved = true;
    else open_children();
  } else {
    record();
    if (reached_upper()) proved = true;
    else open_children();
  }

  while (!frames.empty() && !proved) {
    const std::size_t depth = root + frames.size() - 1;
    if (state.size() > depth) state.pop();
    Frame& frame = frames.back();
    if (frame.next == frame.count) {
      frames.pop_back();
      continue;
    }
    const Symbol letter = orders[depth - root][frame.next++];
    if (!state.push(letter)) continue;
    if (budget_exceeded()) {
      result.resume = state.word();
      stopped = true;
      break;
    }
    ++result.nodes;
    record();
    if (reached_upper()) {
      proved = true;
      break;
    }
    open_children();
  }
  result.exhausted = !stopped;
  return result;
}

// For DisjointFactors the completion bound is sharp enough that searching
// first for words reaching the a priori bound (and then one less, ...) prunes
// far harder than plain branch and bound. A pass that finds a word of length
// >= target is final: earlier passes showed nothing longer exists.
TaskResult run_descending(const SearchProblem& problem, const Word& root, DfsConfig cfg,
                          int descending_steps) {
  TaskResult total;
  for (int step = 0; step <= descending_steps; ++step) {
    const bool last = step == descending_steps || cfg.upper - step <= 0;
    cfg.target = last ? 0 : cfg.upper - step;
    DfsConfig pass = cfg;
    if (cfg.max_nodes) pass.max_nodes = *cfg.max_nodes - std::min(*cfg.max_nodes, total.nodes);
    SearchState state(problem);
    for (Symbol s : root.symbols()) state.push(s);
    TaskResult r = run_dfs(state, pass, TaskResult{});
    r.nodes += total.nodes;
    const bool found = r.best_len >= cfg.target && cfg.target > 0;
    if (last || found || !r.exhausted) return r;
    total.nodes = r.nodes;
  }
  return total;
}

struct TopPhase {
  TaskResult result;
  std::vector<Word> roots;
};

// Visits every canonical avoiding word of length 1..depth; words of length
// `depth` become subtree roots.
void enumerate_top(SearchState& state, int depth, TopPhase& top) {
  const int k = state.problem().k;
  const int limit = std::min(k - 1, state.max_symbol() + 1);
  for (int a = 0; a <= limit; ++a) {
    if (!state.push(static_cast<Symbol>(a))) continue;
    ++top.result.nodes;
    if (static_cast<int>(state.size()) == depth) {
      top.roots.push_back(state.word());
    } else {
      const int len = static_cast<int>(state.size());
      if (len > top.result.best_len) {
        top.result.best_len = len;
        top.result.witnesses.assign(1, state.word());
      }
      enumerate_top(state, depth, top);
    }
    state.pop();
  }
}

}  // namespace

SearchProblem SearchProblem::disjoint_factors(int k, int n) {
  return SearchProblem{ProblemKind::DisjointFactors, k, n, GapConvention::EmptyPieces};
}

SearchProblem SearchProblem::split_overlap(int k, int t, GapConvention convention) {
  return SearchProblem{ProblemKind::SplitOverlap, k, t, convention};
}

SearchProblem SearchProblem::reversed_split_overlap(int k, int t, GapConvention convention) {
  return SearchProblem{ProblemKind::ReversedSplitOverlap, k, t, convention};
}

SearchProblem SearchProblem::from_family(Family family, int k, int param, GapConvention convention) {
  switch (family) {
    case Family::C: return disjoint_factors(k, param);
    case Family::S: return split_overlap(k, param, convention);
    case Family::R: return reversed_split_overlap(k, param, convention);
  }
  throw std::invalid_argument("unknown family");
}

void SearchProblem::validate() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (kind == ProblemKind::DisjointFactors && param < 1)
    throw std::invalid_argument("n must be at least 1");
  if (kind != ProblemKind::DisjointFactors && param < 0)
    throw std::invalid_argument("t must be nonnegative");
}

Family SearchProblem::family() const {
  switch (kind) {
    case ProblemKind::DisjointFactors: return Family::C;
    case ProblemKind::SplitOverlap: return Family::S;
    case ProblemKind::ReversedSplitOverlap: return Family::R;
  }
  return Family::C;
}

std::string SearchProblem::label() const {
  return to_string(family()) + "(" + std::to_string(k) + "," + std::to_string(param) + ")";
}

std::string to_string(SearchStatus status) {
  return status == SearchStatus::Exact ? "Exact" : "LowerBound";
}

std::string Budget::describe() const {
  std::string out = max_nodes ? "nodes<=" + std::to_string(*max_nodes) : "nodes unlimited";
  if (wall_clock) out += ", wall-clock<=" + std::to_string(wall_clock->count()) + "ms";
  return out;
}

std::string Checkpoint::render() const {
  std::ostringstream out;
  out << "splitov-checkpoint 1\n"
      << "family " << to_string(problem.family()) << '\n'
      << "k " << problem.k << '\n'
      << "param " << problem.param << '\n'
      << "convention " << to_string(problem.convention) << '\n'
      << "state " << (finished ? "finished" : "running") << '\n'
      << "prefix " << (prefix.empty() ? "-" : prefix.str()) << '\n'
      << "nodes " << nodes_explored << '\n'
      << "best " << (best ? (best->empty() ? "-" : best->str()) : "none") << '\n';
  return out.str();
}

Checkpoint Checkpoint::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto field = [&](const std::string& key) {
    if (!std::getline(in, line)) throw std::invalid_argument("checkpoint truncated before " + key);
    if (line.rfind(key + " ", 0) != 0) throw std::invalid_argument("checkpoint expected '" + key + "'");
    return line.substr(key.size() + 1);
  };
  auto number = [](const std::string& s) {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
  };
  if (!std::getline(in, line) || line != "splitov-checkpoint 1")
    throw std::invalid_argument("not a checkpoint file");
  Checkpoint cp;
  const Family family = parse_family(field("family"));
  const int k = static_cast<int>(number(field("k")));
  const int param = static_cast<int>(number(field("param")));
  const GapConvention convention = parse_gap_convention(field("convention"));
  cp.problem = SearchProblem::from_family(family, k, param, convention);
  cp.problem.validate();
  const std::string state = field("state");
  if (state != "running" && state != "finished") throw std::invalid_argument("bad checkpoint state");
  cp.finished = state == "finished";
  auto word_field = [&](const std::string& s) { return s == "-" ? Word(k) : Word::parse(s, k); };
  cp.prefix = word_field(field("prefix"));
  const std::string nodes = field("nodes");
  std::size_t used = 0;
  cp.nodes_explored = std::stoull(nodes, &used);
  if (used != nodes.size()) throw std::invalid_argument("bad node count");
  const std::string best = field("best");
  if (best != "none") cp.best = word_field(best);
  if (std::getline(in, line)) throw std::invalid_argument("trailing data in checkpoint");
  return cp;
}

bool verify_witness(const SearchProblem& problem, const Word& w) {
  problem.validate();
  for (Symbol s : w.symbols()) {
    if (s >= problem.k) return false;
  }
  switch (problem.kind) {
    case ProblemKind::DisjointFactors: return !find_disjoint_pair(w, problem.param);
    case ProblemKind::SplitOverlap:
      return !find_split_t_overlap(w, problem.param, problem.convention);
    case ProblemKind::ReversedSplitOverlap:
      return !find_reversed_split_t_overlap(w, problem.param, problem.convention);
  }
  return false;
}

SearchOutcome longest_avoiding(const SearchProblem& problem, const Budget& budget,
                               const SearchOptions& options) {
  problem.validate();
  if (options.split_depth < 0) throw std::invalid_argument("split depth must be nonnegative");
  if (options.threads < 1) throw std::invalid_argument("threads must be at least 1");
  if (options.resume && options.split_depth != 0)
    throw std::invalid_argument("checkpoints require an unsplit search");
  if (options.resume && !(options.resume->problem == problem))
    throw std::invalid_argument("checkpoint is for a different problem");

  const auto started = Clock::now();
  DfsConfig cfg;
  cfg.max_nodes = budget.max_nodes;
  if (budget.wall_clock) cfg.deadline = started + *budget.wall_clock;
  cfg.collect_all = options.collect_all_witnesses;
  cfg.upper = a_priori_upper_bound(problem);

  // Checkpoints record a plain lexicographic pass, so resumable runs skip the
  // descending passes.
  const bool descending = problem.kind == ProblemKind::DisjointFactors && !cfg.collect_all &&
                          options.descending_steps > 0 && !options.resume && !options.checkpointable;

  SearchOutcome outcome;
  outcome.budget_used = budget.describe();
  bool exact = false;
  bool timed_out = false;

  if (options.split_depth == 0) {
    SearchState state(problem);
    TaskResult seed;
    std::optional<Word> resume_at;
    if (options.resume) {
      const Checkpoint& cp = *options.resume;
      seed.nodes = cp.nodes_explored;
      if (cp.best) {
        seed.best_len = static_cast<int>(cp.best->size());
        seed.witnesses.push_back(*cp.best);
      }
      if (!cp.finished) resume_at = cp.prefix;
    }
    TaskResult result;
    if (options.resume && options.resume->finished) {
      result = seed;
      result.exhausted = true;
    } else if (resume_at) {
      result = run_dfs(state, cfg, seed, resume_at);
    } else if (descending) {
      result = run_descending(problem, Word(problem.k), cfg, options.descending_steps);
    } else {
      result = run_dfs(state, cfg, seed);
    }
    exact = result.exhausted;
    timed_out = result.timed_out;
    outcome.max_length = std::max(result.best_len, 0);
    outcome.witnesses = std::move(result.witnesses);
    outcome.nodes_explored = result.nodes;
    if (!descending) {
    Checkpoint cp;
    cp.problem = problem;
    cp.finished = result.exhausted;
    cp.prefix = result.resume.value_or(Word(problem.k));
    cp.nodes_explored = result.nodes;
    if (!outcome.witnesses.empty()) cp.best = outcome.witnesses.front();
    outcome.checkpoint = std::move(cp);
    }
  } else {
    TopPhase top;
    top.result.best_len = 0;
    top.result.witnesses.assign(1, Word(problem.k));
    {
      SearchState state(problem);
      enumerate_top(state, options.split_depth, top);
    }
    std::vector<TaskResult> results(top.roots.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < top.roots.size(); i = next++) {
        if (descending) {
          results[i] = run_descending(problem, top.roots[i], cfg, options.descending_steps);
        } else {
          SearchState state(problem);
          for (Symbol s : top.roots[i].symbols()) state.push(s);
          results[i] = run_dfs(state, cfg, TaskResult{});
        }
      }
    };
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(options.threads),
                                               std::max<std::size_t>(top.roots.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // Merge by length, then lexicographic order; tasks are already in
    // lexicographic order of their roots.
    TaskResult merged = std::move(top.result);
    exact = true;
    for (auto& r : results) {
      merged.nodes += r.nodes;
      exact = exact && r.exhausted;
      timed_out = timed_out || r.timed_out;
      if (r.best_len > merged.best_len) {
        merged.best_len = r.best_len;
        merged.witnesses = std::move(r.witnesses);
      } else if (r.best_len == merged.best_len && cfg.collect_all) {
        merged.witnesses.insert(merged.witnesses.end(), r.witnesses.begin(), r.witnesses.end());
      }
    }
    outcome.max_length = merged.best_len;
    outcome.witnesses = std::move(merged.witnesses);
    outcome.nodes_explored = merged.nodes;
    outcome.budget_used += ", split depth " + std::to_string(options.split_depth) + " into " +
                           std::to_string(top.roots.size()) + " subtrees";
  }
  if (!cfg.collect_all && outcome.witnesses.size() > 1) outcome.witnesses.resize(1);
  outcome.status = exact && !timed_out ? SearchStatus::Exact : SearchStatus::LowerBound;
  outcome.elapsed = Clock::now() - started;
  return outcome;
}

SearchOutcome least_word_of_length(const SearchProblem& problem, int length, const Budget& budget) {
  problem.validate();
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  const auto started = Clock::now();
  DfsConfig cfg;
  cfg.max_nodes = budget.max_nodes;
  if (budget.wall_clock) cfg.deadline = started + *budget.wall_clock;
  cfg.upper = length;
  cfg.target = length;
  SearchState state(problem);
  const TaskResult r = run_dfs(state, cfg, TaskResult{});

  SearchOutcome outcome;
  outcome.budget_used = budget.describe();
  if (r.best_len == length) {
    outcome.max_length = length;
    outcome.witnesses = r.witnesses;
  }
  const bool settled = r.best_len == length || (r.exhausted && !r.timed_out);
  outcome.status = settled ? SearchStatus::Exact : SearchStatus::LowerBound;
  outcome.nodes_explored = r.nodes;
  outcome.elapsed = Clock::now() - started;
  return outcome;
}

SearchOutcome frontier_lower_bound(const SearchProblem& problem, const Budget& budget,
                                   const std::optional<Word>& seed, const FrontierOptions& options) {
  problem.validate();
  if (!budget.max_nodes && !budget.wall_clock)
    throw std::invalid_argument("frontier search needs a finite budget");
  if (options.nodes_per_pass == 0) throw std::invalid_argument("nodes per pass must be positive");
  const auto started = Clock::now();
  SearchOutcome outcome;
  outcome.status = SearchStatus::LowerBound;
  outcome.budget_used = budget.describe();
  if (budget.max_nodes && *budget.max_nodes == 0) return outcome;

  DfsConfig cfg;
  cfg.upper = a_priori_upper_bound(problem);
  if (budget.wall_clock) cfg.deadline = started + *budget.wall_clock;

  TaskResult best;
  best.best_len = 0;
  best.witnesses.assign(1, Word(problem.k));
  std::uint64_t used = 0;
  for (std::uint64_t pass = 0;; ++pass) {
    std::uint64_t quota = options.nodes_per_pass;
    if (budget.max_nodes) quota = std::min(quota, *budget.max_nodes - used);
    if (quota == 0) break;
    cfg.max_nodes = quota;
    std::mt19937_64 rng(options.rng_seed * 0x9E3779B97F4A7C15ULL + pass);
    cfg.shuffle = pass == 0 ? nullptr : &rng;

    SearchState state(problem);
    if (seed) {
      for (Symbol s : seed->symbols()) {
        if (!state.push(s)) throw std::invalid_argument("seed word contains a violation");
      }
    }
    TaskResult start;
    start.best_len = best.best_len;  // only strictly longer words are of interest
    TaskResult r = run_dfs(state, cfg, start);
    used += r.nodes;
    if (r.best_len > best.best_len && !r.witnesses.empty()) {
      best.best_len = r.best_len;
      best.witnesses = std::move(r.witnesses);
    }
    if (r.exhausted && !r.timed_out && pass == 0 && !seed) {
      // The whole tree fits in one pass; nothing to gain from restarts.
      break;
    }
    if (r.timed_out || (cfg.deadline && Clock::now() >= *cfg.deadline)) break;
    if (budget.max_nodes && used >= *budget.max_nodes) break;
  }
  outcome.max_length = best.best_len;
  outcome.witnesses = std::move(best.witnesses);
  outcome.nodes_explored = used;
  outcome.elapsed = Clock::now() - started;
  return outcome;
}

}  // namespace splitov
