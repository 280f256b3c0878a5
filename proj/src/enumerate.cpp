// Depth-first search over generator sets S ⊇ {x_i^3}. Each non-cube cubic is
// placed either in P or in S. A branch dies when the quadrics through the
// points already in P vanish (they can only shrink further), and as soon as
// that space is one-dimensional the outcome is forced: a minimal system must
// have P equal to the zero set of the unique quadric.

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>

#include "togliatti/classify.hpp"
#include "togliatti/errors.hpp"

namespace togliatti {

namespace {

using Clock = std::chrono::steady_clock;

// Rank screening modulo a prime. The rank mod p never exceeds the rank over
// Q, so "no quadric mod p" proves "no quadric over Q"; every other decision
// is confirmed exactly.
constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

class ModEchelon {
 public:
  explicit ModEchelon(std::size_t cols = 0) : cols_(cols) {}

  std::size_t nullity() const { return cols_ - rows_.size(); }

  void add(std::vector<std::uint64_t> v) {
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      const std::uint64_t f = v[pivots_[t]];
      if (f == 0) continue;
      for (std::size_t j = pivots_[t]; j < cols_; ++j)
        v[j] = (v[j] + kPrime - mulmod(f, rows_[t][j])) % kPrime;
    }
    std::size_t c = 0;
    while (c < cols_ && v[c] == 0) ++c;
    if (c == cols_) return;
    const std::uint64_t inv = powmod(v[c], kPrime - 2);
    for (std::size_t j = c; j < cols_; ++j) v[j] = mulmod(v[j], inv);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, c);
    rows_.insert(rows_.begin() + pos, std::move(v));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

struct Node {
  std::size_t idx = 0;
  ModEchelon echelon;
  std::vector<std::uint32_t> in_p;
  std::vector<std::uint32_t> in_s;
};

class Searcher {
 public:
  Searcher(const SearchConfig& config, Clock::time_point deadline,
           std::atomic<bool>& stop)
      : n_(config.n), nv_(config.n + 1), prune_(config.quadric_pruning),
        check_cubes_(config.cubes_in_minimality),
        has_deadline_(config.budget_seconds > 0), deadline_(deadline), stop_(stop) {
    const int max_s = config.effective_max_s();
    max_extra_ = static_cast<std::size_t>(std::max(0, max_s - nv_));
    for (const auto& m : lattice_points_simplex(n_, 3))
      (m.is_pure_power() ? cubes_ : free_).push_back(m);
    const auto eval = quadric_evaluation_matrix(free_, nv_);
    qcols_ = eval.cols();
    for (std::size_t r = 0; r < eval.rows(); ++r) {
      std::vector<std::uint64_t> row(qcols_);
      for (std::size_t c = 0; c < qcols_; ++c)
        row[c] = eval(r, c).get_num().get_ui() % kPrime;  // entries are small, >= 0
      mod_rows_.push_back(std::move(row));
    }
  }

  Node root() const { return Node{0, ModEchelon(qcols_), {}, {}}; }

  /// Expands to `depth` decisions, handing unresolved nodes to `tasks`.
  void split(Node nd, std::size_t depth, std::vector<Node>& tasks) {
    split_depth_ = depth;
    tasks_ = &tasks;
    visit(std::move(nd));
    tasks_ = nullptr;
  }

  /// Runs the subtree below an already-visited node.
  bool run_task(Node nd) {
    branch(std::move(nd));
    return !aborted_;
  }

  bool run_from_root() {
    visit(root());
    return !aborted_;
  }

  std::vector<MonomialSystem>& found() { return found_; }
  SearchStats& stats() { return stats_; }

 private:
  void visit(Node nd) {
    if (aborted_) return;
    ++stats_.nodes;
    if (has_deadline_ && (stats_.nodes & 1023) == 0 && Clock::now() > deadline_)
      stop_ = true;
    if (stop_) {
      aborted_ = true;
      return;
    }

    const bool leaf = nd.idx == free_.size();
    if (prune_ || leaf) {
      const std::size_t modnull = nd.echelon.nullity();
      if (modnull == 0) {
        if (leaf) ++stats_.candidates;
        ++stats_.pruned_no_quadric;
        return;
      }
      if (modnull == 1 || leaf) {
        std::vector<ExponentVector> pts;
        for (auto i : nd.in_p) pts.push_back(free_[i]);
        auto quadrics = quadric_space(pts, nv_);
        if (quadrics.empty()) {
          if (leaf) ++stats_.candidates;
          ++stats_.pruned_no_quadric;
          return;
        }
        if (quadrics.size() == 1) {
          if (prune_) {
            close(nd, quadrics.front());
          } else {
            ++stats_.candidates;
            leaf_check(nd, quadrics.front());
          }
          return;
        }
        if (leaf) {
          ++stats_.candidates;
          ++stats_.pruned_not_minimal;
          return;
        }
      }
    }
    if (tasks_ && nd.idx == split_depth_) {
      tasks_->push_back(std::move(nd));
      return;
    }
    branch(std::move(nd));
  }

  void branch(Node nd) {
    const auto i = static_cast<std::uint32_t>(nd.idx);
    {
      Node in_p = nd;
      in_p.idx++;
      in_p.in_p.push_back(i);
      in_p.echelon.add(mod_rows_[i]);
      visit(std::move(in_p));
    }
    if (nd.in_s.size() < max_extra_) {
      nd.idx++;
      nd.in_s.push_back(i);
      visit(std::move(nd));
    } else {
      ++stats_.pruned_cardinality;
    }
  }

  // The quadric space of the placed points is span(q): the only possible
  // minimal completion puts exactly the zeros of q into P.
  void close(const Node& nd, const QuadricForm& q) {
    ++stats_.candidates;
    if (vanishes_on_cube(q)) return;
    for (auto i : nd.in_s)
      if (q.evaluate(free_[i]) == 0) {
        ++stats_.pruned_not_minimal;
        return;
      }
    std::vector<ExponentVector> gens = cubes_;
    for (std::size_t i = 0; i < free_.size(); ++i)
      if (q.evaluate(free_[i]) != 0) gens.push_back(free_[i]);
    if (gens.size() > cubes_.size() + max_extra_) {
      ++stats_.pruned_cardinality;
      return;
    }
    record(std::move(gens));
  }

  // Full assignment reached without pruning: minimal iff q misses all of S.
  void leaf_check(const Node& nd, const QuadricForm& q) {
    if (vanishes_on_cube(q)) return;
    for (auto i : nd.in_s)
      if (q.evaluate(free_[i]) == 0) {
        ++stats_.pruned_not_minimal;
        return;
      }
    std::vector<ExponentVector> gens = cubes_;
    for (auto i : nd.in_s) gens.push_back(free_[i]);
    record(std::move(gens));
  }

  // True (and counted) when cubes take part in minimality and q kills one.
  bool vanishes_on_cube(const QuadricForm& q) {
    if (!check_cubes_) return false;
    for (const auto& c : cubes_)
      if (q.evaluate(c) == 0) {
        ++stats_.pruned_not_minimal;
        return true;
      }
    return false;
  }

  void record(std::vector<ExponentVector> gens) {
    found_.push_back(
        canonical_form(MonomialSystem::from_generators(n_, 3, std::move(gens))));
  }

  int n_, nv_;
  bool prune_;
  bool check_cubes_;
  bool has_deadline_;
  Clock::time_point deadline_;
  std::atomic<bool>& stop_;
  std::size_t max_extra_ = 0;
  std::size_t qcols_ = 0;
  std::vector<ExponentVector> cubes_, free_;
  std::vector<std::vector<std::uint64_t>> mod_rows_;

  std::size_t split_depth_ = 0;
  std::vector<Node>* tasks_ = nullptr;
  bool aborted_ = false;
  std::vector<MonomialSystem> found_;
  SearchStats stats_;
};

void validate(const SearchConfig& config) {
  if (config.n < 2) throw InvalidArgument("enumeration needs n >= 2");
  if (config.n > 4) throw InvalidArgument("exhaustive enumeration supports n <= 4");
  if (config.budget_seconds < 0) throw InvalidArgument("budget must be >= 0");
  if (config.prefix_depth < 0) throw InvalidArgument("prefix depth must be >= 0");
}

Clock::time_point deadline_for(const SearchConfig& config, Clock::time_point start) {
  return start + std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(config.budget_seconds));
}

// Dedupe the recorded minimal systems, keep the smooth ones, and attach
// verdicts and partition matches.
void finalize(ClassificationResult& result, std::vector<MonomialSystem> found,
              const SearchConfig& config, int jobs, Clock::time_point deadline) {
  const bool has_deadline = config.budget_seconds > 0;
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.generators() < b.generators();
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  result.stats.minimal_orbits = found.size();

  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<std::optional<ClassEntry>> entries(found.size());
  std::vector<char> skipped(found.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (has_deadline && Clock::now() > deadline) {
      skipped[i] = 1;
      continue;
    }
    auto smooth = smoothness_check(found[i].apolar());
    if (!smooth.smooth) continue;
    ClassEntry e{found[i], std::nullopt, togliatti_verdict(found[i]), std::move(smooth)};
    try {
      PartitionSpec p = extract_partition(found[i]);
      if (canonical_form(family_system(p).sys) == found[i]) e.partition = p;
    } catch (const StructureFailure&) {
    } catch (const PreconditionError&) {
    }
    entries[i] = std::move(e);
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& e = entries[i];
    if (skipped[i]) {
      ++result.stats.unchecked;
      result.complete = false;
      continue;
    }
    if (!e) {
      ++result.stats.rejected_not_smooth;
      continue;
    }
    const bool minimal = config.cubes_in_minimality
                             ? e->verdict.minimality && e->verdict.minimality->minimal
                             : is_minimal_by_subsets(e->system);
    if (!e->verdict.togliatti || !minimal)
      throw InternalError("search emitted a system that fails the Togliatti checks: " +
                          serialize(e->system));
    result.classes.push_back(std::move(*e));
  }
}

}  // namespace

int SearchConfig::effective_max_s() const {
  return max_s ? *max_s : static_cast<int>(togliatti_cardinality_bound(n, 3));
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  candidates += o.candidates;
  pruned_no_quadric += o.pruned_no_quadric;
  pruned_cardinality += o.pruned_cardinality;
  pruned_not_minimal += o.pruned_not_minimal;
  minimal_orbits += o.minimal_orbits;
  rejected_not_smooth += o.rejected_not_smooth;
  unchecked += o.unchecked;
  return *this;
}

ClassificationResult enumerate_minimal_smooth_serial(const SearchConfig& config) {
  validate(config);
  const auto start = Clock::now();
  std::atomic<bool> stop{false};
  Searcher s(config, deadline_for(config, start), stop);

  ClassificationResult result;
  result.n = config.n;
  result.max_s = config.effective_max_s();
  result.tasks_total = 1;
  result.complete = s.run_from_root();
  result.tasks_done = result.complete ? 1 : 0;
  result.stats = s.stats();
  finalize(result, std::move(s.found()), config, 1, deadline_for(config, start));
  result.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

ClassificationResult enumerate_minimal_smooth(const SearchConfig& config) {
  validate(config);
  const auto start = Clock::now();
  const auto deadline = deadline_for(config, start);
  std::atomic<bool> stop{false};

  ClassificationResult result;
  result.n = config.n;
  result.max_s = config.effective_max_s();

  std::vector<Node> tasks;
  Searcher splitter(config, deadline, stop);
  splitter.split(splitter.root(), static_cast<std::size_t>(config.prefix_depth), tasks);
  result.stats = splitter.stats();
  std::vector<MonomialSystem> found = std::move(splitter.found());

  std::vector<std::size_t> schedule(tasks.size());
  std::iota(schedule.begin(), schedule.end(), 0);
  std::mt19937_64 rng(config.seed);
  std::shuffle(schedule.begin(), schedule.end(), rng);

  std::vector<std::vector<MonomialSystem>> task_found(tasks.size());
  std::vector<SearchStats> task_stats(tasks.size());
  std::vector<char> task_done(tasks.size(), 0);
  const int threads = config.jobs > 0 ? config.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const std::size_t t = schedule[k];
    if (stop) continue;
    Searcher worker(config, deadline, stop);
    task_done[t] = worker.run_task(std::move(tasks[t]));
    task_found[t] = std::move(worker.found());
    task_stats[t] = worker.stats();
  }

  result.tasks_total = tasks.size();
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    result.tasks_done += task_done[t] ? 1 : 0;
    result.stats += task_stats[t];
    for (auto& f : task_found[t]) found.push_back(std::move(f));
  }
  result.complete = !stop && result.tasks_done == result.tasks_total;
  finalize(result, std::move(found), config, config.jobs, deadline);
  result.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace togliatti
