#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "lozi/error.hpp"
#include "lozi/parallel.hpp"
#include "lozi/pruning.hpp"

namespace lozi {

namespace {

// Depth-first walk over blocks x_0 ... x_{L-1}, extending to the right. A
// block stays alive while no dot position k in [0, L] yields a cylinder with
// (p - q) < 0. Alive blocks form a factorial language: every sub-block of an
// alive block is alive, because fewer symbols only widen the enclosures.
class BlockWalker {
 public:
  BlockWalker(const Params& params, int n_max, int depth, std::atomic<std::uint64_t>& nodes,
              std::uint64_t node_limit)
      : params_(params),
        n_max_(static_cast<std::size_t>(n_max)),
        depth_(depth),
        nodes_(nodes),
        node_limit_(node_limit),
        counts_(n_max_) {
    symbols_.reserve(n_max_);
    p_.reserve(n_max_ + 1);
    q_.reserve(n_max_ + 1);
    p_.push_back(p_interval({}, depth_, params_));
    q_.push_back(q_interval({}, depth_, params_));
  }

  /// Pushes a symbol; returns false (and leaves state unchanged) when the
  /// extended block is certified pruned.
  bool push(Symbol s) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= node_limit_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "block enumeration exceeded " + std::to_string(node_limit_) + " nodes");
    }
    symbols_.push_back(s);
    const std::size_t len = symbols_.size();
    const SymbolSpan all(symbols_);

    // Positions whose head enclosure changes: those with at most depth+1 head symbols.
    const std::size_t reach = static_cast<std::size_t>(depth_) + 1;
    const std::size_t first = len > reach ? len - reach : 0;

    saved_q_.assign(q_.begin() + static_cast<std::ptrdiff_t>(first), q_.end());
    p_.push_back(p_interval(all, depth_, params_));
    q_.push_back(Interval{});
    bool alive = true;
    for (std::size_t k = first; k <= len; ++k) {
      q_[k] = q_interval(all.subspan(k), depth_, params_);
      if (p_[k].hi - q_[k].lo < 0.0) {
        alive = false;
        break;
      }
    }
    if (!alive) {
      pop_restoring(first);
      return false;
    }
    restore_first_.push_back(first);
    saved_stack_.push_back(saved_q_);
    return true;
  }

  void pop() {
    const std::size_t first = restore_first_.back();
    restore_first_.pop_back();
    saved_q_ = std::move(saved_stack_.back());
    saved_stack_.pop_back();
    pop_restoring(first);
  }

  /// Records the current (alive) block in the per-length tallies.
  void tally() {
    const std::size_t len = symbols_.size();
    WordCount& c = counts_[len - 1];
    ++c.upper;
    if (periodic_admissible()) ++c.lower;
  }

  /// (p - q) >= 0 at every shift of the periodic sequence ...x_0...x_{L-1}x_0...
  bool periodic_admissible() {
    const std::size_t len = symbols_.size();
    const std::size_t tail = static_cast<std::size_t>(depth_) + 2;
    const std::size_t head = static_cast<std::size_t>(depth_) + 1;
    periodic_.resize(tail + len + head);
    for (std::size_t i = 0; i < periodic_.size(); ++i) {
      periodic_[i] = symbols_[(i + len * (tail / len + 1) - tail) % len];
    }
    const SymbolSpan buf(periodic_);
    for (std::size_t k = 0; k < len; ++k) {
      const Interval p = p_interval(buf.subspan(k, tail), depth_, params_);
      const Interval q = q_interval(buf.subspan(tail + k, head), depth_, params_);
      if (p.lo - q.hi < 0.0) return false;
    }
    return true;
  }

  void explore() {
    tally();
    if (symbols_.size() == n_max_) return;
    for (Symbol s : {Symbol::Minus, Symbol::Plus}) {
      if (push(s)) {
        explore();
        pop();
      }
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<WordCount>& counts() const noexcept { return counts_; }

 private:
  void pop_restoring(std::size_t first) {
    symbols_.pop_back();
    p_.pop_back();
    q_.pop_back();
    std::copy(saved_q_.begin(), saved_q_.begin() + static_cast<std::ptrdiff_t>(q_.size() - first),
              q_.begin() + static_cast<std::ptrdiff_t>(first));
  }

  Params params_;
  std::size_t n_max_;
  int depth_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t node_limit_;

  Symbols symbols_;
  Symbols periodic_;
  std::vector<Interval> p_;  // p_[k]: p over the tail x_0..x_{k-1}
  std::vector<Interval> q_;  // q_[k]: q over the head x_k..x_{L-1}
  std::vector<Interval> saved_q_;
  std::vector<std::vector<Interval>> saved_stack_;
  std::vector<std::size_t> restore_first_;
  std::vector<WordCount> counts_;
};

constexpr std::size_t kSplitLength = 8;

}  // namespace

std::vector<WordCount> admissible_word_counts(const Params& params, int n_max, int depth,
                                              const CountOptions& options) {
  require_hyperbolic(params);
  if (n_max < 1 || n_max > 62) throw Error(ErrorKind::InvalidArgument, "n_max must be in [1, 62]");
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be non-negative");

  std::atomic<std::uint64_t> nodes{0};
  const std::size_t split = std::min<std::size_t>(kSplitLength, static_cast<std::size_t>(n_max));

  // Short blocks are tallied serially; every alive block of length `split`
  // then seeds an independent subtree.
  std::vector<WordCount> totals(static_cast<std::size_t>(n_max));
  std::vector<Symbols> seeds;
  {
    BlockWalker walker(params, static_cast<int>(split), depth, nodes, options.node_limit);
    Symbols path;
    auto collect = [&](auto&& self) -> void {
      walker.tally();
      if (walker.size() == split) {
        seeds.push_back(path);
        return;
      }
      for (Symbol s : {Symbol::Minus, Symbol::Plus}) {
        if (walker.push(s)) {
          path.push_back(s);
          self(self);
          path.pop_back();
          walker.pop();
        }
      }
    };
    for (Symbol s : {Symbol::Minus, Symbol::Plus}) {
      if (walker.push(s)) {
        path.push_back(s);
        collect(collect);
        path.pop_back();
        walker.pop();
      }
    }
    for (std::size_t n = 0; n < split; ++n) totals[n] = walker.counts()[n];
  }

  if (split < static_cast<std::size_t>(n_max)) {
    std::vector<std::vector<WordCount>> partial(seeds.size());
    parallel_for(seeds.size(), options.threads, [&](std::size_t i) {
      BlockWalker walker(params, n_max, depth, nodes, options.node_limit);
      for (Symbol s : seeds[i]) {
        if (!walker.push(s)) return;  // unreachable: seeds are alive
      }
      for (Symbol s : {Symbol::Minus, Symbol::Plus}) {
        if (walker.push(s)) {
          walker.explore();
          walker.pop();
        }
      }
      partial[i] = walker.counts();
    });
    for (const auto& counts : partial) {
      for (std::size_t n = split; n < counts.size(); ++n) {
        totals[n].lower += counts[n].lower;
        totals[n].upper += counts[n].upper;
      }
    }
  }
  return totals;
}

WordCount admissible_word_count(const Params& params, int n, int depth,
                                const CountOptions& options) {
  return admissible_word_counts(params, n, depth, options).back();
}

EntropyBracket entropy_estimate(const Params& params, int n_max, int depth,
                                const CountOptions& options) {
  EntropyBracket out;
  out.counts = admissible_word_counts(params, n_max, depth, options);

  out.h_upper = std::log(2.0);
  for (std::size_t i = 0; i < out.counts.size(); ++i) {
    const auto upper = out.counts[i].upper;
    const double h = upper == 0 ? 0.0 : std::log(static_cast<double>(upper)) / static_cast<double>(i + 1);
    out.h_upper = std::min(out.h_upper, h);
  }
  const auto lower = out.counts.back().lower;
  out.h_lower = lower == 0 ? 0.0 : std::log(static_cast<double>(lower)) / static_cast<double>(n_max);
  // Periodic-orbit growth only approaches h from above or below; keep the bracket ordered.
  out.h_lower = std::min(out.h_lower, out.h_upper);
  return out;
}

}  // namespace lozi
