#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lozi/interval.hpp"
#include "lozi/symbolic.hpp"

namespace lozi {

/// A point of the (a, b) parameter plane of the Lozi family.
struct Params {
  double a = 0.0;
  double b = 0.0;

  /// a > 1 + |b|, the region where the pruning functions are defined.
  bool hyperbolic() const noexcept;
  BSign b_sign() const noexcept { return sign_of(b); }

  friend bool operator==(const Params&, const Params&) = default;
};

/// Throws NotHyperbolic unless params.hyperbolic().
void require_hyperbolic(const Params& params);

/// Invariant radius of the continued fractions s_n and r_n:
/// B = 2 / (a + sqrt(a^2 - 4|b|)), the fixed point of B = 1 / (a - |b| B).
/// Every s_n, r_n lies in [-B, B] whatever the symbols are.
double continued_fraction_bound(const Params& params);

/// |b| * B, the ratio of the geometric majorant for the p series.
double p_series_ratio(const Params& params);

// --- Interval evaluators over partial words -------------------------------
//
// These use whatever symbols are present (up to `depth` levels) and enclose
// the value over every bi-infinite completion of the missing symbols. They
// never throw on short words; they simply return wider intervals.

/// s_n for n < 0 using eps_n, eps_{n-1}, ... from `tail` (stored eps_{-m}..eps_{-1}).
Interval s_interval(SymbolSpan tail, int n, int depth, const Params& params);
/// r_n for n >= 0 using eps_n, eps_{n+1}, ... from `head`.
Interval r_interval(SymbolSpan head, int n, int depth, const Params& params);
/// p over all completions, using eps_{-2} ... eps_{-(depth+2)} where present.
Interval p_interval(SymbolSpan tail, int depth, const Params& params);
/// q over all completions, using eps_0 ... eps_depth where present.
Interval q_interval(SymbolSpan head, int depth, const Params& params);

// --- Strict evaluators ----------------------------------------------------
//
// These insist that the word supplies every symbol the truncation level
// needs; the reported error is truncation error plus a rounding allowance.

/// s_n (n <= -1) from eps_n ... eps_{n-depth}.
BoundedValue eval_s(const Word& w, int n, int depth, const Params& params);
/// r_n (n >= 0) from eps_n ... eps_{n+depth}.
BoundedValue eval_r(const Word& w, int n, int depth, const Params& params);
/// p = 1 - b s_{-2} + b^2 s_{-2} s_{-3} - ...; needs tail length >= depth + 2.
BoundedValue eval_p(const Word& w, int depth, const Params& params);
/// q = r_0 - r_0 r_1 + r_0 r_1 r_2 - ...; needs head length >= depth + 1.
BoundedValue eval_q(const Word& w, int depth, const Params& params);

/// Closed form of q on the head (+1,-1,-1,...): b / ((a + x)(b + x)) with
/// x = (a - sqrt(a^2 + 4b)) / 2, and the limit 1/(a - 1) at b = 0.
double closed_form_q(const Params& params);
/// Same, but checks that `head` is a prefix of (+1,-1,-1,...); WrongHead otherwise.
double closed_form_q(SymbolSpan head, const Params& params);

/// Enclosure of (p - q) over every bi-infinite extension of w.
Interval eval_pq_cylinder(const Word& w, int depth, const Params& params);

// --- Classification ---------------------------------------------------------

enum class Verdict : std::uint8_t { CertifiedPruned, Unknown, CertifiedAdmissibleWindow };

const char* to_string(Verdict v) noexcept;

/// CertifiedPruned when (p - q) < 0 on the whole cylinder of w.
/// CertifiedAdmissibleWindow when (p - q) >= 0 on the cylinders of every shift
/// sigma^k w with |k| <= shift_window whose dot stays inside the word.
/// Unknown otherwise.
Verdict classify_cylinder(const Word& w, int depth, int shift_window, const Params& params);

/// One verdict per cylinder of a word_len x word_len grid.
struct Raster {
  int width = 0;
  int height = 0;
  Params params;
  int word_len = 0;
  int depth = 0;
  /// Row-major, row 0 at tail index 0. x = head index, y = tail index.
  std::vector<Verdict> cells;

  Verdict at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
  std::size_t count(Verdict v) const noexcept;
};

struct RasterOptions {
  int shift_window = 0;
  std::uint64_t cell_limit = std::uint64_t{1} << 28;
  int threads = 0;  ///< 0 = use default_thread_count()
};

/// Classifies all 2^(2 word_len) cylinders with tail and head of length word_len.
Raster pruned_region_raster(const Params& params, int word_len, int depth,
                            const RasterOptions& options = {});

// --- Counting and entropy ---------------------------------------------------

struct WordCount {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
};

struct CountOptions {
  std::uint64_t node_limit = std::uint64_t{1} << 32;
  int threads = 0;
};

/// Counts over blocks x_0 ... x_{n-1}. A block is dropped from `upper` when
/// the cylinder with the dot at some position k in [0, n] is CertifiedPruned
/// (so no admissible sequence contains the block). `lower` keeps the alive
/// blocks whose periodic extension has (p - q) >= 0 at all n shifts, i.e. the
/// certified admissible period-n sequences.
WordCount admissible_word_count(const Params& params, int n, int depth,
                                const CountOptions& options = {});

/// Counts for every length 1 ... n_max from one enumeration; index 0 is n = 1.
std::vector<WordCount> admissible_word_counts(const Params& params, int n_max, int depth,
                                              const CountOptions& options = {});

struct EntropyBracket {
  double h_lower = 0.0;
  double h_upper = 0.0;
  std::vector<WordCount> counts;  ///< counts[n - 1] for n = 1 ... n_max
};

/// h_upper = min_n log(upper(n)) / n, h_lower = log(lower(n_max)) / n_max
/// (0 when lower(n_max) is 0), clamped to h_upper.
EntropyBracket entropy_estimate(const Params& params, int n_max, int depth,
                                const CountOptions& options = {});

}  // namespace lozi
