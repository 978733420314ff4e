#include "lozi/pruning.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lozi/error.hpp"

namespace lozi {

bool Params::hyperbolic() const noexcept { return a > 1.0 + std::abs(b); }

void require_hyperbolic(const Params& params) {
  if (!params.hyperbolic()) {
    std::ostringstream msg;
    msg << "(a, b) = (" << params.a << ", " << params.b << ") violates a > 1 + |b|";
    throw Error(ErrorKind::NotHyperbolic, msg.str());
  }
}

double continued_fraction_bound(const Params& params) {
  const double ab = std::abs(params.b);
  return 2.0 / (params.a + std::sqrt(params.a * params.a - 4.0 * ab));
}

double p_series_ratio(const Params& params) {
  return std::abs(params.b) * continued_fraction_bound(params);
}

namespace {

// Each level x -> 1 / (c + b x) maps [-B, B] into itself and is monotone, so
// interval evaluation from an unknown innermost value gives the exact range.
Interval continued_fraction_level(double lead, double b, const Interval& inner) {
  return reciprocal(lead + b * inner);
}

std::size_t available(std::ptrdiff_t count) {
  return count > 0 ? static_cast<std::size_t>(count) : 0;
}

}  // namespace

Interval s_interval(SymbolSpan tail, int n, int depth, const Params& params) {
  const double bound = continued_fraction_bound(params);
  const auto m = static_cast<std::ptrdiff_t>(tail.size());
  // eps_j lives at tail[m + j]; levels eps_n, eps_{n-1}, ..., eps_{n-depth}.
  const std::size_t levels =
      std::min(available(m + n + 1), static_cast<std::size_t>(std::max(depth, 0) + 1));
  Interval x = Interval::symmetric(bound);
  for (std::size_t k = levels; k-- > 0;) {
    const Symbol eps = tail[static_cast<std::size_t>(m + n) - k];
    x = continued_fraction_level(-params.a * value(eps), params.b, x);
  }
  return x;
}

Interval r_interval(SymbolSpan head, int n, int depth, const Params& params) {
  const double bound = continued_fraction_bound(params);
  const auto len = static_cast<std::ptrdiff_t>(head.size());
  const std::size_t levels =
      std::min(available(len - n), static_cast<std::size_t>(std::max(depth, 0) + 1));
  Interval x = Interval::symmetric(bound);
  for (std::size_t k = levels; k-- > 0;) {
    const Symbol eps = head[static_cast<std::size_t>(n) + k];
    x = continued_fraction_level(params.a * value(eps), params.b, x);
  }
  return x;
}

Interval p_interval(SymbolSpan tail, int depth, const Params& params) {
  const double bound = continued_fraction_bound(params);
  const double ratio = std::abs(params.b) * bound;
  const auto m = tail.size();
  // Symbols eps_{-2} ... eps_{-(levels+1)}.
  const std::size_t levels =
      std::min(m > 0 ? m - 1 : 0, static_cast<std::size_t>(std::max(depth, 0) + 1));

  // s_{-j} for j = 2 .. levels+1, innermost first. s_{-j} sits at tail[m - j].
  std::vector<Interval> s(levels);
  Interval x = Interval::symmetric(bound);
  for (std::size_t k = levels; k-- > 0;) {
    const Symbol eps = tail[m - 2 - k];
    x = continued_fraction_level(-params.a * value(eps), params.b, x);
    s[k] = x;
  }

  // p = V_{-2}, V_n = 1 - b s_n V_{n-1}; the unexpanded remainder satisfies
  // |V - 1| <= ratio / (1 - ratio).
  const double rem = ratio / (1.0 - ratio);
  Interval v{1.0 - rem, 1.0 + rem};
  for (std::size_t k = levels; k-- > 0;) {
    v = 1.0 - params.b * (s[k] * v);
  }
  return v;
}

Interval q_interval(SymbolSpan head, int depth, const Params& params) {
  const double bound = continued_fraction_bound(params);
  const std::size_t levels =
      std::min(head.size(), static_cast<std::size_t>(std::max(depth, 0) + 1));

  std::vector<Interval> r(levels);
  Interval x = Interval::symmetric(bound);
  for (std::size_t k = levels; k-- > 0;) {
    x = continued_fraction_level(params.a * value(head[k]), params.b, x);
    r[k] = x;
  }

  // q = r_0 W_1, W_n = 1 - r_n W_{n+1}, and |W - 1| <= B / (1 - B).
  const double rem = bound / (1.0 - bound);
  Interval w{1.0 - rem, 1.0 + rem};
  if (levels == 0) return Interval::symmetric(bound) * w;
  for (std::size_t k = levels; k-- > 1;) {
    w = 1.0 - r[k] * w;
  }
  return r[0] * w;
}

namespace {

/// The enclosures are computed in round-to-nearest; widen by a generous
/// per-level allowance so `err` also covers rounding.
BoundedValue with_rounding(const Interval& iv, int depth) {
  BoundedValue v = BoundedValue::from(iv);
  v.err += 8.0 * (depth + 2) * std::numeric_limits<double>::epsilon() * (std::abs(v.value) + v.err);
  return v;
}

}  // namespace

BoundedValue eval_s(const Word& w, int n, int depth, const Params& params) {
  require_hyperbolic(params);
  if (n >= 0) throw Error(ErrorKind::InvalidArgument, "eval_s needs n < 0");
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be non-negative");
  if (!w.has(n - depth)) {
    throw Error(ErrorKind::InsufficientWord,
                "s_" + std::to_string(n) + " at depth " + std::to_string(depth) + " needs eps_" +
                    std::to_string(n - depth));
  }
  return with_rounding(s_interval(w.tail, n, depth, params), depth);
}

BoundedValue eval_r(const Word& w, int n, int depth, const Params& params) {
  require_hyperbolic(params);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "eval_r needs n >= 0");
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be non-negative");
  if (!w.has(n + depth)) {
    throw Error(ErrorKind::InsufficientWord,
                "r_" + std::to_string(n) + " at depth " + std::to_string(depth) + " needs eps_" +
                    std::to_string(n + depth));
  }
  return with_rounding(r_interval(w.head, n, depth, params), depth);
}

BoundedValue eval_p(const Word& w, int depth, const Params& params) {
  require_hyperbolic(params);
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be non-negative");
  if (w.tail_len() < static_cast<std::size_t>(depth) + 2) {
    throw Error(ErrorKind::InsufficientWord,
                "p at depth " + std::to_string(depth) + " needs a tail of length " +
                    std::to_string(depth + 2));
  }
  return with_rounding(p_interval(w.tail, depth, params), depth);
}

BoundedValue eval_q(const Word& w, int depth, const Params& params) {
  require_hyperbolic(params);
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "depth must be non-negative");
  if (w.head_len() < static_cast<std::size_t>(depth) + 1) {
    throw Error(ErrorKind::InsufficientWord,
                "q at depth " + std::to_string(depth) + " needs a head of length " +
                    std::to_string(depth + 1));
  }
  return with_rounding(q_interval(w.head, depth, params), depth);
}

double closed_form_q(const Params& params) {
  require_hyperbolic(params);
  const double a = params.a;
  const double root = std::sqrt(a * a + 4.0 * params.b);
  // x = (a - root) / 2 written without cancellation; b + x = b (a + root - 2) / (a + root).
  const double x = -2.0 * params.b / (a + root);
  return (a + root) / ((a + x) * (a + root - 2.0));
}

double closed_form_q(SymbolSpan head, const Params& params) {
  for (std::size_t i = 0; i < head.size(); ++i) {
    const Symbol expected = i == 0 ? Symbol::Plus : Symbol::Minus;
    if (head[i] != expected) {
      throw Error(ErrorKind::WrongHead,
                  "closed form only holds on the head (+1,-1,-1,...), got " + to_string(head));
    }
  }
  return closed_form_q(params);
}

Interval eval_pq_cylinder(const Word& w, int depth, const Params& params) {
  require_hyperbolic(params);
  return p_interval(w.tail, depth, params) - q_interval(w.head, depth, params);
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::CertifiedPruned: return "CertifiedPruned";
    case Verdict::Unknown: return "Unknown";
    case Verdict::CertifiedAdmissibleWindow: return "CertifiedAdmissibleWindow";
  }
  return "?";
}

Verdict classify_cylinder(const Word& w, int depth, int shift_window, const Params& params) {
  require_hyperbolic(params);
  const Interval centre = eval_pq_cylinder(w, depth, params);
  if (centre.hi < 0.0) return Verdict::CertifiedPruned;
  if (centre.lo < 0.0) return Verdict::Unknown;

  Symbols all = w.tail;
  all.insert(all.end(), w.head.begin(), w.head.end());
  const SymbolSpan span(all);
  const auto m = static_cast<std::ptrdiff_t>(w.tail_len());
  const auto total = static_cast<std::ptrdiff_t>(all.size());
  for (int k = -shift_window; k <= shift_window; ++k) {
    const std::ptrdiff_t dot = m + k;
    if (k == 0 || dot < 0 || dot > total) continue;
    const auto cut = static_cast<std::size_t>(dot);
    const Interval shifted =
        p_interval(span.first(cut), depth, params) - q_interval(span.subspan(cut), depth, params);
    if (shifted.lo < 0.0) return Verdict::Unknown;
  }
  return Verdict::CertifiedAdmissibleWindow;
}

}  // namespace lozi
