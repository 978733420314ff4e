#include <algorithm>
#include <string>

#include "lozi/error.hpp"
#include "lozi/parallel.hpp"
#include "lozi/pruning.hpp"

namespace lozi {

std::size_t Raster::count(Verdict v) const noexcept {
  return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), v));
}

Raster pruned_region_raster(const Params& params, int word_len, int depth,
                            const RasterOptions& options) {
  require_hyperbolic(params);
  if (word_len < 1 || word_len > 15) {
    throw Error(ErrorKind::InvalidArgument, "word_len must be in [1, 15]");
  }
  const std::uint64_t side = std::uint64_t{1} << word_len;
  if (side * side > options.cell_limit) {
    throw Error(ErrorKind::BudgetExceeded, "raster of " + std::to_string(side * side) +
                                               " cells exceeds the cell limit " +
                                               std::to_string(options.cell_limit));
  }

  Raster raster;
  raster.width = static_cast<int>(side);
  raster.height = static_cast<int>(side);
  raster.params = params;
  raster.word_len = word_len;
  raster.depth = depth;
  raster.cells.assign(side * side, Verdict::Unknown);

  const auto len = static_cast<std::size_t>(word_len);
  const BSign sign = params.b_sign();

  if (options.shift_window == 0) {
    // p depends only on the tail and q only on the head, so the 2^(2L) cells
    // reduce to 2^L evaluations of each.
    std::vector<Interval> p(side), q(side);
    parallel_for(side, options.threads, [&](std::size_t i) {
      p[i] = p_interval(tail_from_index(i, len, sign), depth, params);
      q[i] = q_interval(head_from_index(i, len), depth, params);
    });
    parallel_for(side, options.threads, [&](std::size_t y) {
      for (std::size_t x = 0; x < side; ++x) {
        const double hi = p[y].hi - q[x].lo;
        const double lo = p[y].lo - q[x].hi;
        raster.cells[y * side + x] = hi < 0.0   ? Verdict::CertifiedPruned
                                     : lo >= 0.0 ? Verdict::CertifiedAdmissibleWindow
                                                 : Verdict::Unknown;
      }
    });
    return raster;
  }

  parallel_for(side, options.threads, [&](std::size_t y) {
    Word w{tail_from_index(y, len, sign), {}};
    for (std::size_t x = 0; x < side; ++x) {
      w.head = head_from_index(x, len);
      raster.cells[y * side + x] = classify_cylinder(w, depth, options.shift_window, params);
    }
  });
  return raster;
}

}  // namespace lozi
