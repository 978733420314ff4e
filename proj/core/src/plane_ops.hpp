#pragma once

#include <vector>

#include "lozi/geometry.hpp"

namespace lozi::detail {

/// Images of a vertex chain under L^steps (or L^-steps), with an exact vertex
/// added wherever a segment crosses the kink line of the map being applied.
std::vector<PlanePoint> map_chain(const Params& params, const std::vector<PlanePoint>& chain, int steps,
                                  bool inverse);

/// Drops repeated vertices and interior vertices that continue straight on.
void simplify_chain(std::vector<PlanePoint>& chain, double flat_tol);

double chain_length(const std::vector<PlanePoint>& chain) noexcept;

}  // namespace lozi::detail
