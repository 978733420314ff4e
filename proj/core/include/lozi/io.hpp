#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lozi/geometry.hpp"
#include "lozi/pruning.hpp"

namespace lozi {

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

/// Writes via a sibling temporary file and a rename. Throws Io when `path`
/// exists and `force` is false, or on any filesystem failure.
void atomic_write(const std::filesystem::path& path, std::string_view bytes, bool force);

/// Binary PGM: 0 pruned, 128 unknown, 255 admissible window. The top image
/// row holds the largest tail index so the tail coordinate grows upward.
std::string raster_pgm(const Raster& raster);

/// key=value description of a raster for the sidecar next to its PGM.
std::string raster_header(const Raster& raster);

/// Verdict gray levels for zero-entropy scans, b growing upward.
inline constexpr unsigned char kGrayHomoclinic = 0;
inline constexpr unsigned char kGrayUnknown = 128;
inline constexpr unsigned char kGrayNumericZero = 192;
inline constexpr unsigned char kGrayAnalyticZero = 255;

std::string zero_scan_pgm(const ZeroScan& scan);
std::string zero_scan_csv(const ZeroScan& scan);

/// kind,index,x,y per vertex.
std::string polylines_csv(std::span<const Polyline> polylines);

/// Comma-separated table with a fixed header. Cells are written verbatim.
class Csv {
 public:
  explicit Csv(std::vector<std::string> header);

  void row(const std::vector<std::string>& cells);
  const std::string& str() const noexcept { return text_; }

 private:
  std::size_t columns_;
  std::string text_;
};

}  // namespace lozi
