#include "lozi/io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>
#include <unistd.h>

#include "lozi/error.hpp"

namespace lozi {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void atomic_write(const std::filesystem::path& path, std::string_view bytes, bool force) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!force && fs::exists(path, ec)) {
    throw Error(ErrorKind::Io, "refusing to overwrite " + path.string() + " (use --force)");
  }
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot rename onto " + path.string());
  }
}

namespace {

std::string pgm(int width, int height, auto&& gray_at) {
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(width) * height);
  for (int row = height - 1; row >= 0; --row) {
    for (int col = 0; col < width; ++col) out.push_back(static_cast<char>(gray_at(col, row)));
  }
  return out;
}

unsigned char gray(ZeroEntropyKind kind) {
  switch (kind) {
    case ZeroEntropyKind::AnalyticZero: return kGrayAnalyticZero;
    case ZeroEntropyKind::NumericZero: return kGrayNumericZero;
    case ZeroEntropyKind::Homoclinic: return kGrayHomoclinic;
    case ZeroEntropyKind::Unknown: return kGrayUnknown;
  }
  return kGrayUnknown;
}

}  // namespace

std::string raster_pgm(const Raster& raster) {
  return pgm(raster.width, raster.height, [&](int x, int y) -> unsigned char {
    switch (raster.at(x, y)) {
      case Verdict::CertifiedPruned: return 0;
      case Verdict::Unknown: return 128;
      case Verdict::CertifiedAdmissibleWindow: return 255;
    }
    return 128;
  });
}

std::string raster_header(const Raster& raster) {
  std::string out;
  out += "a=" + format_double(raster.params.a) + "\n";
  out += "b=" + format_double(raster.params.b) + "\n";
  out += "word_len=" + std::to_string(raster.word_len) + "\n";
  out += "depth=" + std::to_string(raster.depth) + "\n";
  out += "width=" + std::to_string(raster.width) + "\n";
  out += "height=" + std::to_string(raster.height) + "\n";
  out += "x_axis=head_index\ny_axis=tail_index_upward\n";
  out += "gray=0:pruned,128:unknown,255:admissible\n";
  out += "pruned=" + std::to_string(raster.count(Verdict::CertifiedPruned)) + "\n";
  out += "unknown=" + std::to_string(raster.count(Verdict::Unknown)) + "\n";
  out += "admissible=" + std::to_string(raster.count(Verdict::CertifiedAdmissibleWindow)) + "\n";
  return out;
}

std::string zero_scan_pgm(const ZeroScan& scan) {
  return pgm(scan.width, scan.height, [&](int i, int j) { return gray(scan.at(i, j).kind); });
}

std::string zero_scan_csv(const ZeroScan& scan) {
  Csv csv({"a", "b", "verdict", "witness_x", "witness_y"});
  for (int j = 0; j < scan.height; ++j) {
    for (int i = 0; i < scan.width; ++i) {
      const ZeroEntropyVerdict& v = scan.at(i, j);
      csv.row({format_double(scan.a_values[i]), format_double(scan.b_values[j]), describe(v),
               v.witness ? format_double(v.witness->x) : "", v.witness ? format_double(v.witness->y) : ""});
    }
  }
  return csv.str();
}

std::string polylines_csv(std::span<const Polyline> polylines) {
  Csv csv({"kind", "index", "x", "y"});
  for (const Polyline& pl : polylines) {
    for (std::size_t i = 0; i < pl.vertices.size(); ++i) {
      csv.row({to_string(pl.kind), std::to_string(i), format_double(pl.vertices[i].x),
               format_double(pl.vertices[i].y)});
    }
  }
  return csv.str();
}

Csv::Csv(std::vector<std::string> header) : columns_(header.size()) { row(header); }

void Csv::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw Error(ErrorKind::InvalidArgument, "csv row has the wrong width");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

}  // namespace lozi
