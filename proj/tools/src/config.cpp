#include "lozi_cli/config.hpp"

#include <charconv>
#include <string>

#include "lozi/error.hpp"
#include "lozi/io.hpp"

namespace lozi::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  throw Error(ErrorKind::InvalidArgument, std::string(what) + ": '" + std::string(text) + "'");
}

template <class T>
T parse_number(std::string_view text) {
  text = trim(text);
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) bad("not a number", text);
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  bad("not a boolean", text);
}

}  // namespace

std::string serialize(const RunConfig& c) {
  std::string out;
  out += "command=" + c.command + "\n";
  out += "a=" + c.a + "\n";
  out += "b=" + c.b + "\n";
  out += "word_len=" + std::to_string(c.word_len) + "\n";
  out += "depth=" + std::to_string(c.depth) + "\n";
  out += "n_max=" + std::to_string(c.n_max) + "\n";
  out += "arc_budget=" + format_double(c.arc_budget) + "\n";
  out += "grid=" + c.grid + "\n";
  out += "out=" + c.out + "\n";
  out += "seed=" + std::to_string(c.seed) + "\n";
  out += std::string("force=") + (c.force ? "true" : "false") + "\n";
  return out;
}

void set_value(RunConfig& c, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "command") c.command = value;
  else if (key == "a") c.a = value;
  else if (key == "b") c.b = value;
  else if (key == "word_len") c.word_len = parse_number<int>(value);
  else if (key == "depth") c.depth = parse_number<int>(value);
  else if (key == "n_max") c.n_max = parse_number<int>(value);
  else if (key == "arc_budget") c.arc_budget = parse_number<double>(value);
  else if (key == "grid") c.grid = value;
  else if (key == "out") c.out = value;
  else if (key == "seed") c.seed = parse_number<std::uint64_t>(value);
  else if (key == "force") c.force = parse_bool(value);
  else bad("unknown config key", key);
}

void apply_config_text(RunConfig& config, std::string_view text) {
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) bad("expected key=value", line);
    set_value(config, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

std::vector<double> parse_values(std::string_view text) {
  text = trim(text);
  if (text.empty()) bad("empty value list", text);
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) bad("expected lo:hi:count", text);
    const double lo = parse_number<double>(parts[0]);
    const double hi = parse_number<double>(parts[1]);
    const int count = parse_number<int>(parts[2]);
    if (count < 1 || (count == 1 && lo != hi)) bad("bad point count", text);
    std::vector<double> values;
    for (int i = 0; i < count; ++i) values.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return values;
  }
  std::vector<double> values;
  for (std::string_view part : split(text, ',')) values.push_back(parse_number<double>(part));
  return values;
}

std::array<double, 2> parse_range(std::string_view text) {
  const auto parts = split(trim(text), ':');
  if (parts.size() != 2) bad("expected lo:hi", text);
  const std::array<double, 2> r{parse_number<double>(parts[0]), parse_number<double>(parts[1])};
  if (!(r[0] < r[1])) bad("range must have lo < hi", text);
  return r;
}

std::array<int, 2> parse_grid(std::string_view text) {
  const auto parts = split(trim(text), 'x');
  if (parts.size() != 2) bad("expected WxH", text);
  const std::array<int, 2> g{parse_number<int>(parts[0]), parse_number<int>(parts[1])};
  if (g[0] < 1 || g[1] < 1) bad("grid sides must be positive", text);
  return g;
}

}  // namespace lozi::cli
