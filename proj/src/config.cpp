#include "twoblock/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

namespace twoblock {

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

}  // namespace

std::optional<SearchConfig> parse_cap_override(std::string_view text, SearchConfig base) {
  if (text.empty()) return std::nullopt;
  if (auto all = parse_int(text)) return base.with_cap(*all);

  SearchConfig c = base;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    auto key = item.substr(0, eq);
    auto value = parse_int(item.substr(eq + 1));
    if (!value) return std::nullopt;
    if (key == "detect") {
      c.detect_cap = *value;
    } else if (key == "longest") {
      c.longest_cycle_cap = *value;
    } else if (key == "chromatic") {
      c.chromatic_cap = *value;
    } else {
      return std::nullopt;
    }
  }
  return c;
}

SearchConfig default_config() {
  SearchConfig c;
  if (const char* env = std::getenv("TWOBLOCK_CAP")) {
    if (auto parsed = parse_cap_override(env, c)) c = *parsed;
  }
  return c;
}

}  // namespace twoblock
