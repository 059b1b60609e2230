#include "tau/cache_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace tau {

namespace {

constexpr const char* kChecksumPrefix = "#checksum fnv1a64 ";

struct Fnv1a {
  std::uint64_t state = 0xcbf29ce484222325ULL;
  void update(std::string_view text) {
    for (unsigned char c : text) {
      state ^= c;
      state *= 0x100000001b3ULL;
    }
    state ^= '\n';
    state *= 0x100000001b3ULL;
  }
  std::string hex() const {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << state;
    return os.str();
  }
};

int parse_int(std::string_view text, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw CacheFormatError(line, std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

CacheFormatError::CacheFormatError(std::size_t line, const std::string& message)
    : std::runtime_error("cache line " + std::to_string(line) + ": " + message), line_(line) {}

std::string format_cache_line(const TauKey& key, const Rational& value) {
  std::string out = std::to_string(key.genus) + "|";
  for (std::size_t i = 0; i < key.exponents.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(key.exponents[i]);
  }
  out += '|';
  out += to_string(value);
  return out;
}

void save_cache(const BracketTable& table, std::ostream& out) {
  out << BracketTable::kVersionTag << '\n';
  Fnv1a checksum;
  for (const auto& [key, value] : table.entries()) {
    const std::string line = format_cache_line(key, value);
    checksum.update(line);
    out << line << '\n';
  }
  out << kChecksumPrefix << checksum.hex() << '\n';
}

void save_cache(const BracketTable& table, const std::filesystem::path& path) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    save_cache(table, out);
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

BracketTable load_cache(std::istream& in, const CacheLoadOptions& options) {
  BracketTable table;
  std::string line;
  std::size_t number = 0;
  if (!std::getline(in, line)) throw CacheFormatError(1, "missing header");
  ++number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != BracketTable::kVersionTag) {
    throw CacheFormatError(1, "version mismatch: expected '" + std::string(BracketTable::kVersionTag) +
                                  "', found '" + line + "'");
  }

  // Recomputation happens in a private engine so the loaded table is not
  // consulted while it is being validated.
  TauEngine verifier;
  Fnv1a checksum;
  bool trailer_seen = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (trailer_seen) throw CacheFormatError(number, "content after checksum trailer");
    if (line.rfind(kChecksumPrefix, 0) == 0) {
      const std::string expected = line.substr(std::string(kChecksumPrefix).size());
      if (expected != checksum.hex()) {
        throw CacheFormatError(number, "checksum failure: file says " + expected + ", entries hash to " +
                                           checksum.hex());
      }
      trailer_seen = true;
      continue;
    }

    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string::npos ? std::string::npos : line.find('|', bar1 + 1);
    if (bar2 == std::string::npos || line.find('|', bar2 + 1) != std::string::npos) {
      throw CacheFormatError(number, "malformed entry '" + line + "'");
    }
    const int genus = parse_int(std::string_view(line).substr(0, bar1), number, "genus");
    std::vector<int> exponents;
    std::string_view list = std::string_view(line).substr(bar1 + 1, bar2 - bar1 - 1);
    while (!list.empty()) {
      const auto comma = list.find(',');
      exponents.push_back(parse_int(list.substr(0, comma), number, "exponent"));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
      if (list.empty()) throw CacheFormatError(number, "trailing comma in exponent list");
    }
    if (!std::is_sorted(exponents.begin(), exponents.end())) {
      throw CacheFormatError(number, "exponents not in ascending order");
    }
    Rational value;
    try {
      value = parse_rational(std::string_view(line).substr(bar2 + 1));
    } catch (const std::invalid_argument& e) {
      throw CacheFormatError(number, e.what());
    }

    TauKey key(genus, std::move(exponents));
    if (!key.stable() || !key.dimension_ok()) {
      throw CacheFormatError(number, "key violates stability or dimension constraint");
    }
    if (options.verify) {
      const Rational expected = verifier.bracket(key.genus, key.exponents);
      if (expected != value) {
        throw CacheFormatError(number, "value " + to_string(value) + " contradicts recomputed " +
                                           to_string(expected));
      }
    }
    try {
      table.insert(key, value);
    } catch (const std::logic_error&) {
      throw CacheFormatError(number, "duplicate key with a different value");
    }
    checksum.update(line);
  }
  return table;
}

BracketTable load_cache(const std::filesystem::path& path, const CacheLoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file '" + path.string() + "'");
  return load_cache(in, options);
}

}  // namespace tau
