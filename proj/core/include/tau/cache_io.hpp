#pragma once

// Text persistence for BracketTable.
//
//   TAUCACHE v1
//   g|d1,d2,...,dn|num/den        (exponents ascending, lines sorted by (g, n, d))
//   #checksum fnv1a64 <16 hex>    (optional trailer over all entry lines)

#include "tau/tau_engine.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace tau {

class CacheFormatError : public std::runtime_error {
 public:
  CacheFormatError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CacheLoadOptions {
  /// Recompute every entry from scratch and reject mismatches.
  bool verify = false;
};

void save_cache(const BracketTable& table, std::ostream& out);
void save_cache(const BracketTable& table, const std::filesystem::path& path);

BracketTable load_cache(std::istream& in, const CacheLoadOptions& options = {});
BracketTable load_cache(const std::filesystem::path& path, const CacheLoadOptions& options = {});

/// Serializes a single entry as it appears in the file.
std::string format_cache_line(const TauKey& key, const Rational& value);

}  // namespace tau
