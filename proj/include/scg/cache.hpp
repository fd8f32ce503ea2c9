// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scg/graph.hpp"
#include "scg/polynomial.hpp"

namespace scg {

/// Cached spectrum data for (K_n, H^-), keyed by the canonical form of H and n.
struct CacheEntry {
  CanonicalForm canonical;
  int n = 0;
  IntPolynomial charpoly;
  Rational index_lo;
  Rational index_hi;

  bool operator==(const CacheEntry&) const = default;
};

struct CacheLoadResult {
  std::vector<CacheEntry> entries;
  /// One message per rejected entry.
  std::vector<std::string> warnings;
};

/// Reads a line-delimited cache file. A missing or empty file is an empty
/// cache. Malformed lines throw Error(Parse) naming the line number; entries
/// that parse but fail the consistency checks (degree, monic, Sturm
/// certification of the index interval) are dropped with a warning.
CacheLoadResult cache_load(const std::string& path);

/// Writes all entries to a temporary file and renames it over `path`.
void cache_store(const std::string& path, const std::vector<CacheEntry>& entries);

std::string cache_entry_line(const CacheEntry& entry);

/// Thread-safe in-memory cache used by the searches.
class IndexCache {
 public:
  IndexCache() = default;

  /// Merges the entries of `path` into this cache; returns the warnings.
  std::vector<std::string> load(const std::string& path);
  void save(const std::string& path) const;

  std::optional<CacheEntry> lookup(const CanonicalForm& canonical, int n) const;
  void insert(CacheEntry entry);

  std::vector<CacheEntry> entries() const;
  std::size_t size() const;
  std::size_t hits() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<CanonicalForm, int>, CacheEntry> entries_;
  mutable std::size_t hits_ = 0;
};

}  // namespace scg
