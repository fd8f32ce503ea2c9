// SPDX-License-Identifier: Apache-2.0

#include "scg/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "scg/error.hpp"
#include "scg/roots.hpp"

namespace scg {

using nlohmann::json;

std::string cache_entry_line(const CacheEntry& e) {
  json j;
  j["format_version"] = 1;
  j["canonical"] = e.canonical.to_string();
  j["n"] = e.n;
  j["charpoly"] = e.charpoly.coefficient_strings();
  j["index_lo"] = to_string(e.index_lo);
  j["index_hi"] = to_string(e.index_hi);
  return j.dump();
}

namespace {

CacheEntry parse_entry(const std::string& line, int line_no) {
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::Parse, "cache line " + std::to_string(line_no) + ": " + why);
  };
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& ex) {
    bad(std::string("not a JSON document (") + ex.what() + ")");
  }
  if (!j.is_object()) bad("expected an object");
  for (const char* key : {"canonical", "n", "charpoly", "index_lo", "index_hi"})
    if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  if (j.contains("format_version") && j["format_version"] != 1) bad("unsupported format_version");
  CacheEntry e;
  try {
    e.canonical = CanonicalForm::parse(j.at("canonical").get<std::string>());
    e.n = j.at("n").get<int>();
    e.charpoly = IntPolynomial::from_strings(j.at("charpoly").get<std::vector<std::string>>());
    e.index_lo = parse_rational(j.at("index_lo").get<std::string>());
    e.index_hi = parse_rational(j.at("index_hi").get<std::string>());
  } catch (const json::exception& ex) {
    bad(std::string("wrong field type (") + ex.what() + ")");
  } catch (const Error& ex) {
    bad(ex.what());
  }
  return e;
}

std::optional<std::string> consistency_problem(const CacheEntry& e) {
  if (e.n < 1 || e.canonical.order > e.n) return "subgraph order exceeds n";
  if (e.charpoly.degree() != e.n) return "charpoly degree differs from n";
  if (!e.charpoly.is_monic()) return "charpoly is not monic";
  try {
    RootInterval::verified_largest(e.charpoly, e.index_lo, e.index_hi);
  } catch (const Error& ex) {
    return std::string("index interval rejected: ") + ex.what();
  }
  return std::nullopt;
}

}  // namespace

CacheLoadResult cache_load(const std::string& path) {
  CacheLoadResult out;
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return out;
    fail(ErrorKind::Io, "cannot read cache file " + path);
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CacheEntry e = parse_entry(line, line_no);
    if (auto problem = consistency_problem(e)) {
      out.warnings.push_back("cache line " + std::to_string(line_no) + " rejected: " + *problem);
      continue;
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

void cache_store(const std::string& path, const std::vector<CacheEntry>& entries) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write cache file " + tmp);
    for (const CacheEntry& e : entries) out << cache_entry_line(e) << '\n';
    out.flush();
    if (!out) fail(ErrorKind::Io, "failed writing cache file " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(ErrorKind::Io, "cannot rename " + tmp + " to " + path + ": " + ec.message());
}

std::vector<std::string> IndexCache::load(const std::string& path) {
  CacheLoadResult r = cache_load(path);
  std::lock_guard lock(mutex_);
  for (CacheEntry& e : r.entries) {
    auto key = std::make_pair(e.canonical, e.n);
    entries_.insert_or_assign(key, std::move(e));
  }
  return r.warnings;
}

void IndexCache::save(const std::string& path) const { cache_store(path, entries()); }

std::optional<CacheEntry> IndexCache::lookup(const CanonicalForm& canonical, int n) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find({canonical, n});
  if (it == entries_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void IndexCache::insert(CacheEntry entry) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(entry.canonical, entry.n);
  entries_.insert_or_assign(key, std::move(entry));
}

std::vector<CacheEntry> IndexCache::entries() const {
  std::lock_guard lock(mutex_);
  std::vector<CacheEntry> out;
  out.reserve(entries_.size());
  for (const auto& [key, e] : entries_) out.push_back(e);
  return out;
}

std::size_t IndexCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::size_t IndexCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

}  // namespace scg
