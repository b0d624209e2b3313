#include "cmkit/cache.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "cmkit/errors.hpp"

namespace cmkit {

using nlohmann::json;

PointCountCache::PointCountCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // fresh file, created on first store
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json rec = json::parse(line);
      std::string id = rec.at("curve_id").get<std::string>();
      unsigned n = static_cast<unsigned>(std::stoul(rec.at("n").get<std::string>()));
      mpz_class count(rec.at("count").get<std::string>());
      mem_.emplace(std::make_pair(id, n), count);
    } catch (const std::exception&) {
      ++corrupt_;
      std::cerr << "cmkit: skipping corrupt cache line " << lineno << " in " << path_
                << "\n";
    }
  }
}

std::optional<mpz_class> PointCountCache::lookup(const std::string& curve_id,
                                                 unsigned n) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = mem_.find({curve_id, n});
  if (it == mem_.end()) return std::nullopt;
  return it->second;
}

void PointCountCache::store(const std::string& curve_id, unsigned n,
                            const mpz_class& count) {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(curve_id, n);
  if (mem_.count(key)) return;
  mem_.emplace(key, count);
  if (path_.empty()) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    std::cerr << "cmkit: cannot append to cache file " << path_ << "\n";
    return;
  }
  json rec;
  rec["curve_id"] = curve_id;
  rec["n"] = std::to_string(n);
  rec["count"] = count.get_str();
  out << rec.dump() << "\n";
}

}  // namespace cmkit
