#ifndef CMKIT_CACHE_HPP
#define CMKIT_CACHE_HPP

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

namespace cmkit {

/// Point-count memo keyed by (curve_id, n). Optionally backed by an
/// append-only file of line-delimited JSON records
///   {"curve_id": "...", "n": "2", "count": "32"}
/// Corrupt lines are skipped with a warning on stderr; one record per
/// key is kept (first wins on load, stores for known keys do not
/// re-append).
class PointCountCache {
 public:
  PointCountCache() = default;
  explicit PointCountCache(std::string path);

  std::optional<mpz_class> lookup(const std::string& curve_id, unsigned n) const;
  void store(const std::string& curve_id, unsigned n, const mpz_class& count);

  std::size_t size() const { return mem_.size(); }
  int corrupt_lines_skipped() const { return corrupt_; }

 private:
  mutable std::mutex mu_;
  std::map<std::pair<std::string, unsigned>, mpz_class> mem_;
  std::string path_;
  int corrupt_ = 0;
};

}  // namespace cmkit

#endif
