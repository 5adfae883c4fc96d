#pragma once

#include <optional>
#include <string>

namespace kron {

// Optional on-disk store for the LR and character memo tables. The store is
// a plain text file with a versioned header; an unreadable or mismatched
// file is ignored and rewritten on save.
class PersistentCache {
 public:
  static constexpr const char* kHeader = "kron-memo-cache v1";

  explicit PersistentCache(std::string dir);
  // Reads the directory from KRON_CACHE_DIR; empty optional when unset.
  static std::optional<PersistentCache> from_env();

  std::string path() const;
  // Number of entries loaded into the memo tables.
  std::size_t load() const;
  void save() const;

 private:
  std::string dir_;
};

}  // namespace kron
