#include "kron/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kron/symfunc.hpp"

namespace kron {

PersistentCache::PersistentCache(std::string dir) : dir_(std::move(dir)) {}

std::optional<PersistentCache> PersistentCache::from_env() {
  const char* dir = std::getenv("KRON_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return PersistentCache(dir);
}

std::string PersistentCache::path() const { return (std::filesystem::path(dir_) / "memo.txt").string(); }

std::size_t PersistentCache::load() const {
  std::ifstream in(path());
  if (!in) return 0;
  std::string line;
  if (!std::getline(in, line) || line != kHeader) return 0;
  MemoSnapshot snap;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind, key, value;
    if (!(ls >> kind >> key >> value)) continue;
    if (kind == "lr") {
      try {
        snap.lr.emplace_back(key, std::stoll(value));
      } catch (const std::exception&) {
        continue;
      }
    } else if (kind == "chi") {
      snap.characters.emplace_back(key, value);
    }
  }
  preload_memo(snap);
  return snap.lr.size() + snap.characters.size();
}

void PersistentCache::save() const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  MemoSnapshot snap = snapshot_memo();
  const std::string tmp = path() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << kHeader << '\n';
    // Keys are "a|b|c" partition strings and never contain whitespace.
    for (const auto& [k, v] : snap.lr) out << "lr " << k << ' ' << v << '\n';
    for (const auto& [k, v] : snap.characters) out << "chi " << k << ' ' << v << '\n';
  }
  std::filesystem::rename(tmp, path(), ec);
}

}  // namespace kron
