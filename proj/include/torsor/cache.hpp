#pragma once

#include "torsor/rewrite.hpp"

namespace torsor {

inline constexpr int kEngineVersion = 1;

/// On-disk cache of completed rewriting systems, keyed by an exact hash of
/// the presentation text, precedence, degree bound, and engine version.
/// Writes go through a temp file and a rename.
class CompletionCache {
 public:
  explicit CompletionCache(std::string dir);

  /// Directory from the TORSOR_CACHE_DIR environment variable, or empty.
  static std::string default_dir();

  std::shared_ptr<const CompletedSystem> load(const PresentationPtr& pres,
                                              int degree_bound) const;
  void store(const CompletedSystem& sys) const;

  static std::string hash_key(const Presentation& pres, int degree_bound);

  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
};

}  // namespace torsor
