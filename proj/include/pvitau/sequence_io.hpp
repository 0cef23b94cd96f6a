#pragma once

#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "pvitau/toda.hpp"

namespace pvitau {

inline constexpr int kSchemaVersion = 1;

std::string sequence_key(Family f, const SeedParams& p, const NormalizationStrategy& s,
                         const GenerateOptions& o);
std::string sequence_key(const TauSequence& seq);

// One JSON document per sequence; coefficients ascending as decimal strings.
std::string write_sequence_document(const TauSequence& seq);
TauSequence read_sequence_document(const std::string& text);

// Thread-safe memo of generated sequences, optionally persisted to a
// directory. A stored sequence serves every request up to its length.
class SequenceCache {
 public:
  explicit SequenceCache(std::filesystem::path dir = {});

  std::shared_ptr<const TauSequence> get(Family f, const SeedParams& p, int N,
                                         const NormalizationStrategy& s,
                                         const GenerateOptions& o = {});
  std::size_t memory_entries() const;
  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path file_for(const std::string& key) const;

 private:
  using Entry = std::shared_future<std::shared_ptr<const TauSequence>>;
  std::shared_ptr<const TauSequence> load_or_generate(Family f, const SeedParams& p, int N,
                                                      const NormalizationStrategy& s,
                                                      const GenerateOptions& o,
                                                      const std::string& key);
  std::filesystem::path dir_;
  mutable std::mutex mu_;
  std::map<std::string, std::pair<int, Entry>> entries_;
};

// PVITAU_CACHE_DIR when set, else the given fallback.
std::filesystem::path cache_dir_from_env(const std::filesystem::path& fallback);

}  // namespace pvitau
