#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "srli/corpus.hpp"

namespace srli {

inline constexpr int kFeaturePatternCount = 14;

// One string per pattern, namespaced "Pk=value". Always returns exactly 14
// strings; patterns without a value emit NONE placeholders.
std::vector<std::string> extract_features(const Sentence& sentence, int predicate_token,
                                          int argument_token);

// Feature string <-> dense id map. Once frozen, unknown strings are dropped
// rather than assigned new ids.
class FeatureIndex {
 public:
  int id(const std::string& feature) const;  // -1 when absent
  const std::string& text(int id) const { return entries_[static_cast<std::size_t>(id)].text; }
  std::int64_t count(int id) const { return entries_[static_cast<std::size_t>(id)].count; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool frozen() const { return frozen_; }

  int add(const std::string& feature, std::int64_t count);
  void freeze() { frozen_ = true; }

 private:
  struct Entry {
    std::string text;
    std::int64_t count = 0;
  };
  std::vector<Entry> entries_;
  std::unordered_map<std::string, int> ids_;
  bool frozen_ = false;
};

// Indexes every feature string with corpus frequency >= min_count; the
// returned index is frozen. Ids follow first occurrence order.
FeatureIndex index_features(std::span<const Sentence> sentences,
                            std::span<const PredicateInstance> instances, int min_count);

// Sorted distinct feature ids; binary indicators.
using SparseVector = std::vector<int>;

// extract_features composed with id lookup; unknown features are dropped.
SparseVector vectorize(const Sentence& sentence, int predicate_token, int argument_token,
                       const FeatureIndex& index);

}  // namespace srli
