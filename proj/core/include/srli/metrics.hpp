#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srli/corpus.hpp"

namespace srli {

// One scored argument occurrence: the induced cluster id and, when the
// corpus provides one, the gold role label.
struct ClusterItem {
  int cluster = 0;
  std::optional<std::string> gold;
};

// Argument instances grouped by predicate lemma; clusters are never shared
// across predicates for evaluation.
struct RoleClustering {
  std::map<std::string, std::vector<ClusterItem>> by_predicate;
};

// PU = (1/N) sum_i max_j |G_j intersect C_i| over items with gold labels.
double purity(std::span<const ClusterItem> items);

// CO = (1/N) sum_j max_i |G_j intersect C_i|.
double collocation(std::span<const ClusterItem> items);

struct PredicateScore {
  std::string predicate;
  long instances = 0;  // gold-labeled occurrences
  double purity = 0.0;
  double collocation = 0.0;
  double f1 = 0.0;
};

struct Scores {
  double purity = 0.0;
  double collocation = 0.0;
  double f1 = 0.0;
  long scored = 0;   // instances entering the aggregate
  long skipped = 0;  // instances without gold labels
  std::vector<PredicateScore> per_predicate;
};

// Instance-count-weighted means of the per-predicate scores; F1 is the
// harmonic mean of the aggregate PU and CO.
Scores aggregate(const RoleClustering& clustering);

// Clusters arguments by the dependency relation to their head: the top_k
// most frequent relations (over argument tokens; frequency ties broken
// lexicographically) get their own cluster, everything else shares one.
RoleClustering syntf_baseline(std::span<const Sentence> sentences,
                              std::span<const PredicateInstance> instances, int top_k = 20);

// Tab-separated report: per-predicate rows then the overall line.
void write_report(const Scores& scores, std::ostream& out);
// Same content as a JSON document.
void write_report_json(const Scores& scores, std::ostream& out);

}  // namespace srli
