#include "srli/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace srli {

namespace {

using Contingency = std::map<int, std::map<std::string, long>>;

// cluster id -> gold label -> joint count, over labeled items only.
Contingency contingency(std::span<const ClusterItem> items) {
  Contingency table;
  for (const ClusterItem& item : items) {
    if (item.gold) {
      ++table[item.cluster][*item.gold];
    }
  }
  return table;
}

long labeled_count(std::span<const ClusterItem> items) {
  long n = 0;
  for (const ClusterItem& item : items) {
    if (item.gold) {
      ++n;
    }
  }
  return n;
}

double harmonic(double a, double b) { return a + b > 0.0 ? 2.0 * a * b / (a + b) : 0.0; }

}  // namespace

double purity(std::span<const ClusterItem> items) {
  const long n = labeled_count(items);
  if (n == 0) {
    return 0.0;
  }
  long matched = 0;
  for (const auto& [cluster, golds] : contingency(items)) {
    long best = 0;
    for (const auto& [gold, count] : golds) {
      best = std::max(best, count);
    }
    matched += best;
  }
  return static_cast<double>(matched) / static_cast<double>(n);
}

double collocation(std::span<const ClusterItem> items) {
  const long n = labeled_count(items);
  if (n == 0) {
    return 0.0;
  }
  std::map<std::string, long> best_per_gold;
  for (const auto& [cluster, golds] : contingency(items)) {
    for (const auto& [gold, count] : golds) {
      auto [it, inserted] = best_per_gold.try_emplace(gold, count);
      if (!inserted) {
        it->second = std::max(it->second, count);
      }
    }
  }
  long matched = 0;
  for (const auto& [gold, best] : best_per_gold) {
    matched += best;
  }
  return static_cast<double>(matched) / static_cast<double>(n);
}

Scores aggregate(const RoleClustering& clustering) {
  Scores scores;
  double purity_sum = 0.0;
  double collocation_sum = 0.0;
  for (const auto& [predicate, items] : clustering.by_predicate) {
    const long n = labeled_count(items);
    scores.skipped += static_cast<long>(items.size()) - n;
    if (n == 0) {
      continue;
    }
    PredicateScore ps;
    ps.predicate = predicate;
    ps.instances = n;
    ps.purity = purity(items);
    ps.collocation = collocation(items);
    ps.f1 = harmonic(ps.purity, ps.collocation);
    purity_sum += ps.purity * static_cast<double>(n);
    collocation_sum += ps.collocation * static_cast<double>(n);
    scores.scored += n;
    scores.per_predicate.push_back(std::move(ps));
  }
  if (scores.scored > 0) {
    scores.purity = purity_sum / static_cast<double>(scores.scored);
    scores.collocation = collocation_sum / static_cast<double>(scores.scored);
    scores.f1 = harmonic(scores.purity, scores.collocation);
  }
  return scores;
}

RoleClustering syntf_baseline(std::span<const Sentence> sentences,
                              std::span<const PredicateInstance> instances, int top_k) {
  std::map<std::string, long> frequencies;
  for (const PredicateInstance& instance : instances) {
    const Sentence& sentence = sentences[static_cast<std::size_t>(instance.sentence_index)];
    for (const InstanceArgument& argument : instance.arguments) {
      ++frequencies[sentence.token(argument.token_index).deprel];
    }
  }
  std::vector<std::pair<std::string, long>> ranked(frequencies.begin(), frequencies.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) {
      return a.second > b.second;
    }
    return a.first < b.first;
  });
  std::map<std::string, int> cluster_of;
  for (std::size_t rank = 0; rank < ranked.size() && rank < static_cast<std::size_t>(top_k);
       ++rank) {
    cluster_of[ranked[rank].first] = static_cast<int>(rank);
  }

  RoleClustering clustering;
  for (const PredicateInstance& instance : instances) {
    const Sentence& sentence = sentences[static_cast<std::size_t>(instance.sentence_index)];
    auto& items = clustering.by_predicate[instance.predicate_lemma];
    for (const InstanceArgument& argument : instance.arguments) {
      const std::string& deprel = sentence.token(argument.token_index).deprel;
      auto it = cluster_of.find(deprel);
      ClusterItem item;
      item.cluster = it == cluster_of.end() ? top_k : it->second;
      item.gold = argument.gold_role;
      items.push_back(std::move(item));
    }
  }
  return clustering;
}

void write_report(const Scores& scores, std::ostream& out) {
  out << "predicate\tinstances\tpurity\tcollocation\tf1\n";
  char buffer[64];
  auto fmt = [&buffer](double v) {
    std::snprintf(buffer, sizeof buffer, "%.6f", v);
    return std::string(buffer);
  };
  for (const PredicateScore& ps : scores.per_predicate) {
    out << ps.predicate << '\t' << ps.instances << '\t' << fmt(ps.purity) << '\t'
        << fmt(ps.collocation) << '\t' << fmt(ps.f1) << '\n';
  }
  out << "<overall>\t" << scores.scored << '\t' << fmt(scores.purity) << '\t'
      << fmt(scores.collocation) << '\t' << fmt(scores.f1) << '\n';
  out << "<skipped>\t" << scores.skipped << "\t-\t-\t-\n";
}

void write_report_json(const Scores& scores, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["purity"] = scores.purity;
  doc["collocation"] = scores.collocation;
  doc["f1"] = scores.f1;
  doc["scored"] = scores.scored;
  doc["skipped"] = scores.skipped;
  auto& rows = doc["per_predicate"] = nlohmann::ordered_json::array();
  for (const PredicateScore& ps : scores.per_predicate) {
    rows.push_back({{"predicate", ps.predicate},
                    {"instances", ps.instances},
                    {"purity", ps.purity},
                    {"collocation", ps.collocation},
                    {"f1", ps.f1}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace srli
