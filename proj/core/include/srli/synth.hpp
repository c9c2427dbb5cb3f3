#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "srli/corpus.hpp"

namespace srli {

// Generator for dependency corpora with planted roles. Each role draws its
// filler lemmas from a mostly-disjoint vocabulary block and announces
// itself through surface cues (dependency relation, side of the predicate,
// and for one role a nested PP attachment); each cue is independently
// resampled with probability noise.
struct SynthConfig {
  int predicates = 5;
  int roles = 4;
  int vocabulary = 20;  // lemmas per role block (and in the shared block)
  int sentences = 5000;
  double noise = 0.2;  // cue resampling probability, must stay < 0.5
  // weight of argument count N = i + 1; clipped to the role count
  std::vector<double> argument_count_weights = {0.0, 1.0, 1.0, 1.0};
  std::uint64_t seed = 1;
  // When set, two roles share a dependency relation and are separated only
  // by their position cue, which caps what relation-only clustering can do.
  bool ambiguous_cues = true;
};

struct SynthCorpus {
  std::vector<Sentence> sentences;

  // The generator's fixed lemma-given-role tables, one row per role over
  // the noun alphabet below.
  std::vector<std::vector<double>> lemma_given_role;
  std::vector<std::string> noun_alphabet;

  struct GoldRow {
    int sentence_index = 0;
    int predicate_token = 0;
    int argument_token = 0;
    std::string role;
  };
  std::vector<GoldRow> gold;
};

SynthCorpus generate(const SynthConfig& config);

// Sidecar table: sentence_id, predicate token, argument token, gold role.
void write_gold_table(const SynthCorpus& corpus, std::ostream& out);

}  // namespace srli
