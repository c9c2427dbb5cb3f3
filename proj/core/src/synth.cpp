#include "srli/synth.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "srli/rng.hpp"

namespace srli {

namespace {

struct Cue {
  std::string deprel;
  bool nested = false;  // attach under a preposition (PP-style)
  bool before = false;  // side of the predicate
};

// Surface archetype per role. Role 2 is the nested one; in the ambiguous
// regime role 3 reuses role 1's relation and differs only in position.
std::vector<Cue> role_cues(int roles, bool ambiguous) {
  std::vector<Cue> cues;
  cues.reserve(static_cast<std::size_t>(roles));
  for (int r = 0; r < roles; ++r) {
    switch (r) {
      case 0:
        cues.push_back(Cue{"SBJ", false, true});
        break;
      case 1:
        cues.push_back(Cue{"OBJ", false, false});
        break;
      case 2:
        cues.push_back(Cue{"PMOD", true, false});
        break;
      case 3:
        cues.push_back(ambiguous ? Cue{"OBJ", false, true} : Cue{"DIR", false, true});
        break;
      default:
        cues.push_back(Cue{"REL" + std::to_string(r), false, r % 2 == 0});
        break;
    }
  }
  return cues;
}

constexpr double kSharedMass = 0.1;

}  // namespace

SynthCorpus generate(const SynthConfig& config) {
  if (config.predicates < 1 || config.roles < 1 || config.vocabulary < 1 ||
      config.sentences < 1) {
    throw DataError("generate: predicates, roles, vocabulary and sentences must be positive");
  }
  if (config.noise < 0.0 || config.noise >= 0.5) {
    throw DataError("generate: noise must lie in [0, 0.5)");
  }

  const int roles = config.roles;
  const int vocab = config.vocabulary;

  SynthCorpus corpus;

  // Noun alphabet: one block per role plus a shared block every role can
  // draw from with small probability.
  for (int r = 0; r < roles; ++r) {
    for (int j = 0; j < vocab; ++j) {
      corpus.noun_alphabet.push_back("n" + std::to_string(r) + "_" + std::to_string(j));
    }
  }
  for (int j = 0; j < vocab; ++j) {
    corpus.noun_alphabet.push_back("shared_" + std::to_string(j));
  }
  const std::size_t alphabet_size = corpus.noun_alphabet.size();

  corpus.lemma_given_role.assign(static_cast<std::size_t>(roles),
                                 std::vector<double>(alphabet_size, 0.0));
  for (int r = 0; r < roles; ++r) {
    auto& row = corpus.lemma_given_role[static_cast<std::size_t>(r)];
    for (int j = 0; j < vocab; ++j) {
      row[static_cast<std::size_t>(r * vocab + j)] = (1.0 - kSharedMass) / vocab;
      row[static_cast<std::size_t>(roles * vocab + j)] = kSharedMass / vocab;
    }
  }

  const std::vector<Cue> cues = role_cues(roles, config.ambiguous_cues);
  std::vector<std::string> labels;
  for (const Cue& cue : cues) {
    if (std::find(labels.begin(), labels.end(), cue.deprel) == labels.end()) {
      labels.push_back(cue.deprel);
    }
  }

  std::vector<DiscreteSampler> lemma_samplers;
  lemma_samplers.reserve(static_cast<std::size_t>(roles));
  for (int r = 0; r < roles; ++r) {
    lemma_samplers.emplace_back(corpus.lemma_given_role[static_cast<std::size_t>(r)]);
  }
  std::vector<double> count_weights = config.argument_count_weights;
  if (static_cast<int>(count_weights.size()) > roles) {
    count_weights.resize(static_cast<std::size_t>(roles));
  }
  if (std::accumulate(count_weights.begin(), count_weights.end(), 0.0) <= 0.0) {
    throw DataError("generate: argument count weights sum to zero after clipping");
  }
  DiscreteSampler count_sampler(count_weights);

  Rng rng(config.seed);
  std::vector<int> role_pool(static_cast<std::size_t>(roles));
  std::iota(role_pool.begin(), role_pool.end(), 0);

  struct DrawnArg {
    int role = 0;
    std::string lemma;
    std::string deprel;
    bool nested = false;
    bool before = false;
  };

  for (int si = 0; si < config.sentences; ++si) {
    const int verb = static_cast<int>(rng.below(static_cast<std::uint64_t>(config.predicates)));
    const int count = count_sampler.sample(rng) + 1;
    rng.shuffle(role_pool);
    std::vector<int> chosen(role_pool.begin(), role_pool.begin() + count);
    std::sort(chosen.begin(), chosen.end());

    std::vector<DrawnArg> args;
    args.reserve(chosen.size());
    for (int role : chosen) {
      const Cue& cue = cues[static_cast<std::size_t>(role)];
      DrawnArg arg;
      arg.role = role;
      arg.lemma = corpus.noun_alphabet[static_cast<std::size_t>(
          lemma_samplers[static_cast<std::size_t>(role)].sample(rng))];
      arg.deprel = cue.deprel;
      arg.nested = cue.nested;
      arg.before = cue.before;
      if (rng.uniform() < config.noise) {
        arg.deprel = labels[rng.below(labels.size())];
      }
      if (rng.uniform() < config.noise) {
        arg.before = rng.below(2) == 0;
      }
      args.push_back(std::move(arg));
    }

    Sentence sentence;
    Predicate predicate;
    auto emit_arg = [&](const DrawnArg& arg, int head_of_plain) {
      if (arg.nested) {
        const int prep_index = static_cast<int>(sentence.tokens.size()) + 1;
        sentence.tokens.push_back(
            Token{prep_index, "with", "with", "IN", head_of_plain, "ADV"});
        const int noun_index = prep_index + 1;
        sentence.tokens.push_back(
            Token{noun_index, arg.lemma, arg.lemma, "NN", prep_index, arg.deprel});
        predicate.arguments.push_back(Argument{noun_index, "R" + std::to_string(arg.role)});
      } else {
        const int index = static_cast<int>(sentence.tokens.size()) + 1;
        sentence.tokens.push_back(
            Token{index, arg.lemma, arg.lemma, "NN", head_of_plain, arg.deprel});
        predicate.arguments.push_back(Argument{index, "R" + std::to_string(arg.role)});
      }
    };

    int before_tokens = 0;
    for (const DrawnArg& arg : args) {
      if (arg.before) {
        before_tokens += arg.nested ? 2 : 1;
      }
    }
    const int predicate_index = before_tokens + 1;
    for (const DrawnArg& arg : args) {
      if (arg.before) {
        emit_arg(arg, predicate_index);
      }
    }
    const std::string verb_lemma = "v" + std::to_string(verb);
    sentence.tokens.push_back(Token{predicate_index, verb_lemma, verb_lemma, "VB", 0, "ROOT"});
    predicate.token_index = predicate_index;
    for (const DrawnArg& arg : args) {
      if (!arg.before) {
        emit_arg(arg, predicate_index);
      }
    }

    std::sort(predicate.arguments.begin(), predicate.arguments.end(),
              [](const Argument& a, const Argument& b) { return a.token_index < b.token_index; });
    for (const Argument& argument : predicate.arguments) {
      corpus.gold.push_back(SynthCorpus::GoldRow{si, predicate_index, argument.token_index,
                                                 *argument.gold_role});
    }
    sentence.predicates.push_back(std::move(predicate));
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

void write_gold_table(const SynthCorpus& corpus, std::ostream& out) {
  out << "#sentence\tpredicate\targument\trole\n";
  for (const SynthCorpus::GoldRow& row : corpus.gold) {
    out << row.sentence_index << '\t' << row.predicate_token << '\t' << row.argument_token
        << '\t' << row.role << '\n';
  }
}

}  // namespace srli
