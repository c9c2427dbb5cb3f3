#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace srli {

// Malformed input file; carries the 1-based line number when one is known.
class ConllError : public std::runtime_error {
 public:
  explicit ConllError(const std::string& message, long line = -1);
  long line() const { return line_; }

 private:
  long line_;
};

// Content-level failure (consistent files, inconsistent data).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Token {
  int index = 0;  // 1-based position in the sentence
  std::string form;
  std::string lemma;
  std::string pos;
  int head = 0;  // 0 = syntactic root
  std::string deprel;

  bool operator==(const Token&) const = default;
};

struct Argument {
  int token_index = 0;
  std::optional<std::string> gold_role;

  bool operator==(const Argument&) const = default;
};

struct Predicate {
  int token_index = 0;
  std::vector<Argument> arguments;  // ordered by token index

  bool operator==(const Predicate&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::vector<Predicate> predicates;

  const Token& token(int index) const { return tokens[static_cast<std::size_t>(index - 1)]; }
  int size() const { return static_cast<int>(tokens.size()); }

  bool operator==(const Sentence&) const = default;
};

enum class ConllFormat { kConll2008, kConll2009 };

struct ParseOptions {
  // Read the predicted syntax columns where the format provides them
  // (PPOS for 2008; PLEMMA/PPOS/PHEAD/PDEPREL for 2009) instead of gold.
  bool predicted_syntax = false;
};

ConllFormat parse_format_name(const std::string& name);

std::vector<Sentence> parse_conll(std::istream& in, ConllFormat format,
                                  const ParseOptions& options = {});
void write_conll(std::span<const Sentence> sentences, std::ostream& out, ConllFormat format);

// One predicate occurrence with its argument slots. Lemma ids are resolved
// against the lexicons after those are built; until then they stay -1.
struct InstanceArgument {
  int token_index = 0;
  std::string lemma;
  int lemma_id = -1;
  std::optional<std::string> gold_role;
};

struct PredicateInstance {
  int sentence_index = 0;  // position within the parsed corpus
  int predicate_token = 0;
  std::string predicate_lemma;
  int verb_id = -1;
  std::vector<InstanceArgument> arguments;  // ordered by token index, never empty
};

// Keeps predicates whose POS starts with the prefix and that have at least
// one annotated argument.
std::vector<PredicateInstance> extract_instances(std::span<const Sentence> sentences,
                                                 const std::string& predicate_pos_prefix);

// Lemma alphabet with occurrence counts. Id 0 is reserved for UNK; counts
// of lemmas folded into UNK accumulate on the UNK entry, so total() equals
// the number of occurrences seen while building.
class Lexicon {
 public:
  static constexpr int kUnk = 0;
  static constexpr const char* kUnkText = "<UNK>";

  Lexicon();

  int id(const std::string& lemma) const;  // kUnk when absent
  const std::string& text(int id) const { return entries_[static_cast<std::size_t>(id)].text; }
  std::int64_t count(int id) const { return entries_[static_cast<std::size_t>(id)].count; }
  std::int64_t total() const { return total_; }
  int size() const { return static_cast<int>(entries_.size()); }

  // Building blocks, also used by the model loader. add() requires the
  // lemma to be new and returns its id.
  int add(const std::string& lemma, std::int64_t count);
  void add_count(int id, std::int64_t delta);

 private:
  struct Entry {
    std::string text;
    std::int64_t count = 0;
  };
  std::vector<Entry> entries_;
  std::unordered_map<std::string, int> ids_;
  std::int64_t total_ = 0;
};

// Argument-lemma alphabet: lemmas with corpus frequency >= min_count get
// dedicated ids, the rest fold into UNK. Ids follow first occurrence order,
// so identical input yields an identical lexicon.
Lexicon build_lexicon(std::span<const PredicateInstance> instances, int min_count);

// Predicate-lemma alphabet; every verb seen gets an id.
Lexicon build_verb_lexicon(std::span<const PredicateInstance> instances);

// Fills lemma_id / verb_id on every instance.
void resolve_lemma_ids(std::span<PredicateInstance> instances, const Lexicon& lexicon,
                       const Lexicon& verbs);

// p(a) = count(a) / total, indexed by lemma id. Throws DataError on an
// empty lexicon (total count zero).
std::vector<double> unigram_distribution(const Lexicon& lexicon);

}  // namespace srli
