#include "srli/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace srli {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cells;
}

int parse_int(const std::string& cell, const char* what, long line_number) {
  int value = 0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConllError(std::string("non-numeric ") + what + " field '" + cell + "'", line_number);
  }
  return value;
}

bool filled(const std::string& cell) { return !cell.empty() && cell != "_"; }

// Column positions per format. 2008: ID FORM LEMMA GPOS PPOS SPLIT_FORM
// SPLIT_LEMMA PPOSS HEAD DEPREL PRED APRED...; 2009: ID FORM LEMMA PLEMMA
// POS PPOS FEAT PFEAT HEAD PHEAD DEPREL PDEPREL FILLPRED PRED APRED...
struct Layout {
  std::size_t lemma, pos, head, deprel, pred, apred_base;
};

Layout layout_for(ConllFormat format, bool predicted) {
  if (format == ConllFormat::kConll2008) {
    // 2008 has no predicted head/deprel columns; only POS differs.
    return Layout{2, predicted ? 4u : 3u, 8, 9, 10, 11};
  }
  if (predicted) {
    return Layout{3, 5, 9, 11, 13, 14};
  }
  return Layout{2, 4, 8, 10, 13, 14};
}

struct PendingRow {
  Token token;
  bool is_predicate = false;
  std::vector<std::string> apreds;
  long line_number = 0;
};

Sentence finish_block(std::vector<PendingRow>& rows, long sentence_number) {
  Sentence sentence;
  sentence.tokens.reserve(rows.size());
  const int n = static_cast<int>(rows.size());

  std::size_t apred_count = rows.front().apreds.size();
  for (const PendingRow& row : rows) {
    if (row.apreds.size() != apred_count) {
      throw ConllError("inconsistent APRED column count within sentence block", row.line_number);
    }
  }

  int predicate_count = 0;
  for (PendingRow& row : rows) {
    if (row.token.index != static_cast<int>(&row - rows.data()) + 1) {
      throw ConllError("token ids not contiguous from 1", row.line_number);
    }
    if (row.token.head < 0 || row.token.head > n) {
      throw ConllError("HEAD out of range", row.line_number);
    }
    if (row.token.head == row.token.index) {
      throw ConllError("token is its own head", row.line_number);
    }
    if (row.is_predicate) {
      ++predicate_count;
    }
    sentence.tokens.push_back(std::move(row.token));
  }

  if (static_cast<std::size_t>(predicate_count) != apred_count) {
    std::ostringstream msg;
    msg << "sentence " << sentence_number << " has " << predicate_count << " predicates but "
        << apred_count << " APRED columns";
    throw ConllError(msg.str(), rows.front().line_number);
  }

  // The head relation must form a forest rooted at 0.
  for (int start = 1; start <= n; ++start) {
    int node = start;
    int steps = 0;
    while (node != 0) {
      node = sentence.tokens[static_cast<std::size_t>(node - 1)].head;
      if (++steps > n) {
        std::ostringstream msg;
        msg << "head cycle in sentence " << sentence_number;
        throw ConllError(msg.str(), rows.front().line_number);
      }
    }
  }

  int pred_slot = 0;
  for (const PendingRow& row : rows) {
    if (!row.is_predicate) {
      continue;
    }
    Predicate predicate;
    predicate.token_index = row.token.index;
    for (const PendingRow& arg_row : rows) {
      const std::string& cell = arg_row.apreds[static_cast<std::size_t>(pred_slot)];
      if (filled(cell)) {
        predicate.arguments.push_back(Argument{arg_row.token.index, cell});
      }
    }
    sentence.predicates.push_back(std::move(predicate));
    ++pred_slot;
  }
  return sentence;
}

}  // namespace

ConllError::ConllError(const std::string& message, long line)
    : std::runtime_error(line >= 0 ? message + " (line " + std::to_string(line) + ")" : message),
      line_(line) {}

ConllFormat parse_format_name(const std::string& name) {
  if (name == "conll2008") return ConllFormat::kConll2008;
  if (name == "conll2009") return ConllFormat::kConll2009;
  throw DataError("unknown CoNLL format '" + name + "'");
}

std::vector<Sentence> parse_conll(std::istream& in, ConllFormat format,
                                  const ParseOptions& options) {
  const Layout layout = layout_for(format, options.predicted_syntax);
  const std::size_t min_cols = layout.apred_base;

  std::vector<Sentence> sentences;
  std::vector<PendingRow> rows;
  std::string line;
  long line_number = 0;
  long sentence_number = 1;

  auto flush = [&]() {
    if (!rows.empty()) {
      sentences.push_back(finish_block(rows, sentence_number));
      rows.clear();
      ++sentence_number;
    }
  };

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      flush();
      continue;
    }
    std::vector<std::string> cells = split_tabs(line);
    if (cells.size() < min_cols) {
      std::ostringstream msg;
      msg << "expected at least " << min_cols << " columns, got " << cells.size();
      throw ConllError(msg.str(), line_number);
    }
    PendingRow row;
    row.line_number = line_number;
    row.token.index = parse_int(cells[0], "ID", line_number);
    row.token.form = cells[1];
    row.token.lemma = cells[layout.lemma];
    row.token.pos = cells[layout.pos];
    row.token.head = parse_int(cells[layout.head], "HEAD", line_number);
    row.token.deprel = cells[layout.deprel];
    row.is_predicate = filled(cells[layout.pred]);
    row.apreds.assign(cells.begin() + static_cast<std::ptrdiff_t>(layout.apred_base),
                      cells.end());
    rows.push_back(std::move(row));
  }
  flush();
  return sentences;
}

void write_conll(std::span<const Sentence> sentences, std::ostream& out, ConllFormat format) {
  for (const Sentence& sentence : sentences) {
    std::vector<const Predicate*> preds;
    preds.reserve(sentence.predicates.size());
    for (const Predicate& p : sentence.predicates) {
      preds.push_back(&p);
    }
    for (const Token& token : sentence.tokens) {
      const Predicate* self = nullptr;
      for (const Predicate* p : preds) {
        if (p->token_index == token.index) {
          self = p;
        }
      }
      out << token.index << '\t' << token.form << '\t' << token.lemma << '\t';
      if (format == ConllFormat::kConll2008) {
        out << token.pos << '\t' << token.pos << "\t_\t_\t_\t" << token.head << '\t'
            << token.deprel << '\t' << (self ? token.lemma : "_");
      } else {
        out << token.lemma << '\t' << token.pos << '\t' << token.pos << "\t_\t_\t"
            << token.head << '\t' << token.head << '\t' << token.deprel << '\t' << token.deprel
            << '\t' << (self ? "Y" : "_") << '\t' << (self ? token.lemma : "_");
      }
      for (const Predicate* p : preds) {
        const Argument* arg = nullptr;
        for (const Argument& a : p->arguments) {
          if (a.token_index == token.index) {
            arg = &a;
          }
        }
        out << '\t' << (arg && arg->gold_role ? *arg->gold_role : "_");
      }
      out << '\n';
    }
    out << '\n';
  }
}

std::vector<PredicateInstance> extract_instances(std::span<const Sentence> sentences,
                                                 const std::string& predicate_pos_prefix) {
  std::vector<PredicateInstance> instances;
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    const Sentence& sentence = sentences[si];
    for (const Predicate& predicate : sentence.predicates) {
      const Token& pred_token = sentence.token(predicate.token_index);
      if (!pred_token.pos.starts_with(predicate_pos_prefix)) {
        continue;
      }
      if (predicate.arguments.empty()) {
        continue;
      }
      PredicateInstance instance;
      instance.sentence_index = static_cast<int>(si);
      instance.predicate_token = predicate.token_index;
      instance.predicate_lemma = pred_token.lemma;
      instance.arguments.reserve(predicate.arguments.size());
      for (const Argument& argument : predicate.arguments) {
        InstanceArgument ia;
        ia.token_index = argument.token_index;
        ia.lemma = sentence.token(argument.token_index).lemma;
        ia.gold_role = argument.gold_role;
        instance.arguments.push_back(std::move(ia));
      }
      std::sort(instance.arguments.begin(), instance.arguments.end(),
                [](const InstanceArgument& a, const InstanceArgument& b) {
                  return a.token_index < b.token_index;
                });
      instances.push_back(std::move(instance));
    }
  }
  return instances;
}

Lexicon::Lexicon() { add(kUnkText, 0); }

int Lexicon::id(const std::string& lemma) const {
  auto it = ids_.find(lemma);
  return it == ids_.end() ? kUnk : it->second;
}

int Lexicon::add(const std::string& lemma, std::int64_t count) {
  auto [it, inserted] = ids_.emplace(lemma, static_cast<int>(entries_.size()));
  if (!inserted) {
    throw DataError("Lexicon::add: duplicate entry '" + lemma + "'");
  }
  entries_.push_back(Entry{lemma, count});
  total_ += count;
  return it->second;
}

void Lexicon::add_count(int id, std::int64_t delta) {
  entries_[static_cast<std::size_t>(id)].count += delta;
  total_ += delta;
}

Lexicon build_lexicon(std::span<const PredicateInstance> instances, int min_count) {
  std::unordered_map<std::string, std::int64_t> counts;
  for (const PredicateInstance& instance : instances) {
    for (const InstanceArgument& argument : instance.arguments) {
      ++counts[argument.lemma];
    }
  }
  Lexicon lexicon;
  // Second pass in corpus order keeps ids stable for identical input.
  for (const PredicateInstance& instance : instances) {
    for (const InstanceArgument& argument : instance.arguments) {
      if (counts.at(argument.lemma) >= min_count) {
        if (lexicon.id(argument.lemma) == Lexicon::kUnk && argument.lemma != Lexicon::kUnkText) {
          lexicon.add(argument.lemma, 0);
        }
        lexicon.add_count(lexicon.id(argument.lemma), 1);
      } else {
        lexicon.add_count(Lexicon::kUnk, 1);
      }
    }
  }
  return lexicon;
}

Lexicon build_verb_lexicon(std::span<const PredicateInstance> instances) {
  Lexicon verbs;
  for (const PredicateInstance& instance : instances) {
    if (verbs.id(instance.predicate_lemma) == Lexicon::kUnk &&
        instance.predicate_lemma != Lexicon::kUnkText) {
      verbs.add(instance.predicate_lemma, 0);
    }
    verbs.add_count(verbs.id(instance.predicate_lemma), 1);
  }
  return verbs;
}

void resolve_lemma_ids(std::span<PredicateInstance> instances, const Lexicon& lexicon,
                       const Lexicon& verbs) {
  for (PredicateInstance& instance : instances) {
    instance.verb_id = verbs.id(instance.predicate_lemma);
    for (InstanceArgument& argument : instance.arguments) {
      argument.lemma_id = lexicon.id(argument.lemma);
    }
  }
}

std::vector<double> unigram_distribution(const Lexicon& lexicon) {
  if (lexicon.total() <= 0) {
    throw DataError("unigram_distribution: lexicon has no counted occurrences");
  }
  std::vector<double> probabilities(static_cast<std::size_t>(lexicon.size()));
  const double total = static_cast<double>(lexicon.total());
  for (int i = 0; i < lexicon.size(); ++i) {
    probabilities[static_cast<std::size_t>(i)] = static_cast<double>(lexicon.count(i)) / total;
  }
  return probabilities;
}

}  // namespace srli
