#include "srli/features.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace srli {

namespace {

constexpr const char* kNone = "NONE";
constexpr const char* kDisconnected = "DISCONNECTED";
constexpr const char* kUp = "↑";    // ↑
constexpr const char* kDown = "↓";  // ↓
constexpr const char* kAnd = "∧";   // ∧
constexpr const char* kEmptyPath = "∅";  // ∅

struct Path {
  bool connected = false;
  std::vector<int> up;    // token indices from argument to common ancestor, exclusive
  std::vector<int> down;  // token indices from below the ancestor down to the predicate
  int ancestor = 0;
  int length() const { return static_cast<int>(up.size() + down.size()); }
};

// Walk both head chains to the nearest common ancestor. The virtual root 0
// is not a token; chains that meet only there are in different trees.
Path trace_path(const Sentence& sentence, int predicate, int argument) {
  Path path;
  std::vector<int> arg_chain;  // argument, h(argument), ... up to a root
  for (int node = argument; node != 0; node = sentence.token(node).head) {
    arg_chain.push_back(node);
    if (arg_chain.size() > sentence.tokens.size()) {
      throw DataError("trace_path: head cycle");
    }
  }
  std::vector<int> pred_chain;
  for (int node = predicate; node != 0; node = sentence.token(node).head) {
    pred_chain.push_back(node);
    if (pred_chain.size() > sentence.tokens.size()) {
      throw DataError("trace_path: head cycle");
    }
  }
  for (int node : pred_chain) {
    auto it = std::find(arg_chain.begin(), arg_chain.end(), node);
    if (it != arg_chain.end()) {
      path.connected = true;
      path.ancestor = node;
      path.up.assign(arg_chain.begin(), it);
      // Nodes strictly below the ancestor on the predicate side, ordered
      // from the ancestor toward the predicate.
      for (auto pit = pred_chain.begin(); *pit != node; ++pit) {
        path.down.push_back(*pit);
      }
      std::reverse(path.down.begin(), path.down.end());
      return path;
    }
  }
  return path;  // different trees of the forest
}

std::string bucket_length(int length) {
  if (length <= 1) return "1";
  if (length >= 5) return "5+";
  return std::to_string(length);
}

}  // namespace

std::vector<std::string> extract_features(const Sentence& sentence, int predicate_token,
                                          int argument_token) {
  const Token& pred = sentence.token(predicate_token);
  const Token& arg = sentence.token(argument_token);

  std::vector<std::string> features;
  features.reserve(kFeaturePatternCount);

  features.push_back("P1=" + pred.lemma);
  features.push_back("P2=" + pred.pos);
  features.push_back("P3=" + arg.form);
  features.push_back("P4=" + arg.lemma);
  features.push_back("P5=" + arg.pos);
  features.push_back("P6=" + arg.deprel);

  const char* position = argument_token == predicate_token
                             ? "self"
                             : (argument_token < predicate_token ? "before" : "after");
  features.push_back(std::string("P7=") + position);

  std::string path_string;
  std::string path_bucket;
  std::string path_pos;
  if (argument_token == predicate_token) {
    path_string = kEmptyPath;
    path_bucket = "1";
    path_pos = arg.pos;
  } else {
    Path path = trace_path(sentence, predicate_token, argument_token);
    if (!path.connected) {
      path_string = kDisconnected;
      path_bucket = kDisconnected;
      path_pos = kDisconnected;
    } else {
      for (int node : path.up) {
        path_string += sentence.token(node).deprel;
        path_string += kUp;
        path_pos += sentence.token(node).pos;
        path_pos += '_';
      }
      path_pos += sentence.token(path.ancestor).pos;
      for (int node : path.down) {
        path_string += sentence.token(node).deprel;
        path_string += kDown;
        path_pos += '_';
        path_pos += sentence.token(node).pos;
      }
      path_bucket = bucket_length(path.length());
    }
  }
  features.push_back("P8=" + path_string);
  features.push_back("P9=" + path_bucket);
  features.push_back("P10=" + path_pos);

  int leftmost = 0;
  int rightmost = 0;
  for (const Token& token : sentence.tokens) {
    if (token.head == argument_token) {
      if (leftmost == 0 || token.index < leftmost) leftmost = token.index;
      if (rightmost == 0 || token.index > rightmost) rightmost = token.index;
    }
  }
  features.push_back("P11=" + (leftmost ? sentence.token(leftmost).lemma : kNone));
  features.push_back("P12=" + (rightmost ? sentence.token(rightmost).lemma : kNone));

  if (pred.head == 0) {
    features.push_back("P13=ROOT");
  } else {
    features.push_back("P13=" + pred.deprel + kAnd + sentence.token(pred.head).pos);
  }

  features.push_back("P14=" + arg.deprel + kAnd + position);

  assert(static_cast<int>(features.size()) == kFeaturePatternCount);
  return features;
}

int FeatureIndex::id(const std::string& feature) const {
  auto it = ids_.find(feature);
  return it == ids_.end() ? -1 : it->second;
}

int FeatureIndex::add(const std::string& feature, std::int64_t count) {
  if (frozen_) {
    throw DataError("FeatureIndex::add on a frozen index");
  }
  auto [it, inserted] = ids_.emplace(feature, static_cast<int>(entries_.size()));
  if (!inserted) {
    throw DataError("FeatureIndex::add: duplicate feature '" + feature + "'");
  }
  entries_.push_back(Entry{feature, count});
  return it->second;
}

FeatureIndex index_features(std::span<const Sentence> sentences,
                            std::span<const PredicateInstance> instances, int min_count) {
  std::unordered_map<std::string, std::int64_t> counts;
  for (const PredicateInstance& instance : instances) {
    const Sentence& sentence = sentences[static_cast<std::size_t>(instance.sentence_index)];
    for (const InstanceArgument& argument : instance.arguments) {
      for (std::string& feature :
           extract_features(sentence, instance.predicate_token, argument.token_index)) {
        ++counts[feature];
      }
    }
  }
  FeatureIndex index;
  for (const PredicateInstance& instance : instances) {
    const Sentence& sentence = sentences[static_cast<std::size_t>(instance.sentence_index)];
    for (const InstanceArgument& argument : instance.arguments) {
      for (std::string& feature :
           extract_features(sentence, instance.predicate_token, argument.token_index)) {
        if (counts.at(feature) >= min_count && index.id(feature) < 0) {
          index.add(feature, counts.at(feature));
        }
      }
    }
  }
  index.freeze();
  return index;
}

SparseVector vectorize(const Sentence& sentence, int predicate_token, int argument_token,
                       const FeatureIndex& index) {
  if (!index.frozen()) {
    throw DataError("vectorize: feature index must be frozen");
  }
  SparseVector ids;
  for (const std::string& feature : extract_features(sentence, predicate_token, argument_token)) {
    int id = index.id(feature);
    if (id >= 0) {
      ids.push_back(id);
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace srli
