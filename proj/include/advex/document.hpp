#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "advex/errors.hpp"

namespace advex {

enum class Task { sentiment, entailment };

/// A tokenized text under word-for-word substitution. Length never changes;
/// modified_mask[i] is true iff tokens[i] differs from the token it was
/// derived from.
struct Document {
  std::vector<std::string> tokens;
  std::vector<std::string> origin_tokens;
  std::vector<bool> modified_mask;

  static Document from_tokens(std::vector<std::string> toks) {
    Document doc;
    doc.origin_tokens = toks;
    doc.tokens = std::move(toks);
    doc.modified_mask.assign(doc.tokens.size(), false);
    return doc;
  }

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  void substitute(std::size_t pos, std::string word) {
    if (pos >= tokens.size()) {
      throw ContractViolation("substitute: position out of range");
    }
    tokens[pos] = std::move(word);
    modified_mask[pos] = tokens[pos] != origin_tokens[pos];
  }

  std::size_t modified_count() const {
    std::size_t n = 0;
    for (bool m : modified_mask) n += m ? 1 : 0;
    return n;
  }

  double modified_fraction() const {
    if (tokens.empty()) return 0.0;
    return static_cast<double>(modified_count()) / static_cast<double>(tokens.size());
  }

  bool operator==(const Document& other) const {
    return tokens == other.tokens && origin_tokens == other.origin_tokens;
  }
};

/// One dataset row: a class id plus one document (sentiment) or a
/// premise/hypothesis pair (entailment).
struct LabeledExample {
  int label = 0;
  std::vector<Document> docs;

  bool is_pair() const { return docs.size() == 2; }

  const Document& text() const {
    if (docs.size() != 1) throw ContractViolation("text(): example is not single-document");
    return docs[0];
  }
  const Document& premise() const {
    if (docs.size() != 2) throw ContractViolation("premise(): example is not a pair");
    return docs[0];
  }
  const Document& hypothesis() const {
    if (docs.size() != 2) throw ContractViolation("hypothesis(): example is not a pair");
    return docs[1];
  }
};

}  // namespace advex
