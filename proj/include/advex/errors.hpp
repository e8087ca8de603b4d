#pragma once

#include <stdexcept>
#include <string>

namespace advex {

/// File or resource could not be ingested (bad format, duplicate entries, ...).
class LoadError : public std::runtime_error {
public:
  explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

/// A dataset line failed to parse; message names the offending line.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class TrainError : public std::runtime_error {
public:
  explicit TrainError(const std::string& what) : std::runtime_error(what) {}
};

/// Query word is not present in the embedding vocabulary.
class WordNotFound : public std::runtime_error {
public:
  explicit WordNotFound(const std::string& word)
      : std::runtime_error("word not in vocabulary: " + word) {}
};

/// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Every sampling weight is zero: nothing in the document can be replaced.
class NoReplaceablePositions : public std::runtime_error {
public:
  NoReplaceablePositions() : std::runtime_error("no replaceable positions") {}
};

/// The candidate set is empty after nearest-neighbor filtering.
class EmptyCandidates : public std::runtime_error {
public:
  EmptyCandidates() : std::runtime_error("empty candidate set") {}
};

/// Remote victim transport failed after all retries; the attack aborts.
class VictimUnavailable : public std::runtime_error {
public:
  explicit VictimUnavailable(const std::string& what) : std::runtime_error(what) {}
};

class CampaignError : public std::runtime_error {
public:
  explicit CampaignError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace advex
