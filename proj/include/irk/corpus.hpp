#ifndef IRK_CORPUS_HPP
#define IRK_CORPUS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "irk/algebra.hpp"

namespace irk {

struct CorpusCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CorpusExample {
  int number = 0;
  std::string title;
  std::vector<CorpusCheck> checks;

  bool pass() const;
};

using AlgebraFactory = std::function<AlgebraPtr(Family, int)>;

/// Replays the four built-in worked examples and compares every published
/// value. The factory hook lets tests run the comparisons against a
/// deliberately corrupted algebra (negative control); the default uses the
/// shipped instances.
std::vector<CorpusExample> run_corpus(std::optional<int> only = std::nullopt,
                                      const AlgebraFactory& factory = {});

}  // namespace irk

#endif  // IRK_CORPUS_HPP
