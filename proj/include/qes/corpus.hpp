#pragma once

#include "qes/problem.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qes {

// Problem specs for the built-in potentials.
namespace corpus {

// x^4 + 4x^3 + 2x^2 - mu x; nullopt leaves mu free.
ProblemSpec quartic(std::optional<Rational> mu = std::nullopt);
// x^6 - (4J - 1)x^2 with J = (s + 2)/2.
ProblemSpec sextic_first(unsigned s);
// x^6 - (4J + 1)x^2 with J = (s + 1)/2.
ProblemSpec sextic_second(unsigned s);
// x^8 + (2 delta + 4)x^4 + mu x^3 + delta^2 + 4 delta + 4.
ProblemSpec octic();
// x^10 - x^8 + x^6 + delta x^4 + epsilon x^2.
ProblemSpec decatic();
// x^12 + kappa x^6 + mu x^5.
ProblemSpec dodecatic();
// (x^7 + delta + 2)^2 + mu x^6 + kappa x^2.
ProblemSpec tetrakaidecatic();
ProblemSpec harmonic();

}  // namespace corpus

enum class RowStatus { Pass, Flag, Fail };

std::string_view to_string(RowStatus s);

struct RowResult {
  std::string table;
  std::string label;
  RowStatus status = RowStatus::Fail;
  std::string expected;
  std::string actual;
  std::string note;
};

struct CorpusResult {
  std::vector<RowResult> rows;

  bool passed() const;
};

// "table1" ... "table15".
std::vector<std::string> corpus_tables();

// Recomputes the rows of one table ("table7" or "7") or of "all". Flagged
// rows match a corrected expectation that differs from the printed table.
// Throws UsageError for unknown ids.
CorpusResult reproduce_corpus(std::string_view table_id);

std::string render_corpus(const CorpusResult& result);

}  // namespace qes
