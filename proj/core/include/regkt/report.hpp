#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regkt/zlattice.hpp"

namespace regkt {

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

/// Replayable evidence: words in text form plus an optional integer matrix.
struct Certificate {
  std::string name;
  std::vector<std::string> words;
  DenseMatrix matrix;
  std::vector<std::string> notes;
};

struct Report {
  std::string suite;
  std::string subject;  ///< group or pair the suite ran on
  Verdict verdict = Verdict::Pass;
  std::uint64_t seed = 0;
  std::string detail;
  std::vector<Certificate> certificates;
  std::optional<double> seconds;  ///< only filled when timing was requested
};

/// Fail if any report fails, otherwise Pass (an all-skipped list passes).
Verdict overall(const std::vector<Report>& reports);

/// Sorts by (suite, subject), the order every output uses.
void sort_reports(std::vector<Report>& reports);

/// One line per report after a `regkt-format 1` header, then a summary line.
std::string format_text(const std::vector<Report>& reports);
/// {"format": 1, "seed": .., "verdict": .., "suites": [...]}
std::string format_json(const std::vector<Report>& reports, std::uint64_t seed);

}  // namespace regkt
