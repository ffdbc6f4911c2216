#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regkt/envelope.hpp"
#include "regkt/fingroup.hpp"
#include "regkt/freeword.hpp"
#include "regkt/multiplier.hpp"
#include "regkt/zlattice.hpp"

namespace regkt {

/// Generators written as s(x) e_i s(x)^-1.
struct CoreCertificate {
  std::vector<Word> core_elements;                          ///< the e_i
  std::vector<Word> section_words;                          ///< the s(x)
  std::vector<std::pair<std::size_t, std::size_t>> witness;  ///< per generator: (x, i)
};

/// Searches for a core: candidates are the reduced conjugates s(x)^-1 g s(x);
/// a greedy cover picks the candidates explaining the most generators.
/// nullopt means no certificate was found, not that none exists.
std::optional<CoreCertificate> find_core(const std::vector<Word>& gens,
                                         const std::vector<Word>& section_words);
/// Every witness equation holds verbatim and witnesses are injective.
bool verify_core(const CoreCertificate& cert, const std::vector<Word>& gens);

/// One vector of an abelianized family, labeled by (core index, coset).
struct WeakCoreEntry {
  std::size_t core_index = 0;
  std::size_t coset = 0;
  DenseRow vector;
};

/// True iff labels are injective, vectors are pairwise distinct, and the
/// family is a Z-basis of Z^rank.
bool check_weak_core(const std::vector<WeakCoreEntry>& data, std::size_t rank);

/// A core element of a splitting candidate.
struct CoreWord {
  std::string label;
  Word word;
};

enum class LevelFunction {
  SectionLength,  ///< length of the section word
  None,           ///< no level declared
};

/**
 * Splitting data for R = U_{D,F} cap U_{E,F}, F = D x E. The section sends a
 * word of U_F to pi_D(w) pi_E(w), the D-letters first; `swaps` exchanges the
 * representatives of given elements (used to build mutants).
 */
struct SplittingCandidate {
  FiniteGroup ambient;
  std::vector<Elem> d_elems, e_elems;  ///< images of D\1 and E\1 in F
  std::vector<Elem> d_part, e_part;    ///< g = (c,x) -> (c,1) and (1,x)
  std::vector<CoreWord> core;
  std::vector<std::pair<Word, Word>> swaps;
  LevelFunction level = LevelFunction::SectionLength;
  std::size_t start_length = 1;  ///< starting pairs: section words up to this length

  Word section(const Word& w) const;
  std::size_t level_of(const Word& section_word) const;
  bool in_section(const Word& w) const { return section(w) == w; }
  /// Section words up to start_length, shortlex order.
  std::vector<Word> starting_section() const;
};

SplittingCandidate product_example(const FiniteGroup& d, const FiniteGroup& e,
                                   std::size_t cap = kDefaultGroupCap);
/// The product example with the representatives of u_c and u_x exchanged for
/// the first c in D\1 and x in E\1.
SplittingCandidate scrambled(SplittingCandidate cand);

enum class SplittingVerdict { Converged, DivergedAtBound, MalformedCandidate };
std::string to_string(SplittingVerdict v);

struct SplittingResult {
  SplittingVerdict verdict = SplittingVerdict::Converged;
  std::size_t steps = 0;             ///< longest path, when converged
  bool level_decreasing = true;      ///< along every step into a nontrivial difference
  std::size_t pairs_explored = 0;
  std::string detail;
};

/// One factor x e x^-1 of a difference.
struct DifferenceFactor {
  Word conjugator;
  std::size_t core_index = 0;
  int sign = 1;
};

/// x1^-1 x2 (x1^-1 x2)^-1 for section words x1, x2.
Word section_difference(const SplittingCandidate& cand, const Word& x1, const Word& x2);
/// Rewriting along the section transversal, falling back to left-to-right
/// greedy peeling with bounded backtracking; nullopt on failure.
std::optional<std::vector<DifferenceFactor>> factor_difference(const SplittingCandidate& cand,
                                                               const Word& diff,
                                                               std::size_t backtrack = 3);

/// Runs the difference process from every pair of starting section words.
/// The children of a pair are the unordered pairs (k < l) of its distinct
/// conjugators, in factor order, followed by the section of x1^-1 x2.
SplittingResult check_strict_splitting(const SplittingCandidate& cand, std::size_t depth);

/// Outcome of testing the "weak core implies trivial K^J_2" consequence.
struct WeakCoreOutcome {
  enum class Status { Pass, Fail, Skipped } status = Status::Skipped;
  bool weak_core = false;
  bool free = false;
  AbelianGroupStructure kj2_structure;
  std::string reason;
};

/// For a finite pair, N/[N,N] is free abelian only when it is trivial, so a
/// weak core exists exactly for perfect N (with the empty family), and N is
/// free only when trivial. The consequence is tested when both hold.
WeakCoreOutcome weak_core_consequence(const FiniteGroup& f, const Subgroup& n,
                                 const MultiplierOptions& opt = {});

}  // namespace regkt
