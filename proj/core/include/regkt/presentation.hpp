#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "regkt/fingroup.hpp"
#include "regkt/freeword.hpp"
#include "regkt/zlattice.hpp"

namespace regkt {

/// A finite presentation on generators x_0 .. x_{k-1}, letter GenId{kTagPresentation, i}.
struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
};

/// Text form:
///   regkt-format 1
///   presentation <k>
///   <relator>            one per line; letters a, b, ... ; upper case = inverse
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);
/// "abAB" style rendering of a relator.
std::string relator_string(const Word& w);
Word relator_from_string(std::string_view s, std::size_t generators);

/// Complete coset table of the trivial subgroup: table[c][2j] = c.x_j,
/// table[c][2j+1] = c.x_j^-1. Coset 0 is the identity.
struct CosetTable {
  std::size_t generators = 0;
  std::vector<std::vector<std::uint32_t>> table;
  std::size_t size() const noexcept { return table.size(); }
};

/// Todd-Coxeter enumeration (HLT with coincidences) over the trivial subgroup.
/// Throws CapExceeded when more than `coset_cap` cosets are defined.
CosetTable enumerate_cosets(const Presentation& p, std::size_t coset_cap = 200000);

/// The presented group as a permutation group on its own cosets.
FiniteGroup presented_group(const Presentation& p, std::size_t coset_cap = 200000);

AbelianGroupStructure abelianization(const Presentation& p);

/**
 * H_2 of the presented finite group via the Hopf formula: R/[X,R] is the
 * coinvariant module of R^ab (R free on Schreier generators read off the
 * coset table); its torsion is (R cap [X,X])/[X,R]. Throws NotFinite when the
 * abelianization is infinite and CapExceeded when enumeration runs away.
 */
AbelianGroupStructure schur_hopf(const Presentation& p, std::size_t coset_cap = 200000);

/// Standard presentations of the small groups the corpus uses, by name:
/// C1..C12, C2xC2, C2xC2xC2, S3, D8, Q8, A4.
Presentation standard_presentation(std::string_view name);

}  // namespace regkt
