#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regkt/fingroup.hpp"

namespace regkt {

/// Alphabet tags in use across the library. Tags are open ended; these are
/// just the ones the library itself mints.
enum : std::uint32_t {
  kTagEnvelope = 0,      ///< u_x, index = element index of the base group
  kTagBasis = 1,         ///< free basis letters produced by Stallings graphs
  kTagRelative = 2,      ///< interned relative letters of a relative envelope
  kTagAux = 3,           ///< scratch alphabets (tests, examples)
  kTagPresentation = 4,  ///< generators of a finite presentation
};

struct GenId {
  std::uint32_t tag = 0;
  std::uint64_t index = 0;

  friend auto operator<=>(const GenId&, const GenId&) = default;
};

struct Letter {
  GenId gen;
  int sign = 1;  ///< +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.sign <=> b.sign;
  }
};

/// A freely reduced word. Every constructor reduces, so a Word value is always
/// in normal form.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word letter(GenId g, int sign = 1) { return Word(std::vector<Letter>{{g, sign}}); }
  static Word letter(std::uint32_t tag, std::uint64_t index, int sign = 1) {
    return letter(GenId{tag, index}, sign);
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word mul(const Word& a, const Word& b);
Word inv(const Word& a);
/// by · a · by^-1
Word conj(const Word& a, const Word& by);
/// a · b · a^-1 · b^-1
Word comm(const Word& a, const Word& b);
Word power(const Word& w, long long k);

/// Free reduction of an arbitrary letter sequence.
std::vector<Letter> reduce(std::vector<Letter> letters);
bool is_reduced(const std::vector<Letter>& letters);

using WordAssignment = std::map<GenId, Word>;
using WordAssignmentFn = std::function<std::optional<Word>(GenId)>;

/// Homomorphic image of w. Throws UnmappedGenerator for a letter without image.
Word apply_hom(const WordAssignment& assignment, const Word& w);
Word apply_hom(const WordAssignmentFn& assignment, const Word& w);

using ElemAssignmentFn = std::function<std::optional<Elem>(GenId)>;

/// Image of w in a finite group. Throws UnmappedGenerator.
Elem evaluate(const Word& w, const FiniteGroup& g, const ElemAssignmentFn& assignment);
Elem evaluate(const Word& w, const FiniteGroup& g, const std::map<GenId, Elem>& assignment);

/// Text form: whitespace-separated `g<tag>:<index>` tokens, `'` marks an
/// inverse. The empty word prints as the empty string.
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace regkt
