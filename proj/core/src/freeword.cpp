#include "regkt/freeword.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace regkt {

namespace {

bool cancels(const Letter& a, const Letter& b) { return a.gen == b.gen && a.sign == -b.sign; }

}  // namespace

std::vector<Letter> reduce(std::vector<Letter> letters) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (top > 0 && cancels(letters[top - 1], letters[i])) {
      --top;
    } else {
      letters[top++] = letters[i];
    }
  }
  letters.resize(top);
  return letters;
}

bool is_reduced(const std::vector<Letter>& letters) {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (cancels(letters[i - 1], letters[i])) return false;
  return true;
}

Word::Word(std::vector<Letter> letters) {
  for (const auto& l : letters)
    if (l.sign != 1 && l.sign != -1) throw Error(ErrorKind::ParseError, "letter sign must be +1 or -1");
  letters_ = reduce(std::move(letters));
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back({it->gen, -it->sign});
  return r;
}

Word& Word::operator*=(const Word& rhs) {
  std::size_t k = 0;
  while (k < rhs.size() && !letters_.empty() && cancels(letters_.back(), rhs.letters_[k])) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + std::ptrdiff_t(k), rhs.letters_.end());
  return *this;
}

Word mul(const Word& a, const Word& b) { return a * b; }
Word inv(const Word& a) { return a.inverse(); }
Word conj(const Word& a, const Word& by) { return by * a * by.inverse(); }
Word comm(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word power(const Word& w, long long k) {
  Word base = k < 0 ? w.inverse() : w;
  if (k < 0) k = -k;
  Word r;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Word apply_hom(const WordAssignmentFn& assignment, const Word& w) {
  Word r;
  for (const auto& l : w.letters()) {
    auto img = assignment(l.gen);
    if (!img) {
      throw Error(ErrorKind::UnmappedGenerator,
                  "no image for g" + std::to_string(l.gen.tag) + ":" + std::to_string(l.gen.index));
    }
    r *= l.sign > 0 ? *img : img->inverse();
  }
  return r;
}

Word apply_hom(const WordAssignment& assignment, const Word& w) {
  return apply_hom(
      [&](GenId g) -> std::optional<Word> {
        auto it = assignment.find(g);
        if (it == assignment.end()) return std::nullopt;
        return it->second;
      },
      w);
}

Elem evaluate(const Word& w, const FiniteGroup& g, const ElemAssignmentFn& assignment) {
  Elem r = FiniteGroup::identity();
  for (const auto& l : w.letters()) {
    auto img = assignment(l.gen);
    if (!img) {
      throw Error(ErrorKind::UnmappedGenerator,
                  "no image for g" + std::to_string(l.gen.tag) + ":" + std::to_string(l.gen.index));
    }
    if (*img >= g.order()) throw Error(ErrorKind::NotMember, "assignment outside the group");
    r = g.mul(r, l.sign > 0 ? *img : g.inv(*img));
  }
  return r;
}

Elem evaluate(const Word& w, const FiniteGroup& g, const std::map<GenId, Elem>& assignment) {
  return evaluate(w, g, [&](GenId id) -> std::optional<Elem> {
    auto it = assignment.find(id);
    if (it == assignment.end()) return std::nullopt;
    return it->second;
  });
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 'g';
    s += std::to_string(w[i].gen.tag);
    s += ':';
    s += std::to_string(w[i].gen.index);
    if (w[i].sign < 0) s += '\'';
  }
  return s;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_ws(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_ws(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    int sign = 1;
    if (tok.back() == '\'') {
      sign = -1;
      tok.remove_suffix(1);
    }
    auto colon = tok.find(':');
    if (tok.size() < 4 || tok.front() != 'g' || colon == std::string_view::npos)
      throw Error(ErrorKind::ParseError, "bad word token '" + std::string(tok) + "'");
    GenId g;
    auto tag_sv = tok.substr(1, colon - 1);
    auto idx_sv = tok.substr(colon + 1);
    auto r1 = std::from_chars(tag_sv.data(), tag_sv.data() + tag_sv.size(), g.tag);
    auto r2 = std::from_chars(idx_sv.data(), idx_sv.data() + idx_sv.size(), g.index);
    if (tag_sv.empty() || idx_sv.empty() || r1.ec != std::errc() || r2.ec != std::errc() ||
        r1.ptr != tag_sv.data() + tag_sv.size() || r2.ptr != idx_sv.data() + idx_sv.size())
      throw Error(ErrorKind::ParseError, "bad word token '" + std::string(tok) + "'");
    letters.push_back({g, sign});
  }
  return Word(std::move(letters));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& l : w.letters()) {
    std::size_t x = (std::size_t(l.gen.tag) << 56) ^ std::size_t(l.gen.index) ^ (l.sign < 0 ? 0x9e3779b97f4a7c15ull : 0);
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace regkt
