#include "regkt/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "regkt/group_io.hpp"

namespace regkt {

namespace {

constexpr std::uint32_t kUndef = std::uint32_t(-1);

std::size_t column(const Letter& l) { return 2 * std::size_t(l.gen.index) + (l.sign > 0 ? 0 : 1); }
std::size_t inverse_column(std::size_t c) { return c ^ 1u; }

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') out.push_back(line);
    start = end + 1;
  }
  return out;
}

// Coset enumeration state.
struct Enumerator {
  std::size_t cols;
  std::size_t cap;
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> queue;

  std::uint32_t define(std::uint32_t c, std::size_t x) {
    if (table.size() >= cap)
      throw Error(ErrorKind::CapExceeded, "coset enumeration exceeded " + std::to_string(cap) + " cosets");
    auto d = std::uint32_t(table.size());
    table.emplace_back(cols, kUndef);
    parent.push_back(d);
    table[c][x] = d;
    table[d][inverse_column(x)] = c;
    return d;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent[r] != r) r = parent[r];
    while (parent[c] != r) {
      std::uint32_t n = parent[c];
      parent[c] = r;
      c = n;
    }
    return r;
  }

  bool alive(std::uint32_t c) const { return parent[c] == c; }

  void merge(std::uint32_t k, std::uint32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent[l] = k;
    queue.push_back(l);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::uint32_t e = queue[i];
      for (std::size_t x = 0; x < cols; ++x) {
        std::uint32_t f = table[e][x];
        if (f == kUndef) continue;
        if (table[f][inverse_column(x)] == e) table[f][inverse_column(x)] = kUndef;
        std::uint32_t e1 = rep(e), f1 = rep(f);
        if (table[e1][x] != kUndef) {
          merge(f1, table[e1][x]);
        } else if (table[f1][inverse_column(x)] != kUndef) {
          merge(e1, table[f1][inverse_column(x)]);
        } else {
          table[e1][x] = f1;
          table[f1][inverse_column(x)] = e1;
        }
      }
    }
  }

  void scan_and_fill(std::uint32_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::uint32_t f = c, b = c;
    std::size_t i = 0, j = w.size() - 1;
    for (;;) {
      while (i <= j && table[f][w[i]] != kUndef) {
        f = table[f][w[i]];
        ++i;
        if (i == 0) break;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table[b][inverse_column(w[j])] != kUndef) {
        b = table[b][inverse_column(w[j])];
        if (j == 0) break;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table[f][w[i]] = b;
        table[b][inverse_column(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }
};

}  // namespace

std::string relator_string(const Word& w) {
  std::string s;
  for (const auto& l : w.letters()) {
    char c = char('a' + l.gen.index);
    s += l.sign > 0 ? c : char(std::toupper(static_cast<unsigned char>(c)));
  }
  return s;
}

Word relator_from_string(std::string_view s, std::size_t generators) {
  std::vector<Letter> letters;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isalpha(static_cast<unsigned char>(ch)))
      throw Error(ErrorKind::ParseError, std::string("bad relator character '") + ch + "'");
    bool inverse = std::isupper(static_cast<unsigned char>(ch));
    std::size_t idx = std::size_t(std::tolower(static_cast<unsigned char>(ch)) - 'a');
    if (idx >= generators) throw Error(ErrorKind::ParseError, "relator uses an undeclared generator");
    letters.push_back({GenId{kTagPresentation, idx}, inverse ? -1 : 1});
  }
  return Word(std::move(letters));
}

Presentation parse_presentation(std::string_view text) {
  auto lines = lines_of(text);
  std::size_t at = 0;
  if (at < lines.size() && lines[at].starts_with("regkt-format")) {
    if (lines[at] != kFormatLine) throw Error(ErrorKind::ParseError, "unsupported format version");
    ++at;
  }
  if (at >= lines.size() || !lines[at].starts_with("presentation "))
    throw Error(ErrorKind::ParseError, "expected 'presentation <k>'");
  Presentation p;
  std::string count(lines[at].substr(13));
  try {
    std::size_t used = 0;
    p.generators = std::stoul(count, &used);
    if (used != count.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad generator count");
  }
  if (p.generators > 26) throw Error(ErrorKind::ParseError, "at most 26 generators");
  for (++at; at < lines.size(); ++at) p.relators.push_back(relator_from_string(lines[at], p.generators));
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << kFormatLine << "\npresentation " << p.generators << '\n';
  for (const auto& r : p.relators) os << relator_string(r) << '\n';
  return os.str();
}

CosetTable enumerate_cosets(const Presentation& p, std::size_t coset_cap) {
  Enumerator en;
  en.cols = 2 * p.generators;
  en.cap = coset_cap;
  en.table.emplace_back(en.cols, kUndef);
  en.parent.push_back(0);
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : p.relators) {
    std::vector<std::size_t> w;
    for (const auto& l : r.letters()) w.push_back(column(l));
    rels.push_back(std::move(w));
  }
  for (std::uint32_t c = 0; c < en.table.size(); ++c) {
    for (const auto& r : rels) {
      if (!en.alive(c)) break;
      en.scan_and_fill(c, r);
    }
    for (std::size_t x = 0; x < en.cols && en.alive(c); ++x)
      if (en.table[c][x] == kUndef) en.define(c, x);
  }
  // Compact live cosets, keeping their relative order.
  std::vector<std::uint32_t> number(en.table.size(), kUndef);
  std::uint32_t live = 0;
  for (std::uint32_t c = 0; c < en.table.size(); ++c)
    if (en.alive(c)) number[c] = live++;
  CosetTable out;
  out.generators = p.generators;
  for (std::uint32_t c = 0; c < en.table.size(); ++c) {
    if (!en.alive(c)) continue;
    std::vector<std::uint32_t> row(en.cols);
    for (std::size_t x = 0; x < en.cols; ++x) {
      if (en.table[c][x] == kUndef) throw Error(ErrorKind::InvalidGroup, "incomplete coset table");
      row[x] = number[en.rep(en.table[c][x])];
    }
    out.table.push_back(std::move(row));
  }
  // The relators must close up from every coset.
  for (std::uint32_t c = 0; c < out.size(); ++c)
    for (const auto& r : rels) {
      std::uint32_t s = c;
      for (auto x : r) s = out.table[s][x];
      if (s != c) throw Error(ErrorKind::InvalidGroup, "coset table violates a relator");
    }
  return out;
}

FiniteGroup presented_group(const Presentation& p, std::size_t coset_cap) {
  CosetTable t = enumerate_cosets(p, coset_cap);
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < p.generators; ++j) {
    Permutation perm(t.size());
    for (std::size_t c = 0; c < t.size(); ++c) perm[c] = t.table[c][2 * j];
    gens.push_back(std::move(perm));
  }
  return FiniteGroup::from_permutations(t.size(), gens, std::max<std::size_t>(t.size(), 1));
}

AbelianGroupStructure abelianization(const Presentation& p) {
  IntMatrix m(p.generators);
  for (const auto& r : p.relators) {
    SparseRow row;
    for (const auto& l : r.letters()) row.add(std::uint32_t(l.gen.index), l.sign);
    row.normalize();
    m.add_row(std::move(row));
  }
  return cokernel_structure(m);
}

AbelianGroupStructure schur_hopf(const Presentation& p, std::size_t coset_cap) {
  if (!abelianization(p).is_finite())
    throw Error(ErrorKind::NotFinite, "presented group has infinite abelianization");
  CosetTable t = enumerate_cosets(p, coset_cap);
  const std::size_t n = t.size(), k = p.generators;

  // BFS spanning tree of the Cayley graph; tree[c] is the path word to c.
  std::vector<Word> tree(n);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<bool>> tree_edge(n, std::vector<bool>(k, false));
  std::vector<std::uint32_t> order{0};
  seen[0] = true;
  for (std::size_t h = 0; h < order.size(); ++h) {
    std::uint32_t c = order[h];
    for (std::size_t x = 0; x < 2 * k; ++x) {
      std::uint32_t d = t.table[c][x];
      if (seen[d]) continue;
      seen[d] = true;
      order.push_back(d);
      int sign = (x % 2 == 0) ? 1 : -1;
      tree[d] = tree[c] * Word::letter(kTagPresentation, x / 2, sign);
      if (sign > 0) {
        tree_edge[c][x / 2] = true;
      } else {
        tree_edge[d][x / 2] = true;
      }
    }
  }
  // Schreier generators: one per non-tree edge (c, x_j).
  std::vector<std::vector<std::int64_t>> slot(n, std::vector<std::int64_t>(k, -1));
  std::vector<std::pair<std::uint32_t, std::size_t>> gens;
  for (std::uint32_t c = 0; c < n; ++c)
    for (std::size_t j = 0; j < k; ++j)
      if (!tree_edge[c][j]) {
        slot[c][j] = std::int64_t(gens.size());
        gens.emplace_back(c, j);
      }
  const std::size_t m = gens.size();

  // Abelianized Schreier rewriting of a word of R.
  auto rewrite = [&](const Word& w) {
    SparseRow v;
    std::uint32_t c = 0;
    for (const auto& l : w.letters()) {
      std::size_t j = std::size_t(l.gen.index);
      if (l.sign > 0) {
        if (slot[c][j] >= 0) v.add(std::uint32_t(slot[c][j]), 1);
        c = t.table[c][2 * j];
      } else {
        std::uint32_t d = t.table[c][2 * j + 1];
        if (slot[d][j] >= 0) v.add(std::uint32_t(slot[d][j]), -1);
        c = d;
      }
    }
    if (c != 0) throw Error(ErrorKind::InvalidGroup, "word is not a relation");
    v.normalize();
    return v;
  };

  // Coinvariants: x s x^-1 - s for every Schreier generator s and generator x.
  IntMatrix rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [c, j] = gens[i];
    std::uint32_t d = t.table[c][2 * j];
    Word s = tree[c] * Word::letter(kTagPresentation, j) * tree[d].inverse();
    SparseRow base = SparseRow::unit(std::uint32_t(i));
    for (std::size_t x = 0; x < k; ++x) {
      Word g = Word::letter(kTagPresentation, x);
      rel.add_row(rewrite(conj(s, g)) - base);
    }
  }
  AbelianGroupStructure module = cokernel_structure(rel);
  if (module.free_rank != k)
    throw Error(ErrorKind::InvalidGroup, "relation module has unexpected free rank");
  AbelianGroupStructure h2;
  h2.torsion = module.torsion;
  return h2;
}

Presentation standard_presentation(std::string_view name) {
  auto make = [](std::size_t k, std::initializer_list<const char*> rels) {
    Presentation p;
    p.generators = k;
    for (const char* r : rels) p.relators.push_back(relator_from_string(r, k));
    return p;
  };
  if (name.size() >= 2 && name[0] == 'C' && name.find('x') == std::string_view::npos) {
    std::size_t n = std::stoul(std::string(name.substr(1)));
    if (n == 1) return make(1, {"a"});
    return make(1, {std::string(n, 'a').c_str()});
  }
  if (name == "C2xC2") return make(2, {"aa", "bb", "abAB"});
  if (name == "C2xC2xC2") return make(3, {"aa", "bb", "cc", "abAB", "acAC", "bcBC"});
  if (name == "S3") return make(2, {"aa", "bbb", "abab"});
  if (name == "D8") return make(2, {"aa", "bbbb", "abab"});
  if (name == "Q8") return make(2, {"aaaa", "aaBB", "baBa"});
  if (name == "A4") return make(2, {"aa", "bbb", "ababab"});
  throw Error(ErrorKind::Unsupported, "no standard presentation for " + std::string(name));
}

}  // namespace regkt
