#include "regkt/splittings.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace regkt {

namespace {

Word u(Elem x, int sign = 1) {
  if (x == 0) return {};
  return Word::letter(kTagEnvelope, x, sign);
}

bool is_prefix(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  return std::equal(p.letters().begin(), p.letters().end(), w.letters().begin());
}

Word drop_prefix(const Word& w, std::size_t k) {
  return Word(std::vector<Letter>(w.letters().begin() + std::ptrdiff_t(k), w.letters().end()));
}

Word take_prefix(const Word& w, std::size_t k) {
  return Word(std::vector<Letter>(w.letters().begin(), w.letters().begin() + std::ptrdiff_t(k)));
}

}  // namespace

// ---------------------------------------------------------------------------
// Cores

std::optional<CoreCertificate> find_core(const std::vector<Word>& gens,
                                         const std::vector<Word>& section_words) {
  CoreCertificate cert;
  cert.section_words = section_words;
  if (gens.empty()) return cert;

  // candidate -> (generator, section index) pairs it explains
  std::map<Word, std::vector<std::pair<std::size_t, std::size_t>>> explains;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t x = 0; x < section_words.size(); ++x) {
      const Word& s = section_words[x];
      Word e = s.inverse() * gens[g] * s;
      if (e.empty()) continue;
      explains[e].emplace_back(g, x);
    }

  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> assigned(gens.size());
  std::size_t remaining = gens.size();
  while (remaining > 0) {
    const Word* best = nullptr;
    std::size_t best_cover = 0;
    for (const auto& [e, list] : explains) {
      std::set<std::size_t> covered;
      for (auto [g, x] : list)
        if (!assigned[g]) covered.insert(g);
      // map order is shortlex, so ties go to the shorter candidate
      if (covered.size() > best_cover) {
        best_cover = covered.size();
        best = &e;
      }
    }
    if (!best) return std::nullopt;
    const std::size_t i = cert.core_elements.size();
    cert.core_elements.push_back(*best);
    for (auto [g, x] : explains[*best])
      if (!assigned[g]) {
        assigned[g] = std::pair{x, i};
        --remaining;
      }
  }
  for (const auto& a : assigned) cert.witness.push_back(*a);
  if (!verify_core(cert, gens)) return std::nullopt;
  return cert;
}

bool verify_core(const CoreCertificate& cert, const std::vector<Word>& gens) {
  if (cert.witness.size() != gens.size()) return false;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto [x, i] = cert.witness[g];
    if (x >= cert.section_words.size() || i >= cert.core_elements.size()) return false;
    const Word& s = cert.section_words[x];
    if (s * cert.core_elements[i] * s.inverse() != gens[g]) return false;
    auto [it, fresh] = seen.emplace(cert.witness[g], g);
    if (!fresh && gens[it->second] != gens[g]) return false;
  }
  return true;
}

bool check_weak_core(const std::vector<WeakCoreEntry>& data, std::size_t rank) {
  if (data.size() != rank) return false;
  std::set<std::pair<std::size_t, std::size_t>> labels;
  std::set<DenseRow> vectors;
  DenseMatrix m;
  for (const auto& e : data) {
    if (e.vector.size() != rank) return false;
    if (!labels.emplace(e.core_index, e.coset).second) return false;
    if (!vectors.insert(e.vector).second) return false;
    m.push_back(e.vector);
  }
  if (rank == 0) return true;
  return is_unimodular(m);
}

// ---------------------------------------------------------------------------
// Splitting candidates

Word SplittingCandidate::section(const Word& w) const {
  std::vector<Letter> dl, el;
  for (const auto& l : w.letters()) {
    if (l.gen.tag != kTagEnvelope) throw Error(ErrorKind::NotMember, "section needs an envelope word");
    Elem g = Elem(l.gen.index);
    if (d_part[g] != 0) dl.push_back({GenId{kTagEnvelope, d_part[g]}, l.sign});
    if (e_part[g] != 0) el.push_back({GenId{kTagEnvelope, e_part[g]}, l.sign});
  }
  Word s = Word(std::move(dl)) * Word(std::move(el));
  for (const auto& [a, b] : swaps) {
    if (s == a) return b;
    if (s == b) return a;
  }
  return s;
}

std::size_t SplittingCandidate::level_of(const Word& w) const {
  switch (level) {
    case LevelFunction::SectionLength:
      return w.size();
    case LevelFunction::None:
      return 0;
  }
  return 0;
}

std::vector<Word> SplittingCandidate::starting_section() const {
  std::vector<Letter> alphabet;
  for (Elem c : d_elems) alphabet.push_back({GenId{kTagEnvelope, c}, 1});
  for (Elem c : d_elems) alphabet.push_back({GenId{kTagEnvelope, c}, -1});
  for (Elem x : e_elems) alphabet.push_back({GenId{kTagEnvelope, x}, 1});
  for (Elem x : e_elems) alphabet.push_back({GenId{kTagEnvelope, x}, -1});
  std::set<Word> out{section(Word{})};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= start_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& l : alphabet) {
        Word v = w * Word(std::vector<Letter>{l});
        if (v.size() != len) continue;
        next.push_back(v);
        out.insert(section(v));
      }
    layer = std::move(next);
  }
  return {out.begin(), out.end()};
}

SplittingCandidate product_example(const FiniteGroup& d, const FiniteGroup& e, std::size_t cap) {
  if (d.order() * e.order() > cap)
    throw Error(ErrorKind::CapExceeded, "product of order " + std::to_string(d.order() * e.order()) +
                                            " exceeds cap " + std::to_string(cap));
  DirectProduct dp = direct_product(d, e);
  SplittingCandidate c;
  c.ambient = dp.group;
  const std::size_t n = dp.group.order();
  c.d_part.resize(n);
  c.e_part.resize(n);
  for (Elem g = 0; g < n; ++g) {
    c.d_part[g] = dp.left.images[dp.left_proj.images[g]];
    c.e_part[g] = dp.right.images[dp.right_proj.images[g]];
  }
  for (Elem a = 1; a < d.order(); ++a) c.d_elems.push_back(dp.left.images[a]);
  for (Elem x = 1; x < e.order(); ++x) c.e_elems.push_back(dp.right.images[x]);
  for (std::size_t i = 0; i < c.d_elems.size(); ++i)
    for (std::size_t j = 0; j < c.e_elems.size(); ++j) {
      Elem ce = c.d_elems[i], xe = c.e_elems[j];
      Elem cx = dp.group.mul(ce, xe);
      c.core.push_back({"k(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                        u(cx) * u(xe, -1) * u(ce, -1)});
    }
  for (std::size_t i = 0; i < c.d_elems.size(); ++i)
    for (std::size_t j = 0; j < c.e_elems.size(); ++j) {
      Elem ce = c.d_elems[i], xe = c.e_elems[j];
      c.core.push_back({"[" + std::to_string(j + 1) + "," + std::to_string(i + 1) + "]",
                        comm(u(xe), u(ce))});
    }
  return c;
}

SplittingCandidate scrambled(SplittingCandidate cand) {
  if (!cand.d_elems.empty() && !cand.e_elems.empty())
    cand.swaps.emplace_back(u(cand.d_elems.front()), u(cand.e_elems.front()));
  return cand;
}

std::string to_string(SplittingVerdict v) {
  switch (v) {
    case SplittingVerdict::Converged:
      return "Converged";
    case SplittingVerdict::DivergedAtBound:
      return "DivergedAtBound";
    case SplittingVerdict::MalformedCandidate:
      return "MalformedCandidate";
  }
  return "?";
}

Word section_difference(const SplittingCandidate& cand, const Word& x1, const Word& x2) {
  Word y = x1.inverse() * x2;
  return y * cand.section(y).inverse();
}

namespace {

struct Peeler {
  const SplittingCandidate& cand;
  std::vector<Letter> alphabet;
  std::vector<std::pair<Word, std::pair<std::size_t, int>>> forms;  // e^{+-1}

  explicit Peeler(const SplittingCandidate& c) : cand(c) {
    for (Elem g : c.d_elems)
      for (int s : {1, -1}) alphabet.push_back({GenId{kTagEnvelope, g}, s});
    for (Elem g : c.e_elems)
      for (int s : {1, -1}) alphabet.push_back({GenId{kTagEnvelope, g}, s});
    for (std::size_t i = 0; i < c.core.size(); ++i) {
      forms.push_back({c.core[i].word, {i, 1}});
      forms.push_back({c.core[i].word.inverse(), {i, -1}});
    }
  }

  // Conjugators to try against `diff`, longest literal prefix first; a one- or
  // two-letter tail covers cancellation against the core element.
  std::vector<Word> conjugators(const Word& diff) const {
    std::vector<Word> out;
    std::set<Word> seen;
    auto offer = [&](const Word& p) {
      if (cand.in_section(p) && seen.insert(p).second) out.push_back(p);
    };
    for (std::size_t k = diff.size() + 1; k-- > 0;) {
      Word p = take_prefix(diff, k);
      offer(p);
      for (const auto& a : alphabet) {
        Word pa = p * Word(std::vector<Letter>{a});
        if (pa.size() != p.size() + 1) continue;
        offer(pa);
        for (const auto& b : alphabet) {
          Word pab = pa * Word(std::vector<Letter>{b});
          if (pab.size() == pa.size() + 1) offer(pab);
        }
      }
    }
    return out;
  }

  std::size_t core_of(bool bracket, Elem c, Elem x) const {
    std::size_t i = std::size_t(std::find(cand.d_elems.begin(), cand.d_elems.end(), c) - cand.d_elems.begin());
    std::size_t j = std::size_t(std::find(cand.e_elems.begin(), cand.e_elems.end(), x) - cand.e_elems.begin());
    std::size_t k = i * cand.e_elems.size() + j;
    return bracket ? cand.d_elems.size() * cand.e_elems.size() + k : k;
  }

  // p [e, u_c^s] p^-1 for an E-word e, as section conjugates of [u_x, u_c]^{+-1}.
  void bracket(const Word& p, const Word& e, Elem c, int s, std::vector<DifferenceFactor>& out) const {
    std::vector<DifferenceFactor> f;
    // [y1..yk, c] = (y1..y_{k-1} [y_k, c] ..^-1) ... (y1 [y2, c] y1^-1) [y1, c]
    for (std::size_t i = e.size(); i-- > 0;) {
      const Letter& y = e[i];
      Word prefix = take_prefix(e, i);
      // [x^-1, c] = x^-1 [x, c]^-1 x
      Word conj = y.sign > 0 ? prefix : prefix * Word(std::vector<Letter>{y});
      f.push_back({conj, core_of(true, c, Elem(y.gen.index)), y.sign});
    }
    if (s < 0) {
      // [e, c^-1] = c^-1 [e, c]^-1 c
      std::reverse(f.begin(), f.end());
      for (auto& x : f) {
        x.conjugator = u(c, -1) * x.conjugator;
        x.sign = -x.sign;
      }
    }
    for (auto& x : f) {
      x.conjugator = p * x.conjugator;
      out.push_back(std::move(x));
    }
  }

  // Schreier rewriting along the transversal {D-word . E-word}.
  std::optional<std::vector<DifferenceFactor>> rewrite(const Word& diff) const {
    std::vector<DifferenceFactor> out;
    Word d, e;
    for (const auto& l : diff.letters()) {
      if (l.gen.tag != kTagEnvelope) return std::nullopt;
      Elem g = Elem(l.gen.index);
      Elem c = cand.d_part[g], x = cand.e_part[g];
      if (c == 0) {
        e = e * u(x, l.sign);
      } else if (x == 0) {
        if (!e.empty()) bracket(d, e, c, l.sign, out);
        d = d * u(c, l.sign);
      } else if (l.sign > 0) {
        out.push_back({d * e, core_of(false, c, x), 1});
        if (!e.empty()) bracket(d, e, c, 1, out);
        d = d * u(c);
        e = e * u(x);
      } else {
        Word e1 = e * u(x, -1);
        if (!e1.empty()) bracket(d, e1, c, -1, out);
        out.push_back({d * u(c, -1) * e1, core_of(false, c, x), -1});
        d = d * u(c, -1);
        e = e1;
      }
    }
    if (!d.empty() || !e.empty()) return std::nullopt;
    // free reduction in the basis
    std::vector<DifferenceFactor> red;
    for (auto& f : out) {
      if (!red.empty() && red.back().core_index == f.core_index && red.back().sign == -f.sign &&
          red.back().conjugator == f.conjugator) {
        red.pop_back();
      } else {
        red.push_back(std::move(f));
      }
    }
    return red;
  }

  Word product(const std::vector<DifferenceFactor>& fs) const {
    Word w;
    for (const auto& f : fs) {
      const Word& e = cand.core.at(f.core_index).word;
      w *= f.conjugator * (f.sign > 0 ? e : e.inverse()) * f.conjugator.inverse();
    }
    return w;
  }

  bool valid(const std::vector<DifferenceFactor>& fs, const Word& diff) const {
    for (const auto& f : fs)
      if (f.core_index >= cand.core.size() || !cand.in_section(f.conjugator)) return false;
    return product(fs) == diff;
  }

  std::optional<std::vector<DifferenceFactor>> factor(const Word& diff, std::size_t backtrack) const {
    if (auto r = rewrite(diff); r && valid(*r, diff)) return r;
    std::vector<DifferenceFactor> out;
    std::size_t budget = backtrack;
    if (peel(diff, budget, out)) return out;
    return std::nullopt;
  }

  bool peel(const Word& diff, std::size_t& budget, std::vector<DifferenceFactor>& out) const {
    if (diff.empty()) return true;
    for (const auto& p : conjugators(diff))
      for (const auto& [e, id] : forms) {
        Word c = p * e * p.inverse();
        if (c.empty() || !is_prefix(c, diff)) continue;
        out.push_back({p, id.first, id.second});
        if (peel(drop_prefix(diff, c.size()), budget, out)) return true;
        out.pop_back();
        if (budget == 0) return false;
        --budget;
      }
    return false;
  }
};

}  // namespace

std::optional<std::vector<DifferenceFactor>> factor_difference(const SplittingCandidate& cand,
                                                               const Word& diff,
                                                               std::size_t backtrack) {
  return Peeler(cand).factor(diff, backtrack);
}

namespace {

struct Explorer {
  const SplittingCandidate& cand;
  Peeler peeler;
  SplittingResult result;
  std::map<std::pair<Word, Word>, std::size_t> memo;  // converged pairs -> steps
  std::set<std::pair<Word, Word>> on_path;
  bool malformed = false, diverged = false;

  explicit Explorer(const SplittingCandidate& c) : cand(c), peeler(c) {}

  // Steps for the pair, or nullopt when the bound was hit / factoring failed.
  std::optional<std::size_t> explore(const Word& x1, const Word& x2, std::size_t depth) {
    auto key = std::pair{x1, x2};
    if (auto it = memo.find(key); it != memo.end()) {
      if (it->second > depth) {
        diverged = true;
        return std::nullopt;
      }
      return it->second;
    }
    ++result.pairs_explored;
    Word y = x1.inverse() * x2;
    Word sy = cand.section(y);
    Word diff = y * sy.inverse();
    if (diff.empty()) {
      memo[key] = 0;
      return 0;
    }
    if (depth == 0 || on_path.count(key)) {
      diverged = true;
      if (result.detail.empty()) result.detail = "bound reached at (" + to_string(x1) + ", " + to_string(x2) + ")";
      return std::nullopt;
    }
    auto fs = peeler.factor(diff, 3);
    if (!fs) {
      malformed = true;
      if (result.detail.empty()) result.detail = "difference " + to_string(diff) + " does not factor";
      return std::nullopt;
    }
    // conjugators in factor order, then the section of x1^-1 x2
    std::vector<Word> elems;
    for (const auto& f : *fs)
      if (std::find(elems.begin(), elems.end(), f.conjugator) == elems.end()) elems.push_back(f.conjugator);
    if (std::find(elems.begin(), elems.end(), sy) == elems.end()) elems.push_back(sy);
    on_path.insert(key);
    std::size_t worst = 0;
    bool ok = true;
    for (std::size_t k = 0; k < elems.size() && ok; ++k)
      for (std::size_t l = k + 1; l < elems.size() && ok; ++l) {
        Word cy = elems[k].inverse() * elems[l];
        if (cand.level != LevelFunction::None && !(cy * cand.section(cy).inverse()).empty() &&
            cand.level_of(cand.section(cy)) >= cand.level_of(sy))
          result.level_decreasing = false;
        auto s = explore(elems[k], elems[l], depth - 1);
        if (!s) {
          ok = false;
        } else {
          worst = std::max(worst, *s);
        }
      }
    on_path.erase(key);
    if (!ok) return std::nullopt;
    memo[key] = worst + 1;
    return worst + 1;
  }
};

}  // namespace

SplittingResult check_strict_splitting(const SplittingCandidate& cand, std::size_t depth) {
  Explorer ex(cand);
  SplittingResult& r = ex.result;
  if (!cand.section(Word{}).empty()) {
    r.verdict = SplittingVerdict::MalformedCandidate;
    r.detail = "section does not contain the identity";
    return r;
  }
  for (const auto& c : cand.core)
    if (c.word.empty()) {
      r.verdict = SplittingVerdict::MalformedCandidate;
      r.detail = "empty core element " + c.label;
      return r;
    }
  const auto start = cand.starting_section();
  for (const auto& w : start)
    if (!w.empty() && cand.level != LevelFunction::None && cand.level_of(w) == 0) {
      r.verdict = SplittingVerdict::MalformedCandidate;
      r.detail = "level zero on a nonidentity section word";
      return r;
    }
  std::size_t steps = 0;
  for (const auto& a : start) {
    for (const auto& b : start) {
      auto s = ex.explore(a, b, depth);
      if (ex.malformed) {
        r.verdict = SplittingVerdict::MalformedCandidate;
        return r;
      }
      if (!s) {
        r.verdict = SplittingVerdict::DivergedAtBound;
        return r;
      }
      steps = std::max(steps, *s);
    }
  }
  r.verdict = SplittingVerdict::Converged;
  r.steps = steps;
  return r;
}

WeakCoreOutcome weak_core_consequence(const FiniteGroup& f, const Subgroup& n,
                                 const MultiplierOptions& opt) {
  WeakCoreOutcome out;
  auto emb = as_group(f, n);
  out.weak_core = is_perfect(emb.group) && check_weak_core({}, 0);
  out.free = n.is_trivial();
  if (!out.weak_core) {
    out.reason = "N/[N,N] is finite and nontrivial, so it is not free abelian";
    return out;
  }
  out.kj2_structure = kj2(f, n, opt).structure;
  if (!out.free) {
    out.reason = "N is finite and nontrivial, so it is not free";
    return out;
  }
  out.status = out.kj2_structure.is_trivial() ? WeakCoreOutcome::Status::Pass : WeakCoreOutcome::Status::Fail;
  out.reason = "kj2 = " + out.kj2_structure.to_string();
  return out;
}

}  // namespace regkt
