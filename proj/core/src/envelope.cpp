#include "regkt/envelope.hpp"

#include <algorithm>

namespace regkt {

// ---------------------------------------------------------------------------
// Envelope

Envelope::Envelope(FiniteGroup f) : f_(std::move(f)) {}

Word Envelope::u(Elem x, int sign) const {
  if (x == 0) return Word();
  if (x >= order()) throw Error(ErrorKind::NotMember, "element out of range");
  return Word::letter(gen(x), sign);
}

Elem Envelope::evaluate(const Word& w) const {
  Elem r = 0;
  for (const auto& l : w.letters()) {
    if (l.gen.tag != kTagEnvelope || l.gen.index == 0 || l.gen.index >= order())
      throw Error(ErrorKind::UnmappedGenerator, "letter outside the envelope alphabet");
    Elem x = Elem(l.gen.index);
    r = f_.mul(r, l.sign > 0 ? x : f_.inv(x));
  }
  return r;
}

Word Envelope::pair_word(Elem g, Elem h) const {
  return u(g) * u(h) * u(f_.mul(g, h), -1);
}

std::vector<Word> Envelope::jf_basis() const {
  std::vector<Word> out;
  out.reserve(pair_count());
  for (Elem g = 1; g < order(); ++g)
    for (Elem h = 1; h < order(); ++h) out.push_back(pair_word(g, h));
  return out;
}

SparseRow Envelope::ab_j(const Word& w) const {
  SparseRow v;
  Elem state = 0;
  for (const auto& l : w.letters()) {
    if (l.gen.tag != kTagEnvelope || l.gen.index == 0 || l.gen.index >= order())
      throw Error(ErrorKind::UnmappedGenerator, "letter outside the envelope alphabet");
    Elem y = Elem(l.gen.index);
    if (l.sign > 0) {
      if (state != 0) v.add(pair_index(state, y), 1);
      state = f_.mul(state, y);
    } else {
      Elem prev = f_.mul(state, f_.inv(y));
      if (prev != 0) v.add(pair_index(prev, y), -1);
      state = prev;
    }
  }
  if (state != 0) throw Error(ErrorKind::NotMember, "word does not evaluate to the identity");
  v.normalize();
  return v;
}

Word Envelope::express_in_basis(const Word& w) const {
  std::vector<Letter> out;
  Elem state = 0;
  for (const auto& l : w.letters()) {
    if (l.gen.tag != kTagEnvelope || l.gen.index == 0 || l.gen.index >= order())
      throw Error(ErrorKind::UnmappedGenerator, "letter outside the envelope alphabet");
    Elem y = Elem(l.gen.index);
    if (l.sign > 0) {
      if (state != 0) out.push_back({GenId{kTagBasis, pair_index(state, y)}, 1});
      state = f_.mul(state, y);
    } else {
      Elem prev = f_.mul(state, f_.inv(y));
      if (prev != 0) out.push_back({GenId{kTagBasis, pair_index(prev, y)}, -1});
      state = prev;
    }
  }
  if (state != 0) throw Error(ErrorKind::NotMember, "word does not evaluate to the identity");
  return Word(std::move(out));
}

SparseRow Envelope::pair_vector(Elem g, Elem h) const {
  if (g == 0 || h == 0) return {};
  return SparseRow::unit(pair_index(g, h));
}

SparseRow Envelope::act(Elem g, const SparseRow& v) const {
  if (g == 0) return v;
  SparseRow r;
  for (const auto& [idx, coef] : v.entries) {
    auto [h, y] = pair_of(idx);
    // u_g e_{h,y} u_g^-1 = e_{g,h} + e_{gh,y} - e_{g,hy}
    r.add(pair_index(g, h), coef);
    Elem gh = f_.mul(g, h);
    if (gh != 0) r.add(pair_index(gh, y), coef);
    Elem hy = f_.mul(h, y);
    if (hy != 0) r.add(pair_index(g, hy), -coef);
  }
  r.normalize();
  return r;
}

// ---------------------------------------------------------------------------
// Cores

std::string to_string(CoreKind k) {
  switch (k) {
    case CoreKind::B1: return "B1";
    case CoreKind::B2: return "B2";
    case CoreKind::B3: return "B3";
    case CoreKind::UCore: return "U";
  }
  return "?";
}

std::string CoreElement::label() const {
  std::string s = to_string(kind) + "(" + std::to_string(a);
  if (kind != CoreKind::UCore) s += "," + std::to_string(b);
  if (kind == CoreKind::B3) s += "," + std::to_string(c);
  return s + ")";
}

RelativeEnvelope::RelativeEnvelope(Envelope env, Subgroup n)
    : env_(std::move(env)), n_(std::move(n)), q_(quotient(env_.group(), n_)) {
  const auto& F = env_.group();
  std::vector<Elem> nt;  // N \ 1
  for (Elem c : n_.members())
    if (c != 0) nt.push_back(c);
  std::vector<Elem> rt(q_.section.begin() + 1, q_.section.end());  // reps \ 1

  for (Elem c : nt)
    for (Elem d : nt) b_cores_.push_back({CoreKind::B1, c, d, 0, env_.pair_word(c, d)});
  for (Elem x : rt)
    for (Elem d : nt) b_cores_.push_back({CoreKind::B2, x, d, 0, env_.pair_word(x, d)});
  for (Elem c : nt)
    for (Elem d : n_.members())
      for (Elem y : rt) b_cores_.push_back({CoreKind::B3, c, d, y, env_.pair_word(c, F.mul(d, y))});
  for (Elem x = 1; x < F.order(); ++x)
    if (!is_rep(x)) ucores_.push_back({CoreKind::UCore, x, 0, 0, env_.u(x) * env_.u(rep(x), -1)});
}

std::size_t RelativeEnvelope::count(CoreKind k) const {
  if (k == CoreKind::UCore) return ucores_.size();
  return std::size_t(std::count_if(b_cores_.begin(), b_cores_.end(),
                                   [&](const CoreElement& e) { return e.kind == k; }));
}

std::vector<CoreElement> RelativeEnvelope::spanning_family() const {
  const auto& F = env_.group();
  std::vector<CoreElement> out;
  std::vector<Elem> nt;
  for (Elem c : n_.members())
    if (c != 0) nt.push_back(c);
  std::vector<Elem> rt(q_.section.begin() + 1, q_.section.end());
  for (Elem c : nt)
    for (Elem d : nt) out.push_back({CoreKind::B1, c, d, 0, env_.pair_word(c, d)});
  for (Elem x : rt)
    for (Elem d : nt) {
      Word w = comm(env_.u(x), env_.u(d)) * env_.u(d) * env_.u(F.conj(x, d), -1);
      out.push_back({CoreKind::B2, x, d, 0, std::move(w)});
    }
  for (Elem c : n_.members())
    for (Elem c2 : nt)
      for (Elem y : rt) {
        Word w = conj(env_.pair_word(c2, y), env_.u(c));
        out.push_back({CoreKind::B3, c, c2, y, std::move(w)});
      }
  return out;
}

Word RelativeEnvelope::project_to_quotient(const Word& w) const {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    if (l.gen.tag != kTagEnvelope || l.gen.index == 0 || l.gen.index >= group().order())
      throw Error(ErrorKind::UnmappedGenerator, "letter outside the envelope alphabet");
    Elem q = q_.projection[Elem(l.gen.index)];
    if (q != 0) out.push_back({GenId{kTagEnvelope, q}, l.sign});
  }
  return Word(std::move(out));
}

bool RelativeEnvelope::member_jnf(const Word& w) const {
  return member_unf(w) && env_.evaluate(w) == 0;
}

SparseRow RelativeEnvelope::lambda_coords(const Word& w) const {
  if (!member_jnf(w)) throw Error(ErrorKind::NotMember, "word is not in J_{N,F}");
  return env_.ab_j(w);
}

std::size_t RelativeEnvelope::lambda_rank() const {
  const std::size_t f = group().order(), q = quotient_order();
  return (f - 1) * (f - 1) - (q - 1) * (q - 1);
}

const RelativeEnvelope::Solver& RelativeEnvelope::solver() const {
  std::call_once(solver_->once, [this] {
    Solver& s = *solver_;
    for (Elem z : q_.section)
      for (const auto& b : b_cores_) s.vectors.push_back(env_.act(z, env_.ab_j(b.word)));
    const std::size_t e = env_.pair_count(), k = s.vectors.size();
    s.unit.assign(e, -1);
    s.unit_fast = true;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& v = s.vectors[i];
      if (v.nnz() != 1 || (v.entries[0].second != 1 && v.entries[0].second != -1) ||
          s.unit[v.entries[0].first] != -1) {
        s.unit_fast = false;
        break;
      }
      s.unit[v.entries[0].first] = std::int64_t(i);
    }
    if (s.unit_fast) return;
    EchelonLattice l(e + k);
    for (std::size_t i = 0; i < k; ++i) {
      DenseRow row = s.vectors[i].dense(e + k);
      row[e + i] = 1;
      l.insert(std::move(row));
    }
    s.rows = l.rows();
    for (const auto& row : s.rows) {
      std::size_t p = 0;
      while (p < row.size() && row[p] == 0) ++p;
      if (p >= e) throw Error(ErrorKind::InvalidGroup, "conjugated core is linearly dependent");
      s.pivots.push_back(p);
    }
  });
  return *solver_;
}

const std::vector<SparseRow>& RelativeEnvelope::conjugated_core_vectors() const {
  return solver().vectors;
}

DenseRow RelativeEnvelope::solve_core(const SparseRow& lam) const {
  const Solver& s = solver();
  const std::size_t e = env_.pair_count(), k = s.vectors.size();
  DenseRow x(k);
  if (s.unit_fast) {
    for (const auto& [c, v] : lam.entries) {
      std::int64_t i = s.unit[c];
      if (i < 0) throw Error(ErrorKind::NotMember, "vector outside the core span");
      x[std::size_t(i)] = v * s.vectors[std::size_t(i)].entries[0].second;
    }
    return x;
  }
  DenseRow v = lam.dense(e);
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    const auto& row = s.rows[r];
    std::size_t p = s.pivots[r];
    if (v[p] == 0) continue;
    if (!mpz_divisible_p(v[p].get_mpz_t(), row[p].get_mpz_t()))
      throw Error(ErrorKind::NotMember, "vector outside the core span");
    Integer c = v[p] / row[p];
    for (std::size_t j = p; j < e; ++j)
      if (row[j] != 0) v[j] -= c * row[j];
    for (std::size_t j = 0; j < k; ++j)
      if (row[e + j] != 0) x[j] += c * row[e + j];
  }
  for (const auto& t : v)
    if (t != 0) throw Error(ErrorKind::NotMember, "vector outside the core span");
  return x;
}

DenseRow RelativeEnvelope::conjugated_core_coords(const Word& w) const {
  return solve_core(lambda_coords(w));
}

DenseRow RelativeEnvelope::core_coordinates(const Word& w) const {
  return core_coordinates_of(lambda_coords(w));
}

DenseRow RelativeEnvelope::core_coordinates_of(const SparseRow& lambda) const {
  DenseRow x = solve_core(lambda);
  const std::size_t nb = b_cores_.size();
  DenseRow out(nb);
  for (std::size_t i = 0; i < x.size(); ++i) out[i % nb] += x[i];
  return out;
}

// ---------------------------------------------------------------------------
// RelativeRewriter

Word RelativeRewriter::lift(const Word& omega) const {
  Word r;
  for (const auto& l : omega.letters())
    r *= renv_->envelope().u(renv_->reps().at(l.gen.index), l.sign);
  return r;
}

Word RelativeRewriter::letter_word(const Word& omega, Elem x) const {
  const auto& env = renv_->envelope();
  return conj(env.u(x) * env.u(renv_->rep(x), -1), lift(omega));
}

Word RelativeRewriter::letter_word(std::uint64_t k) const {
  const auto& [omega, x] = keys_.at(k);
  return letter_word(omega, x);
}

Word RelativeRewriter::rewrite(const Word& w) {
  const auto& proj = renv_->quotient_data().projection;
  std::vector<Letter> out;
  Word prefix;
  auto intern = [&](Elem x) {
    auto key = std::make_pair(prefix, x);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    std::uint64_t id = keys_.size();
    ids_.emplace(key, id);
    keys_.push_back(std::move(key));
    return id;
  };
  for (const auto& l : w.letters()) {
    if (l.gen.tag != kTagEnvelope || l.gen.index == 0 || l.gen.index >= renv_->group().order())
      throw Error(ErrorKind::UnmappedGenerator, "letter outside the envelope alphabet");
    Elem x = Elem(l.gen.index);
    Elem q = proj[x];
    Word t = q == 0 ? Word() : Word::letter(kTagEnvelope, q);
    if (l.sign > 0) {
      if (!renv_->is_rep(x)) out.push_back({GenId{kTagRelative, intern(x)}, 1});
      prefix *= t;
    } else {
      prefix *= t.inverse();
      if (!renv_->is_rep(x)) out.push_back({GenId{kTagRelative, intern(x)}, -1});
    }
  }
  if (!prefix.empty()) throw Error(ErrorKind::NotMember, "word is not in U_{N,F}");
  return Word(std::move(out));
}

WordAssignment RelativeRewriter::assignment() const {
  WordAssignment m;
  for (std::uint64_t k = 0; k < keys_.size(); ++k) m[GenId{kTagRelative, k}] = letter_word(k);
  return m;
}

std::vector<Word> RelativeRewriter::family(std::size_t depth) const {
  const std::size_t q = renv_->quotient_order();
  std::vector<Word> omegas{Word()};
  std::vector<Word> layer{Word()};
  for (std::size_t len = 1; len <= depth && q > 1; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Elem c = 1; c < q; ++c)
        for (int s : {-1, 1}) {
          Word e = w * Word::letter(kTagEnvelope, c, s);
          if (e.size() == len) next.push_back(std::move(e));
        }
    omegas.insert(omegas.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<Word> out;
  for (const auto& om : omegas)
    for (const auto& uc : renv_->ucores()) out.push_back(letter_word(om, uc.a));
  return out;
}

}  // namespace regkt
