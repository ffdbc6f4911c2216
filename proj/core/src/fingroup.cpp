#include "regkt/fingroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace regkt {

namespace {

Permutation compose_perm(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Permutation identity_perm(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_bijection(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (auto x : p) {
    if (x >= degree || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup() : name_("1") {}

FiniteGroup FiniteGroup::trivial(std::string name) {
  FiniteGroup g;
  g.name_ = std::move(name);
  return g;
}

void FiniteGroup::fill_inverses() {
  inv_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (table_[a * n_ + b] == 0) {
        inv_[a] = Elem(b);
        break;
      }
    }
  }
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree,
                                           std::span<const Permutation> gens,
                                           std::size_t cap, std::string name) {
  if (degree == 0) throw Error(ErrorKind::InvalidGroup, "degree must be positive");
  for (const auto& g : gens) {
    if (!is_bijection(g, degree))
      throw Error(ErrorKind::InvalidGroup, "generator is not a permutation of the given degree");
  }
  std::vector<Permutation> elems{identity_perm(degree)};
  std::map<Permutation, Elem> index{{elems[0], 0}};
  // parent[b], via[b]: b = elems[parent[b]] * gens[via[b]]
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<std::vector<Elem>> rmul;  // rmul[e][k] = e * gens[k]
  for (std::size_t head = 0; head < elems.size(); ++head) {
    std::vector<Elem> row(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation p = compose_perm(elems[head], gens[k]);
      auto it = index.find(p);
      if (it == index.end()) {
        if (elems.size() >= cap)
          throw Error(ErrorKind::CapExceeded,
                      "group order exceeds cap " + std::to_string(cap));
        Elem id = Elem(elems.size());
        index.emplace(p, id);
        elems.push_back(std::move(p));
        parent.push_back(Elem(head));
        via.push_back(k);
        row[k] = id;
      } else {
        row[k] = it->second;
      }
    }
    rmul.push_back(std::move(row));
  }

  FiniteGroup g;
  g.n_ = elems.size();
  g.table_.assign(g.n_ * g.n_, 0);
  // Elements are discovered in BFS order, so parent[b] < b and row a can be
  // filled left to right: a * b = (a * parent(b)) * gen.
  for (std::size_t a = 0; a < g.n_; ++a) {
    Elem* row = &g.table_[a * g.n_];
    row[0] = Elem(a);
    for (std::size_t b = 1; b < g.n_; ++b) row[b] = rmul[row[parent[b]]][via[b]];
  }
  g.fill_inverses();
  g.name_ = std::move(name);
  g.degree_ = degree;
  g.perms_ = std::move(elems);
  g.perm_gens_.assign(gens.begin(), gens.end());
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table,
                                    std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::InvalidGroup, "table is not square");
    for (auto x : row)
      if (x >= n) throw Error(ErrorKind::InvalidGroup, "table entry out of range");
  }
  std::optional<Elem> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b)
      ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = Elem(a);
  }
  if (!e) throw Error(ErrorKind::InvalidGroup, "no identity element");

  std::vector<Elem> order{*e};
  for (std::size_t a = 0; a < n; ++a)
    if (a != *e) order.push_back(Elem(a));
  std::vector<Elem> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = Elem(i);

  FiniteGroup g;
  g.n_ = n;
  g.table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.table_[i * n + j] = pos[table[order[i]][order[j]]];
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = g.table_[a * n + b] == 0 && g.table_[b * n + a] == 0;
    if (!has_inverse) throw Error(ErrorKind::InvalidGroup, "element without inverse");
  }
  g.fill_inverses();
  g.name_ = std::move(name);
  if (!g.verify_axioms()) throw Error(ErrorKind::InvalidGroup, "table is not associative");
  return g;
}

Elem FiniteGroup::power(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = 0;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

std::optional<Elem> FiniteGroup::find_permutation(const Permutation& p) const {
  auto it = std::find(perms_.begin(), perms_.end(), p);
  if (it == perms_.end()) return std::nullopt;
  return Elem(it - perms_.begin());
}

FiniteGroup FiniteGroup::relabeled(std::span<const Elem> order) const {
  if (order.size() != n_ || order.empty() || order[0] != 0)
    throw Error(ErrorKind::InvalidGroup, "relabeling must fix the identity");
  std::vector<Elem> pos(n_, Elem(-1));
  for (std::size_t i = 0; i < n_; ++i) {
    if (order[i] >= n_ || pos[order[i]] != Elem(-1))
      throw Error(ErrorKind::InvalidGroup, "relabeling is not a permutation");
    pos[order[i]] = Elem(i);
  }
  FiniteGroup g;
  g.n_ = n_;
  g.table_.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      g.table_[i * n_ + j] = pos[mul(order[i], order[j])];
  g.fill_inverses();
  g.name_ = name_;
  if (!perms_.empty()) {
    g.degree_ = degree_;
    g.perm_gens_ = perm_gens_;
    g.perms_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) g.perms_[i] = perms_[order[i]];
  }
  return g;
}

bool FiniteGroup::verify_axioms(std::size_t assoc_bound) const {
  for (std::size_t a = 0; a < n_; ++a) {
    if (mul(Elem(a), 0) != a || mul(0, Elem(a)) != a) return false;
    if (mul(Elem(a), inv(Elem(a))) != 0 || mul(inv(Elem(a)), Elem(a)) != 0) return false;
  }
  // Latin square rows: left multiplication must be a bijection.
  std::vector<bool> seen(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n_; ++b) {
      Elem c = mul(Elem(a), Elem(b));
      if (seen[c]) return false;
      seen[c] = true;
    }
  }
  if (n_ <= assoc_bound) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (mul(mul(Elem(a), Elem(b)), Elem(c)) != mul(Elem(a), mul(Elem(b), Elem(c))))
            return false;
    return true;
  }
  // Light's test: associativity holds iff it holds with the middle factor
  // ranging over a generating set.
  for (Elem s : generating_set())
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t c = 0; c < n_; ++c)
        if (mul(mul(Elem(a), s), Elem(c)) != mul(Elem(a), mul(s, Elem(c)))) return false;
  return true;
}

std::vector<Elem> FiniteGroup::generating_set() const {
  std::vector<Elem> gens;
  std::size_t covered = 1;
  std::vector<Elem> members{0};
  std::vector<bool> in(n_, false);
  in[0] = true;
  // Prefer high-order elements: they cover more of the group per generator.
  std::vector<Elem> cand(n_ > 0 ? n_ - 1 : 0);
  std::iota(cand.begin(), cand.end(), 1u);
  std::stable_sort(cand.begin(), cand.end(), [&](Elem a, Elem b) {
    return element_order(a) > element_order(b);
  });
  for (Elem c : cand) {
    if (covered == n_) break;
    if (in[c]) continue;
    gens.push_back(c);
    Subgroup h = subgroup_generated(*this, gens);
    std::fill(in.begin(), in.end(), false);
    for (Elem m : h.members()) in[m] = true;
    covered = h.size();
  }
  return gens;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < n_; ++a) e = std::lcm(e, element_order(Elem(a)));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) return false;
  return true;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(std::size_t parent_order, std::vector<Elem> members)
    : members_(std::move(members)), mask_(parent_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem m : members_) {
    if (m >= parent_order) throw Error(ErrorKind::NotMember, "subgroup member out of range");
    mask_[m] = true;
  }
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g.order(), {0}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(g.order(), std::move(all));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Elem s : gens) {
      if (s >= g.order()) throw Error(ErrorKind::NotMember, "generator out of range");
      Elem x = g.mul(members[head], s);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  return Subgroup(g.order(), std::move(members));
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<Elem> conjugates;
  for (Elem s : gens)
    for (Elem f = 0; f < g.order(); ++f) conjugates.push_back(g.conj(f, s));
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
  return subgroup_generated(g, conjugates);
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_order() != g.order() || !h.contains(0)) return false;
  for (Elem a : h.members())
    for (Elem b : h.members())
      if (!h.contains(g.mul(a, g.inv(b)))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n)) return false;
  auto fgens = g.generating_set();
  for (Elem f : fgens)
    for (Elem x : n.members())
      if (!n.contains(g.conj(f, x))) return false;
  return true;
}

Subgroup commutator_subgroup(const FiniteGroup& f, const Subgroup& n) {
  if (!is_normal(f, n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  std::vector<bool> seen(f.order(), false);
  std::vector<Elem> comms;
  for (Elem x : n.members())
    for (Elem g = 0; g < f.order(); ++g) {
      Elem c = f.commutator(x, g);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return subgroup_generated(f, comms);
}

bool is_full(const FiniteGroup& f, const Subgroup& n) {
  return commutator_subgroup(f, n) == n;
}

bool is_perfect(const FiniteGroup& f) { return is_full(f, Subgroup::whole(f)); }

Subgroup center(const FiniteGroup& f) {
  std::vector<Elem> z;
  auto gens = f.generating_set();
  for (Elem a = 0; a < f.order(); ++a) {
    bool central = true;
    for (Elem s : gens) central = central && f.mul(a, s) == f.mul(s, a);
    if (central) z.push_back(a);
  }
  return Subgroup(f.order(), std::move(z));
}

Subgroup derived_subgroup(const FiniteGroup& f) {
  return commutator_subgroup(f, Subgroup::whole(f));
}

Quotient quotient(const FiniteGroup& f, const Subgroup& n) {
  if (!is_normal(f, n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  const Elem none = Elem(-1);
  Quotient q;
  q.projection.assign(f.order(), none);
  // Scanning in index order makes the first element seen in each coset its
  // minimal representative, and numbers cosets by that representative.
  for (Elem a = 0; a < f.order(); ++a) {
    if (q.projection[a] != none) continue;
    Elem c = Elem(q.section.size());
    q.section.push_back(a);
    for (Elem x : n.members()) q.projection[f.mul(a, x)] = c;
  }
  const std::size_t m = q.section.size();
  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i][j] = q.projection[f.mul(q.section[i], q.section[j])];
  q.group = FiniteGroup::from_table(table, f.name() + "/N");
  return q;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupHom& phi) {
  if (phi.images.size() != src.order()) return false;
  for (Elem x : phi.images)
    if (x >= dst.order()) return false;
  for (Elem a = 0; a < src.order(); ++a)
    for (Elem b = 0; b < src.order(); ++b)
      if (phi.images[src.mul(a, b)] != dst.mul(phi.images[a], phi.images[b])) return false;
  return true;
}

GroupHom compose(const GroupHom& first, const GroupHom& second) {
  GroupHom r;
  r.images.reserve(first.images.size());
  for (Elem x : first.images) r.images.push_back(second.images.at(x));
  return r;
}

GroupHom identity_hom(const FiniteGroup& g) {
  GroupHom r;
  r.images.resize(g.order());
  std::iota(r.images.begin(), r.images.end(), 0u);
  return r;
}

DirectProduct direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t a = g.order(), b = h.order(), n = a * b;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x][y] = Elem(g.mul(Elem(x / b), Elem(y / b)) * b + h.mul(Elem(x % b), Elem(y % b)));
  DirectProduct d;
  d.group = FiniteGroup::from_table(table, g.name() + "x" + h.name());
  for (std::size_t x = 0; x < a; ++x) d.left.images.push_back(Elem(x * b));
  for (std::size_t y = 0; y < b; ++y) d.right.images.push_back(Elem(y));
  for (std::size_t z = 0; z < n; ++z) {
    d.left_proj.images.push_back(Elem(z / b));
    d.right_proj.images.push_back(Elem(z % b));
  }
  return d;
}

SubgroupEmbedding as_group(const FiniteGroup& g, const Subgroup& h, std::string name) {
  const auto& mem = h.members();
  std::vector<Elem> pos(g.order(), Elem(-1));
  for (std::size_t i = 0; i < mem.size(); ++i) pos[mem[i]] = Elem(i);
  std::vector<std::vector<Elem>> table(mem.size(), std::vector<Elem>(mem.size()));
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j < mem.size(); ++j) {
      Elem p = pos[g.mul(mem[i], mem[j])];
      if (p == Elem(-1)) throw Error(ErrorKind::InvalidGroup, "subset is not closed");
      table[i][j] = p;
    }
  SubgroupEmbedding e;
  e.group = FiniteGroup::from_table(table, std::move(name));
  e.inclusion.images = mem;
  return e;
}

// ---------------------------------------------------------------------------

namespace catalog {

namespace {
Permutation cycle_perm(std::size_t degree, std::initializer_list<std::uint32_t> pts) {
  Permutation p = identity_perm(degree);
  std::vector<std::uint32_t> v(pts);
  for (std::size_t i = 0; i < v.size(); ++i) p[v[i]] = v[(i + 1) % v.size()];
  return p;
}
}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "cyclic group of order 0");
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = std::uint32_t((i + 1) % n);
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(p);
  return FiniteGroup::from_permutations(n, gens, kDefaultGroupCap, "C" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidGroup, "dihedral group needs n >= 2");
  std::size_t deg = std::max<std::size_t>(n, 3);
  Permutation r = identity_perm(deg), s = identity_perm(deg);
  if (n == 2) {
    // Klein four as the symmetries of a 2-gon, realized on 4 points.
    std::vector<Permutation> gens{cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3})};
    return FiniteGroup::from_permutations(4, gens, kDefaultGroupCap, "D4");
  }
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = std::uint32_t((i + 1) % n);
    s[i] = std::uint32_t((n - i) % n);
  }
  std::vector<Permutation> gens{r, s};
  return FiniteGroup::from_permutations(deg, gens, kDefaultGroupCap,
                                        "D" + std::to_string(2 * n));
}

FiniteGroup quaternion8() {
  // Regular representation on 8 points: i = (1 2 3 4)(5 6 7 8), j = (1 5 3 7)(2 8 4 6).
  std::vector<Permutation> gens{parse_cycles("(1 2 3 4)(5 6 7 8)", 8),
                                parse_cycles("(1 5 3 7)(2 8 4 6)", 8)};
  return FiniteGroup::from_permutations(8, gens, kDefaultGroupCap, "Q8");
}

FiniteGroup symmetric(std::size_t n) {
  if (n <= 1) return FiniteGroup::trivial("S1");
  std::vector<Permutation> gens{cycle_perm(n, {0, 1})};
  if (n > 2) {
    Permutation c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = std::uint32_t((i + 1) % n);
    gens.insert(gens.begin(), c);
  }
  return FiniteGroup::from_permutations(n, gens, kDefaultGroupCap, "S" + std::to_string(n));
}

FiniteGroup alternating(std::size_t n) {
  if (n <= 2) return FiniteGroup::trivial("A" + std::to_string(n));
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(cycle_perm(n, {0, 1, k}));
  if (n == 5) gens = {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)};
  return FiniteGroup::from_permutations(n, gens, kDefaultGroupCap, "A" + std::to_string(n));
}

FiniteGroup elementary_abelian2(std::size_t rank) {
  if (rank == 0) return FiniteGroup::trivial("1");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 0; k < rank; ++k) gens.push_back(cycle_perm(2 * rank, {2 * k, 2 * k + 1}));
  return FiniteGroup::from_permutations(2 * rank, gens, kDefaultGroupCap,
                                        "C2^" + std::to_string(rank));
}

}  // namespace catalog

// ---------------------------------------------------------------------------

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity_perm(degree);
  std::vector<bool> moved(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error(ErrorKind::ParseError, "empty cycle text");
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorKind::ParseError, "expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw Error(ErrorKind::ParseError, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorKind::ParseError, "unexpected character in cycle");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + std::size_t(text[i] - '0');
        if (v > degree) throw Error(ErrorKind::ParseError, "point exceeds degree");
        ++i;
      }
      if (v == 0) throw Error(ErrorKind::ParseError, "points are 1-based");
      if (moved[v - 1]) throw Error(ErrorKind::ParseError, "point repeated in cycles");
      moved[v - 1] = true;
      cyc.push_back(std::uint32_t(v - 1));
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
      j = p[j];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace regkt
