#include "regkt/multiplier.hpp"

#include <algorithm>
#include <set>

namespace regkt {

namespace {

void check_pair(const FiniteGroup& f, const Subgroup& n, std::size_t cap) {
  if (f.order() > cap)
    throw Error(ErrorKind::CapExceeded,
                "group of order " + std::to_string(f.order()) + " exceeds cap " + std::to_string(cap));
  if (n.parent_order() != f.order() || !is_subgroup(f, n) || !is_normal(f, n))
    throw Error(ErrorKind::NotNormal, "subgroup is not normal");
}

std::vector<Elem> subgroup_generators(const FiniteGroup& f, const Subgroup& n) {
  if (n.is_trivial()) return {};
  auto emb = as_group(f, n);
  std::vector<Elem> out;
  for (Elem g : emb.group.generating_set()) out.push_back(emb.inclusion.images[g]);
  return out;
}

}  // namespace

CanonicalExtensionData canonical_extension(const FiniteGroup& f, const Subgroup& n,
                                           const MultiplierOptions& opt) {
  check_pair(f, n, opt.cap);
  CanonicalExtensionData d;
  d.renv = std::make_shared<RelativeEnvelope>(Envelope(f), n);
  const Envelope& env = d.renv->envelope();
  d.columns = env.pair_count();
  d.relations_a = IntMatrix(d.columns);
  d.relations_b = IntMatrix(d.columns);
  d.complement = IntMatrix(d.columns);

  const auto fgens = f.generating_set();
  for (const auto& c : d.renv->conjugated_core_vectors())
    for (Elem h : fgens) {
      SparseRow r = env.act(h, c) - c;
      if (!r.empty()) d.relations_a.add_row(std::move(r));
    }
  const auto ngens = subgroup_generators(f, n);
  for (std::uint32_t e = 0; e < d.columns; ++e)
    for (Elem m : ngens) {
      SparseRow unit = SparseRow::unit(e);
      SparseRow r = env.act(m, unit) - unit;
      if (!r.empty()) d.relations_b.add_row(std::move(r));
    }
  const auto& reps = d.renv->reps();
  for (std::size_t i = 1; i < reps.size(); ++i)
    for (std::size_t j = 1; j < reps.size(); ++j)
      d.complement.add_row(SparseRow::unit(env.pair_index(reps[i], reps[j])));

  d.kernel_relations = IntMatrix(d.columns);
  d.kernel_relations.append(d.relations_a);
  d.kernel_relations.append(d.relations_b);
  d.kernel_relations.append(d.complement);
  d.kernel_structure = cokernel_structure(d.kernel_relations);
  return d;
}

NumeratorData numerator(const CanonicalExtensionData& data, bool extended) {
  const FiniteGroup& f = data.group();
  const Envelope& env = data.renv->envelope();
  std::vector<Elem> conjugators;
  if (extended) {
    for (Elem x = 1; x < f.order(); ++x) conjugators.push_back(x);
  } else {
    conjugators = f.generating_set();
  }

  struct Gen {
    Elem n, f, image;
    Word word;
  };
  std::vector<Gen> gens;
  for (Elem f0 : conjugators)
    for (Elem n0 : data.normal().members()) {
      if (n0 == 0) continue;
      Elem img = f.commutator(n0, f0);
      gens.push_back({n0, f0, img, comm(env.u(n0), env.u(f0))});
    }

  NumeratorData out;
  out.tree.assign(f.order(), Word{});
  out.tree_factors.assign(f.order(), {});
  out.matrix = IntMatrix(data.columns);
  std::set<std::vector<std::pair<std::uint32_t, Integer>>> distinct;
  auto emit = [&](Word w, std::vector<CommutatorFactor> factors) {
    if (w.empty()) return;
    SparseRow v = env.ab_j(w);
    if (v.empty() || !distinct.insert(v.entries).second) return;
    out.matrix.add_row(v);
    out.generators.push_back({std::move(w), std::move(factors), std::move(v)});
  };
  auto inverse_factors = [](const std::vector<CommutatorFactor>& fs) {
    std::vector<CommutatorFactor> r;
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) r.push_back({it->n, it->f, -it->sign, it->by});
    return r;
  };

  std::vector<bool> seen(f.order(), false);
  std::vector<Elem> order{0};
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Elem m = order[i];
    for (const auto& g : gens) {
      Elem t = f.mul(m, g.image);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
        out.tree[t] = out.tree[m] * g.word;
        out.tree_factors[t] = out.tree_factors[m];
        out.tree_factors[t].push_back({g.n, g.f, 1, 0});
        continue;
      }
      auto fs = out.tree_factors[m];
      fs.push_back({g.n, g.f, 1, 0});
      for (const auto& x : inverse_factors(out.tree_factors[t])) fs.push_back(x);
      emit(out.tree[m] * g.word * out.tree[t].inverse(), std::move(fs));
    }
  }
  if (extended)
    for (Elem y : conjugators)
      for (Elem m : order) {
        const Elem t = f.conj(y, m);
        std::vector<CommutatorFactor> fs;
        for (const auto& x : out.tree_factors[m]) fs.push_back({x.n, x.f, x.sign, y});
        for (const auto& x : inverse_factors(out.tree_factors[t])) fs.push_back(x);
        emit(conj(out.tree[m], env.u(y)) * out.tree[t].inverse(), std::move(fs));
      }
  std::sort(order.begin(), order.end());
  out.image = Subgroup(f.order(), order);
  return out;
}

namespace {

KJ2Result build_kj2(const FiniteGroup& f, const Subgroup& n, const MultiplierOptions& opt,
                    bool extended) {
  auto data = std::make_shared<CanonicalExtensionData>(canonical_extension(f, n, opt));
  NumeratorData num = numerator(*data, extended);
  IntMatrix rel(data->columns);
  rel.append(data->relations_a);
  if (!extended) rel.append(data->relations_b);
  rel.append(data->complement);
  KJ2Result r;
  r.subquotient = std::make_shared<Subquotient>(rel, num.matrix);
  r.structure = r.subquotient->structure();
  r.generator_certificates = std::move(num.generators);
  r.extension = std::move(data);
  r.extended = extended;
  return r;
}

}  // namespace

KJ2Result kj2(const FiniteGroup& f, const Subgroup& n, const MultiplierOptions& opt) {
  return build_kj2(f, n, opt, false);
}

KJ2Result kj2_extended(const FiniteGroup& f, const Subgroup& n, const MultiplierOptions& opt) {
  return build_kj2(f, n, opt, true);
}

SparseRow map_pair_vector(const Envelope& src, const Envelope& dst, const GroupHom& phi,
                          const SparseRow& v) {
  SparseRow out;
  for (const auto& [idx, coef] : v.entries) {
    auto [g, h] = src.pair_of(idx);
    Elem pg = phi.images[g], ph = phi.images[h];
    if (pg == 0 || ph == 0) continue;
    out.add(dst.pair_index(pg, ph), coef);
  }
  out.normalize();
  return out;
}

DenseMatrix kj2_map(const KJ2Result& src, const KJ2Result& dst, const GroupHom& phi) {
  if (phi.images.size() != src.group().order() || !is_homomorphism(src.group(), dst.group(), phi))
    throw Error(ErrorKind::NotHomomorphism, "map is not a homomorphism");
  for (Elem x : src.normal().members())
    if (!dst.normal().contains(phi.images[x]))
      throw Error(ErrorKind::NotHomomorphism, "map does not carry N into N'");
  const Envelope& es = src.extension->renv->envelope();
  const Envelope& ed = dst.extension->renv->envelope();
  DenseMatrix m;
  for (std::size_t i = 0; i < src.subquotient->components(); ++i) {
    SparseRow v = map_pair_vector(es, ed, phi, src.subquotient->lift(i));
    m.push_back(dst.subquotient->coords(v));
  }
  return m;
}

bool is_surjective_map(const DenseMatrix& phi, const std::vector<Integer>& target_orders) {
  const std::size_t k = target_orders.size();
  IntMatrix m(k);
  for (const auto& r : phi) m.add_row(r);
  for (std::size_t j = 0; j < k; ++j)
    if (target_orders[j] != 0) m.add_row(SparseRow{{{std::uint32_t(j), target_orders[j]}}});
  return cokernel_structure(m).is_trivial();
}

DenseMatrix extended_to_plain(const KJ2Result& extended, const KJ2Result& plain) {
  DenseMatrix m;
  for (std::size_t i = 0; i < extended.subquotient->components(); ++i)
    m.push_back(plain.subquotient->coords(extended.subquotient->lift(i)));
  return m;
}

std::optional<std::array<Elem, 3>> cocycle_defect(
    const CanonicalExtensionData& data, const std::function<SparseRow(Elem, Elem)>& cocycle) {
  const FiniteGroup& f = data.group();
  const auto& members = data.normal().members();
  IntMatrix values(data.columns);
  for (Elem m : members)
    for (Elem n : members) {
      SparseRow v = cocycle(m, n);
      if (!v.empty()) values.add_row(std::move(v));
    }
  Subquotient a(data.kernel_relations, values);
  for (Elem m : members)
    for (Elem n : members)
      for (Elem p : members) {
        SparseRow lhs = cocycle(m, n) + cocycle(f.mul(m, n), p);
        SparseRow rhs = cocycle(n, p) + cocycle(m, f.mul(n, p));
        if (!a.is_zero(lhs - rhs)) return std::array<Elem, 3>{m, n, p};
      }
  return std::nullopt;
}

UniversalExtension universal_extension(const FiniteGroup& f, const Subgroup& n,
                                       const MultiplierOptions& opt) {
  if (f.order() > opt.quick_cap && !opt.long_running)
    throw Error(ErrorKind::CapExceeded, "universal extension of a group of order " +
                                            std::to_string(f.order()) + " needs the long-running flag");
  check_pair(f, n, opt.cap);
  if (!is_perfect(f)) throw Error(ErrorKind::NotPerfect, "F is not perfect");
  if (!is_full(f, n)) throw Error(ErrorKind::NotFull, "N is not full in F");

  CanonicalExtensionData data = canonical_extension(f, n, opt);
  const Envelope& env = data.renv->envelope();
  NumeratorData num = numerator(data);
  IntMatrix rel(data.columns);
  rel.append(data.kernel_relations);
  Subquotient k(rel, num.matrix);
  if (!k.structure().is_finite())
    throw Error(ErrorKind::InfiniteKernel, "kernel " + k.structure().to_string() + " is infinite");

  const auto& members = n.members();
  const std::size_t nn = members.size();
  std::vector<std::uint64_t> moduli;
  std::uint64_t ksize = 1;
  for (const auto& d : k.moduli()) {
    moduli.push_back(d.get_ui());
    ksize *= d.get_ui();
  }
  if (nn * ksize > opt.cap * 64)
    throw Error(ErrorKind::CapExceeded, "extension group too large");
  std::vector<std::size_t> pos(f.order(), 0);
  for (std::size_t i = 0; i < nn; ++i) pos[members[i]] = i;

  auto encode = [&](const std::vector<Integer>& c) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) t = t * moduli[i] + c[i].get_ui();
    return t;
  };
  auto decode = [&](std::uint64_t t) {
    std::vector<std::uint64_t> c(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      c[i] = t % moduli[i];
      t /= moduli[i];
    }
    return c;
  };
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    auto x = decode(a), y = decode(b);
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) t = t * moduli[i] + (x[i] + y[i]) % moduli[i];
    return t;
  };
  auto kernel_coords = [&](const Word& w) { return encode(k.coords(env.ab_j(w))); };

  std::vector<std::uint64_t> kappa(nn * nn);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) {
      Elem a = members[i], b = members[j];
      Word w = num.tree[a] * num.tree[b] * num.tree[f.mul(a, b)].inverse();
      kappa[i * nn + j] = kernel_coords(w);
    }
  std::vector<std::vector<std::uint64_t>> sum(ksize, std::vector<std::uint64_t>(ksize));
  for (std::uint64_t s = 0; s < ksize; ++s)
    for (std::uint64_t t = 0; t < ksize; ++t) sum[s][t] = add(s, t);

  const std::size_t total = nn * ksize;
  std::vector<std::vector<Elem>> table(total, std::vector<Elem>(total));
  for (std::size_t i = 0; i < nn; ++i)
    for (std::uint64_t s = 0; s < ksize; ++s)
      for (std::size_t j = 0; j < nn; ++j)
        for (std::uint64_t t = 0; t < ksize; ++t) {
          std::size_t mn = pos[f.mul(members[i], members[j])];
          std::uint64_t c = sum[sum[s][t]][kappa[i * nn + j]];
          table[i * ksize + s][j * ksize + t] = Elem(mn * ksize + c);
        }

  UniversalExtension out;
  out.group = FiniteGroup::from_table(table, f.name().empty() ? "ext" : f.name() + "~");
  const FiniteGroup& g = out.group;
  std::vector<Elem> kernel_members;
  for (std::uint64_t t = 0; t < ksize; ++t) kernel_members.push_back(Elem(t));
  out.kernel = Subgroup(total, kernel_members);
  out.projection.images.resize(total);
  for (std::size_t e = 0; e < total; ++e) out.projection.images[e] = members[e / ksize];
  out.kernel_structure = k.structure();
  out.kernel_moduli = k.moduli();

  out.central = true;
  for (Elem z : kernel_members)
    for (Elem x = 0; x < total && out.central; ++x) out.central = g.mul(z, x) == g.mul(x, z);

  // F acts by f.(m,t) = (f m f^-1, t + delta(f,m)); collect x (f.x)^-1.
  std::vector<Elem> twisted;
  for (Elem f0 : f.generating_set()) {
    std::vector<std::uint64_t> delta(nn);
    for (std::size_t i = 0; i < nn; ++i) {
      Elem m = members[i];
      Word w = conj(num.tree[m], env.u(f0)) * num.tree[f.conj(f0, m)].inverse();
      delta[i] = kernel_coords(w);
    }
    for (std::size_t i = 0; i < nn; ++i)
      for (std::uint64_t t = 0; t < ksize; ++t) {
        Elem x = Elem(i * ksize + t);
        Elem fx = Elem(pos[f.conj(f0, members[i])] * ksize + sum[t][delta[i]]);
        twisted.push_back(g.mul(x, g.inv(fx)));
      }
  }
  Subgroup comm_gf = subgroup_generated(g, twisted);
  out.kernel_in_commutator = true;
  for (Elem z : kernel_members) out.kernel_in_commutator = out.kernel_in_commutator && comm_gf.contains(z);
  return out;
}

AbelianGroupStructure k2(const FiniteGroup& f, const Subgroup& n, const MultiplierOptions& opt) {
  if (!is_perfect(f)) throw Error(ErrorKind::NotPerfect, "F is not perfect");
  check_pair(f, n, opt.cap);
  return kj2(f, commutator_subgroup(f, n), opt).structure;
}

AbelianGroupStructure kjn(int n, const FiniteGroup& f, const Subgroup& sub,
                          const MultiplierOptions& opt) {
  if (n == 2) return kj2(f, sub, opt).structure;
  throw Error(ErrorKind::Unsupported,
              "K^J_n is only computed for n = 2; for n >= 3 the groups are expected to vanish");
}

}  // namespace regkt
