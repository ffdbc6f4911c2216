#include "doctest.h"
#include "gen.hpp"
#include "regkt/multiplier.hpp"
#include "regkt/group_io.hpp"
#include "regkt/presentation.hpp"

using namespace regkt;

namespace {

Subgroup closure(const FiniteGroup& g, std::initializer_list<Elem> gens) {
  std::vector<Elem> v(gens);
  return normal_closure(g, v);
}

// Literature values of the Schur multiplier, frozen.
struct Known {
  FiniteGroup g;
  const char* presentation;
  const char* multiplier;
};

std::vector<Known> known_multipliers() {
  using namespace catalog;
  return {{cyclic(2), "C2", "0"},           {cyclic(3), "C3", "0"},
          {cyclic(4), "C4", "0"},           {cyclic(6), "C6", "0"},
          {elementary_abelian2(2), "C2xC2", "Z/2"},
          {elementary_abelian2(3), "C2xC2xC2", "Z/2 x Z/2 x Z/2"},
          {symmetric(3), "S3", "0"},        {dihedral(4), "D8", "Z/2"},
          {quaternion8(), "Q8", "0"},       {alternating(4), "A4", "Z/2"}};
}

DenseMatrix reduce_mod(DenseMatrix m, const std::vector<Integer>& moduli) {
  for (auto& row : m)
    for (std::size_t j = 0; j < row.size() && j < moduli.size(); ++j)
      if (moduli[j] != 0) {
        row[j] %= moduli[j];
        if (row[j] < 0) row[j] += moduli[j];
      }
  return m;
}

}  // namespace

TEST_SUITE("multiplier") {
  TEST_CASE("Schur multipliers: kj2(F,F) against literature and Hopf") {
    for (const auto& k : known_multipliers()) {
      CAPTURE(k.presentation);
      auto res = kj2(k.g, Subgroup::whole(k.g));
      CHECK(res.structure.to_string() == k.multiplier);
      CHECK(res.structure == schur_hopf(standard_presentation(k.presentation)));
    }
  }

  TEST_CASE("relative examples") {
    auto a4 = catalog::alternating(4);
    auto v4 = derived_subgroup(a4);
    CHECK(kj2(a4, v4).structure.to_string() == "Z/2");
    CHECK(kj2_extended(a4, v4).structure.to_string() == "Z/2 x Z/2 x Z/2");
    auto c4 = catalog::cyclic(4);
    CHECK(kj2(c4, closure(c4, {2})).structure.to_string() == "Z/2");
    auto c2 = catalog::cyclic(2);
    CHECK(kj2(c2, Subgroup::whole(c2)).structure.is_trivial());
    CHECK(kj2_extended(c2, Subgroup::whole(c2)).structure.is_trivial());
    CHECK(canonical_extension(c2, Subgroup::whole(c2)).kernel_structure.to_string() == "Z");
    CHECK(kj2(c4, Subgroup::trivial(c4)).structure.is_trivial());
    CHECK(kj2(catalog::symmetric(3), Subgroup::trivial(catalog::symmetric(3))).structure.is_trivial());
  }

  TEST_CASE("cap and normality gates") {
    auto s3 = catalog::symmetric(3);
    Subgroup c2(6, {0, s3.generating_set().back()});
    if (!is_normal(s3, c2)) CHECK_THROWS_AS(kj2(s3, c2), Error);
    MultiplierOptions small;
    small.cap = 4;
    CHECK_THROWS_AS(kj2(s3, Subgroup::whole(s3), small), Error);
  }

  TEST_CASE("invariant under relabeling") {
    auto& r = testing::rng();
    auto d8 = catalog::dihedral(4);
    auto z = center(d8);
    auto base = kj2(d8, z).structure;
    auto base_ext = kj2_extended(d8, z).structure;
    CHECK(base_ext.to_string() == "Z/2 x Z/2 x Z/2");
    for (int t = 0; t < 3; ++t) {
      auto order = testing::random_relabeling(r, d8.order());
      auto h = d8.relabeled(order);
      std::vector<Elem> where(d8.order());
      for (Elem i = 0; i < d8.order(); ++i) where[order[i]] = i;
      std::vector<Elem> members;
      for (Elem m : z.members()) members.push_back(where[m]);
      std::sort(members.begin(), members.end());
      CHECK(kj2(h, Subgroup(h.order(), members)).structure == base);
      CHECK(kj2_extended(h, Subgroup(h.order(), members)).structure == base_ext);
    }
  }

  TEST_CASE("extended group does not depend on the generating set") {
    // Same A4 as the catalog, numbered from different generators.
    auto a4 = parse_group("perm 4\n(1 2 3)\n(1 2)(3 4)\n");
    auto ext = kj2_extended(a4, derived_subgroup(a4));
    CHECK(ext.structure.to_string() == "Z/2 x Z/2 x Z/2");
    CHECK(ext.structure == kj2_extended(catalog::alternating(4), derived_subgroup(catalog::alternating(4))).structure);
  }

  TEST_CASE("the canonical cocycle satisfies the cocycle identity") {
    for (const auto& [f, n] : std::vector<std::pair<FiniteGroup, Subgroup>>{
             {catalog::cyclic(4), closure(catalog::cyclic(4), {2})},
             {catalog::alternating(4), derived_subgroup(catalog::alternating(4))},
             {catalog::quaternion8(), center(catalog::quaternion8())}}) {
      auto data = canonical_extension(f, n);
      CHECK_FALSE(cocycle_defect(data, [&](Elem a, Elem b) { return data.cocycle(a, b); }));
    }
  }

  TEST_CASE("induced maps are functorial") {
    auto& r = testing::rng();
    auto a4 = catalog::alternating(4);
    auto v4 = derived_subgroup(a4);
    auto base = kj2(a4, v4);
    const auto& moduli = base.subquotient->moduli();
    auto id = kj2_map(base, base, identity_hom(a4));
    CHECK(reduce_mod(id, moduli) == reduce_mod(identity_matrix(moduli.size()), moduli));

    auto relabel = [&](const FiniteGroup& g, const Subgroup& n) {
      auto order = testing::random_relabeling(r, g.order());
      GroupHom to;
      to.images.resize(g.order());
      for (Elem i = 0; i < g.order(); ++i) to.images[order[i]] = i;
      std::vector<Elem> members;
      for (Elem m : n.members()) members.push_back(to.images[m]);
      std::sort(members.begin(), members.end());
      auto h = g.relabeled(order);
      return std::tuple{h, Subgroup(h.order(), members), to};
    };
    auto [h1, n1, phi] = relabel(a4, v4);
    auto [h2, n2, psi] = relabel(h1, n1);
    auto k1 = kj2(h1, n1), k2 = kj2(h2, n2);
    auto m_phi = kj2_map(base, k1, phi);
    auto m_psi = kj2_map(k1, k2, psi);
    auto m_both = kj2_map(base, k2, compose(phi, psi));
    const auto& m2 = k2.subquotient->moduli();
    CHECK(reduce_mod(multiply(m_phi, m_psi, k1.subquotient->components()), m2) == reduce_mod(m_both, m2));
    CHECK(is_surjective_map(m_both, m2));

    auto triv = FiniteGroup::trivial();
    auto kt = kj2(triv, Subgroup::whole(triv));
    GroupHom to_triv;
    to_triv.images.assign(a4.order(), 0);
    auto zero = kj2_map(base, kt, to_triv);
    for (const auto& row : zero)
      for (const auto& x : row) CHECK(x == 0);
    GroupHom constant;
    constant.images.assign(a4.order(), 1);
    CHECK_THROWS_AS(kj2_map(base, base, constant), Error);
  }

  TEST_CASE("extended group maps onto the plain one") {
    for (const auto& [f, n] : std::vector<std::pair<FiniteGroup, Subgroup>>{
             {catalog::alternating(4), derived_subgroup(catalog::alternating(4))},
             {catalog::dihedral(4), center(catalog::dihedral(4))},
             {catalog::cyclic(4), closure(catalog::cyclic(4), {2})}}) {
      auto plain = kj2(f, n), ext = kj2_extended(f, n);
      CHECK(is_surjective_map(extended_to_plain(ext, plain), plain.subquotient->moduli()));
    }
  }

  TEST_CASE("numerator certificates evaluate and expand") {
    auto a4 = catalog::alternating(4);
    auto data = canonical_extension(a4, derived_subgroup(a4));
    const auto& env = data.renv->envelope();
    for (bool ext : {false, true}) {
      auto num = numerator(data, ext);
      CHECK(num.image == commutator_subgroup(a4, derived_subgroup(a4)));
      for (const auto& c : num.generators) {
        CHECK(data.renv->member_jnf(c.word));
        Word w;
        for (const auto& f : c.factors) {
          Word k = comm(env.u(f.n), env.u(f.f));
          if (f.sign < 0) k = k.inverse();
          w *= f.by ? conj(k, env.u(f.by)) : k;
        }
        CHECK(w == c.word);
        CHECK(env.ab_j(c.word) == c.coords);
      }
    }
  }

  TEST_CASE("universal extension gates") {
    auto c2 = catalog::cyclic(2);
    try {
      universal_extension(c2, Subgroup::whole(c2));
      FAIL("expected NotPerfect");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPerfect);
    }
    auto triv = FiniteGroup::trivial();
    auto u = universal_extension(triv, Subgroup::trivial(triv));
    CHECK(u.group.order() == 1);
    CHECK(u.kernel_structure.is_trivial());
    CHECK(kjn(2, catalog::cyclic(4), closure(catalog::cyclic(4), {2})).to_string() == "Z/2");
    CHECK_THROWS_AS(kjn(3, c2, Subgroup::whole(c2)), Error);
  }
}
