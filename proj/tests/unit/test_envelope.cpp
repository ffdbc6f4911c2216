#include "doctest.h"
#include "gen.hpp"
#include "regkt/envelope.hpp"
#include "regkt/stallings.hpp"

using namespace regkt;

namespace {

Word random_jf(const Envelope& env, std::mt19937_64& r, std::size_t len) {
  Word w = testing::random_envelope_word(r, env.order(), len);
  return w * env.u(env.evaluate(w), -1);
}

Subgroup sub(const FiniteGroup& g, std::initializer_list<Elem> gens) {
  std::vector<Elem> v(gens);
  return normal_closure(g, v);
}

}  // namespace

TEST_SUITE("envelope") {
  TEST_CASE("J_F basis sizes and folding") {
    CHECK(Envelope(FiniteGroup::trivial()).jf_basis().empty());
    Envelope c2(catalog::cyclic(2));
    REQUIRE(c2.jf_basis().size() == 1);
    CHECK(c2.jf_basis()[0] == c2.u(1) * c2.u(1));
    for (const auto& f : testing::small_groups()) {
      if (f.order() > 12) continue;
      Envelope env(f);
      auto basis = env.jf_basis();
      CHECK(basis.size() == (f.order() - 1) * (f.order() - 1));
      for (const auto& w : basis) CHECK(env.in_jf(w));
      if (f.order() < 2) continue;
      CHECK(nielsen_independent(basis));
      std::vector<GenId> alpha;
      for (Elem x = 1; x < f.order(); ++x) alpha.push_back(Envelope::gen(x));
      auto g = SubgroupGraph::build(basis, alpha);
      CHECK(g.num_states() == f.order());
      CHECK(g.is_complete());
    }
  }

  TEST_CASE("abelianized coordinates are additive and equivariant") {
    auto& r = testing::rng();
    for (const auto& f : {catalog::cyclic(3), catalog::symmetric(3), catalog::quaternion8()}) {
      Envelope env(f);
      for (int t = 0; t < 60; ++t) {
        Word x = random_jf(env, r, 6), y = random_jf(env, r, 6);
        CHECK(env.ab_j(x * y) == env.ab_j(x) + env.ab_j(y));
        CHECK(env.ab_j(x.inverse()) == scaled(env.ab_j(x), -1));
        CHECK(env.ab_j(comm(x, y)).empty());
        Elem g = Elem(1 + r() % (f.order() - 1));
        CHECK(env.act(g, env.ab_j(x)) == env.ab_j(conj(x, env.u(g))));
        CHECK(apply_hom(
                  [&](GenId id) -> std::optional<Word> {
                    if (id.tag != kTagBasis) return std::nullopt;
                    auto [a, b] = env.pair_of(id.index);
                    return env.pair_word(a, b);
                  },
                  env.express_in_basis(x)) == x);
      }
      CHECK_THROWS_AS(env.ab_j(env.u(1)), Error);
    }
  }

  TEST_CASE("core counts") {
    auto c4 = catalog::cyclic(4);
    RelativeEnvelope renv(Envelope(c4), sub(c4, {2}));
    REQUIRE(renv.normal().size() == 2);
    CHECK(renv.count(CoreKind::B1) == 1);
    CHECK(renv.count(CoreKind::B2) == 1);
    CHECK(renv.count(CoreKind::B3) == 2);

    auto c2 = catalog::cyclic(2);
    RelativeEnvelope whole(Envelope(c2), Subgroup::whole(c2));
    CHECK(whole.count(CoreKind::B1) == 1);
    CHECK(whole.count(CoreKind::B2) == 0);
    CHECK(whole.count(CoreKind::B3) == 0);

    RelativeEnvelope triv(Envelope(c4), Subgroup::trivial(c4));
    CHECK(triv.b_cores().empty());
    CHECK(triv.ucores().empty());
  }

  TEST_CASE("membership and core coordinates") {
    auto c2 = catalog::cyclic(2);
    RelativeEnvelope renv(Envelope(c2), Subgroup::whole(c2));
    const auto& env = renv.envelope();
    CHECK(renv.member_jnf(Word()));
    CHECK_FALSE(renv.member_jnf(env.u(1)));
    Word b1 = env.u(1) * env.u(1);
    CHECK(renv.core_coordinates(b1 * b1) == DenseRow{2});

    auto a4 = catalog::alternating(4);
    RelativeEnvelope r4(Envelope(a4), derived_subgroup(a4));
    const auto& e4 = r4.envelope();
    const auto& n = r4.normal().members();
    Word x = e4.pair_word(n[1], n[2]), y = e4.pair_word(n[2], n[3]);
    CHECK(r4.member_jnf(x));
    CHECK(r4.member_jnf(comm(x, y)));
    for (Elem z : r4.reps()) CHECK(r4.core_coordinates(conj(x, e4.u(z))) == r4.core_coordinates(x));
    for (const auto& c : r4.core_coordinates(comm(x, y))) CHECK(c == 0);
    for (Elem z = 0; z < a4.order(); ++z)
      if (!r4.normal().contains(z)) CHECK_FALSE(r4.member_jnf(e4.u(z)));
  }

  TEST_CASE("Lambda has the expected rank and core basis") {
    for (const auto& [f, gen] : std::vector<std::pair<FiniteGroup, Elem>>{
             {catalog::cyclic(4), 2}, {catalog::dihedral(4), 0}, {catalog::symmetric(3), 0}}) {
      Subgroup n = gen ? sub(f, {gen}) : derived_subgroup(f);
      RelativeEnvelope renv(Envelope(f), n);
      const std::size_t q = f.order() / n.size();
      CHECK(renv.lambda_rank() == (f.order() - 1) * (f.order() - 1) - (q - 1) * (q - 1));
      CHECK(renv.conjugated_core_vectors().size() == renv.lambda_rank());
      EchelonLattice lat(renv.envelope().pair_count());
      for (const auto& v : renv.conjugated_core_vectors())
        CHECK(lat.insert(v.dense(renv.envelope().pair_count())));
    }
  }

  TEST_CASE("relative rewriting round trip") {
    auto& r = testing::rng();
    auto a4 = catalog::alternating(4);
    RelativeEnvelope renv(Envelope(a4), derived_subgroup(a4));
    RelativeRewriter rw(renv);
    auto letters = rw.family(1);
    CHECK(nielsen_independent(letters));
    for (int t = 0; t < 100; ++t) {
      Word w;
      for (std::size_t k = 0, n = 1 + r() % 4; k < n; ++k) {
        const Word& l = letters[r() % letters.size()];
        w *= (r() % 2) ? l : l.inverse();
      }
      CHECK(renv.member_unf(w));
      Word e = rw.rewrite(w);
      CHECK(apply_hom(rw.assignment(), e) == w);
    }
    Elem outside = 1;
    while (renv.normal().contains(outside)) ++outside;
    CHECK_THROWS_AS(rw.rewrite(renv.envelope().u(outside)), Error);
  }
}
