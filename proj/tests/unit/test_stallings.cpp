#include "doctest.h"
#include "gen.hpp"
#include "regkt/stallings.hpp"

using namespace regkt;

namespace {

Word a(int s = 1) { return Word::letter(kTagAux, 0, s); }
Word b(int s = 1) { return Word::letter(kTagAux, 1, s); }
const std::vector<GenId> kAB{GenId{kTagAux, 0}, GenId{kTagAux, 1}};

// Membership oracle for <a^2, b, a b a^-1>: exponent sum of a is even.
bool even_a(const Word& w) {
  long s = 0;
  for (const auto& l : w.letters())
    if (l.gen.index == 0) s += l.sign;
  return s % 2 == 0;
}

}  // namespace

TEST_SUITE("stallings") {
  TEST_CASE("index two subgroup") {
    auto g = SubgroupGraph::build({a() * a(), b(), a() * b() * a(-1)}, kAB);
    CHECK(g.num_states() == 2);
    CHECK(g.index() == std::optional<std::size_t>(2));
    CHECK(g.rank() == 3);
    CHECK(g.is_complete());
    CHECK_FALSE(g.member(a()));
    CHECK(g.member(a() * b() * a()));

    auto& r = testing::rng();
    for (int t = 0; t < 300; ++t) {
      Word w = testing::random_word(r, kTagAux, 2, 10);
      CHECK(g.member(w) == even_a(w));
      if (g.member(w)) {
        Word e = g.schreier_express(w);
        CHECK(apply_hom(g.basis_assignment(), e) == w);
      }
    }
  }

  TEST_CASE("commutator subgroup of rank one") {
    auto g = SubgroupGraph::build({comm(a(), b())}, kAB);
    CHECK(g.rank() == 1);
    CHECK_FALSE(g.index().has_value());
    CHECK_FALSE(g.is_complete());
    CHECK(g.member(comm(a(), b()).inverse()));
    CHECK(g.member(comm(b(), a()) * comm(a(), b()) * comm(a(), b())));
    CHECK_FALSE(g.member(a()));
  }

  TEST_CASE("Nielsen independence") {
    CHECK_FALSE(nielsen_independent({a() * a(), a() * a() * a()}));
    CHECK(nielsen_independent({a(), b()}));
    CHECK(nielsen_independent({}));
    CHECK_FALSE(nielsen_independent({a(), b(), a() * b()}));
    CHECK_FALSE(nielsen_independent({Word()}));
  }

  TEST_CASE("free basis spans the same subgroup") {
    auto& r = testing::rng();
    for (int t = 0; t < 40; ++t) {
      std::vector<Word> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(testing::random_word(r, kTagAux, 2, 5));
      auto g = SubgroupGraph::build(gens, kAB);
      auto h = SubgroupGraph::build(g.free_basis(), kAB);
      CHECK(same_subgroup(g, h));
      CHECK(nielsen_independent(g.free_basis()));
      for (const auto& w : gens) CHECK(g.member(w));
      // Euler characteristic of the folded core graph.
      if (!g.free_basis().empty() && g.is_complete())
        CHECK(g.rank() == 1 + *g.index() * (kAB.size() - 1));
    }
  }
}
