#include "doctest.h"
#include "gen.hpp"
#include "regkt/splittings.hpp"

using namespace regkt;

namespace {
Word a(int s = 1) { return Word::letter(kTagAux, 0, s); }
Word b(int s = 1) { return Word::letter(kTagAux, 1, s); }

DenseRow row(std::initializer_list<long> xs) {
  DenseRow r;
  for (long x : xs) r.emplace_back(x);
  return r;
}
}  // namespace

TEST_SUITE("splittings") {
  TEST_CASE("cores of generating families") {
    auto plain = find_core({a(), b()}, {Word()});
    REQUIRE(plain);
    CHECK(verify_core(*plain, {a(), b()}));
    for (const auto& s : plain->section_words) CHECK(s.empty());

    std::vector<Word> gens{a() * b() * a(-1), b()};
    auto cert = find_core(gens, {Word(), a()});
    REQUIRE(cert);
    CHECK(verify_core(*cert, gens));
    CHECK(cert->core_elements.size() == 1);

    CoreCertificate bad = *cert;
    bad.witness[0] = bad.witness[1];
    CHECK_FALSE(verify_core(bad, gens));
  }

  TEST_CASE("weak core checks") {
    CHECK(check_weak_core({}, 0));
    CHECK(check_weak_core({{0, 0, row({1, 0})}, {0, 1, row({1, 1})}}, 2));
    CHECK_FALSE(check_weak_core({{0, 0, row({1, 0})}, {0, 0, row({0, 1})}}, 2));
    CHECK_FALSE(check_weak_core({{0, 0, row({2, 0})}, {0, 1, row({0, 1})}}, 2));
    CHECK_FALSE(check_weak_core({{0, 0, row({1, 0})}, {1, 0, row({1, 0})}}, 2));
    CHECK_FALSE(check_weak_core({{0, 0, row({1, 0})}}, 2));
  }

  TEST_CASE("product example converges with a decreasing level") {
    auto c2 = catalog::cyclic(2);
    auto cand = product_example(c2, c2);
    CHECK(cand.core.size() == 2);
    auto res = check_strict_splitting(cand, 5);
    CHECK(res.verdict == SplittingVerdict::Converged);
    CHECK(res.level_decreasing);
    CHECK(res.steps <= 5);

    auto c3 = catalog::cyclic(3);
    CHECK(product_example(c2, c3).core.size() == 4);
    auto r23 = check_strict_splitting(product_example(c2, c3), 8);
    CHECK(r23.verdict == SplittingVerdict::Converged);
    CHECK(r23.level_decreasing);
  }

  TEST_CASE("scrambled section is rejected") {
    auto c2 = catalog::cyclic(2);
    auto res = check_strict_splitting(scrambled(product_example(c2, c2)), 5);
    CHECK(res.verdict != SplittingVerdict::Converged);
  }

  TEST_CASE("trivial factor gives an empty candidate") {
    auto cand = product_example(FiniteGroup::trivial(), catalog::cyclic(3));
    CHECK(cand.core.empty());
    auto res = check_strict_splitting(cand, 5);
    CHECK(res.verdict == SplittingVerdict::Converged);
    CHECK(res.steps == 0);
  }

  TEST_CASE("verdicts are monotone in the depth bound") {
    auto cand = product_example(catalog::cyclic(2), catalog::cyclic(3));
    bool converged = false;
    for (std::size_t d = 0; d <= 6; ++d) {
      auto res = check_strict_splitting(cand, d);
      CHECK(res.verdict != SplittingVerdict::MalformedCandidate);
      if (converged) CHECK(res.verdict == SplittingVerdict::Converged);
      converged = res.verdict == SplittingVerdict::Converged;
      auto again = check_strict_splitting(cand, d);
      CHECK(again.verdict == res.verdict);
      CHECK(again.steps == res.steps);
      CHECK(again.pairs_explored == res.pairs_explored);
    }
    CHECK(converged);
  }

  TEST_CASE("differences factor into conjugated cores") {
    auto& r = testing::rng();
    auto cand = product_example(catalog::cyclic(2), catalog::cyclic(3));
    const std::size_t n = cand.ambient.order();
    for (int t = 0; t < 100; ++t) {
      Word x1 = cand.section(testing::random_envelope_word(r, n, 4));
      Word x2 = cand.section(testing::random_envelope_word(r, n, 4));
      Word diff = section_difference(cand, x1, x2);
      auto fs = factor_difference(cand, diff);
      REQUIRE(fs);
      Word prod;
      for (const auto& f : *fs) {
        CHECK(cand.in_section(f.conjugator));
        Word e = cand.core.at(f.core_index).word;
        prod *= conj(f.sign > 0 ? e : e.inverse(), f.conjugator);
      }
      CHECK(prod == diff);
    }
  }

  TEST_CASE("finite pairs and the weak core consequence") {
    auto c4 = catalog::cyclic(4);
    auto trivial = weak_core_consequence(c4, Subgroup::trivial(c4));
    CHECK(trivial.status == WeakCoreOutcome::Status::Pass);
    CHECK(trivial.kj2_structure.is_trivial());

    std::vector<Elem> two{2};
    auto skipped = weak_core_consequence(c4, normal_closure(c4, two));
    CHECK(skipped.status == WeakCoreOutcome::Status::Skipped);
    CHECK_FALSE(skipped.weak_core);

    auto a4 = catalog::alternating(4);
    auto whole = weak_core_consequence(a4, Subgroup::whole(a4));
    CHECK(whole.status == WeakCoreOutcome::Status::Skipped);
  }
}
