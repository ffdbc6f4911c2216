#include "doctest.h"
#include "gen.hpp"
#include "regkt/presentation.hpp"

using namespace regkt;

namespace {
Presentation pres(std::size_t k, std::initializer_list<const char*> rels) {
  Presentation p;
  p.generators = k;
  for (const char* r : rels) p.relators.push_back(relator_from_string(r, k));
  return p;
}
}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("coset enumeration orders") {
    CHECK(presented_group(pres(1, {"aa"})).order() == 2);
    CHECK(presented_group(pres(2, {"aa", "bb", "abab"})).order() == 4);
    CHECK(presented_group(pres(2, {"aa", "bbb", "ababab"})).order() == 12);
    CHECK(presented_group(pres(2, {"aaaa", "abaB", "aabb"})).order() == 8);
    CHECK(presented_group(pres(2, {"aaa", "bb", "abab"})).order() == 6);
  }

  TEST_CASE("Hopf formula on small presentations") {
    CHECK(schur_hopf(pres(1, {"aa"})).is_trivial());
    CHECK(schur_hopf(pres(2, {"aa", "bb", "abab"})).to_string() == "Z/2");
    CHECK(schur_hopf(pres(2, {"aa", "bbb", "ababab"})).to_string() == "Z/2");
    CHECK(schur_hopf(pres(2, {"aaa", "bb", "abab"})).is_trivial());
    CHECK_THROWS_AS(schur_hopf(pres(2, {"aa"})), Error);
  }

  TEST_CASE("standard presentations") {
    const std::vector<std::pair<const char*, std::size_t>> orders{
        {"C1", 1}, {"C5", 5}, {"C2xC2", 4}, {"C2xC2xC2", 8}, {"S3", 6}, {"D8", 8}, {"Q8", 8}, {"A4", 12}};
    for (const auto& [name, n] : orders) CHECK(presented_group(standard_presentation(name)).order() == n);
    CHECK(abelianization(standard_presentation("Q8")).to_string() == "Z/2 x Z/2");
    CHECK_THROWS_AS(standard_presentation("M11"), Error);
  }

  TEST_CASE("text round trip") {
    for (const char* name : {"C3", "S3", "Q8", "A4"}) {
      auto p = standard_presentation(name);
      auto q = parse_presentation(format_presentation(p));
      CHECK(q.generators == p.generators);
      CHECK(q.relators == p.relators);
    }
    CHECK_THROWS_AS(parse_presentation("presentation 1\nab\n"), Error);
  }
}
