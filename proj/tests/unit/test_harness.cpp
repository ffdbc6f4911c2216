#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "gen.hpp"
#include "regkt/group_io.hpp"
#include "regkt/harness.hpp"

using namespace regkt;

namespace {

Subgroup closure(const FiniteGroup& g, std::initializer_list<Elem> gens) {
  std::vector<Elem> v(gens);
  return normal_closure(g, v);
}

// Rowspace of (rho_n - 1) c over n in N and c in the conjugated core.
EchelonLattice alpha_modulus(const RelativeEnvelope& renv) {
  const auto& env = renv.envelope();
  EchelonLattice lat(env.pair_count());
  for (Elem n : renv.normal().members())
    for (const auto& c : renv.conjugated_core_vectors())
      lat.insert((env.act(n, c) - c).dense(env.pair_count()));
  return lat;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("regkt_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("J_F basis checks") {
    CHECK(verify_lemma2(FiniteGroup::trivial()).verdict == Verdict::Pass);
    CHECK(verify_lemma2(catalog::cyclic(2)).verdict == Verdict::Pass);
    CHECK(verify_lemma2(catalog::cyclic(3)).verdict == Verdict::Pass);
    CHECK(verify_lemma2(catalog::alternating(4)).verdict == Verdict::Pass);

    Envelope env(catalog::cyclic(3));
    auto words = env.jf_basis();
    CHECK(verify_lemma2_words(env.group(), words, "c3").verdict == Verdict::Pass);
    auto mutated = words;
    mutated[1] = mutated[0] * mutated[0];
    auto r = verify_lemma2_words(env.group(), mutated, "c3");
    CHECK(r.verdict == Verdict::Fail);
    CHECK_FALSE(r.certificates.empty());
    mutated = words;
    mutated.pop_back();
    CHECK(verify_lemma2_words(env.group(), mutated, "c3").verdict == Verdict::Fail);
  }

  TEST_CASE("relative rewriting round trips") {
    auto c4 = catalog::cyclic(4);
    CHECK(verify_lemma1_lemma3(c4, Subgroup::trivial(c4), 50, 2, 1).verdict == Verdict::Pass);
    CHECK(verify_lemma1_lemma3(c4, closure(c4, {2}), 1000, 2, 7).verdict == Verdict::Pass);
    auto a4 = catalog::alternating(4);
    CHECK(verify_lemma1_lemma3(a4, derived_subgroup(a4), 200, 2, 3).verdict == Verdict::Pass);
  }

  TEST_CASE("spanning family and core agree") {
    auto c4 = catalog::cyclic(4);
    CHECK(verify_lemma4(c4, Subgroup::trivial(c4)).verdict == Verdict::Pass);
    CHECK(verify_lemma4(c4, closure(c4, {2})).verdict == Verdict::Pass);
    auto a4 = catalog::alternating(4);
    CHECK(verify_lemma4(a4, derived_subgroup(a4)).verdict == Verdict::Pass);
  }

  TEST_CASE("alpha map against an independent modulus") {
    auto c4 = catalog::cyclic(4);
    RelativeEnvelope renv(Envelope(c4), closure(c4, {2}));
    auto mod = alpha_modulus(renv);
    const std::size_t cols = renv.envelope().pair_count();
    CHECK(alpha_map(renv, Word()).empty());
    for (const auto& b : renv.b_cores()) {
      auto lj = renv.lambda_coords(b.word);
      // Non-vacuity: j alone is not already in the modulus.
      if (b.kind == CoreKind::B1) CHECK_FALSE(mod.contains(lj.dense(cols)));
      auto la = renv.lambda_coords(alpha_map(renv, b.word));
      CHECK(mod.contains((la + lj).dense(cols)));
    }
    CHECK(verify_lemma7(c4, closure(c4, {2}), 100, 5).verdict == Verdict::Pass);
    auto a4 = catalog::alternating(4);
    CHECK(verify_lemma7(a4, derived_subgroup(a4), 100, 5).verdict == Verdict::Pass);
  }

  TEST_CASE("excision") {
    auto c2 = catalog::cyclic(2), c3 = catalog::cyclic(3);
    CHECK(excision_product(FiniteGroup::trivial(), c3).verdict == Verdict::Pass);
    CHECK(excision_product(c2, c2).verdict == Verdict::Pass);
    CHECK(excision_product(catalog::elementary_abelian2(2), c3).verdict == Verdict::Pass);

    auto dp = direct_product(catalog::cyclic(4), c2);
    std::vector<Elem> f_gens{dp.left.images[1]}, n_gens{dp.left.images[2]};
    auto f = subgroup_generated(dp.group, f_gens);
    auto n = subgroup_generated(dp.group, n_gens);
    CHECK(excision_extended(dp.group, f, n).verdict == Verdict::Pass);
    auto whole = Subgroup::whole(dp.group);
    CHECK(excision_extended(dp.group, whole, n).verdict == Verdict::Pass);
    CHECK(excision_extended(dp.group, n, f).verdict == Verdict::Skipped);
  }

  TEST_CASE("cocycle certificates") {
    auto c4 = catalog::cyclic(4);
    auto n = closure(c4, {2});
    auto table = canonical_cocycle_table(c4, n);
    CHECK(verify_cocycle_table(c4, n, table).verdict == Verdict::Pass);
    auto broken = table;
    broken[{0, 2}] = SparseRow::unit(4, 1);
    CHECK(verify_cocycle_table(c4, n, broken).verdict == Verdict::Fail);
    auto missing = table;
    missing.erase(missing.begin());
    CHECK(verify_cocycle_table(c4, n, missing).verdict == Verdict::Fail);
  }

  TEST_CASE("kernel generators") {
    // Z/4 -> Z/2, 1 -> 1: kernel generated by 2.
    DenseMatrix phi{{Integer(1)}};
    auto k = kernel_generators({4}, phi, {2});
    REQUIRE(k.size() >= 1);
    Integer g = 0;
    for (const auto& r : k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[0].get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(4).get_mpz_t());
    CHECK(g == 2);
    // Injective Z/2 -> Z/4, 1 -> 2: kernel inside 2Z.
    for (const auto& r : kernel_generators({2}, DenseMatrix{{Integer(2)}}, {4})) CHECK(r[0] % 2 == 0);
  }

  TEST_CASE("reports are deterministic") {
    auto a4 = catalog::alternating(4);
    auto run = [&] {
      std::vector<Report> rs{verify_lemma1_lemma3(a4, derived_subgroup(a4), 50, 2, suite_seed(9, "lemma134", "a4"), "a4"),
                             order_independence(a4, derived_subgroup(a4), 2, 9, {}, "a4")};
      sort_reports(rs);
      return format_json(rs, 9);
    };
    CHECK(run() == run());
    CHECK(suite_seed(1, "a", "b") != suite_seed(1, "ab", ""));
    CHECK(suite_seed(1, "a", "b") != suite_seed(2, "a", "b"));
  }

  TEST_CASE("corpus runs") {
    auto empty = scratch_dir("empty");
    auto corpus = load_corpus(empty);
    CHECK(corpus.empty());
    auto reports = run_corpus(corpus, {});
    CHECK(reports.empty());
    CHECK(overall(reports) == Verdict::Pass);
    CHECK(format_text(reports).find("summary PASS pass=0 fail=0 skip=0") != std::string::npos);

    auto dir = scratch_dir("small");
    std::ofstream(dir / "c4.grp") << "regkt-format 1\nperm 4\n(1 2 3 4)\n";
    std::ofstream(dir / "c2_in_c4.pair") << "regkt-format 1\npair c4\nnormal (1 3)(2 4)\n";
    HarnessConfig cfg;
    cfg.samples = 100;
    cfg.alpha_samples = 20;
    cfg.threads = 2;
    auto small = run_corpus(load_corpus(dir), cfg);
    CHECK(overall(small) == Verdict::Pass);
    CHECK(small.size() >= 6);
    cfg.threads = 1;
    auto serial = run_corpus(load_corpus(dir), cfg);
    CHECK(format_json(serial, cfg.seed) == format_json(small, cfg.seed));

    std::ofstream(dir / "bad.pair") << "regkt-format 1\npair nowhere\nnormal whole\n";
    CHECK_THROWS_AS(load_corpus(dir), Error);
  }
}
