#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "regkt/fingroup.hpp"
#include "regkt/freeword.hpp"
#include "regkt/multiplier.hpp"
#include "regkt/presentation.hpp"
#include "regkt/report.hpp"

namespace regkt {

struct HarnessConfig {
  std::uint64_t seed = 1;
  MultiplierOptions multiplier;
  std::size_t samples = 1000;      ///< random J_{N,F} members per pair
  std::size_t alpha_samples = 100;
  std::size_t family_depth = 2;    ///< |omega| bound for the relative letter family
  std::size_t relabelings = 3;
  std::size_t threads = 0;         ///< 0: hardware concurrency
  bool timing = false;
};

/// Seed of one suite, mixed from the run seed and the suite/subject names.
std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite, const std::string& subject);

/// Basis words of J_F: count (|F|-1)^2, each evaluates to 1, Nielsen
/// independent, and their folded graph is the complete |F|-state automaton.
Report verify_lemma2(const FiniteGroup& f, const std::string& subject = "");
/// Same checks on a claimed basis (certificate replay).
Report verify_lemma2_words(const FiniteGroup& f, const std::vector<Word>& claimed,
                           const std::string& subject);

/// relative letter family up to `depth` is Nielsen independent, B-cores lie in
/// J_{N,F}, and `samples` random members rewrite and round-trip.
Report verify_lemma1_lemma3(const FiniteGroup& f, const Subgroup& n, std::size_t samples,
                            std::size_t depth, std::uint64_t seed, const std::string& subject = "");

/// The spanning family and the core span the same lattice, compared by HNF both
/// in Lambda and in core coordinates (after conjugation by representatives).
Report verify_lemma4(const FiniteGroup& f, const Subgroup& n, const std::string& subject = "");

/// alpha from the section-induced beta; alpha(j) j lies in
/// [J_{N,F},J_F] + [J_{N,F},U_{N,F}], i.e. its Lambda coordinates lie in
/// (rho_n - 1) Lambda, for the B-cores and sampled j.
Report verify_lemma7(const FiniteGroup& f, const Subgroup& n, std::size_t samples,
                     std::uint64_t seed, const std::string& subject = "");
/// alpha on one J_F word.
Word alpha_map(const RelativeEnvelope& renv, const Word& j);

/// Random member of J_{N,F}: up to three relative letters (|omega| <= 1),
/// closed off by u_n^-1.
template <class Rng>
Word random_jnf_member(const std::vector<Word>& letters, const Envelope& env, Rng& rng);

/// K^J_2(N) -> K^J_2(N x M0) is injective.
Report excision_product(const FiniteGroup& n, const FiniteGroup& m0,
                        const MultiplierOptions& opt = {}, const std::string& subject = "");
/// ker(K~(N,F) -> K~(N,G)) lies in the image of K^J_2(N). F and N are given
/// as subgroups of G. Skipped when N is not normal in G or not inside F.
Report excision_extended(const FiniteGroup& g, const Subgroup& f, const Subgroup& n,
                         const MultiplierOptions& opt = {}, const std::string& subject = "");

/// kj2(F,F) against the Hopf formula on a presentation of F.
Report schur_agreement(const FiniteGroup& f, const Presentation& p,
                       const MultiplierOptions& opt = {}, const std::string& subject = "");
/// kj2 and extended kj2 structures unchanged under random relabelings.
Report order_independence(const FiniteGroup& f, const Subgroup& n, std::size_t relabelings,
                          std::uint64_t seed, const MultiplierOptions& opt = {},
                          const std::string& subject = "");
Report weak_core_sweep(const FiniteGroup& f, const Subgroup& n, const MultiplierOptions& opt = {},
                    const std::string& subject = "");

/// Claimed cocycle table on N x N (missing entries fail).
using CocycleTable = std::map<std::pair<Elem, Elem>, SparseRow>;
Report verify_cocycle_table(const FiniteGroup& f, const Subgroup& n, const CocycleTable& table,
                            const MultiplierOptions& opt = {}, const std::string& subject = "");
CocycleTable canonical_cocycle_table(const FiniteGroup& f, const Subgroup& n,
                                     const MultiplierOptions& opt = {});

/// Generators of the kernel of Z^k/D -> Z^k'/D' (rows of phi), in source
/// coordinates; torsion moduli of D are not included.
DenseMatrix kernel_generators(const std::vector<Integer>& source_orders, const DenseMatrix& phi,
                              const std::vector<Integer>& target_orders);

/**
 * A corpus directory:
 *   <name>.grp     group file
 *   <name>.pres    presentation; paired with <name>.grp when present
 *   <name>.pair    `pair <group>` and `normal <spec>` (or `normal whole`)
 *   <name>.excise  `excise product <N> <M0>` or `excise extended <G> <F-gens> <N-gens>`
 *   <name>.cert    `cert basis <group>` + one word per line, or
 *                  `cert cocycle <pair>` + lines `m n col:val ...`
 * All files start with `regkt-format 1`.
 */
struct Corpus {
  struct Pair {
    std::string group;
    FiniteGroup f;
    Subgroup n;
  };
  struct Excision {
    bool product = true;
    FiniteGroup a, b;      ///< product: N, M0; extended: G (in a)
    Subgroup f_sub, n_sub; ///< extended only
  };
  struct Cert {
    std::string kind;  ///< "basis" or "cocycle"
    std::string target;
    std::vector<Word> words;
    CocycleTable table;
  };
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, Presentation> presentations;
  std::map<std::string, Pair> pairs;
  std::map<std::string, Excision> excisions;
  std::map<std::string, Cert> certs;

  bool empty() const {
    return groups.empty() && presentations.empty() && pairs.empty() && excisions.empty() &&
           certs.empty();
  }
};

/// Throws ParseError on malformed files.
Corpus load_corpus(const std::filesystem::path& dir, std::size_t cap = kDefaultGroupCap);
/// Subgroup generated by a ';'-separated element list.
Subgroup parse_subgroup_spec(const FiniteGroup& g, std::string_view spec);

/// Runs every applicable suite over the corpus in a thread pool; reports are
/// sorted by (suite, subject).
std::vector<Report> run_corpus(const Corpus& corpus, const HarnessConfig& cfg);

// ---------------------------------------------------------------------------

template <class Rng>
Word random_jnf_member(const std::vector<Word>& letters, const Envelope& env, Rng& rng) {
  if (letters.empty()) return {};
  Word w;
  const std::size_t k = 1 + rng() % 3;
  for (std::size_t i = 0; i < k; ++i) {
    const Word& l = letters[rng() % letters.size()];
    w *= (rng() % 2) ? l : l.inverse();
  }
  return w * env.u(env.evaluate(w), -1);
}

}  // namespace regkt
