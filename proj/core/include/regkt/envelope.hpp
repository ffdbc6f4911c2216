#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regkt/fingroup.hpp"
#include "regkt/freeword.hpp"
#include "regkt/zlattice.hpp"

namespace regkt {

/**
 * The free group U_F on letters u_x (x in F, x != 1) with its evaluation onto F.
 *
 * Letter u_x is GenId{kTagEnvelope, x}; u_1 is the empty word. The kernel J_F
 * of the evaluation is free on the (|F|-1)^2 words u_g u_h u_gh^-1 (g, h != 1,
 * u_1 dropped). Its abelianization Z^E has one coordinate per pair (g, h); the
 * coordinates of a word of J_F are read off by walking the Cayley graph with
 * the star spanning tree (all tree edges leave the identity).
 */
class Envelope {
 public:
  explicit Envelope(FiniteGroup f);

  const FiniteGroup& group() const noexcept { return f_; }
  std::size_t order() const noexcept { return f_.order(); }

  static GenId gen(Elem x) { return GenId{kTagEnvelope, x}; }
  Word u(Elem x, int sign = 1) const;
  Elem evaluate(const Word& w) const;
  bool in_jf(const Word& w) const { return evaluate(w) == 0; }

  /// Number of J_F basis words, (|F|-1)^2.
  std::size_t pair_count() const noexcept { return (order() - 1) * (order() - 1); }
  std::uint32_t pair_index(Elem g, Elem h) const {
    return std::uint32_t((g - 1) * (order() - 1) + (h - 1));
  }
  std::pair<Elem, Elem> pair_of(std::size_t i) const {
    return {Elem(i / (order() - 1) + 1), Elem(i % (order() - 1) + 1)};
  }
  /// u_g u_h u_gh^-1 (u_g u_g^-1 when gh = 1).
  Word pair_word(Elem g, Elem h) const;
  std::vector<Word> jf_basis() const;

  /// Abelianized J_F coordinates. Throws NotMember unless w is in J_F.
  SparseRow ab_j(const Word& w) const;
  /// Rewrites a J_F word in the basis letters g1:pair_index.
  Word express_in_basis(const Word& w) const;
  /// Conjugation by u_g on Z^E.
  SparseRow act(Elem g, const SparseRow& v) const;
  /// e_{g,h} as a sparse vector, zero when g or h is the identity.
  SparseRow pair_vector(Elem g, Elem h) const;

 private:
  FiniteGroup f_;
};

enum class CoreKind { B1, B2, B3, UCore };
std::string to_string(CoreKind k);

/// One element of a B-core or of the U_{N,F} letter family.
struct CoreElement {
  CoreKind kind;
  Elem a = 0, b = 0, c = 0;  ///< B1 (c,d), B2 (x,d), B3 (c,d,y), UCore (x)
  Word word;
  std::string label() const;
};

/**
 * A normal pair (N, F) inside U_F. The section picks the least-index element
 * of every coset; cosets are numbered by that representative, matching
 * quotient().
 *
 * Coordinates of J_{N,F}: because J_{F/N} is free, J_{N,F}/[J_{N,F}, J_F]
 * embeds in Z^E as the kernel Lambda of the projection Z^E -> Z^{E'} induced
 * by F -> F/N, so ab_j() already gives exact coordinates. The conjugated cores
 * u_z b u_z^-1 (z a representative) form a Z-basis of Lambda; core
 * coordinates solve in that basis and then forget z.
 */
class RelativeEnvelope {
 public:
  RelativeEnvelope(Envelope env, Subgroup n);

  const Envelope& envelope() const noexcept { return env_; }
  const FiniteGroup& group() const noexcept { return env_.group(); }
  const Subgroup& normal() const noexcept { return n_; }
  const Quotient& quotient_data() const noexcept { return q_; }
  std::size_t quotient_order() const noexcept { return q_.section.size(); }

  /// Least-index element of the coset xN.
  Elem rep(Elem x) const { return q_.section[q_.projection[x]]; }
  bool is_rep(Elem x) const { return rep(x) == x; }
  const std::vector<Elem>& reps() const noexcept { return q_.section; }

  const std::vector<CoreElement>& b_cores() const noexcept { return b_cores_; }
  const std::vector<CoreElement>& ucores() const noexcept { return ucores_; }
  std::size_t count(CoreKind k) const;

  /// Spanning family before conjugation: B1, [u_x,u_d] u_d u_{xdx^-1}^-1, and
  /// u_c (u_c' u_y u_{c'y}^-1) u_c^-1.
  std::vector<CoreElement> spanning_family() const;

  /// Letterwise image in U_{F/N} (u_x -> t_{xN}, t_N = 1), reduced.
  Word project_to_quotient(const Word& w) const;
  bool member_unf(const Word& w) const { return project_to_quotient(w).empty(); }
  bool member_jnf(const Word& w) const;

  /// Lambda coordinates of a J_{N,F} member. Throws NotMember.
  SparseRow lambda_coords(const Word& w) const;
  /// Coordinates in the conjugated-core basis u_z b u_z^-1, indexed
  /// z_index * |B| + b_index with z ranging over reps(). Throws NotMember.
  DenseRow conjugated_core_coords(const Word& w) const;
  /// Core coordinates (conjugators dropped), indexed like b_cores().
  DenseRow core_coordinates(const Word& w) const;
  /// Same as core_coordinates, starting from Lambda coordinates.
  DenseRow core_coordinates_of(const SparseRow& lambda) const;

  /// The conjugated core as Lambda vectors, in conjugated_core_coords order.
  const std::vector<SparseRow>& conjugated_core_vectors() const;

  /// Rank of Lambda: (|F|-1)^2 - (|F/N|-1)^2.
  std::size_t lambda_rank() const;

 private:
  Envelope env_;
  Subgroup n_;
  Quotient q_;
  std::vector<CoreElement> b_cores_;
  std::vector<CoreElement> ucores_;
  // Lazily built solver for the conjugated-core basis; shared between copies
  // and built at most once, so concurrent readers are safe.
  struct Solver {
    std::once_flag once;
    std::vector<SparseRow> vectors;
    DenseMatrix rows;  // echelon of [C | I]
    std::vector<std::size_t> pivots;
    std::vector<std::int64_t> unit;  // fast path: column -> core index
    bool unit_fast = false;
  };
  std::shared_ptr<Solver> solver_ = std::make_shared<Solver>();

  const Solver& solver() const;
  DenseRow solve_core(const SparseRow& lambda) const;
};

/**
 * Rewriting of U_{N,F} words into the letters
 *   (omega, x) = sigma(omega) u_x u_{xbar}^-1 sigma(omega)^-1,
 * omega a reduced word of U_{F/N}, x not a representative. Letters are
 * interned on first use as GenId{kTagRelative, k}.
 */
class RelativeRewriter {
 public:
  explicit RelativeRewriter(const RelativeEnvelope& renv) : renv_(&renv) {}

  /// Throws NotMember unless w lies in U_{N,F}.
  Word rewrite(const Word& w);
  /// U_F word for an interned letter.
  Word letter_word(std::uint64_t k) const;
  WordAssignment assignment() const;
  std::size_t letters() const noexcept { return keys_.size(); }
  /// sigma(omega): t_q -> u_{rep of q}.
  Word lift(const Word& omega) const;
  /// All letters with |omega| <= depth, in (length, lexicographic) order.
  std::vector<Word> family(std::size_t depth) const;

 private:
  const RelativeEnvelope* renv_;
  std::map<std::pair<Word, Elem>, std::uint64_t> ids_;
  std::vector<std::pair<Word, Elem>> keys_;

  Word letter_word(const Word& omega, Elem x) const;
};

}  // namespace regkt
