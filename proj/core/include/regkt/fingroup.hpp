#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regkt/error.hpp"

namespace regkt {

/// Index of an element inside a FiniteGroup. Index 0 is always the identity.
using Elem = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image list.
/// Composition is left to right: (p * q)(i) = q(p(i)).
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultGroupCap = 5000;

/**
 * A finite group given by its full multiplication table.
 *
 * Elements are indexed 0..order()-1 with the identity at index 0. Groups built
 * from permutations number their elements in breadth-first discovery order
 * from the generators (generators tried in the order given), so the numbering
 * is a deterministic function of the input. Instances are immutable.
 */
class FiniteGroup {
 public:
  FiniteGroup();

  static FiniteGroup trivial(std::string name = "1");

  /// Closure of `gens` acting on `degree` points. Throws CapExceeded when the
  /// closure grows beyond `cap` elements.
  static FiniteGroup from_permutations(std::size_t degree,
                                       std::span<const Permutation> gens,
                                       std::size_t cap = kDefaultGroupCap,
                                       std::string name = "");

  /// Group from a Cayley table. The table is validated (closure, identity,
  /// inverses, associativity). If the identity is not at index 0 the elements
  /// are renumbered so that it is, keeping the relative order of the others.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table,
                                std::string name = "");

  std::size_t order() const noexcept { return n_; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  /// a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  Elem power(Elem a, long long k) const;
  std::size_t element_order(Elem a) const;

  const std::string& name() const noexcept { return name_; }
  FiniteGroup renamed(std::string name) const;

  bool has_permutations() const noexcept { return !perms_.empty(); }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& permutation(Elem a) const { return perms_.at(a); }
  std::optional<Elem> find_permutation(const Permutation& p) const;
  /// Generators this group was built from (permutation groups only).
  const std::vector<Permutation>& permutation_generators() const noexcept {
    return perm_gens_;
  }

  /// Renumber: new element i is old element order[i]; order[0] must be 0.
  FiniteGroup relabeled(std::span<const Elem> order) const;

  /// Checks the group axioms. Associativity is checked on every triple when
  /// order() <= assoc_bound, otherwise on triples drawn from generators.
  bool verify_axioms(std::size_t assoc_bound = 60) const;

  /// A small generating set, chosen greedily in index order.
  std::vector<Elem> generating_set() const;

  std::size_t exponent() const;
  bool is_abelian() const;

 private:
  std::size_t n_ = 1;
  std::vector<Elem> table_{0};
  std::vector<Elem> inv_{0};
  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::vector<Permutation> perm_gens_;

  void fill_inverses();
};

/// A subgroup stored as a sorted member list plus a membership mask.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::vector<Elem> members);

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  bool contains(Elem e) const { return e < mask_.size() && mask_[e]; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  bool is_trivial() const noexcept { return members_.size() <= 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> gens);

bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& n);

/// [N, F], the subgroup generated by all n f n^-1 f^-1. Throws NotNormal.
Subgroup commutator_subgroup(const FiniteGroup& f, const Subgroup& n);
bool is_full(const FiniteGroup& f, const Subgroup& n);
bool is_perfect(const FiniteGroup& f);
Subgroup center(const FiniteGroup& f);
Subgroup derived_subgroup(const FiniteGroup& f);

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;  ///< element of F -> coset index
  std::vector<Elem> section;     ///< coset index -> minimal-index representative
};

/// F/N with cosets numbered by their minimal representative. Throws NotNormal.
Quotient quotient(const FiniteGroup& f, const Subgroup& n);

/// A homomorphism source -> target given on every element of the source.
struct GroupHom {
  std::vector<Elem> images;
};

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                     const GroupHom& phi);
GroupHom compose(const GroupHom& first, const GroupHom& second);
GroupHom identity_hom(const FiniteGroup& g);

struct DirectProduct {
  FiniteGroup group;
  GroupHom left;       ///< G -> G x H
  GroupHom right;      ///< H -> G x H
  GroupHom left_proj;  ///< G x H -> G
  GroupHom right_proj; ///< G x H -> H
};

/// G x H with element (g, h) at index g * |H| + h.
DirectProduct direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Subgroup as a group of its own, elements numbered in member order.
struct SubgroupEmbedding {
  FiniteGroup group;
  GroupHom inclusion;
};
SubgroupEmbedding as_group(const FiniteGroup& g, const Subgroup& h,
                           std::string name = "");

namespace catalog {
FiniteGroup cyclic(std::size_t n);
FiniteGroup dihedral(std::size_t n);  ///< order 2n
FiniteGroup quaternion8();
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
FiniteGroup elementary_abelian2(std::size_t rank);
}  // namespace catalog

/// Parses "(1 2 3)(4 5)" (1-based points) into a permutation of `degree`.
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Permutation& p);

}  // namespace regkt
