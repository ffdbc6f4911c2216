#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regkt/freeword.hpp"

namespace regkt {

/**
 * Folded core graph of a finitely generated subgroup of a free group.
 *
 * State 0 is the basepoint. After build() the graph is deterministic in both
 * directions and every state other than the basepoint lies on a reduced loop,
 * so the subgroup is exactly the set of words labelling basepoint loops.
 * States are numbered in BFS order from the basepoint with edges explored in
 * letter order, which also fixes the spanning tree and hence free_basis().
 */
class SubgroupGraph {
 public:
  using State = std::uint32_t;

  SubgroupGraph();

  static SubgroupGraph build(const std::vector<Word>& words, std::vector<GenId> alphabet = {});

  std::size_t num_states() const noexcept { return fwd_.size(); }
  /// Number of (positively oriented) edges.
  std::size_t num_edges() const noexcept { return edges_; }
  static constexpr State basepoint() noexcept { return 0; }

  std::optional<State> step(State s, const Letter& l) const;
  /// End state of reading w from the basepoint, if the path exists.
  std::optional<State> read(const Word& w) const;

  bool member(const Word& w) const;
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<Word>& free_basis() const noexcept { return basis_; }
  /// Index in the free group on alphabet(); nullopt means infinite.
  std::optional<std::size_t> index() const;
  bool is_complete() const;

  /// Rewrites a member as a word in letters g<tag>:i standing for free_basis()[i].
  /// Throws NotMember.
  Word schreier_express(const Word& w, std::uint32_t tag = kTagBasis) const;
  /// Assignment g<tag>:i -> free_basis()[i], the inverse of schreier_express.
  WordAssignment basis_assignment(std::uint32_t tag = kTagBasis) const;

  const std::vector<GenId>& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& origin() const noexcept { return origin_; }
  const std::map<GenId, State>& out_edges(State s) const { return fwd_.at(s); }
  const std::map<GenId, State>& in_edges(State s) const { return bwd_.at(s); }
  /// Path label from the basepoint along the spanning tree.
  const Word& tree_word(State s) const { return tree_word_.at(s); }

  std::string to_dot() const;

 private:
  std::vector<std::map<GenId, State>> fwd_;
  std::vector<std::map<GenId, State>> bwd_;
  std::size_t edges_ = 0;
  std::vector<Word> tree_word_;
  // Non-tree edge (source, label) -> position in basis_.
  std::map<std::pair<State, GenId>, std::size_t> basis_slot_;
  std::vector<Word> basis_;
  std::vector<GenId> alphabet_;
  std::vector<Word> origin_;
};

SubgroupGraph build(const std::vector<Word>& words, std::vector<GenId> alphabet = {});
bool membership(const SubgroupGraph& g, const Word& w);
std::vector<Word> free_basis(const SubgroupGraph& g);
std::optional<std::size_t> subgroup_index(const SubgroupGraph& g);
Word schreier_express(const SubgroupGraph& g, const Word& w);

/// True iff the words freely generate the subgroup they span.
bool nielsen_independent(const std::vector<Word>& words);

/// True iff the two graphs are equal up to renumbering of states (both are
/// canonical, so this is a direct comparison of transition maps).
bool same_subgroup(const SubgroupGraph& a, const SubgroupGraph& b);

}  // namespace regkt
