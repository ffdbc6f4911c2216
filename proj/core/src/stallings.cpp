#include "regkt/stallings.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace regkt {

namespace {

using State = SubgroupGraph::State;

// Mutable folding workspace. Edges may reference merged-away states; every
// read goes through find().
struct Folder {
  std::vector<State> parent;
  std::vector<std::map<GenId, State>> fwd, bwd;
  std::vector<std::pair<State, State>> pending;

  State fresh() {
    parent.push_back(State(parent.size()));
    fwd.emplace_back();
    bwd.emplace_back();
    return parent.back();
  }

  State find(State x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void add_edge(State p, GenId a, State q) {
    p = find(p);
    q = find(q);
    if (auto it = fwd[p].find(a); it != fwd[p].end()) {
      pending.emplace_back(it->second, q);
    } else {
      fwd[p][a] = q;
    }
    if (auto it = bwd[q].find(a); it != bwd[q].end()) {
      pending.emplace_back(it->second, p);
    } else {
      bwd[q][a] = p;
    }
  }

  void merge(State x, State y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    // The basepoint always survives as a representative.
    if (y == 0 || (x != 0 && fwd[x].size() + bwd[x].size() < fwd[y].size() + bwd[y].size()))
      std::swap(x, y);
    parent[y] = x;
    auto fy = std::move(fwd[y]);
    auto by = std::move(bwd[y]);
    fwd[y].clear();
    bwd[y].clear();
    for (auto& [a, t] : fy) add_edge(x, a, t);
    for (auto& [a, s] : by) add_edge(s, a, x);
  }

  void drain() {
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      merge(x, y);
    }
  }

  void add_loop(const Word& w) {
    if (w.empty()) return;
    State cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      State next = (i + 1 == w.size()) ? 0 : fresh();
      const Letter& l = w[i];
      if (l.sign > 0) {
        add_edge(cur, l.gen, next);
      } else {
        add_edge(next, l.gen, cur);
      }
      drain();
      cur = find(next);
    }
  }
};

}  // namespace

SubgroupGraph::SubgroupGraph() : fwd_(1), bwd_(1), tree_word_(1) {}

SubgroupGraph SubgroupGraph::build(const std::vector<Word>& words, std::vector<GenId> alphabet) {
  Folder f;
  f.fresh();
  for (const auto& w : words) {
    for (const auto& l : w.letters()) alphabet.push_back(l.gen);
    f.add_loop(w);
  }
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

  // Resolve to representative states with canonical edge maps.
  const std::size_t raw = f.parent.size();
  std::vector<std::map<GenId, State>> fwd(raw), bwd(raw);
  std::vector<bool> live(raw, false);
  for (State s = 0; s < raw; ++s) {
    if (f.find(s) != s) continue;
    live[s] = true;
    for (auto& [a, t] : f.fwd[s]) fwd[s][a] = f.find(t);
    for (auto& [a, t] : f.bwd[s]) bwd[s][a] = f.find(t);
  }

  // Prune hanging trees: non-base states of degree one.
  std::deque<State> work;
  auto degree = [&](State s) { return fwd[s].size() + bwd[s].size(); };
  for (State s = 1; s < raw; ++s)
    if (live[s] && degree(s) <= 1) work.push_back(s);
  while (!work.empty()) {
    State s = work.front();
    work.pop_front();
    if (!live[s] || degree(s) > 1) continue;
    live[s] = false;
    for (auto& [a, t] : fwd[s]) {
      bwd[t].erase(a);
      if (t != 0 && live[t] && degree(t) <= 1) work.push_back(t);
    }
    for (auto& [a, t] : bwd[s]) {
      fwd[t].erase(a);
      if (t != 0 && live[t] && degree(t) <= 1) work.push_back(t);
    }
    fwd[s].clear();
    bwd[s].clear();
  }

  // The basepoint may itself hang off a single path (e.g. a conjugate of a
  // cyclic word); it stays, since loops are read from it.
  SubgroupGraph g;
  g.alphabet_ = std::move(alphabet);
  g.origin_ = words;
  std::vector<State> number(raw, State(-1));
  std::vector<State> order{0};
  std::vector<Word> tree{Word()};
  number[0] = 0;
  // Tree edges as (source, label) keyed on raw states.
  std::set<std::pair<State, GenId>> tree_edges;
  for (std::size_t head = 0; head < order.size(); ++head) {
    State s = order[head];
    // Letter order: for each generator, the inverse letter before the direct one.
    std::vector<Letter> letters;
    for (auto& [a, t] : bwd[s]) letters.push_back({a, -1});
    for (auto& [a, t] : fwd[s]) letters.push_back({a, 1});
    std::sort(letters.begin(), letters.end());
    for (const auto& l : letters) {
      State t = l.sign > 0 ? fwd[s].at(l.gen) : bwd[s].at(l.gen);
      if (number[t] != State(-1)) continue;
      number[t] = State(order.size());
      order.push_back(t);
      tree.push_back(tree[head] * Word::letter(l.gen, l.sign));
      if (l.sign > 0) {
        tree_edges.insert({s, l.gen});
      } else {
        tree_edges.insert({t, l.gen});
      }
    }
  }

  const std::size_t n = order.size();
  g.fwd_.assign(n, {});
  g.bwd_.assign(n, {});
  g.tree_word_ = std::move(tree);
  g.edges_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    State s = order[i];
    for (auto& [a, t] : fwd[s]) {
      g.fwd_[i][a] = number[t];
      g.bwd_[number[t]][a] = State(i);
      ++g.edges_;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    State s = order[i];
    for (auto& [a, t] : fwd[s]) {
      if (tree_edges.count({s, a})) continue;
      State j = number[t];
      g.basis_slot_[{State(i), a}] = g.basis_.size();
      g.basis_.push_back(g.tree_word_[i] * Word::letter(a, 1) * g.tree_word_[j].inverse());
    }
  }
  return g;
}

std::optional<SubgroupGraph::State> SubgroupGraph::step(State s, const Letter& l) const {
  const auto& m = l.sign > 0 ? fwd_[s] : bwd_[s];
  auto it = m.find(l.gen);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::optional<SubgroupGraph::State> SubgroupGraph::read(const Word& w) const {
  State s = 0;
  for (const auto& l : w.letters()) {
    auto t = step(s, l);
    if (!t) return std::nullopt;
    s = *t;
  }
  return s;
}

bool SubgroupGraph::member(const Word& w) const {
  auto s = read(w);
  return s && *s == 0;
}

bool SubgroupGraph::is_complete() const {
  for (std::size_t s = 0; s < fwd_.size(); ++s) {
    if (fwd_[s].size() != alphabet_.size() || bwd_[s].size() != alphabet_.size()) return false;
  }
  return true;
}

std::optional<std::size_t> SubgroupGraph::index() const {
  if (!is_complete()) return std::nullopt;
  return fwd_.size();
}

Word SubgroupGraph::schreier_express(const Word& w, std::uint32_t tag) const {
  std::vector<Letter> out;
  State s = 0;
  for (const auto& l : w.letters()) {
    auto t = step(s, l);
    if (!t) throw Error(ErrorKind::NotMember, "word leaves the subgroup graph");
    State src = l.sign > 0 ? s : *t;
    auto it = basis_slot_.find({src, l.gen});
    if (it != basis_slot_.end()) out.push_back({GenId{tag, it->second}, l.sign});
    s = *t;
  }
  if (s != 0) throw Error(ErrorKind::NotMember, "word does not return to the basepoint");
  return Word(std::move(out));
}

WordAssignment SubgroupGraph::basis_assignment(std::uint32_t tag) const {
  WordAssignment m;
  for (std::size_t i = 0; i < basis_.size(); ++i) m[GenId{tag, i}] = basis_[i];
  return m;
}

std::string SubgroupGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph subgroup {\n  0 [shape=doublecircle];\n";
  for (std::size_t s = 0; s < fwd_.size(); ++s)
    for (auto& [a, t] : fwd_[s])
      os << "  " << s << " -> " << t << " [label=\"g" << a.tag << ":" << a.index << "\"];\n";
  os << "}\n";
  return os.str();
}

SubgroupGraph build(const std::vector<Word>& words, std::vector<GenId> alphabet) {
  return SubgroupGraph::build(words, std::move(alphabet));
}

bool membership(const SubgroupGraph& g, const Word& w) { return g.member(w); }
std::vector<Word> free_basis(const SubgroupGraph& g) { return g.free_basis(); }
std::optional<std::size_t> subgroup_index(const SubgroupGraph& g) { return g.index(); }
Word schreier_express(const SubgroupGraph& g, const Word& w) { return g.schreier_express(w); }

bool nielsen_independent(const std::vector<Word>& words) {
  for (const auto& w : words)
    if (w.empty()) return false;
  return SubgroupGraph::build(words).rank() == words.size();
}

bool same_subgroup(const SubgroupGraph& a, const SubgroupGraph& b) {
  if (a.num_states() != b.num_states() || a.num_edges() != b.num_edges()) return false;
  for (SubgroupGraph::State s = 0; s < a.num_states(); ++s)
    if (a.out_edges(s) != b.out_edges(s)) return false;
  return true;
}

}  // namespace regkt
