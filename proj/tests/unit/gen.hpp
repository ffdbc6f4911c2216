#pragma once

// Seeded generators for the property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "regkt/fingroup.hpp"
#include "regkt/freeword.hpp"

namespace regkt::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240917);
  return r;
}

inline Word random_word(std::mt19937_64& r, std::uint32_t tag, std::size_t gens, std::size_t max_len,
                        std::uint64_t first = 0) {
  std::vector<Letter> ls;
  const std::size_t len = r() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    ls.push_back({GenId{tag, first + r() % gens}, (r() % 2) ? 1 : -1});
  return Word(std::move(ls));
}

/// Envelope word: letters u_1 .. u_{n-1}.
inline Word random_envelope_word(std::mt19937_64& r, std::size_t order, std::size_t max_len) {
  return random_word(r, kTagEnvelope, order - 1, max_len, 1);
}

inline std::vector<Elem> random_relabeling(std::mt19937_64& r, std::size_t n) {
  std::vector<Elem> order(n);
  for (Elem i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin() + 1, order.end(), r);
  return order;
}

/// Small groups used across the suites.
inline std::vector<FiniteGroup> small_groups() {
  using namespace catalog;
  return {cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(6), elementary_abelian2(2),
          elementary_abelian2(3), symmetric(3), dihedral(4), quaternion8(), alternating(4)};
}

}  // namespace regkt::testing
