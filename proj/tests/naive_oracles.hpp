#pragma once

// Test-only brute-force oracles, deliberately independent of the
// stabilizer-chain machinery they cross-check.

#include <set>
#include <vector>

#include "hallmark/perm.hpp"

namespace hallmark::testing {

/// Closure of the generators under multiplication, by plain BFS.
inline std::set<Perm> naive_closure(unsigned degree, const std::vector<Perm>& gens) {
  std::set<Perm> elems{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  while (!queue.empty()) {
    Perm cur = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (elems.insert(next).second) queue.push_back(next);
    }
  }
  return elems;
}

/// Every subgroup of the closure of gens, as element sets: breadth-first
/// over one-generator extensions of known subgroups.
inline std::set<std::set<Perm>> naive_all_subgroups(unsigned degree,
                                                    const std::vector<Perm>& gens) {
  std::set<Perm> whole = naive_closure(degree, gens);
  std::set<std::set<Perm>> subgroups{{Perm::identity(degree)}};
  std::vector<std::set<Perm>> queue(subgroups.begin(), subgroups.end());
  while (!queue.empty()) {
    std::set<Perm> cur = queue.back();
    queue.pop_back();
    for (const Perm& g : whole) {
      if (cur.count(g)) continue;
      std::vector<Perm> seed(cur.begin(), cur.end());
      seed.push_back(g);
      std::set<Perm> ext = naive_closure(degree, seed);
      if (subgroups.insert(ext).second) queue.push_back(ext);
    }
  }
  return subgroups;
}

/// A subgroup (given as an element set) is soluble iff its derived series
/// reaches the trivial group; computed naively from commutators.
inline bool naive_is_soluble(unsigned degree, const std::set<Perm>& elems) {
  std::set<Perm> cur = elems;
  while (cur.size() > 1) {
    std::vector<Perm> commutators;
    for (const Perm& a : cur)
      for (const Perm& b : cur)
        commutators.push_back(a.inverse() * b.inverse() * a * b);
    std::set<Perm> derived = naive_closure(degree, commutators);
    if (derived.size() == cur.size()) return false;
    cur = std::move(derived);
  }
  return true;
}

}  // namespace hallmark::testing
