#pragma once

#include <cstdint>
#include <vector>

#include "hallmark/arith.hpp"
#include "hallmark/perm.hpp"

namespace hallmark {

/// Default cap on full element enumeration (|G| must not exceed it).
/// The CLI lets HALLMARK_MAX_ELEMENTS override it per invocation.
inline constexpr arith::Int kDefaultElementCap = 1'000'000;

/// A finite permutation group given by generators, with a deterministic
/// base-and-strong-generating-set chain built at construction time.
/// Immutable afterwards; safe for concurrent reads.
class PermGroup {
 public:
  PermGroup(unsigned degree, std::vector<Perm> generators);

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<unsigned>& base() const { return base_; }

  arith::Int order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool contains(const Perm& x) const;

  /// All elements, sorted lexicographically by image array.
  /// Throws ResourceError naming |G| when the order exceeds cap.
  std::vector<Perm> elements(arith::Int cap = kDefaultElementCap) const;

 private:
  struct Level {
    unsigned base_point = 0;
    std::vector<Perm> gens;           // strong generators active at this level
    std::vector<int> orbit_pos;       // point -> position in orbit, -1 outside
    std::vector<unsigned> orbit;      // discovery order
    std::vector<Perm> transversal;    // transversal[i] maps base_point to orbit[i]
    void recompute_orbit(unsigned degree);
  };

  // Returns the stripped residue and the level where stripping stopped.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void build_chain();

  unsigned degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  std::vector<unsigned> base_;
  arith::Int order_ = 1;
};

}  // namespace hallmark
