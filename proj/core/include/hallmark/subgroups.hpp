#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hallmark/arith.hpp"
#include "hallmark/perm.hpp"
#include "hallmark/perm_group.hpp"

namespace hallmark {

struct EnumerationLimits {
  arith::Int element_cap = kDefaultElementCap;  // |G| bound for full enumeration
  long class_limit = 100'000;                   // conjugacy classes of subgroups
  long stored_subgroup_limit = 100'000;         // keys held by the dedup map
};

/// Subgroup element lists are materialized only below this order.
inline constexpr arith::Int kSubgroupElementsCap = 20'000;

struct SubgroupHandle {
  std::vector<Perm> generators;  // empty for the trivial subgroup
  arith::Int order = 1;
  long conjugate_count = 1;      // |G : N_G(H)| in the parent group
  std::vector<Perm> elements;    // sorted; populated when order <= kSubgroupElementsCap
};

struct HallWitness {
  SubgroupHandle subgroup;
  arith::PrimeSet pi;
  std::optional<long> conjugacy_class_count;
};

struct HallClasses {
  long count = 0;
  std::vector<SubgroupHandle> representatives;
};

/// Result of the E/C/D brute-force check. C and D stay empty when only
/// existence could be decided (more than two relevant primes).
struct ECDResult {
  bool E = false;
  std::optional<bool> C;
  std::optional<bool> D;
  std::optional<HallWitness> witness;
};

/// One representative per conjugacy class of every soluble subgroup whose
/// order passes the filter, found by cyclic extension from the trivial
/// subgroup. The filter must be divisor-closed ("order divides m"); the
/// search prunes on it. Deterministic output, sorted by (order, elements).
std::vector<SubgroupHandle> enumerate_soluble_subgroups(
    const PermGroup& group, const std::function<bool(arith::Int)>& order_filter,
    const EnumerationLimits& limits = {});

/// Searches for a subgroup of order exactly |G|_pi among soluble subgroups.
/// Absence is a proof of nonexistence only when |pi intersect pi(G)| <= 2
/// (then every pi-subgroup is soluble by Burnside's p^a q^b theorem).
std::optional<HallWitness> find_hall_subgroup(const PermGroup& group,
                                              const arith::PrimeSet& pi,
                                              const EnumerationLimits& limits = {});

/// Number (and representatives) of conjugacy classes of Hall pi-subgroups.
HallClasses hall_conjugacy_classes(const PermGroup& group, const arith::PrimeSet& pi,
                                   const EnumerationLimits& limits = {});

/// E: a Hall pi-subgroup exists. C: E and a single conjugacy class.
/// D: C and every pi-subgroup lies in a conjugate of the Hall subgroup.
/// Throws ScopeError when |pi intersect pi(G)| > 2, unless a witness is
/// still found by the soluble search (then E alone is reported).
ECDResult check_E_C_D(const PermGroup& group, const arith::PrimeSet& pi,
                      const EnumerationLimits& limits = {});

/// Smallest normal subgroup of the group containing the seeds.
SubgroupHandle normal_closure(const PermGroup& group, const std::vector<Perm>& seeds);

/// True iff |G| > 1 and the normal closure of every nontrivial element is
/// the whole group. Requires full element enumeration.
bool is_simple(const PermGroup& group, const EnumerationLimits& limits = {});

/// Multiset of composition factor orders, sorted ascending.
std::vector<arith::Int> composition_factor_orders(const PermGroup& group,
                                                  const EnumerationLimits& limits = {});

}  // namespace hallmark
