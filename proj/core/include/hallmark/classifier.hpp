#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallmark/arith.hpp"
#include "hallmark/catalog.hpp"

namespace hallmark::classifier {

using arith::PrimeSet;
using catalog::SimpleGroupId;

/// Multiset of composition factors; spellings are normalized on entry.
struct FactorList {
  std::vector<SimpleGroupId> factors;

  static FactorList of(std::vector<SimpleGroupId> fs);
  PrimeSet joint_spectrum() const;
};

/// Some of the characterizations are one-directional: factor conditions
/// are necessary but not sufficient, so a boolean would overclaim.
enum class Outcome { Yes, No, NecessaryOnly };
std::string to_string(Outcome o);

struct Justification {
  std::string rule;    // stable tag, e.g. "U.factor-criterion"
  std::string detail;  // instantiated statement of the rule
  std::optional<SimpleGroupId> factor;
};

struct Verdict {
  Outcome value = Outcome::No;
  std::vector<Justification> because;
  std::vector<std::string> flags;  // e.g. relative complement readings
};

enum class GroupClass { U, V, HatU, HatV, UStar, VStar, HatUStar, HatVStar, DPiPiPrime };
std::string class_name(GroupClass c);
const std::vector<GroupClass>& all_classes();

// Separability-style predicates, evaluated factor-wise.
bool is_pi_separable(const FactorList& fl, const PrimeSet& pi);
bool is_pi_soluble(const FactorList& fl, const PrimeSet& pi);
bool is_pi_selected(const FactorList& fl, const PrimeSet& pi);

/// Factor criterion for membership in U: one-sided, or an exceptional
/// factor (PSL(2,7), or PSU(3,q) with q = 4,7 mod 9) with 3 as the only
/// prime of the factor on one side of the partition.
bool factor_condition_A(const SimpleGroupId& d, const PrimeSet& pi);

Verdict classify_U(const FactorList& fl, const PrimeSet& pi);
Verdict classify_V(const FactorList& fl, const PrimeSet& pi);
Verdict classify_hatU(const FactorList& fl, const PrimeSet& pi);
Verdict classify_hatV(const FactorList& fl, const PrimeSet& pi);
Verdict classify_Ustar(const FactorList& fl, const PrimeSet& pi);
Verdict classify_Vstar(const FactorList& fl, const PrimeSet& pi);
Verdict classify_hatUstar(const FactorList& fl, const PrimeSet& pi);
Verdict classify_hatVstar(const FactorList& fl, const PrimeSet& pi);
Verdict classify_D_pi_pipr(const FactorList& fl, const PrimeSet& pi);
Verdict classify(GroupClass c, const FactorList& fl, const PrimeSet& pi);

/// The U*-characterization for a single non-abelian simple group with
/// pi a non-empty proper subset of pi(S) \ {2}; definitive both ways.
/// Throws ScopeError outside that precondition.
Verdict simple_Ustar_iff(const SimpleGroupId& s, const PrimeSet& pi);

/// Sharpened equivalences whose side conditions on pi hold. Each entry is
/// (tag, instantiated conclusion). Conclusions never contradict the base
/// verdicts. Provenance facts, when given, feed the E-dependent ones.
std::vector<std::pair<std::string, std::string>> apply_corollaries(
    const FactorList& fl, const PrimeSet& pi,
    const std::vector<catalog::HallFact>* facts = nullptr);

struct ClassReport {
  FactorList factors;
  PrimeSet pi;
  PrimeSet joint_spectrum;
  std::map<GroupClass, Verdict> verdicts;
  bool pi_separable = false;
  bool pi_soluble = false;
  bool pi_selected = false;
  std::vector<std::pair<std::string, std::string>> corollaries;
};

ClassReport full_report(const FactorList& fl, const PrimeSet& pi);

}  // namespace hallmark::classifier
