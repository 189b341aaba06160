#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hallmark/catalog.hpp"
#include "hallmark/classifier.hpp"
#include "hallmark/perm_group.hpp"
#include "hallmark/subgroups.hpp"

namespace hallmark::oracle {

using arith::PrimeSet;

enum class Tier { Core, Stretch };

struct CorpusEntry {
  std::string name;  // catalog label, also the builtin name on the CLI
  std::optional<catalog::SimpleGroupId> simple_id;  // empty for PGL(2,7)
  Tier tier = Tier::Core;
  std::function<PermGroup()> construct;
};

const std::vector<CorpusEntry>& builtin_corpus();
const CorpusEntry* find_corpus_entry(const std::string& name);

struct ReportRow {
  std::string group;
  std::string pi;         // "{2,3}", "-" for pi-independent rows
  std::string property;   // "E" | "C" | "D" | "class:U" | ... | "factors"
  std::string oracle;     // "yes" | "no" | a value | "skipped: <reason>"
  std::string expected;   // "hallfact:yes" | "classifier:No" | "none" | a value
  std::string agreement;  // "yes" | "no" | "n/a"
  double runtime_sec = 0;
};

struct CrosscheckReport {
  std::vector<ReportRow> rows;

  void sort_rows();
  void append(const CrosscheckReport& other);
  long disagreements() const;
  long skipped() const;
  /// Deterministic bytes: sorted rows, no runtimes.
  std::string file_text(const std::string& header) const;
  std::string console_text() const;
};

/// Brute-force evaluation of membership in one of the classifier's classes,
/// unwound to Hall E/D questions on the group. Returns nullopt and fills
/// skip_reason when some required check is out of oracle scope.
std::optional<bool> class_membership(const PermGroup& group, classifier::GroupClass c,
                                     const PrimeSet& pi, const EnumerationLimits& limits,
                                     std::string* skip_reason);

/// Reproduces the quoted Hall facts about PSL(2,7), PGL(2,7), PSU(3,4) and
/// PSL(2,8) by brute force (the stretch rows are skipped, never silent,
/// when include_stretch is false).
CrosscheckReport run_examples(bool include_stretch,
                              const EnumerationLimits& limits = {});

/// One corpus entry, one pi: E/C/D rows checked against the fact table,
/// plus classifier-vs-oracle rows for every class in scope.
CrosscheckReport crosscheck(const CorpusEntry& entry, const PrimeSet& pi,
                            const EnumerationLimits& limits = {});

/// Every corpus entry x every pi inside its spectrum with |pi| <= max_pi_size.
CrosscheckReport full_sweep(int max_pi_size, bool include_stretch,
                            const EnumerationLimits& limits = {});

}  // namespace hallmark::oracle
