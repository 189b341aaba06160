#include "hallmark/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <sstream>

namespace hallmark::oracle {

using arith::Int;
using catalog::SimpleGroupId;
using classifier::GroupClass;
using classifier::Outcome;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    auto add = [&c](const std::string& name, std::optional<SimpleGroupId> id, Tier tier) {
      c.push_back({name, id, tier, [name] { return catalog::construct_by_label(name); }});
    };
    add("A5", SimpleGroupId::alt(5), Tier::Core);
    add("A6", SimpleGroupId::alt(6), Tier::Core);
    add("PSL(2,7)", SimpleGroupId::psl(2, 7), Tier::Core);
    add("PGL(2,7)", std::nullopt, Tier::Core);
    add("PSL(2,8)", SimpleGroupId::psl(2, 8), Tier::Core);
    add("PSL(2,17)", SimpleGroupId::psl(2, 17), Tier::Core);
    add("PSL(2,31)", SimpleGroupId::psl(2, 31), Tier::Core);
    add("PSL(3,3)", SimpleGroupId::psl(3, 3), Tier::Core);
    add("PSU(3,3)", SimpleGroupId::psu(3, 3), Tier::Stretch);
    add("PSU(3,4)", SimpleGroupId::psu(3, 4), Tier::Stretch);
    return c;
  }();
  return corpus;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
  for (const auto& e : builtin_corpus()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

void CrosscheckReport::sort_rows() {
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.group, a.pi, a.property) < std::tie(b.group, b.pi, b.property);
  });
}

void CrosscheckReport::append(const CrosscheckReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

long CrosscheckReport::disagreements() const {
  long n = 0;
  for (const auto& r : rows)
    if (r.agreement == "no") ++n;
  return n;
}

long CrosscheckReport::skipped() const {
  long n = 0;
  for (const auto& r : rows)
    if (r.oracle.rfind("skipped", 0) == 0) ++n;
  return n;
}

std::string CrosscheckReport::file_text(const std::string& header) const {
  std::ostringstream os;
  os << "# " << header << '\n';
  for (const auto& r : rows) {
    os << "group=" << r.group << " pi=" << r.pi << " prop=" << r.property
       << " oracle=" << r.oracle << " expected=" << r.expected << " agree=" << r.agreement
       << '\n';
  }
  return os.str();
}

std::string CrosscheckReport::console_text() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.group << "  pi=" << r.pi << "  " << r.property << ": oracle=" << r.oracle
       << " expected=" << r.expected << " agree=" << r.agreement;
    if (r.runtime_sec > 0) {
      os.setf(std::ios::fixed);
      os.precision(3);
      os << "  (" << r.runtime_sec << "s)";
    }
    os << '\n';
  }
  return os.str();
}

namespace {

// Memoized E/C/D answers per relevant prime trace. A trace covering the
// whole spectrum is trivially (yes, yes, yes) with the group itself as the
// Hall subgroup.
class HallCache {
 public:
  HallCache(const PermGroup& group, const EnumerationLimits& limits)
      : group_(group), limits_(limits),
        spectrum_(arith::prime_spectrum(group.order())) {}

  const PrimeSet& spectrum() const { return spectrum_; }
  const PermGroup& group() const { return group_; }

  // Throws ScopeError when the question is out of oracle range.
  const ECDResult& ecd(const PrimeSet& sigma) {
    PrimeSet trace = sigma.intersect(spectrum_);
    std::string key = trace.to_string();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ECDResult res;
    if (trace == spectrum_) {
      res.E = true;
      res.C = true;
      res.D = true;
    } else {
      res = check_E_C_D(group_, trace, limits_);
    }
    return memo_.emplace(std::move(key), std::move(res)).first->second;
  }

 private:
  const PermGroup& group_;
  EnumerationLimits limits_;
  PrimeSet spectrum_;
  std::map<std::string, ECDResult> memo_;
};

bool is_star(GroupClass c) {
  return c == GroupClass::UStar || c == GroupClass::VStar || c == GroupClass::HatUStar ||
         c == GroupClass::HatVStar;
}

bool is_hall_d(GroupClass c) {
  return c == GroupClass::HatU || c == GroupClass::HatV || c == GroupClass::HatUStar ||
         c == GroupClass::HatVStar;
}

bool is_v_type(GroupClass c) {
  return c == GroupClass::V || c == GroupClass::HatV || c == GroupClass::VStar ||
         c == GroupClass::HatVStar;
}

// Evaluates one E_sigma or D_sigma conjunct, with scope accounting.
std::optional<bool> eval_conjunct(HallCache& cache, const PrimeSet& sigma, bool want_d,
                                  std::string* skip_reason) {
  PrimeSet trace = sigma.intersect(cache.spectrum());
  if (!(trace == cache.spectrum()) && trace.size() > 2) {
    if (skip_reason)
      *skip_reason = "out of scope: " + std::string(want_d ? "D" : "E") + "_" +
                     trace.to_string() + " has more than two relevant primes";
    return std::nullopt;
  }
  try {
    const ECDResult& r = cache.ecd(sigma);
    if (!want_d) return r.E;
    if (r.D.has_value()) return *r.D;
  } catch (const ScopeError& e) {
    if (skip_reason) *skip_reason = std::string("out of scope: ") + e.what();
    return std::nullopt;
  }
  if (skip_reason) *skip_reason = "out of scope: D_" + trace.to_string() + " undecided";
  return std::nullopt;
}

std::optional<bool> class_membership_impl(HallCache& cache, GroupClass c,
                                          const PrimeSet& pi, std::string* skip_reason) {
  const PrimeSet& spectrum = cache.spectrum();
  PrimeSet side1 = pi.intersect(spectrum);
  PrimeSet side2 = pi.complement_within(spectrum);
  PrimeSet two({2});
  const bool star = is_star(c);
  const bool want_d = is_hall_d(c);

  if (c == GroupClass::DPiPiPrime) {
    for (const PrimeSet& side : {side1, side2}) {
      auto v = eval_conjunct(cache, side, true, skip_reason);
      if (!v) return std::nullopt;
      if (!*v) return false;
    }
    return true;
  }

  PrimeSet r_side = star ? side1.minus(two) : side1;
  PrimeSet s_side = star ? side2.minus(two) : side2;

  if (!is_v_type(c)) {
    // Cross pairs E_{r,s} / D_{r,s}.
    for (Int r : r_side.primes()) {
      for (Int s : s_side.primes()) {
        auto v = eval_conjunct(cache, PrimeSet({r, s}), want_d, skip_reason);
        if (!v) return std::nullopt;
        if (!*v) return false;
      }
    }
    return true;
  }

  // V-type: Hall (pi' + r)- and (pi + s)-subgroups. The partition is
  // relativized to the group's spectrum (the complement is never treated
  // as the infinite absolute one), matching the classifier's reading.
  std::vector<PrimeSet> sigmas;
  for (Int r : r_side.primes()) sigmas.push_back(side2.unite(PrimeSet({r})));
  for (Int s : s_side.primes()) sigmas.push_back(side1.unite(PrimeSet({s})));
  for (const PrimeSet& sigma : sigmas) {
    auto v = eval_conjunct(cache, sigma, want_d, skip_reason);
    if (!v) return std::nullopt;
    if (!*v) return false;
  }
  return true;
}

}  // namespace

std::optional<bool> class_membership(const PermGroup& group, GroupClass c,
                                     const PrimeSet& pi, const EnumerationLimits& limits,
                                     std::string* skip_reason) {
  HallCache cache(group, limits);
  return class_membership_impl(cache, c, pi, skip_reason);
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string hallfact_expected(const CorpusEntry& entry, const PrimeSet& trace,
                              catalog::HallProperty prop) {
  if (entry.simple_id) {
    for (const auto& f : catalog::hall_facts()) {
      if (f.group == *entry.simple_id && f.property == prop && f.pi == trace)
        return "hallfact:" + yes_no(f.holds);
    }
  } else {
    for (const auto& f : catalog::nonsimple_hall_facts()) {
      if (f.label == entry.name && f.property == prop && f.pi == trace)
        return "hallfact:" + yes_no(f.holds);
    }
  }
  return "none";
}

ReportRow make_row(const std::string& group, const std::string& pi,
                   const std::string& prop, const std::string& oracle,
                   const std::string& expected, double runtime) {
  ReportRow row{group, pi, prop, oracle, expected, "n/a", runtime};
  auto colon = expected.find(':');
  if (oracle.rfind("skipped", 0) == 0 || expected == "none") {
    row.agreement = "n/a";
  } else if (colon != std::string::npos) {
    std::string want = expected.substr(colon + 1);
    if (want == "Yes") want = "yes";
    if (want == "No") want = "no";
    if (want == "NecessaryOnly") {
      row.agreement = "yes";  // consistent with either outcome
    } else {
      row.agreement = (want == oracle) ? "yes" : "no";
    }
  } else {
    row.agreement = (oracle == expected) ? "yes" : "no";
  }
  return row;
}

// Identified composition factors, when each order names a unique catalog
// group. PGL(2,7) resolves to {C2, PSL(2,7)}.
std::optional<std::vector<SimpleGroupId>> identify_factors(const PermGroup& group,
                                                           const EnumerationLimits& limits) {
  std::vector<SimpleGroupId> ids;
  for (Int o : composition_factor_orders(group, limits)) {
    if (arith::is_prime(o)) {
      ids.push_back(SimpleGroupId::cyclic(o));
      continue;
    }
    auto cands = catalog::identify_by_order(o);
    if (cands.size() != 1) return std::nullopt;
    ids.push_back(cands[0]);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string factor_string(const std::vector<SimpleGroupId>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += ids[i].to_string();
  }
  return s;
}

void ecd_rows(CrosscheckReport& rep, const CorpusEntry& entry, HallCache& cache,
              const PrimeSet& pi) {
  PrimeSet trace = pi.intersect(cache.spectrum());
  auto t0 = std::chrono::steady_clock::now();
  std::string e_val, c_val, d_val;
  try {
    const ECDResult& r = cache.ecd(pi);
    e_val = yes_no(r.E);
    c_val = r.C ? yes_no(*r.C) : "skipped: C undecided outside scope";
    d_val = r.D ? yes_no(*r.D) : "skipped: D undecided outside scope";
  } catch (const ScopeError& e) {
    e_val = c_val = d_val = std::string("skipped: ") + e.what();
  } catch (const ResourceError& e) {
    e_val = c_val = d_val = std::string("skipped: ") + e.what();
  }
  double dt = seconds_since(t0);
  rep.rows.push_back(make_row(entry.name, pi.to_string(), "E", e_val,
                              hallfact_expected(entry, trace, catalog::HallProperty::E), dt));
  rep.rows.push_back(make_row(entry.name, pi.to_string(), "C", c_val,
                              hallfact_expected(entry, trace, catalog::HallProperty::C), 0));
  rep.rows.push_back(make_row(entry.name, pi.to_string(), "D", d_val,
                              hallfact_expected(entry, trace, catalog::HallProperty::D), 0));
}

void class_rows(CrosscheckReport& rep, const CorpusEntry& entry, HallCache& cache,
                const std::optional<classifier::FactorList>& factors, const PrimeSet& pi) {
  if (!factors) return;
  for (GroupClass c : classifier::all_classes()) {
    auto t0 = std::chrono::steady_clock::now();
    classifier::Verdict verdict = classifier::classify(c, *factors, pi);
    std::string reason;
    std::optional<bool> oracle_val = class_membership_impl(cache, c, pi, &reason);
    std::string oracle_str = oracle_val ? yes_no(*oracle_val) : "skipped: " + reason;
    rep.rows.push_back(make_row(entry.name, pi.to_string(), "class:" + class_name(c),
                                oracle_str, "classifier:" + to_string(verdict.value),
                                seconds_since(t0)));
  }
}

void entry_rows(CrosscheckReport& rep, const CorpusEntry& entry, HallCache& cache,
                const std::optional<classifier::FactorList>& factors, const PrimeSet& pi) {
  ecd_rows(rep, entry, cache, pi);
  class_rows(rep, entry, cache, factors, pi);
}

std::optional<classifier::FactorList> entry_factors(const CorpusEntry& entry,
                                                    const PermGroup& group,
                                                    const EnumerationLimits& limits) {
  if (entry.simple_id) return classifier::FactorList::of({*entry.simple_id});
  auto ids = identify_factors(group, limits);
  if (!ids) return std::nullopt;
  return classifier::FactorList::of(*ids);
}

}  // namespace

CrosscheckReport crosscheck(const CorpusEntry& entry, const PrimeSet& pi,
                            const EnumerationLimits& limits) {
  CrosscheckReport rep;
  PermGroup group = entry.construct();
  HallCache cache(group, limits);
  entry_rows(rep, entry, cache, entry_factors(entry, group, limits), pi);
  rep.sort_rows();
  return rep;
}

CrosscheckReport run_examples(bool include_stretch, const EnumerationLimits& limits) {
  CrosscheckReport rep;
  auto ps = [](std::initializer_list<Int> v) { return PrimeSet(std::vector<Int>(v)); };

  {
    const CorpusEntry& e = *find_corpus_entry("PSL(2,7)");
    PermGroup g = e.construct();
    HallCache cache(g, limits);
    for (auto pi : {ps({2, 3}), ps({3, 7}), ps({2, 7})}) ecd_rows(rep, e, cache, pi);
    auto t0 = std::chrono::steady_clock::now();
    HallClasses classes = hall_conjugacy_classes(g, ps({2, 3}), limits);
    rep.rows.push_back(make_row(e.name, "{2,3}", "hall-classes",
                                std::to_string(classes.count), "2", seconds_since(t0)));
  }
  {
    const CorpusEntry& e = *find_corpus_entry("PGL(2,7)");
    PermGroup g = e.construct();
    HallCache cache(g, limits);
    ecd_rows(rep, e, cache, ps({2, 3}));
    auto t0 = std::chrono::steady_clock::now();
    auto ids = identify_factors(g, limits);
    rep.rows.push_back(make_row(e.name, "-", "factors",
                                ids ? factor_string(*ids) : "unidentified",
                                "C2,PSL(2,7)", seconds_since(t0)));
  }
  {
    const CorpusEntry& e = *find_corpus_entry("PSL(2,8)");
    PermGroup g = e.construct();
    HallCache cache(g, limits);
    ecd_rows(rep, e, cache, ps({2, 7}));
  }
  {
    const CorpusEntry& e = *find_corpus_entry("PSU(3,4)");
    std::vector<PrimeSet> pis{ps({2, 3}), ps({3, 5}), ps({3, 13}), ps({5, 13})};
    if (include_stretch) {
      PermGroup g = e.construct();
      HallCache cache(g, limits);
      for (const auto& pi : pis) ecd_rows(rep, e, cache, pi);
    } else {
      for (const auto& pi : pis) {
        rep.rows.push_back(make_row(
            e.name, pi.to_string(), "E", "skipped: stretch tier disabled",
            hallfact_expected(e, pi, catalog::HallProperty::E), 0));
      }
    }
  }
  rep.sort_rows();
  return rep;
}

CrosscheckReport full_sweep(int max_pi_size, bool include_stretch,
                            const EnumerationLimits& limits) {
  CrosscheckReport rep;
  for (const CorpusEntry& entry : builtin_corpus()) {
    if (entry.tier == Tier::Stretch && !include_stretch) {
      rep.rows.push_back(make_row(entry.name, "-", "sweep",
                                  "skipped: stretch tier disabled", "none", 0));
      continue;
    }
    PermGroup group = entry.construct();
    HallCache cache(group, limits);
    auto factors = entry_factors(entry, group, limits);
    if (!entry.simple_id) {
      auto ids = identify_factors(group, limits);
      rep.rows.push_back(make_row(entry.name, "-", "factors",
                                  ids ? factor_string(*ids) : "unidentified",
                                  entry.name == "PGL(2,7)" ? "C2,PSL(2,7)" : "none", 0));
    }
    const auto& primes = cache.spectrum().primes();
    // All non-empty subsets of the spectrum of size <= max_pi_size.
    for (std::uint32_t mask = 1; mask < (1u << primes.size()); ++mask) {
      if (std::popcount(mask) > max_pi_size) continue;
      std::vector<Int> subset;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask & (1u << i)) subset.push_back(primes[i]);
      entry_rows(rep, entry, cache, factors, PrimeSet(subset));
    }
  }
  rep.sort_rows();
  return rep;
}

}  // namespace hallmark::oracle
