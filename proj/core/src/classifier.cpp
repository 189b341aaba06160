#include "hallmark/classifier.hpp"

#include <algorithm>
#include <sstream>

namespace hallmark::classifier {

using arith::Int;
using catalog::Family;

FactorList FactorList::of(std::vector<SimpleGroupId> fs) {
  if (fs.empty()) throw DomainError("FactorList: at least one composition factor required");
  std::sort(fs.begin(), fs.end());
  return FactorList{std::move(fs)};
}

PrimeSet FactorList::joint_spectrum() const {
  PrimeSet s;
  for (const auto& f : factors) s = s.unite(catalog::spectrum_of(f));
  return s;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "Yes";
    case Outcome::No: return "No";
    case Outcome::NecessaryOnly: return "NecessaryOnly";
  }
  return "?";
}

std::string class_name(GroupClass c) {
  switch (c) {
    case GroupClass::U: return "U";
    case GroupClass::V: return "V";
    case GroupClass::HatU: return "hatU";
    case GroupClass::HatV: return "hatV";
    case GroupClass::UStar: return "Ustar";
    case GroupClass::VStar: return "Vstar";
    case GroupClass::HatUStar: return "hatUstar";
    case GroupClass::HatVStar: return "hatVstar";
    case GroupClass::DPiPiPrime: return "D_pi_pipr";
  }
  return "?";
}

const std::vector<GroupClass>& all_classes() {
  static const std::vector<GroupClass> cs{
      GroupClass::U,        GroupClass::V,        GroupClass::HatU,
      GroupClass::HatV,     GroupClass::UStar,    GroupClass::VStar,
      GroupClass::HatUStar, GroupClass::HatVStar, GroupClass::DPiPiPrime};
  return cs;
}

namespace {

PrimeSet single(Int p) { return PrimeSet({p}); }

// Shared evaluation state. Set-equality conditions on pi / pi' are read on
// the trace over the joint spectrum (side1, side2); every divergence from
// the literal reading is recorded as a flag.
struct Ctx {
  const FactorList& fl;
  PrimeSet pi;
  PrimeSet spectrum;
  PrimeSet side1;  // pi restricted to the spectrum
  PrimeSet side2;  // complement of pi within the spectrum
  std::vector<std::string> flags;

  Ctx(const FactorList& f, const PrimeSet& p)
      : fl(f), pi(p), spectrum(f.joint_spectrum()) {
    if (pi.empty()) throw DomainError("classifier: pi must be non-empty");
    side1 = pi.intersect(spectrum);
    side2 = pi.complement_within(spectrum);
  }

  bool pi_is(const PrimeSet& target) {
    if (!(pi == side1) && side1 == target) {
      flags.push_back("pi-condition pi=" + target.to_string() +
                      " read on the spectrum trace " + side1.to_string() +
                      " (literal pi = " + pi.to_string() + ")");
    }
    return side1 == target;
  }

  bool pipr_is(const PrimeSet& target) {
    if (side2 == target) {
      flags.push_back("pi'-condition pi'=" + target.to_string() +
                      " read relative to the joint spectrum " + spectrum.to_string());
    }
    return side2 == target;
  }

  // pi intersect pi(D) and pi(D) \ pi; unambiguous since pi(D) is finite.
  PrimeSet in_pi(const SimpleGroupId& d) const {
    return catalog::spectrum_of(d).intersect(pi);
  }
  PrimeSet out_pi(const SimpleGroupId& d) const {
    return catalog::spectrum_of(d).minus(pi);
  }
  bool one_sided(const SimpleGroupId& d) const {
    return in_pi(d).empty() || out_pi(d).empty();
  }
};

bool is_mersenne_gt3(Int q) {
  auto f = arith::mersenne_exponent(q);
  return f.has_value() && q > 3;
}

bool is_psl2(const SimpleGroupId& d) { return d.family == Family::PSL && d.dim == 2; }
bool is_psl3(const SimpleGroupId& d) { return d.family == Family::PSL && d.dim == 3; }
bool is_psu3(const SimpleGroupId& d) { return d.family == Family::PSU && d.dim == 3; }

bool psl3_even_field(const SimpleGroupId& d) {
  if (!is_psl3(d)) return false;
  auto [p, f] = d.field_params();
  return p == 2 && d.q > 2 && arith::f_mod6_pm1(f);
}

bool psu3_q47mod9(const SimpleGroupId& d) {
  return is_psu3(d) && arith::q_mod9_in_4_7(d.q);
}

bool psu3_hat_family(const SimpleGroupId& d) {
  // PSU(3,p) with p = 7, or p Mersenne with exponent 5 mod 6.
  if (!is_psu3(d) || !arith::is_prime(d.q)) return false;
  if (d.q == 7) return true;
  auto f = arith::mersenne_exponent(d.q);
  return f.has_value() && arith::f_mod6_eq5(*f);
}

Justification factor_ok(const std::string& rule, const SimpleGroupId& d,
                        const std::string& detail) {
  return {rule, d.to_string() + ": " + detail, d};
}

std::string side_split(const Ctx& ctx, const SimpleGroupId& d) {
  return "pi cap pi(D) = " + ctx.in_pi(d).to_string() + ", pi(D) minus pi = " +
         ctx.out_pi(d).to_string();
}

}  // namespace

bool is_pi_separable(const FactorList& fl, const PrimeSet& pi) {
  for (const auto& d : fl.factors) {
    PrimeSet factor_spectrum = catalog::spectrum_of(d);
    if (!factor_spectrum.intersect(pi).empty() && !factor_spectrum.minus(pi).empty()) return false;
  }
  return true;
}

bool is_pi_soluble(const FactorList& fl, const PrimeSet& pi) {
  for (const auto& d : fl.factors) {
    if (d.is_abelian()) continue;  // a p-group or a pi'-group either way
    if (!catalog::spectrum_of(d).intersect(pi).empty()) return false;
  }
  return true;
}

bool is_pi_selected(const FactorList& fl, const PrimeSet& pi) {
  for (const auto& d : fl.factors) {
    if (catalog::spectrum_of(d).intersect(pi).size() > 1) return false;
  }
  return true;
}

bool factor_condition_A(const SimpleGroupId& d, const PrimeSet& pi) {
  PrimeSet factor_spectrum = catalog::spectrum_of(d);
  PrimeSet a = factor_spectrum.intersect(pi);
  PrimeSet b = factor_spectrum.minus(pi);
  if (a.empty() || b.empty()) return true;
  if (d == SimpleGroupId::psl(2, 7) || psu3_q47mod9(d)) {
    return a == single(3) || b == single(3);
  }
  return false;
}

Verdict classify_U(const FactorList& fl, const PrimeSet& pi) {
  Ctx ctx(fl, pi);
  Verdict v;
  for (const auto& d : fl.factors) {
    if (!factor_condition_A(d, pi)) {
      v.value = Outcome::No;
      v.because.push_back(factor_ok(
          "U.factor-criterion", d,
          "not one-sided and not an exceptional factor with {3} on one side (" +
              side_split(ctx, d) + ")"));
      v.flags = ctx.flags;
      return v;
    }
  }
  if (is_pi_separable(fl, pi)) {
    v.value = Outcome::Yes;
    v.because.push_back({"hall.sufficiency",
                         "pi-separable groups have Hall {r,s}-subgroups for all r in pi, "
                         "s in pi' (P. Hall)",
                         std::nullopt});
  } else {
    v.value = Outcome::NecessaryOnly;
    for (const auto& d : fl.factors) {
      if (!ctx.one_sided(d)) {
        v.because.push_back(factor_ok(
            "U.necessary-only", d,
            "exceptional factor passes the criterion, but the factor list does not "
            "determine membership: the same factors admit both members (direct "
            "products) and non-members (non-split extensions)"));
      }
    }
  }
  v.flags = ctx.flags;
  return v;
}

Verdict classify_V(const FactorList& fl, const PrimeSet& pi) {
  Ctx ctx(fl, pi);
  if (ctx.pi_is(single(3)) || ctx.pipr_is(single(3))) {
    Verdict v = classify_U(fl, single(3));
    v.because.insert(v.because.begin(),
                     {"V.reduces-to-U",
                      "with {3} on one side of the partition, V-membership coincides "
                      "with membership in U for pi = {3}",
                      std::nullopt});
    for (const auto& f : ctx.flags) v.flags.push_back(f);
    return v;
  }
  Verdict v;
  v.flags = ctx.flags;
  if (is_pi_separable(fl, pi)) {
    v.value = Outcome::Yes;
    v.because.push_back({"V.separability",
                         "when neither side of the partition is {3}, V-membership is "
                         "equivalent to pi-separability",
                         std::nullopt});
  } else {
    v.value = Outcome::No;
    for (const auto& d : fl.factors) {
      if (!ctx.one_sided(d)) {
        v.because.push_back(
            factor_ok("V.separability", d, "not one-sided (" + side_split(ctx, d) + ")"));
        break;
      }
    }
  }
  return v;
}

namespace {

Verdict separability_verdict(const FactorList& fl, const PrimeSet& pi, const char* rule) {
  Ctx ctx(fl, pi);
  Verdict v;
  v.flags = ctx.flags;
  if (is_pi_separable(fl, pi)) {
    v.value = Outcome::Yes;
    v.because.push_back({rule, "every factor is one-sided, hence pi-separable", std::nullopt});
  } else {
    v.value = Outcome::No;
    for (const auto& d : fl.factors) {
      if (!ctx.one_sided(d)) {
        v.because.push_back(
            factor_ok(rule, d, "not one-sided (" + side_split(ctx, d) + ")"));
        break;
      }
    }
  }
  return v;
}

}  // namespace

Verdict classify_hatU(const FactorList& fl, const PrimeSet& pi) {
  return separability_verdict(fl, pi, "hatU.separability");
}

Verdict classify_hatV(const FactorList& fl, const PrimeSet& pi) {
  return separability_verdict(fl, pi, "hatV.separability");
}

Verdict classify_D_pi_pipr(const FactorList& fl, const PrimeSet& pi) {
  Ctx ctx(fl, pi);
  Verdict v;
  v.value = Outcome::Yes;
  for (const auto& d : fl.factors) {
    if (ctx.one_sided(d)) continue;
    bool exceptional = false;
    if (is_psl2(d) && (arith::q_odd_power_of_3(d.q) || arith::q_mod12_eq7(d.q))) {
      PrimeSet pq1 = arith::prime_spectrum(d.q + 1);
      if (ctx.in_pi(d) == pq1 || ctx.out_pi(d) == pq1) {
        exceptional = true;
        v.because.push_back(factor_ok(
            "D.gilotti-exception", d,
            "PSL(2," + std::to_string(d.q) + ") with pi(q+1) = " + pq1.to_string() +
                " filling one side exactly"));
      }
    }
    if (!exceptional) {
      v.value = Outcome::No;
      v.because.clear();
      v.because.push_back(factor_ok(
          "D.gilotti-criterion", d,
          "not one-sided and not a PSL(2,q) exception with pi(q+1) on one side (" +
              side_split(ctx, d) + ")"));
      v.flags = ctx.flags;
      return v;
    }
  }
  if (v.because.empty()) {
    v.because.push_back({"D.gilotti-criterion", "every factor is one-sided", std::nullopt});
  }
  v.flags = ctx.flags;
  return v;
}

Verdict classify_Ustar(const FactorList& fl, const PrimeSet& pi) {
  Ctx ctx(fl, pi);
  Verdict v;
  v.value = Outcome::Yes;
  for (const auto& d : fl.factors) {
    PrimeSet a = ctx.in_pi(d);
    PrimeSet b = ctx.out_pi(d);
    PrimeSet two({2}), two3({2, 3});
    if (a.subset_of(two) || b.subset_of(two)) continue;
    if (is_psl2(d) && is_mersenne_gt3(d.q)) {
      v.because.push_back(
          factor_ok("Ustar.mersenne", d, "PSL(2,p) with p a Mersenne prime above 3"));
      continue;
    }
    if (psl3_even_field(d) && (a.subset_of(two3) || b.subset_of(two3))) {
      v.because.push_back(factor_ok(
          "Ustar.psl3", d, "PSL(3,2^f) with f = +-1 mod 6 and one side inside {2,3}"));
      continue;
    }
    if (psu3_q47mod9(d) && (a.subset_of(two3) || b.subset_of(two3))) {
      v.because.push_back(factor_ok(
          "Ustar.psu3", d, "PSU(3,q) with q = 4,7 mod 9 and one side inside {2,3}"));
      continue;
    }
    v.value = Outcome::No;
    v.because.clear();
    v.because.push_back(factor_ok(
        "Ustar.criterion", d,
        "fails every branch of the U* factor criterion (" + side_split(ctx, d) + ")"));
    v.flags = ctx.flags;
    return v;
  }
  if (v.because.empty())
    v.because.push_back(
        {"Ustar.criterion", "every factor has one side inside {2}", std::nullopt});
  v.flags = ctx.flags;
  return v;
}

Verdict classify_hatUstar(const FactorList& fl, const PrimeSet& pi) {
  Ctx ctx(fl, pi);
  Verdict v;
  v.value = Outcome::Yes;
  for (const auto& d : fl.factors) {
    PrimeSet a = ctx.in_pi(d);
    PrimeSet b = ctx.out_pi(d);
    PrimeSet two({2}), two3({2, 3});
    if (a.subset_of(two) || b.subset_of(two)) continue;
    if (is_psl2(d) && is_mersenne_gt3(d.q)) {
      v.because.push_back(
          factor_ok("hatUstar.mersenne", d, "PSL(2,p) with p a Mersenne prime above 3"));
      continue;
    }
    if (psu3_hat_family(d) && (a.subset_of(two3) || b.subset_of(two3))) {
      v.because.push_back(factor_ok(
          "hatUstar.psu3", d,
          "PSU(3,p) with p = 7 or p Mersenne of exponent 5 mod 6, one side in {2,3}"));
      continue;
    }
    v.value = Outcome::No;
    v.because.clear();
    v.because.push_back(factor_ok(
        "hatUstar.criterion", d,
        "fails every branch of the hatU* factor criterion (" + side_split(ctx, d) + ")"));
    v.flags = ctx.flags;
    return v;
  }
  if (v.because.empty())
    v.because.push_back(
        {"hatUstar.criterion", "every factor has one side inside {2}", std::nullopt});
  v.flags = ctx.flags;
  return v;
}

namespace {

// The singleton conditions of the V*-type criteria: pi = {r} or pi' = {r},
// with r drawn from pi(p(p-1)/2) of a Mersenne PSL(2,p) factor.
bool vstar_mersenne_side(Ctx& ctx, const SimpleGroupId& d) {
  PrimeSet rs = arith::prime_spectrum(d.q * (d.q - 1) / 2);
  for (Int r : rs.primes()) {
    if (ctx.pi_is(single(r)) || ctx.pipr_is(single(r))) return true;
  }
  return false;
}

}  // namespace

Verdict classify_Vstar(const FactorList& fl, const PrimeSet& pi) {
  Ctx ctx(fl, pi);
  Verdict v;
  for (const auto& d : fl.factors) {
    if (ctx.one_sided(d)) continue;
    bool ok = false;
    if (d == SimpleGroupId::psl(2, 7) &&
        (ctx.in_pi(d) == single(7) || ctx.out_pi(d) == single(7)))
      ok = true;
    if (!ok && is_psl2(d) && is_mersenne_gt3(d.q) && vstar_mersenne_side(ctx, d)) ok = true;
    if (!ok && psl3_even_field(d) && (ctx.pi_is(single(3)) || ctx.pipr_is(single(3))))
      ok = true;
    if (!ok && psu3_q47mod9(d) && (ctx.pi_is(single(3)) || ctx.pipr_is(single(3))))
      ok = true;
    if (!ok) {
      v.value = Outcome::No;
      v.because.push_back(factor_ok(
          "Vstar.criterion", d,
          "fails every branch of the V* factor criterion (" + side_split(ctx, d) + ")"));
      v.flags = ctx.flags;
      return v;
    }
  }
  if (is_pi_separable(fl, pi)) {
    v.value = Outcome::Yes;
    v.because.push_back({"hall.sufficiency",
                         "pi-separable groups have Hall (pi' + r)- and (pi + s)-subgroups "
                         "(P. Hall)",
                         std::nullopt});
  } else {
    v.value = Outcome::NecessaryOnly;
    for (const auto& d : fl.factors) {
      if (!ctx.one_sided(d)) {
        v.because.push_back(factor_ok(
            "Vstar.necessary-only", d,
            "exceptional factor passes the criterion; factor data alone does not decide "
            "V*-membership"));
      }
    }
  }
  v.flags = ctx.flags;
  return v;
}

Verdict classify_hatVstar(const FactorList& fl, const PrimeSet& pi) {
  Ctx ctx(fl, pi);
  Verdict v;
  v.value = Outcome::Yes;
  for (const auto& d : fl.factors) {
    if (ctx.one_sided(d)) continue;
    bool ok = false;
    std::string why;
    if (is_psl2(d) && is_mersenne_gt3(d.q) && vstar_mersenne_side(ctx, d)) {
      ok = true;
      why = "PSL(2,p), p Mersenne above 3, with a singleton side from pi(p(p-1)/2)";
    } else if (psu3_hat_family(d) && (ctx.pi_is(single(3)) || ctx.pipr_is(single(3)))) {
      ok = true;
      why = "PSU(3,p), p = 7 or Mersenne of exponent 5 mod 6, with {3} as one side";
    }
    if (!ok) {
      v.value = Outcome::No;
      v.because.clear();
      v.because.push_back(factor_ok(
          "hatVstar.criterion", d,
          "fails every branch of the hatV* factor criterion (" + side_split(ctx, d) + ")"));
      v.flags = ctx.flags;
      return v;
    }
    v.because.push_back(factor_ok("hatVstar.exception", d, why));
  }
  if (v.because.empty())
    v.because.push_back({"hatVstar.criterion", "every factor is one-sided", std::nullopt});
  v.flags = ctx.flags;
  return v;
}

Verdict classify(GroupClass c, const FactorList& fl, const PrimeSet& pi) {
  switch (c) {
    case GroupClass::U: return classify_U(fl, pi);
    case GroupClass::V: return classify_V(fl, pi);
    case GroupClass::HatU: return classify_hatU(fl, pi);
    case GroupClass::HatV: return classify_hatV(fl, pi);
    case GroupClass::UStar: return classify_Ustar(fl, pi);
    case GroupClass::VStar: return classify_Vstar(fl, pi);
    case GroupClass::HatUStar: return classify_hatUstar(fl, pi);
    case GroupClass::HatVStar: return classify_hatVstar(fl, pi);
    case GroupClass::DPiPiPrime: return classify_D_pi_pipr(fl, pi);
  }
  throw DomainError("classify: bad class");
}

Verdict simple_Ustar_iff(const SimpleGroupId& s, const PrimeSet& pi) {
  if (s.is_abelian()) throw ScopeError("simple_Ustar_iff: factor must be non-abelian simple");
  PrimeSet factor_spectrum = catalog::spectrum_of(s);
  PrimeSet odd = factor_spectrum.minus(single(2));
  if (pi.empty() || !pi.subset_of(odd) || pi == odd) {
    throw ScopeError(
        "simple_Ustar_iff: pi must be a non-empty proper subset of pi(S) minus {2}; "
        "use the general U* classifier otherwise");
  }
  Verdict v;
  if (is_psl2(s) && is_mersenne_gt3(s.q)) {
    v.value = Outcome::Yes;
    v.because.push_back(factor_ok("simpleUstar.mersenne", s,
                                  "PSL(2,p) with p a Mersenne prime above 3; no "
                                  "condition on pi"));
    return v;
  }
  PrimeSet odd3 = odd.minus(single(3));
  bool pi_ok = (pi == single(3)) || (pi == odd3);
  if (psl3_even_field(s) && pi_ok) {
    v.value = Outcome::Yes;
    v.because.push_back(factor_ok(
        "simpleUstar.psl3", s, "PSL(3,2^f), f = +-1 mod 6, with pi = {3} or pi(S)-{2,3}"));
    return v;
  }
  if (psu3_q47mod9(s) && pi_ok) {
    v.value = Outcome::Yes;
    v.because.push_back(factor_ok(
        "simpleUstar.psu3", s, "PSU(3,q), q = 4,7 mod 9, with pi = {3} or pi(S)-{2,3}"));
    return v;
  }
  v.value = Outcome::No;
  v.because.push_back(factor_ok(
      "simpleUstar.criterion", s,
      "no branch of the simple-group U* characterization matches pi = " + pi.to_string()));
  return v;
}

std::vector<std::pair<std::string, std::string>> apply_corollaries(
    const FactorList& fl, const PrimeSet& pi, const std::vector<catalog::HallFact>* facts) {
  std::vector<std::pair<std::string, std::string>> out;
  Ctx ctx(fl, pi);
  const bool soluble = is_pi_soluble(fl, pi);
  const bool separable = is_pi_separable(fl, pi);
  auto yn = [](bool b) { return b ? std::string("holds") : std::string("fails"); };

  const auto& ps = pi.primes();
  bool has2 = pi.contains(2), has3 = pi.contains(3), has7 = pi.contains(7);

  if (!has3 && (!has2 || ps.size() == 1 || (ps.size() == 2 && !(pi == PrimeSet({2, 7}))) ||
                (ps.size() == 3 && !(has2 && has7) && !(pi == PrimeSet({2, 5, 13}))))) {
    out.emplace_back("U-soluble-equivalence",
                     "for this pi, U-membership is equivalent to pi-solubility "
                     "(NecessaryOnly cannot occur); pi-solubility " + yn(soluble));
  }

  std::string ue = "U-membership together with E_pi and E_pi' is equivalent to "
                   "pi-separability; pi-separability " + yn(separable);
  if (facts && fl.factors.size() == 1 && !fl.factors[0].is_abelian()) {
    const auto& d = fl.factors[0];
    auto lookup = [&](const PrimeSet& side) -> std::optional<bool> {
      for (const auto& f : *facts) {
        if (f.group == d && f.property == catalog::HallProperty::E && f.pi == side)
          return f.holds;
      }
      return std::nullopt;
    };
    auto e1 = lookup(ctx.side1);
    auto e2 = lookup(ctx.side2);
    if (e1 && e2 && *e1 && *e2) {
      ue += "; E_pi and E_pi' hold by provenance facts, so U-membership alone decides";
    }
  }
  out.emplace_back("UE-separable-equivalence", ue);

  if (ps.size() == 1) {
    Int r = ps[0];
    if (r != 2 && r != 3) {
      out.emplace_back("Ustar-single-odd-prime",
                       "U*-membership forces r-solubility or a PSL(2,p) factor with p "
                       "Mersenne and r dividing p(p-1)/2   (r = " + std::to_string(r) + ")");
    }
    if (r != 2 && r != 7) {
      out.emplace_back("UstarE-r-soluble",
                       "r-solubility is equivalent to membership in U* and E_{r,r'}; "
                       "r-solubility " + yn(soluble));
    }
    if (r != 2) {
      out.emplace_back("hatUstarD-r-soluble",
                       "r-solubility is equivalent to membership in hatU* and D_{r,r'}; "
                       "r-solubility " + yn(soluble));
    }
    if (r != 7) {
      out.emplace_back("VstarE-r-soluble",
                       "r-solubility is equivalent to membership in V* and E_{r,r'}; "
                       "r-solubility " + yn(soluble));
    }
  }

  if (!has2 && !has7 && ps.size() >= 2) {
    out.emplace_back("Vstar-soluble-equivalence",
                     "pi-solubility is equivalent to V*-membership; pi-solubility " +
                         yn(soluble));
  }

  if (ps.size() >= 2 && ctx.side2.size() >= 2) {
    out.emplace_back("hatVstar-separable-equivalence",
                     "pi-separability is equivalent to hatV*-membership (both sides "
                     "carry at least two primes, pi' read on the spectrum); "
                     "pi-separability " + yn(separable));
  }

  out.emplace_back("hatVstarD-separable",
                   "pi-separability is equivalent to membership in hatV* and D_{pi,pi'}; "
                   "pi-separability " + yn(separable));
  return out;
}

ClassReport full_report(const FactorList& fl, const PrimeSet& pi) {
  ClassReport rep;
  rep.factors = fl;
  rep.pi = pi;
  rep.joint_spectrum = fl.joint_spectrum();
  for (GroupClass c : all_classes()) rep.verdicts.emplace(c, classify(c, fl, pi));
  rep.pi_separable = is_pi_separable(fl, pi);
  rep.pi_soluble = is_pi_soluble(fl, pi);
  rep.pi_selected = is_pi_selected(fl, pi);
  rep.corollaries = apply_corollaries(fl, pi, &catalog::hall_facts());
  return rep;
}

}  // namespace hallmark::classifier
