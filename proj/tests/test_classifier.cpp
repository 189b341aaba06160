#include <doctest.h>

#include <random>

#include "hallmark/classifier.hpp"

using namespace hallmark;
using namespace hallmark::classifier;
using catalog::SimpleGroupId;

namespace {

using arith::Int;

arith::PrimeSet ps(std::initializer_list<Int> v) {
  return arith::PrimeSet(std::vector<Int>(v));
}

FactorList fl(std::initializer_list<SimpleGroupId> ids) {
  return FactorList::of(std::vector<SimpleGroupId>(ids));
}

// Factor pool for the property tests.
const std::vector<SimpleGroupId>& pool() {
  static const std::vector<SimpleGroupId> p = [] {
    std::vector<SimpleGroupId> out;
    for (Int c : {2, 3, 5, 7, 13}) out.push_back(SimpleGroupId::cyclic(c));
    for (int n : {5, 6, 7, 8}) out.push_back(SimpleGroupId::alt(n));
    for (Int q : {7, 8, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31})
      out.push_back(SimpleGroupId::psl(2, q));
    for (Int q : {3, 4, 5, 7, 8}) out.push_back(SimpleGroupId::psl(3, q));
    for (Int q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31})
      out.push_back(SimpleGroupId::psu(3, q));
    out.push_back(SimpleGroupId::psu(4, 2));
    return out;
  }();
  return p;
}

}  // namespace

TEST_CASE("separability predicates on the quoted examples") {
  CHECK(is_pi_separable(fl({SimpleGroupId::cyclic(2), SimpleGroupId::cyclic(3)}), ps({2})));
  CHECK_FALSE(is_pi_separable(fl({SimpleGroupId::psl(2, 7)}), ps({3})));
  CHECK(is_pi_separable(fl({SimpleGroupId::alt(5)}), ps({2, 3, 5})));

  CHECK_FALSE(is_pi_soluble(fl({SimpleGroupId::alt(5)}), ps({2, 3, 5})));
  CHECK(is_pi_soluble(fl({SimpleGroupId::cyclic(3), SimpleGroupId::cyclic(3)}), ps({3})));
  CHECK(is_pi_soluble(fl({SimpleGroupId::psl(2, 7)}), ps({5})));

  CHECK(is_pi_selected(fl({SimpleGroupId::psl(2, 7)}), ps({3, 5})));
  CHECK_FALSE(is_pi_selected(fl({SimpleGroupId::psl(2, 7)}), ps({2, 3})));
  CHECK(is_pi_selected(fl({SimpleGroupId::cyclic(7)}), ps({2, 3, 5, 7})));
}

TEST_CASE("factor criterion for U") {
  CHECK(factor_condition_A(SimpleGroupId::psl(2, 7), ps({3})));
  CHECK(factor_condition_A(SimpleGroupId::psu(3, 4), ps({3})));  // 4 = 4 mod 9
  CHECK_FALSE(factor_condition_A(SimpleGroupId::alt(5), ps({3})));
  CHECK(factor_condition_A(SimpleGroupId::alt(5), ps({2, 3, 5})));  // one-sided
  CHECK_FALSE(factor_condition_A(SimpleGroupId::psu(3, 3), ps({3})));  // 3 = 0 mod 9
  // The PSL(3,2) spelling normalizes to PSL(2,7), so the clause still fires.
  CHECK(factor_condition_A(SimpleGroupId::psl(3, 2), ps({3})));
}

TEST_CASE("classify_U on the quoted examples") {
  CHECK(classify_U(fl({SimpleGroupId::psl(2, 7)}), ps({3})).value == Outcome::NecessaryOnly);
  auto pgl_factors = fl({SimpleGroupId::cyclic(2), SimpleGroupId::psl(2, 7)});
  CHECK(classify_U(pgl_factors, ps({3})).value == Outcome::NecessaryOnly);
  CHECK(classify_U(fl({SimpleGroupId::alt(5)}), ps({2, 3})).value == Outcome::No);
  CHECK(classify_U(fl({SimpleGroupId::cyclic(2)}), ps({5})).value == Outcome::Yes);
}

TEST_CASE("classify_V on the quoted examples") {
  CHECK(classify_V(fl({SimpleGroupId::psl(2, 8)}), ps({2, 3})).value == Outcome::No);
  CHECK(classify_V(fl({SimpleGroupId::cyclic(5), SimpleGroupId::cyclic(7)}), ps({5})).value ==
        Outcome::Yes);
  CHECK(classify_V(fl({SimpleGroupId::psl(2, 7)}), ps({3})).value == Outcome::NecessaryOnly);
}

TEST_CASE("classify_hatU / hatV are separability") {
  CHECK(classify_hatU(fl({SimpleGroupId::psl(2, 7)}), ps({3})).value == Outcome::No);
  CHECK(classify_hatU(fl({SimpleGroupId::alt(5)}), ps({2, 3, 5})).value == Outcome::Yes);
  CHECK(classify_hatV(fl({SimpleGroupId::cyclic(2), SimpleGroupId::cyclic(3)}), ps({2})).value ==
        Outcome::Yes);
}

TEST_CASE("classify_D_pi_pipr (the D_{pi,pi'} characterization)") {
  // q = 7: 7 mod 12; pi(q+1) = {2}
  CHECK(classify_D_pi_pipr(fl({SimpleGroupId::psl(2, 7)}), ps({2})).value == Outcome::Yes);
  CHECK(classify_D_pi_pipr(fl({SimpleGroupId::psl(2, 7)}), ps({3})).value == Outcome::No);
  // q = 27 = 3^3, odd exponent; pi(28) = {2,7}
  CHECK(classify_D_pi_pipr(fl({SimpleGroupId::psl(2, 27)}), ps({2, 7})).value == Outcome::Yes);
  CHECK(classify_D_pi_pipr(fl({SimpleGroupId::psl(2, 27)}), ps({2})).value == Outcome::No);
}

TEST_CASE("classify_Ustar on the quoted examples") {
  CHECK(classify_Ustar(fl({SimpleGroupId::psl(2, 31)}), ps({3, 5})).value == Outcome::Yes);
  CHECK(classify_Ustar(fl({SimpleGroupId::psl(2, 31)}), ps({2, 3})).value == Outcome::Yes);
  CHECK(classify_Ustar(fl({SimpleGroupId::psu(3, 4)}), ps({5, 13})).value == Outcome::Yes);
  // A6 with pi = {3,5}: the complement side within the spectrum is {2}.
  CHECK(classify_Ustar(fl({SimpleGroupId::alt(6)}), ps({3, 5})).value == Outcome::Yes);
  // A6 split {3} | {2,5}: neither side within {2}, no family matches.
  CHECK(classify_Ustar(fl({SimpleGroupId::alt(6)}), ps({3})).value == Outcome::No);
  CHECK(classify_Ustar(fl({SimpleGroupId::alt(7)}), ps({3, 5})).value == Outcome::No);
}

TEST_CASE("classify_hatUstar on the quoted examples") {
  CHECK(classify_hatUstar(fl({SimpleGroupId::psu(3, 7)}), ps({3})).value == Outcome::Yes);
  CHECK(classify_hatUstar(fl({SimpleGroupId::psu(3, 31)}), ps({3})).value == Outcome::Yes);
  CHECK(classify_hatUstar(fl({SimpleGroupId::psl(3, 8)}), ps({3})).value == Outcome::No);
  CHECK(classify_hatUstar(fl({SimpleGroupId::psl(2, 31)}), ps({3, 5})).value == Outcome::Yes);
  // PSU(3,127): 127 = 2^7 - 1 but 7 != 5 mod 6, so the hat family rejects it.
  CHECK(classify_hatUstar(fl({SimpleGroupId::psu(3, 127)}), ps({3})).value == Outcome::No);
}

TEST_CASE("classify_Vstar on the quoted examples") {
  CHECK(classify_Vstar(fl({SimpleGroupId::psl(2, 7)}), ps({7})).value ==
        Outcome::NecessaryOnly);
  CHECK(classify_Vstar(fl({SimpleGroupId::cyclic(11)}), ps({11})).value == Outcome::Yes);
  // pi = {2} splits PSL(2,7) as {2} | {3,7}: no branch matches.
  CHECK(classify_Vstar(fl({SimpleGroupId::psl(2, 7)}), ps({2})).value == Outcome::No);
  // pi(D) \ pi = {7} satisfies the PSL(2,7) branch of the criterion.
  CHECK(classify_Vstar(fl({SimpleGroupId::psl(2, 7)}), ps({2, 3})).value ==
        Outcome::NecessaryOnly);
}

TEST_CASE("classify_hatVstar on the quoted examples") {
  CHECK(classify_hatVstar(fl({SimpleGroupId::psl(2, 7)}), ps({7})).value == Outcome::Yes);
  CHECK(classify_hatVstar(fl({SimpleGroupId::psl(2, 7)}), ps({2})).value == Outcome::No);
  CHECK(classify_hatVstar(fl({SimpleGroupId::psu(3, 7)}), ps({3})).value == Outcome::Yes);
}

TEST_CASE("simple_Ustar_iff and its scope guard") {
  CHECK(simple_Ustar_iff(SimpleGroupId::psu(3, 4), ps({3})).value == Outcome::Yes);
  CHECK(simple_Ustar_iff(SimpleGroupId::psu(3, 4), ps({5})).value == Outcome::No);
  CHECK(simple_Ustar_iff(SimpleGroupId::psu(3, 4), ps({5, 13})).value == Outcome::Yes);
  CHECK(simple_Ustar_iff(SimpleGroupId::psl(2, 127), ps({3, 7})).value == Outcome::Yes);
  CHECK(simple_Ustar_iff(SimpleGroupId::alt(5), ps({3})).value == Outcome::No);

  // pi must be a proper subset of pi(S) minus {2}.
  CHECK_THROWS_AS(simple_Ustar_iff(SimpleGroupId::psl(2, 7), ps({2, 3})), ScopeError);
  CHECK_THROWS_AS(simple_Ustar_iff(SimpleGroupId::psl(2, 7), ps({3, 7})), ScopeError);
  CHECK_THROWS_AS(simple_Ustar_iff(SimpleGroupId::cyclic(5), ps({3})), ScopeError);
}

TEST_CASE("corollary side conditions") {
  auto tags = [](const std::vector<std::pair<std::string, std::string>>& cs) {
    std::vector<std::string> out;
    for (const auto& [t, c] : cs) out.push_back(t);
    return out;
  };
  auto has = [](const std::vector<std::string>& v, const std::string& t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  };

  auto c5 = tags(apply_corollaries(fl({SimpleGroupId::cyclic(5)}), ps({5}), nullptr));
  CHECK(has(c5, "U-soluble-equivalence"));  // |pi| = 1, 3 outside pi

  auto c27 = tags(apply_corollaries(fl({SimpleGroupId::psl(2, 7)}), ps({2, 7}), nullptr));
  CHECK_FALSE(has(c27, "U-soluble-equivalence"));  // pi = {2,7} is excluded

  auto c511 = tags(apply_corollaries(fl({SimpleGroupId::psl(2, 31)}), ps({5, 11}), nullptr));
  CHECK(has(c511, "hatVstar-separable-equivalence"));  // both sides carry >= 2 primes
  CHECK(has(c511, "Vstar-soluble-equivalence"));       // 2, 7 outside pi, |pi| >= 2

  auto c23 = tags(apply_corollaries(fl({SimpleGroupId::psl(2, 7)}), ps({2, 3}), nullptr));
  CHECK_FALSE(has(c23, "U-soluble-equivalence"));  // 3 lies in pi
}

TEST_CASE("full_report is internally consistent") {
  auto rep = full_report(fl({SimpleGroupId::psl(2, 7)}), ps({3}));
  CHECK(rep.verdicts.at(GroupClass::U).value == Outcome::NecessaryOnly);
  CHECK(rep.verdicts.at(GroupClass::HatU).value == Outcome::No);
  CHECK(rep.verdicts.at(GroupClass::UStar).value == Outcome::Yes);
  CHECK_FALSE(rep.pi_separable);
  CHECK(rep.pi_selected);
  for (const auto& [c, v] : rep.verdicts) CHECK(!v.because.empty());
}

TEST_CASE("property: swap symmetry over the factor pool") {
  std::mt19937_64 rng(424242);
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    // one or two factors
    std::vector<SimpleGroupId> ids{pool()[rng() % pool().size()]};
    if (rng() % 2) ids.push_back(pool()[rng() % pool().size()]);
    FactorList factors = FactorList::of(ids);
    arith::PrimeSet spectrum = factors.joint_spectrum();
    const auto& primes = spectrum.primes();
    std::uint64_t mask = 1 + rng() % ((1ull << primes.size()) - 1);
    std::vector<Int> chosen;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (1ull << i)) chosen.push_back(primes[i]);
    arith::PrimeSet pi(chosen);
    arith::PrimeSet swapped = pi.complement_within(spectrum);
    if (swapped.empty()) continue;
    ++tested;
    for (GroupClass c : all_classes()) {
      CHECK(classify(c, factors, pi).value == classify(c, factors, swapped).value);
    }
    // Padding the swapped side with a prime outside the spectrum must not
    // change any verdict either.
    arith::PrimeSet padded = swapped.unite(ps({101}));
    for (GroupClass c : all_classes()) {
      CHECK(classify(c, factors, pi).value == classify(c, factors, padded).value);
    }
  }
  CHECK(tested > 300);
}

TEST_CASE("property: implication chains") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<SimpleGroupId> ids{pool()[rng() % pool().size()]};
    if (rng() % 2) ids.push_back(pool()[rng() % pool().size()]);
    FactorList factors = FactorList::of(ids);
    arith::PrimeSet spectrum = factors.joint_spectrum();
    const auto& primes = spectrum.primes();
    std::uint64_t mask = 1 + rng() % ((1ull << primes.size()) - 1);
    std::vector<Int> chosen;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (1ull << i)) chosen.push_back(primes[i]);
    arith::PrimeSet pi(chosen);

    bool separable = is_pi_separable(factors, pi);
    bool soluble = is_pi_soluble(factors, pi);
    bool selected = is_pi_selected(factors, pi);
    if (soluble) CHECK(separable);
    if (soluble) CHECK(selected);
    if (separable) {
      CHECK(classify_U(factors, pi).value == Outcome::Yes);
      CHECK(classify_V(factors, pi).value == Outcome::Yes);
      CHECK(classify_hatU(factors, pi).value == Outcome::Yes);
    }
    CHECK(classify_hatU(factors, pi).value ==
          (separable ? Outcome::Yes : Outcome::No));

    if (classify_hatVstar(factors, pi).value == Outcome::Yes)
      CHECK(classify_hatUstar(factors, pi).value == Outcome::Yes);
    if (classify_Vstar(factors, pi).value != Outcome::No)
      CHECK(classify_Ustar(factors, pi).value != Outcome::No);
  }
}

TEST_CASE("property: adding a factor never turns No into Yes") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    SimpleGroupId base = pool()[rng() % pool().size()];
    SimpleGroupId extra = pool()[rng() % pool().size()];
    FactorList small = fl({base});
    FactorList large = FactorList::of({base, extra});
    arith::PrimeSet spectrum = large.joint_spectrum();
    const auto& primes = spectrum.primes();
    std::uint64_t mask = 1 + rng() % ((1ull << primes.size()) - 1);
    std::vector<Int> chosen;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (1ull << i)) chosen.push_back(primes[i]);
    arith::PrimeSet pi(chosen);
    for (GroupClass c : all_classes()) {
      if (classify(c, small, pi).value == Outcome::No)
        CHECK(classify(c, large, pi).value != Outcome::Yes);
    }
  }
}

TEST_CASE("single simple factor: separable iff one-sided") {
  for (const auto& id : pool()) {
    if (id.is_abelian()) continue;
    arith::PrimeSet spectrum = catalog::spectrum_of(id);
    const auto& primes = spectrum.primes();
    for (std::uint64_t mask = 1; mask < (1ull << primes.size()); ++mask) {
      std::vector<Int> chosen;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask & (1ull << i)) chosen.push_back(primes[i]);
      arith::PrimeSet pi(chosen);
      bool one_sided = spectrum.intersect(pi).empty() || spectrum.minus(pi).empty();
      CHECK(is_pi_separable(fl({id}), pi) == one_sided);
    }
  }
}

TEST_CASE("relative-reading flags are recorded") {
  // pi' = {3} fires on the trace of the spectrum; the verdict says so.
  auto v = classify_hatVstar(fl({SimpleGroupId::psu(3, 7)}), ps({2, 7, 43}));
  CHECK(v.value == Outcome::Yes);
  bool flagged = false;
  for (const auto& f : v.flags)
    if (f.find("relative") != std::string::npos) flagged = true;
  CHECK(flagged);
}

TEST_CASE("empty pi is rejected") {
  CHECK_THROWS_AS(classify_U(fl({SimpleGroupId::alt(5)}), arith::PrimeSet{}), DomainError);
  CHECK_THROWS_AS(FactorList::of({}), DomainError);
}
