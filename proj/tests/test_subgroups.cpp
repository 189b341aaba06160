#include <doctest.h>

#include <algorithm>

#include "hallmark/catalog.hpp"
#include "hallmark/subgroups.hpp"
#include "naive_oracles.hpp"

using namespace hallmark;

namespace {

using arith::Int;

arith::PrimeSet ps(std::initializer_list<Int> v) {
  return arith::PrimeSet(std::vector<Int>(v));
}

PermGroup a5() {
  return PermGroup(5, {Perm::from_cycles(5, "(1 2 3 4 5)"), Perm::from_cycles(5, "(1 2 3)")});
}

auto all_filter = [](Int) { return true; };

}  // namespace

TEST_CASE("A5 soluble subgroup enumeration matches the naive lattice") {
  PermGroup g = a5();
  auto classes = enumerate_soluble_subgroups(g, all_filter);

  long expanded = 0;
  for (const auto& h : classes) expanded += h.conjugate_count;

  auto naive = testing::naive_all_subgroups(5, g.generators());
  CHECK(naive.size() == 59);  // 57 proper nontrivial + trivial + A5
  long naive_soluble = 0;
  for (const auto& sub : naive)
    if (testing::naive_is_soluble(5, sub)) ++naive_soluble;
  CHECK(naive_soluble == 58);  // everything except A5 itself

  CHECK(expanded == naive_soluble);
  CHECK(classes.size() == 8);  // 1, C2, C3, V4, C5, S3, D10, A4

  // Class orders with multiplicity.
  std::vector<std::pair<Int, long>> orders;
  for (const auto& h : classes) orders.emplace_back(h.order, h.conjugate_count);
  std::vector<std::pair<Int, long>> expected{
      {1, 1}, {2, 15}, {3, 10}, {4, 5}, {5, 6}, {6, 10}, {10, 6}, {12, 5}};
  CHECK(orders == expected);
}

TEST_CASE("order filter restricts the lattice") {
  PermGroup g = a5();
  auto div12 = enumerate_soluble_subgroups(g, [](Int d) { return 12 % d == 0; });
  std::vector<Int> orders;
  for (const auto& h : div12) orders.push_back(h.order);
  CHECK(std::count(orders.begin(), orders.end(), 12) == 1);  // the A4 class
  CHECK(std::count(orders.begin(), orders.end(), 6) == 1);   // S3
  for (Int o : orders) CHECK(12 % o == 0);

  auto div15 = enumerate_soluble_subgroups(g, [](Int d) { return 15 % d == 0; });
  for (const auto& h : div15) CHECK(h.order != 15);  // A5 has no order-15 subgroup
}

TEST_CASE("trivial group enumerates to itself") {
  PermGroup t(1, {});
  auto classes = enumerate_soluble_subgroups(t, all_filter);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].order == 1);
}

TEST_CASE("subgroup handles are coherent") {
  PermGroup g = a5();
  for (const auto& h : enumerate_soluble_subgroups(g, all_filter)) {
    CHECK(g.order() % h.order == 0);  // Lagrange
    REQUIRE(!h.elements.empty());
    CHECK(static_cast<Int>(h.elements.size()) == h.order);
    // The generators generate exactly the listed elements.
    if (!h.generators.empty()) {
      auto closed = testing::naive_closure(g.degree(), h.generators);
      CHECK(static_cast<Int>(closed.size()) == h.order);
      for (const auto& e : h.elements) CHECK(closed.count(e) == 1);
    }
  }
}

TEST_CASE("Hall search: quoted PSL(2,7) and PGL(2,7) facts") {
  PermGroup psl = catalog::projective_line_group(7, catalog::LinearKind::PSL);
  auto w23 = find_hall_subgroup(psl, ps({2, 3}));
  REQUIRE(w23.has_value());
  CHECK(w23->subgroup.order == 24);
  CHECK(w23->conjugacy_class_count == 2);

  auto w37 = find_hall_subgroup(psl, ps({3, 7}));
  REQUIRE(w37.has_value());
  CHECK(w37->subgroup.order == 21);

  CHECK_FALSE(find_hall_subgroup(psl, ps({2, 7})).has_value());

  PermGroup pgl = catalog::projective_line_group(7, catalog::LinearKind::PGL);
  CHECK_FALSE(find_hall_subgroup(pgl, ps({2, 3})).has_value());  // no order-48 subgroup

  PermGroup grp_a5 = a5();
  CHECK_FALSE(find_hall_subgroup(grp_a5, ps({2, 5})).has_value());  // no order-20 subgroup
}

TEST_CASE("hall_conjugacy_classes counts") {
  PermGroup psl = catalog::projective_line_group(7, catalog::LinearKind::PSL);
  CHECK(hall_conjugacy_classes(psl, ps({2, 3})).count == 2);
  CHECK(hall_conjugacy_classes(psl, ps({2, 7})).count == 0);
  CHECK(hall_conjugacy_classes(a5(), ps({2, 3})).count == 1);  // one class of A4s
}

TEST_CASE("check_E_C_D on the quoted examples") {
  PermGroup psl = catalog::projective_line_group(7, catalog::LinearKind::PSL);
  auto r = check_E_C_D(psl, ps({2, 3}));
  CHECK(r.E);
  CHECK(r.C == false);
  CHECK(r.D == false);

  auto a5r = check_E_C_D(a5(), ps({2, 3}));
  CHECK(a5r.E);
  CHECK(a5r.C == true);   // one class of A4s
  CHECK(a5r.D == false);  // S3 lies in no A4

  auto empty = check_E_C_D(a5(), ps({7, 11}));
  CHECK(empty.E);
  CHECK(empty.C == true);
  CHECK(empty.D == true);
  CHECK(empty.witness->subgroup.order == 1);
}

TEST_CASE("E/C/D refuses out-of-scope questions but keeps found witnesses") {
  PermGroup psl28 = catalog::projective_line_group(8, catalog::LinearKind::PSL);
  // pi(PSL(2,8)) = {2,3,7}; pi covering all three primes targets |G| itself,
  // which the soluble search cannot reach (the group is insoluble).
  CHECK_THROWS_AS(check_E_C_D(psl28, ps({2, 3, 7}), {}), ScopeError);

  // A soluble-reachable witness with three relevant primes is still reported.
  PermGroup c30(30, {Perm::from_cycles(
      30, "(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30)")});
  auto r = check_E_C_D(c30, ps({2, 3, 5}));
  CHECK(r.E);
  CHECK(r.witness->subgroup.order == 30);
  CHECK_FALSE(r.C.has_value());
  CHECK_FALSE(r.D.has_value());
}

TEST_CASE("irrelevant primes do not change the Hall outcome") {
  PermGroup psl = catalog::projective_line_group(7, catalog::LinearKind::PSL);
  auto base = find_hall_subgroup(psl, ps({2, 3}));
  auto padded = find_hall_subgroup(psl, ps({2, 3, 11}));
  REQUIRE(base.has_value());
  REQUIRE(padded.has_value());
  CHECK(base->subgroup.order == padded->subgroup.order);
  CHECK(base->conjugacy_class_count == padded->conjugacy_class_count);
}

TEST_CASE("ECD monotonicity D => C => E across corpus spot checks") {
  PermGroup groups[] = {a5(), catalog::projective_line_group(7, catalog::LinearKind::PSL),
                        catalog::projective_line_group(8, catalog::LinearKind::PSL)};
  for (const auto& g : groups) {
    arith::PrimeSet spectrum = arith::prime_spectrum(g.order());
    const auto& primes = spectrum.primes();
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = i; j < primes.size(); ++j) {
        arith::PrimeSet pi = (i == j) ? ps({primes[i]}) : ps({primes[i], primes[j]});
        auto r = check_E_C_D(g, pi);
        if (r.D == true) CHECK(r.C == true);
        if (r.C == true) CHECK(r.E);
        if (r.witness && r.E) {
          CHECK(r.witness->subgroup.order == arith::pi_part(g.order(), pi));
          CHECK(arith::prime_spectrum(r.witness->subgroup.order).subset_of(pi));
        }
      }
    }
  }
}

TEST_CASE("Sylow questions always come back (true, true, true)") {
  PermGroup psl = catalog::projective_line_group(7, catalog::LinearKind::PSL);
  for (Int p : {2, 3, 7}) {
    auto r = check_E_C_D(psl, ps({p}));
    CHECK(r.E);
    CHECK(r.C == true);
    CHECK(r.D == true);
  }
}

TEST_CASE("normal_closure") {
  PermGroup g = a5();
  auto whole = normal_closure(g, {Perm::from_cycles(5, "(1 2 3)")});
  CHECK(whole.order == 60);  // A5 simple

  auto trivial = normal_closure(g, {Perm::identity(5)});
  CHECK(trivial.order == 1);

  PermGroup s5(5, {Perm::from_cycles(5, "(1 2)"), Perm::from_cycles(5, "(1 2 3 4 5)")});
  auto alt = normal_closure(s5, {Perm::from_cycles(5, "(1 2 3)")});
  CHECK(alt.order == 60);

  CHECK_THROWS_AS(normal_closure(g, {Perm::from_cycles(5, "(1 2)")}), DomainError);
}

TEST_CASE("is_simple") {
  CHECK(is_simple(a5()));
  PermGroup c4(4, {Perm::from_cycles(4, "(1 2 3 4)")});
  CHECK_FALSE(is_simple(c4));
  CHECK_FALSE(is_simple(PermGroup(1, {})));
  CHECK_FALSE(is_simple(catalog::projective_line_group(7, catalog::LinearKind::PGL)));
  CHECK(is_simple(catalog::projective_line_group(7, catalog::LinearKind::PSL)));
}

TEST_CASE("composition factor orders") {
  PermGroup pgl = catalog::projective_line_group(7, catalog::LinearKind::PGL);
  CHECK(composition_factor_orders(pgl) == std::vector<Int>{2, 168});

  PermGroup s5(5, {Perm::from_cycles(5, "(1 2)"), Perm::from_cycles(5, "(1 2 3 4 5)")});
  CHECK(composition_factor_orders(s5) == std::vector<Int>{2, 60});

  PermGroup c12(12, {Perm::from_cycles(12, "(1 2 3 4 5 6 7 8 9 10 11 12)")});
  CHECK(composition_factor_orders(c12) == std::vector<Int>{2, 2, 3});

  CHECK(composition_factor_orders(a5()) == std::vector<Int>{60});
}

TEST_CASE("resource guards fire") {
  PermGroup g = a5();
  EnumerationLimits tight;
  tight.class_limit = 3;
  CHECK_THROWS_AS(enumerate_soluble_subgroups(g, all_filter, tight), ResourceError);
  EnumerationLimits tiny;
  tiny.element_cap = 10;
  CHECK_THROWS_AS(enumerate_soluble_subgroups(g, all_filter, tiny), ResourceError);
}
