#include <doctest.h>

#include <algorithm>
#include <random>

#include "hallmark/perm.hpp"

using namespace hallmark;

TEST_CASE("cycle notation parse and print") {
  Perm p = Perm::from_cycles(5, "(1 2 3)(4 5)");
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[4] == 3);
  CHECK(p.to_cycles() == "(1 2 3)(4 5)");
  CHECK(Perm::identity(4).to_cycles() == "()");
  CHECK(Perm::from_cycles(4, "()") == Perm::identity(4));
  CHECK(Perm::from_cycles(6, " ( 1 2 ) ( 3 6 ) ").to_cycles() == "(1 2)(3 6)");

  CHECK_THROWS_AS(Perm::from_cycles(3, "(1 4)"), FormatError);
  CHECK_THROWS_AS(Perm::from_cycles(3, "(1 2 1)"), FormatError);
  CHECK_THROWS_AS(Perm::from_cycles(3, "(1 2"), FormatError);
  CHECK_THROWS_AS(Perm::from_cycles(3, "1 2"), FormatError);
}

TEST_CASE("composition is left-to-right") {
  Perm a = Perm::from_cycles(3, "(1 2)");
  Perm b = Perm::from_cycles(3, "(2 3)");
  // point 1 under a*b: 1 -> 2 -> 3
  CHECK((a * b)[0] == 2);
  CHECK((a * b).to_cycles() == "(1 3 2)");
  CHECK((b * a).to_cycles() == "(1 2 3)");
}

TEST_CASE("inverse, order, identity") {
  Perm p = Perm::from_cycles(7, "(1 2 3 4)(5 6)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 4);
  CHECK(Perm::from_cycles(7, "(1 2 3)(4 5)").order() == 6);
  CHECK(Perm::identity(7).order() == 1);
}

TEST_CASE("random round trips through cycle text") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    unsigned n = 1 + static_cast<unsigned>(rng() % 12);
    std::vector<std::uint16_t> img(n);
    for (unsigned j = 0; j < n; ++j) img[j] = static_cast<std::uint16_t>(j);
    std::shuffle(img.begin(), img.end(), rng);
    Perm p(img);
    CHECK(Perm::from_cycles(n, p.to_cycles()) == p);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("malformed image arrays are rejected") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), FormatError);
  CHECK_THROWS_AS(Perm({0, 3, 1}), FormatError);
}
