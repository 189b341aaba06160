#include <doctest.h>

#include <sstream>

#include "hallmark/group_file.hpp"

using namespace hallmark;
using namespace hallmark::io;

TEST_CASE("group file parse") {
  std::string text =
      "# alternating group on five points\n"
      "degree 5\n"
      "gen (1 2 3 4 5)\n"
      "gen (1 2 3)  # three-cycle\n";
  auto data = parse_group_file_text(text);
  CHECK(data.degree == 5);
  REQUIRE(data.generators.size() == 2);
  PermGroup g(data.degree, data.generators);
  CHECK(g.order() == 60);
}

TEST_CASE("group file errors") {
  CHECK_THROWS_AS(parse_group_file_text("gen (1 2)\n"), FormatError);
  CHECK_THROWS_AS(parse_group_file_text(""), FormatError);
  CHECK_THROWS_AS(parse_group_file_text("degree 3\ndegree 4\n"), FormatError);
  CHECK_THROWS_AS(parse_group_file_text("degree 3\ngen (1 5)\n"), FormatError);
  CHECK_THROWS_AS(parse_group_file_text("degree 0\n"), FormatError);
  CHECK_THROWS_AS(parse_group_file_text("degree 3\nfoo\n"), FormatError);
}

TEST_CASE("export then parse is the identity, and export is stable") {
  std::string text =
      "# comment to be dropped\n"
      "degree 6\n"
      "\n"
      "gen (1 2)(3 4)\n"
      "gen   (1 2 3)(4 5 6)\n";
  auto data = parse_group_file_text(text);
  std::string exported = export_group_file(data.degree, data.generators);
  auto reparsed = parse_group_file_text(exported);
  CHECK(reparsed.degree == data.degree);
  CHECK(reparsed.generators == data.generators);
  CHECK(export_group_file(reparsed.degree, reparsed.generators) == exported);
  CHECK(exported == "degree 6\ngen (1 2)(3 4)\ngen (1 2 3)(4 5 6)\n");
}

TEST_CASE("factor grammar") {
  auto ids = parse_factor_list("C2, PSL(2,7)");
  REQUIRE(ids.size() == 2);
  CHECK(ids[0].to_string() == "C2");
  CHECK(ids[1].to_string() == "PSL(2,7)");
  CHECK(parse_factor_list("PSU(3,4)").size() == 1);
  CHECK(parse_factor_list("A5,A5,A5").size() == 3);
  CHECK_THROWS_AS(parse_factor_list(""), FormatError);
  CHECK_THROWS_AS(parse_factor_list("Q8"), FormatError);
  CHECK_THROWS_AS(parse_factor_list("C4"), DomainError);  // 4 is not prime
}

TEST_CASE("prime set grammar") {
  CHECK(parse_prime_set("2,3,7").to_string() == "{2,3,7}");
  CHECK(parse_prime_set(" 5 , 3 ").to_string() == "{3,5}");
  CHECK_THROWS_AS(parse_prime_set(""), FormatError);
  CHECK_THROWS_AS(parse_prime_set("6"), FormatError);
  CHECK_THROWS_AS(parse_prime_set("2,x"), FormatError);
}
