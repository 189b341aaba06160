#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hallmark/catalog.hpp"
#include "hallmark/perm.hpp"
#include "hallmark/perm_group.hpp"

namespace hallmark::io {

/// Text format for permutation groups:
///
///   # optional comments
///   degree N
///   gen (1 2 3)(4 5)
///   gen (1 4)
///
/// Cycle points are 1-based; a '#' starts a comment anywhere on a line.
struct GroupFileData {
  unsigned degree = 1;
  std::vector<Perm> generators;
};

GroupFileData parse_group_file(std::istream& in);
GroupFileData parse_group_file_text(const std::string& text);

/// Canonical serialization; parse followed by export is stable.
std::string export_group_file(unsigned degree, const std::vector<Perm>& generators);

/// "C2,A5,PSL(2,7),PSU(3,4)" -> factor list (whitespace tolerated).
std::vector<catalog::SimpleGroupId> parse_factor_list(const std::string& text);

/// "2,3,7" -> prime set; rejects non-primes and empties.
arith::PrimeSet parse_prime_set(const std::string& text);

}  // namespace hallmark::io
