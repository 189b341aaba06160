#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallmark/arith.hpp"
#include "hallmark/perm_group.hpp"

namespace hallmark::catalog {

using arith::Int;
using arith::PrimeSet;

enum class Family { Cyclic, Alt, PSL, PSU };

/// Tagged description of a composition factor. Exceptional isomorphisms
/// (PSL(2,4) = PSL(2,5) = A5, PSL(2,9) = A6, PSL(3,2) = PSL(2,7)) are
/// normalized to a canonical label at construction.
struct SimpleGroupId {
  Family family = Family::Cyclic;
  int dim = 0;  // Alt: n; PSL/PSU: dimension
  Int q = 0;    // Cyclic: the prime; PSL/PSU: field size

  static SimpleGroupId cyclic(Int p);
  static SimpleGroupId alt(int n);
  static SimpleGroupId psl(int dim, Int q);
  static SimpleGroupId psu(int dim, Int q);

  bool is_abelian() const { return family == Family::Cyclic; }
  /// (p, f) with q = p^f, for the Lie-type families.
  std::pair<Int, int> field_params() const;

  std::string to_string() const;  // C2, A5, PSL(2,7), PSU(3,4)
  static SimpleGroupId parse(const std::string& token);

  auto operator<=>(const SimpleGroupId&) const = default;
};

Int order_of(const SimpleGroupId& id);
PrimeSet spectrum_of(const SimpleGroupId& id);

/// The eight simple groups whose order has exactly three prime divisors.
std::vector<SimpleGroupId> k3_groups();

/// All catalog-family groups of the given order (Alt up to degree 12,
/// PSL(2,q)/PSL(3,q)/PSU(3,q) for q <= 1000, and PSU(4,2)), canonically
/// labeled so isomorphic spellings appear once.
std::vector<SimpleGroupId> identify_by_order(Int n);

/// GF(p^f) with the least monic irreducible modulus. Elements are encoded
/// as integers 0 .. p^f-1 via base-p digits (constant coefficient first).
class FiniteField {
 public:
  static FiniteField make(Int p, int f);  // p prime, p^f <= 2^20

  Int characteristic() const { return p_; }
  int degree() const { return f_; }
  Int size() const { return size_; }
  const std::vector<Int>& modulus() const { return modulus_; }

  Int add(Int a, Int b) const;
  Int sub(Int a, Int b) const;
  Int neg(Int a) const;
  Int mul(Int a, Int b) const;
  Int inverse(Int a) const;  // throws DomainError on 0
  Int pow(Int a, Int e) const;
  Int generator() const { return generator_; }  // least multiplicative generator

 private:
  Int p_ = 2;
  int f_ = 1;
  Int size_ = 2;
  std::vector<Int> modulus_;  // monic, degree f, low-to-high coefficients
  Int generator_ = 1;
};

enum class LinearKind { PSL, PGL };

/// PSL(2,q) or PGL(2,q) acting on the q+1 points of the projective line.
/// Point 1 is infinity; point 1+i is the field element with encoding i
/// (1-based in file output; internally 0-based with the same order).
PermGroup projective_line_group(Int q, LinearKind kind);

/// PSL(3,q) acting on the q^2+q+1 points of the projective plane.
PermGroup projective_plane_group(Int q);

/// PSU(3,q) acting on the q^3+1 isotropic points of the Hermitian form,
/// for q in {3, 4}.
PermGroup unitary_group_3(Int q);

/// Builds the permutation representation a catalog label names, e.g.
/// "A5", "PSL(2,7)", "PGL(2,7)", "PSL(3,3)", "PSU(3,4)".
PermGroup construct_by_label(const std::string& label);

enum class HallProperty { E, C, D };

/// A Hall-subgroup fact about a simple group, with its literature anchor.
struct HallFact {
  SimpleGroupId group;
  PrimeSet pi;
  HallProperty property = HallProperty::E;
  bool holds = false;
  std::string provenance;
};

/// Same shape for almost-simple groups outside the simple catalog.
struct NonSimpleHallFact {
  std::string label;
  PrimeSet pi;
  HallProperty property = HallProperty::E;
  bool holds = false;
  std::string provenance;
};

const std::vector<HallFact>& hall_facts();
const std::vector<NonSimpleHallFact>& nonsimple_hall_facts();

}  // namespace hallmark::catalog
