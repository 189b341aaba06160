#include "hallmark/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace hallmark::catalog {

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool overflows_mul(Int a, Int b) {
  return b != 0 && a > std::numeric_limits<Int>::max() / b;
}

}  // namespace

SimpleGroupId SimpleGroupId::cyclic(Int p) {
  if (!arith::is_prime(p)) throw DomainError("Cyclic factor needs a prime order");
  return {Family::Cyclic, 0, p};
}

SimpleGroupId SimpleGroupId::alt(int n) {
  if (n < 5) throw DomainError("Alt(n) is simple only for n >= 5");
  return {Family::Alt, n, 0};
}

SimpleGroupId SimpleGroupId::psl(int dim, Int q) {
  auto pp = arith::prime_power(q);
  if (!pp) throw DomainError("PSL: q must be a prime power");
  if (dim == 2) {
    if (q < 4) throw DomainError("PSL(2,q) is simple only for q >= 4");
    // Exceptional isomorphisms, normalized to a canonical label.
    if (q == 4 || q == 5) return alt(5);
    if (q == 9) return alt(6);
  } else if (dim == 3) {
    if (q < 2) throw DomainError("PSL(3,q) needs q >= 2");
    if (q == 2) return psl(2, 7);  // PSL(3,2) = PSL(2,7)
  } else {
    throw DomainError("catalog covers PSL(2,q) and PSL(3,q) only");
  }
  return {Family::PSL, dim, q};
}

SimpleGroupId SimpleGroupId::psu(int dim, Int q) {
  auto pp = arith::prime_power(q);
  if (!pp) throw DomainError("PSU: q must be a prime power");
  if (dim == 3) {
    if (q < 3) throw DomainError("PSU(3,q) is simple only for q >= 3");
  } else if (dim == 4) {
    if (q != 2) throw DomainError("catalog covers PSU(4,2) only in dimension 4");
  } else {
    throw DomainError("catalog covers PSU(3,q) and PSU(4,2) only");
  }
  return {Family::PSU, dim, q};
}

std::pair<Int, int> SimpleGroupId::field_params() const {
  if (family != Family::PSL && family != Family::PSU)
    throw DomainError("field_params: not a Lie-type factor");
  auto pp = arith::prime_power(q);
  return *pp;
}

std::string SimpleGroupId::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::Cyclic: os << 'C' << q; break;
    case Family::Alt: os << 'A' << dim; break;
    case Family::PSL: os << "PSL(" << dim << ',' << q << ')'; break;
    case Family::PSU: os << "PSU(" << dim << ',' << q << ')'; break;
  }
  return os.str();
}

SimpleGroupId SimpleGroupId::parse(const std::string& token) {
  auto parse_pair = [&](std::size_t open) -> std::pair<int, Int> {
    std::size_t comma = token.find(',', open);
    std::size_t close = token.find(')', open);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw FormatError("bad factor token: " + token);
    int dim = std::stoi(token.substr(open + 1, comma - open - 1));
    Int q = std::stoll(token.substr(comma + 1, close - comma - 1));
    return {dim, q};
  };
  try {
    if (token.rfind("PSL(", 0) == 0) {
      auto [dim, q] = parse_pair(3);
      return psl(dim, q);
    }
    if (token.rfind("PSU(", 0) == 0) {
      auto [dim, q] = parse_pair(3);
      return psu(dim, q);
    }
    if (token.size() > 1 && token[0] == 'C') return cyclic(std::stoll(token.substr(1)));
    if (token.size() > 1 && token[0] == 'A') return alt(std::stoi(token.substr(1)));
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw FormatError("bad factor token: " + token);
  }
  throw FormatError("bad factor token: " + token);
}

Int order_of(const SimpleGroupId& id) {
  switch (id.family) {
    case Family::Cyclic:
      return id.q;
    case Family::Alt:
      return factorial(id.dim) / 2;
    case Family::PSL: {
      Int q = id.q;
      if (id.dim == 2) return q * (q * q - 1) / std::gcd<Int, Int>(2, q - 1);
      Int q3 = q * q * q;
      if (overflows_mul(q3, q3)) throw DomainError("order_of: 64-bit overflow");
      Int acc = q3 * (q3 - 1) / std::gcd<Int, Int>(3, q - 1);
      if (overflows_mul(acc, q * q - 1)) throw DomainError("order_of: 64-bit overflow");
      return acc * (q * q - 1);
    }
    case Family::PSU: {
      Int q = id.q;
      if (id.dim == 4) return 25920;  // PSU(4,2)
      Int q3 = q * q * q;
      if (overflows_mul(q3, q3)) throw DomainError("order_of: 64-bit overflow");
      Int acc = q3 * (q3 + 1) / std::gcd<Int, Int>(3, q + 1);
      if (overflows_mul(acc, q * q - 1)) throw DomainError("order_of: 64-bit overflow");
      return acc * (q * q - 1);
    }
  }
  throw DomainError("order_of: bad id");
}

PrimeSet spectrum_of(const SimpleGroupId& id) { return arith::prime_spectrum(order_of(id)); }

std::vector<SimpleGroupId> k3_groups() {
  return {SimpleGroupId::alt(5),     SimpleGroupId::alt(6),    SimpleGroupId::psl(2, 7),
          SimpleGroupId::psl(2, 8),  SimpleGroupId::psl(2, 17), SimpleGroupId::psl(3, 3),
          SimpleGroupId::psu(3, 3),  SimpleGroupId::psu(4, 2)};
}

std::vector<SimpleGroupId> identify_by_order(Int n) {
  if (n > 1'000'000'000) throw DomainError("identify_by_order: n above 10^9");
  std::vector<SimpleGroupId> out;
  auto push_unique = [&out](SimpleGroupId id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  using U128 = unsigned __int128;
  for (int deg = 5; deg <= 12; ++deg) {
    if (factorial(deg) / 2 == n) push_unique(SimpleGroupId::alt(deg));
  }
  for (Int q = 2; q <= 1000; ++q) {
    if (!arith::prime_power(q)) continue;
    U128 q2 = static_cast<U128>(q) * q;
    U128 q3 = q2 * static_cast<U128>(q);
    if (q >= 4) {
      U128 psl2 = static_cast<U128>(q) * (q2 - 1) / static_cast<unsigned>(std::gcd<Int, Int>(2, q - 1));
      if (psl2 == static_cast<U128>(n)) push_unique(SimpleGroupId::psl(2, q));
    }
    U128 psl3 = q3 * (q3 - 1) / static_cast<unsigned>(std::gcd<Int, Int>(3, q - 1)) * (q2 - 1);
    if (psl3 == static_cast<U128>(n)) push_unique(SimpleGroupId::psl(3, q));
    if (q >= 3) {
      U128 psu3 = q3 * (q3 + 1) / static_cast<unsigned>(std::gcd<Int, Int>(3, q + 1)) * (q2 - 1);
      if (psu3 == static_cast<U128>(n)) push_unique(SimpleGroupId::psu(3, q));
    }
  }
  if (n == 25920) push_unique(SimpleGroupId::psu(4, 2));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// --- projective line -------------------------------------------------

// Points: 0 = infinity, 1 + e = field element with encoding e.
struct LinePoints {
  const FiniteField& field;
  unsigned count;
  explicit LinePoints(const FiniteField& f)
      : field(f), count(static_cast<unsigned>(f.size() + 1)) {}
};

// Moebius action of [[a,b],[c,d]] on column vectors [x : 1], [1 : 0].
Perm moebius_perm(const LinePoints& pts, Int a, Int b, Int c, Int d) {
  const FiniteField& F = pts.field;
  std::vector<std::uint16_t> images(pts.count);
  // infinity -> a/c
  images[0] = (c == 0) ? 0 : static_cast<std::uint16_t>(1 + F.mul(a, F.inverse(c)));
  for (Int x = 0; x < F.size(); ++x) {
    Int num = F.add(F.mul(a, x), b);
    Int den = F.add(F.mul(c, x), d);
    images[1 + x] = (den == 0) ? 0 : static_cast<std::uint16_t>(1 + F.mul(num, F.inverse(den)));
  }
  return Perm(std::move(images));
}

// --- projective planes and Hermitian unitals -------------------------

using Vec3 = std::array<Int, 3>;

struct Mat3 {
  std::array<std::array<Int, 3>, 3> m;
};

Vec3 apply(const FiniteField& F, const Mat3& M, const Vec3& v) {
  Vec3 out{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] = F.add(out[i], F.mul(M.m[i][j], v[j]));
  return out;
}

Vec3 normalize(const FiniteField& F, Vec3 v) {
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0) {
      Int inv = F.inverse(v[i]);
      for (int j = 0; j < 3; ++j) v[j] = F.mul(v[j], inv);
      return v;
    }
  }
  throw DomainError("normalize: zero vector");
}

std::vector<Vec3> projective_points(const FiniteField& F) {
  // First nonzero coordinate = 1, enumerated lexicographically:
  // (0,0,1), (0,1,z), (1,y,z).
  std::vector<Vec3> pts;
  pts.push_back({0, 0, 1});
  for (Int z = 0; z < F.size(); ++z) pts.push_back({0, 1, z});
  for (Int y = 0; y < F.size(); ++y)
    for (Int z = 0; z < F.size(); ++z) pts.push_back({1, y, z});
  std::sort(pts.begin(), pts.end());
  return pts;
}

Perm matrix_perm(const FiniteField& F, const std::vector<Vec3>& pts, const Mat3& M) {
  std::map<Vec3, std::uint16_t> index;
  for (std::uint16_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], i);
  std::vector<std::uint16_t> images(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec3 w = normalize(F, apply(F, M, pts[i]));
    auto it = index.find(w);
    if (it == index.end()) throw DomainError("matrix_perm: image outside point set");
    images[i] = it->second;
  }
  return Perm(std::move(images));
}

}  // namespace

PermGroup projective_line_group(Int q, LinearKind kind) {
  if (q < 4 || q > 101 || !arith::prime_power(q))
    throw DomainError("projective_line_group: q must be a prime power in [4, 101]");
  auto [p, f] = *arith::prime_power(q);
  FiniteField F = FiniteField::make(p, f);
  LinePoints pts(F);
  Int g = F.generator();

  std::vector<Perm> gens;
  gens.push_back(moebius_perm(pts, 1, 1, 0, 1));                  // x -> x + 1
  gens.push_back(moebius_perm(pts, F.mul(g, g), 0, 0, 1));        // x -> g^2 x
  gens.push_back(moebius_perm(pts, 0, F.neg(1), 1, 0));           // x -> -1/x
  if (kind == LinearKind::PGL && p != 2) {
    gens.push_back(moebius_perm(pts, g, 0, 0, 1));                // x -> g x
  }
  PermGroup group(pts.count, std::move(gens));

  Int expected = q * (q * q - 1);
  if (kind == LinearKind::PSL) expected /= std::gcd<Int, Int>(2, q - 1);
  if (group.order() != expected)
    throw DomainError("projective_line_group: order check failed for q = " +
                      std::to_string(q));
  return group;
}

PermGroup projective_plane_group(Int q) {
  if (q < 2 || q > 13 || !arith::prime_power(q))
    throw DomainError("projective_plane_group: q must be a prime power in [2, 13]");
  auto [p, f] = *arith::prime_power(q);
  FiniteField F = FiniteField::make(p, f);
  std::vector<Vec3> pts = projective_points(F);

  // Elementary transvections I + c*E_ij generate SL(3,q); over GF(p^f)
  // the coefficients c run over a basis g^0..g^(f-1).
  std::vector<Perm> gens;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Int c = 1;
      for (int k = 0; k < f; ++k) {
        Mat3 M{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
        M.m[i][j] = c;
        gens.push_back(matrix_perm(F, pts, M));
        c = F.mul(c, F.generator());
      }
    }
  }
  PermGroup group(static_cast<unsigned>(pts.size()), std::move(gens));
  if (group.order() != order_of(SimpleGroupId{Family::PSL, 3, q}))
    throw DomainError("projective_plane_group: order check failed for q = " +
                      std::to_string(q));
  return group;
}

PermGroup unitary_group_3(Int q) {
  if (q != 3 && q != 4)
    throw DomainError("unitary_group_3: supported q are 3 and 4");
  auto [p, f] = *arith::prime_power(q);
  FiniteField F = FiniteField::make(p, 2 * f);  // GF(q^2)
  const Int Q = q;                              // |fixed field|

  auto frob = [&](Int x) { return F.pow(x, Q); };     // x -> x^q
  auto trace = [&](Int x) { return F.add(x, frob(x)); };

  // Hermitian form x^T J sigma(y) with J the antidiagonal; isotropic
  // projective points are those with <v, v> = 0.
  auto form = [&](const Vec3& x, const Vec3& y) {
    Int s = F.mul(x[0], frob(y[2]));
    s = F.add(s, F.mul(x[1], frob(y[1])));
    s = F.add(s, F.mul(x[2], frob(y[0])));
    return s;
  };

  std::vector<Vec3> all = projective_points(F);
  std::vector<Vec3> iso;
  for (const Vec3& v : all)
    if (form(v, v) == 0) iso.push_back(v);
  if (static_cast<Int>(iso.size()) != Q * Q * Q + 1)
    throw DomainError("unitary_group_3: isotropic point count mismatch");

  auto unitary_check = [&](const Mat3& M) {
    // Verify the form is preserved on a spanning set of pairs.
    const std::vector<Vec3> basis{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const Vec3& x : basis) {
      for (const Vec3& y : basis) {
        if (form(apply(F, M, x), apply(F, M, y)) != form(x, y)) return false;
      }
    }
    return true;
  };

  std::vector<Mat3> mats;
  // Root elements u(a, b) with trace(b) = -a^(q+1).
  for (int k = 0; k < 2 * f; ++k) {
    Int a = F.pow(F.generator(), k);
    Int target = F.neg(F.pow(a, Q + 1));
    Int b = -1;
    for (Int cand = 0; cand < F.size(); ++cand) {
      if (trace(cand) == target) {
        b = cand;
        break;
      }
    }
    if (b < 0) throw DomainError("unitary_group_3: no root element parameter");
    mats.push_back(Mat3{{{{1, a, b}, {0, 1, F.neg(frob(a))}, {0, 0, 1}}}});
  }
  // Long root element u(0, b) with trace(b) = 0, b != 0.
  for (Int cand = 1; cand < F.size(); ++cand) {
    if (trace(cand) == 0) {
      mats.push_back(Mat3{{{{1, 0, cand}, {0, 1, 0}, {0, 0, 1}}}});
      break;
    }
  }
  // Torus h(g) = diag(g, g^(q-1), g^(-q)) and the Weyl reflection.
  Int g = F.generator();
  mats.push_back(Mat3{{{{g, 0, 0}, {0, F.pow(g, Q - 1), 0}, {0, 0, F.pow(g, -Q)}}}});
  mats.push_back(Mat3{{{{0, 0, 1}, {0, F.neg(1), 0}, {1, 0, 0}}}});

  std::map<Vec3, std::uint16_t> index;
  for (std::uint16_t i = 0; i < iso.size(); ++i) index.emplace(iso[i], i);
  std::vector<Perm> gens;
  for (const Mat3& M : mats) {
    if (!unitary_check(M)) throw DomainError("unitary_group_3: generator breaks the form");
    std::vector<std::uint16_t> images(iso.size());
    for (std::size_t i = 0; i < iso.size(); ++i) {
      Vec3 w = normalize(F, apply(F, M, iso[i]));
      auto it = index.find(w);
      if (it == index.end())
        throw DomainError("unitary_group_3: image left the isotropic set");
      images[i] = it->second;
    }
    gens.emplace_back(std::move(images));
  }
  PermGroup group(static_cast<unsigned>(iso.size()), std::move(gens));
  if (group.order() != order_of(SimpleGroupId{Family::PSU, 3, q}))
    throw DomainError("unitary_group_3: order check failed for q = " + std::to_string(q));
  return group;
}

PermGroup construct_by_label(const std::string& label) {
  if (label.size() == 2 && label[0] == 'A') {
    int n = label[1] - '0';
    if (n >= 3 && n <= 9) {
      // A_n = <(1 2 3), (1 2 ... n)> for odd n, <(1 2 3), (2 3 ... n)> for even.
      std::vector<std::uint16_t> three(n), cycle(n);
      std::iota(three.begin(), three.end(), 0);
      three[0] = 1; three[1] = 2; three[2] = 0;
      std::iota(cycle.begin(), cycle.end(), 0);
      if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) cycle[i] = static_cast<std::uint16_t>((i + 1) % n);
      } else {
        cycle[0] = 0;
        for (int i = 1; i < n; ++i) cycle[i] = static_cast<std::uint16_t>(i % (n - 1) + 1);
      }
      return PermGroup(n, {Perm(three), Perm(cycle)});
    }
  }
  auto starts = [&](const char* prefix) { return label.rfind(prefix, 0) == 0; };
  auto q_of = [&](std::size_t open) {
    std::size_t comma = label.find(',', open);
    std::size_t close = label.find(')', open);
    if (comma == std::string::npos || close == std::string::npos)
      throw FormatError("bad group label: " + label);
    return std::stoll(label.substr(comma + 1, close - comma - 1));
  };
  if (starts("PSL(2,")) return projective_line_group(q_of(4), LinearKind::PSL);
  if (starts("PGL(2,")) return projective_line_group(q_of(4), LinearKind::PGL);
  if (starts("PSL(3,")) return projective_plane_group(q_of(4));
  if (starts("PSU(3,")) return unitary_group_3(q_of(4));
  throw FormatError("no construction for label: " + label);
}

namespace {

std::vector<HallFact> build_hall_facts() {
  using SGI = SimpleGroupId;
  auto ps = [](std::initializer_list<Int> v) { return PrimeSet(std::vector<Int>(v)); };
  std::vector<HallFact> facts;
  const SGI psl27 = SGI::psl(2, 7);
  const SGI psu34 = SGI::psu(3, 4);
  const SGI psu42 = SGI::psu(4, 2);
  const SGI psl28 = SGI::psl(2, 8);

  facts.push_back({psl27, ps({2, 3}), HallProperty::E, true,
                   "Hall-subgroup tables for simple groups: PSL(2,7) has Hall {2,3}-subgroups"
                   " (two classes of S4)"});
  facts.push_back({psl27, ps({3, 7}), HallProperty::E, true,
                   "Hall-subgroup tables for simple groups: PSL(2,7) has a Hall {3,7}-subgroup"
                   " (the Frobenius group 7:3 of order 21)"});
  facts.push_back({psl27, ps({2, 7}), HallProperty::E, false,
                   "Dickson's subgroup list for PSL(2,7): no subgroup of order 56"});
  facts.push_back({psl27, ps({2, 3}), HallProperty::D, false,
                   "the two S4 classes of PSL(2,7) are not conjugate, so C and D fail for"
                   " {2,3}"});
  facts.push_back({psu34, ps({2, 3}), HallProperty::E, true,
                   "Hall-subgroup tables for simple groups: PSU(3,4) has a Hall"
                   " {2,3}-subgroup of order 192 inside the Borel subgroup 2^(2+4):15"});
  facts.push_back({psu34, ps({3, 5}), HallProperty::E, true,
                   "Hall-subgroup tables for simple groups: PSU(3,4) has a Hall"
                   " {3,5}-subgroup of order 75 inside the maximal torus normalizer"});
  facts.push_back({psu34, ps({3, 13}), HallProperty::E, true,
                   "Hall-subgroup tables for simple groups: PSU(3,4) has a Hall"
                   " {3,13}-subgroup of order 39 (Singer-type 13:3)"});
  facts.push_back({psu34, ps({5, 13}), HallProperty::E, false,
                   "Hall-subgroup tables for simple groups: PSU(3,4) has no Hall"
                   " {5,13}-subgroup (order 325)"});
  facts.push_back({psu42, ps({3, 5}), HallProperty::E, false,
                   "Hall-subgroup tables for simple groups: PSU(4,2) has no Hall"
                   " {3,5}-subgroup (order 405)"});
  facts.push_back({psl28, ps({2, 7}), HallProperty::E, true,
                   "PSL(2,8) has Hall 3'-subgroups: the point stabilizer 2^3:7 of order 56"
                   " in the degree-9 action"});
  return facts;
}

}  // namespace

const std::vector<HallFact>& hall_facts() {
  static const std::vector<HallFact> facts = build_hall_facts();
  return facts;
}

const std::vector<NonSimpleHallFact>& nonsimple_hall_facts() {
  static const std::vector<NonSimpleHallFact> facts = [] {
    std::vector<NonSimpleHallFact> out;
    out.push_back({"PGL(2,7)", PrimeSet({2, 3}), HallProperty::E, false,
                   "PGL(2,7) has no subgroup of order 48, although its composition"
                   " factors C2 and PSL(2,7) satisfy the factor-wise conditions"});
    return out;
  }();
  return facts;
}

}  // namespace hallmark::catalog
