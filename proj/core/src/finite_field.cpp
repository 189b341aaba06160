#include <algorithm>
#include <vector>

#include "hallmark/catalog.hpp"

namespace hallmark::catalog {

namespace {

using Poly = std::vector<Int>;  // coefficients low-to-high, over GF(p)

Poly decode(Int x, Int p) {
  Poly c;
  while (x > 0) {
    c.push_back(x % p);
    x /= p;
  }
  return c;
}

Int encode(const Poly& c, Int p) {
  Int x = 0;
  for (std::size_t i = c.size(); i > 0; --i) x = x * p + c[i - 1];
  return x;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, Int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

// Remainder of a modulo a monic divisor.
Poly poly_mod(Poly a, const Poly& m, Int p) {
  trim(a);
  while (a.size() >= m.size()) {
    Int lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, Int p) { return poly_mod(a, d, p).empty(); }

bool is_irreducible(const Poly& m, Int p) {
  // Trial division by every monic polynomial of degree up to deg(m)/2.
  int deg = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    Int count = 1;
    for (int i = 0; i < d; ++i) count *= p;  // p^d monic candidates
    for (Int low = 0; low < count; ++low) {
      Poly cand = decode(low, p);
      cand.resize(d + 1, 0);
      cand[d] = 1;
      if (divides(cand, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField FiniteField::make(Int p, int f) {
  if (!arith::is_prime(p)) throw DomainError("FiniteField: characteristic must be prime");
  if (f < 1) throw DomainError("FiniteField: degree must be >= 1");
  Int size = 1;
  for (int i = 0; i < f; ++i) {
    size *= p;
    if (size > (Int{1} << 20)) throw DomainError("FiniteField: p^f above 2^20");
  }

  FiniteField field;
  field.p_ = p;
  field.f_ = f;
  field.size_ = size;

  // Least monic irreducible of degree f, ordered by the encoding of the
  // lower coefficients.
  bool found = false;
  for (Int low = 0; low < size && !found; ++low) {
    Poly cand = decode(low, p);
    cand.resize(f + 1, 0);
    cand[f] = 1;
    if (is_irreducible(cand, p)) {
      field.modulus_ = cand;
      found = true;
    }
  }
  if (!found) throw DomainError("FiniteField: no irreducible modulus found");

  // Least multiplicative generator; doubles as the cyclicity check.
  auto factors = arith::factorize(size - 1);
  for (Int g = (size == 2 ? 1 : 2); g < size; ++g) {
    bool ok = true;
    for (const auto& term : factors.terms) {
      if (field.pow(g, (size - 1) / term.prime) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      field.generator_ = g;
      return field;
    }
  }
  throw DomainError("FiniteField: multiplicative group is not cyclic");
}

Int FiniteField::add(Int a, Int b) const {
  Poly pa = decode(a, p_), pb = decode(b, p_);
  pa.resize(std::max(pa.size(), pb.size()), 0);
  for (std::size_t i = 0; i < pb.size(); ++i) pa[i] = (pa[i] + pb[i]) % p_;
  trim(pa);
  return encode(pa, p_);
}

Int FiniteField::neg(Int a) const {
  Poly pa = decode(a, p_);
  for (Int& c : pa) c = (p_ - c) % p_;
  trim(pa);
  return encode(pa, p_);
}

Int FiniteField::sub(Int a, Int b) const { return add(a, neg(b)); }

Int FiniteField::mul(Int a, Int b) const {
  Poly prod = poly_mul(decode(a, p_), decode(b, p_), p_);
  return encode(poly_mod(std::move(prod), modulus_, p_), p_);
}

Int FiniteField::pow(Int a, Int e) const {
  if (e < 0) return pow(inverse(a), -e);
  Int result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Int FiniteField::inverse(Int a) const {
  if (a == 0) throw DomainError("FiniteField: zero has no inverse");
  return pow(a, size_ - 2);
}

}  // namespace hallmark::catalog
