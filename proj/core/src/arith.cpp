#include "hallmark/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

namespace hallmark::arith {

namespace {

using U128 = unsigned __int128;

Int mul_mod(Int a, Int b, Int m) {
  return static_cast<Int>(static_cast<U128>(a) * static_cast<U128>(b) % static_cast<U128>(m));
}

constexpr Int kTrialDivisionLimit = 1'000'000;

}  // namespace

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int pow_mod(Int base, Int exp, Int mod) {
  if (mod <= 0) throw DomainError("pow_mod: modulus must be positive");
  Int result = 1;
  Int b = base % mod;
  if (b < 0) b += mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, mod);
    b = mul_mod(b, b, mod);
    exp >>= 1;
  }
  return result;
}

Int pow_int(Int base, int exp) {
  Int result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<Int>::max() / std::abs(base))
      throw DomainError("pow_int: 64-bit overflow");
    result *= base;
  }
  return result;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for all 64-bit inputs with this witness set.
  Int d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (Int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeSet::PrimeSet(std::vector<Int> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (Int p : primes_) {
    if (!is_prime(p)) {
      throw DomainError("PrimeSet: " + std::to_string(p) + " is not prime");
    }
  }
}

bool PrimeSet::contains(Int p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::subset_of(const PrimeSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(),
                       primes_.end());
}

PrimeSet PrimeSet::intersect(const PrimeSet& other) const {
  PrimeSet out;
  std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(),
                        other.primes_.end(), std::back_inserter(out.primes_));
  return out;
}

PrimeSet PrimeSet::unite(const PrimeSet& other) const {
  PrimeSet out;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(),
                 other.primes_.end(), std::back_inserter(out.primes_));
  return out;
}

PrimeSet PrimeSet::minus(const PrimeSet& other) const {
  PrimeSet out;
  std::set_difference(primes_.begin(), primes_.end(), other.primes_.begin(),
                      other.primes_.end(), std::back_inserter(out.primes_));
  return out;
}

PrimeSet PrimeSet::complement_within(const PrimeSet& universe) const {
  return universe.minus(*this);
}

std::string PrimeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) os << ',';
    os << primes_[i];
  }
  os << '}';
  return os.str();
}

Int Factorization::value() const {
  Int n = 1;
  for (const Term& t : terms) n *= pow_int(t.prime, t.exponent);
  return n;
}

PrimeSet Factorization::spectrum() const {
  std::vector<Int> ps;
  ps.reserve(terms.size());
  for (const Term& t : terms) ps.push_back(t.prime);
  return PrimeSet(std::move(ps));
}

namespace {

// Pollard rho with a fixed polynomial x^2 + c and deterministic restarts.
Int pollard_rho(Int n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mul_mod(x, x, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      d = std::gcd(std::abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::vector<Int>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

Factorization factorize(Int n) {
  if (n < 1) throw DomainError("factorize: argument must be >= 1");
  Factorization f;
  for (Int p = 2; p <= kTrialDivisionLimit && p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.terms.push_back({p, e});
    }
  }
  if (n > 1) {
    std::vector<Int> rest;
    factor_into(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      f.terms.push_back({rest[i], static_cast<int>(j - i)});
      i = j;
    }
  }
  return f;
}

PrimeSet prime_spectrum(Int n) { return factorize(n).spectrum(); }

Int pi_part(Int n, const PrimeSet& pi) {
  Int part = 1;
  for (const auto& t : factorize(n).terms) {
    if (pi.contains(t.prime)) part *= pow_int(t.prime, t.exponent);
  }
  return part;
}

Int mult_order(Int q, Int r) {
  if (r == 2) {
    if (q % 2 == 0) throw DomainError("mult_order: q must be odd when r = 2");
    return (q % 4 == 1) ? 1 : 2;
  }
  if (r < 2 || !is_prime(r)) throw DomainError("mult_order: r must be prime");
  if (q % r == 0) throw DomainError("mult_order: q and r must be coprime");
  // The order divides r - 1; take the minimal divisor d with q^d = 1.
  Int best = r - 1;
  for (Int d = 1; d * d <= r - 1; ++d) {
    if ((r - 1) % d != 0) continue;
    if (d < best && pow_mod(q, d, r) == 1) best = d;
    Int e = (r - 1) / d;
    if (e < best && pow_mod(q, e, r) == 1) best = e;
  }
  return best;
}

std::optional<int> mersenne_exponent(Int p) {
  if (p < 3 || !is_prime(p)) return std::nullopt;
  Int m = p + 1;  // must be a power of two
  if ((m & (m - 1)) != 0) return std::nullopt;
  int f = 0;
  while (m > 1) {
    m >>= 1;
    ++f;
  }
  return f;
}

std::vector<Lemma21Solution> solve_lemma21(Sign sign, Int bound) {
  if (bound > (Int{1} << 40)) throw DomainError("solve_lemma21: bound above 2^40");
  std::vector<Lemma21Solution> out;
  // Walk powers of two; test whether 2^n -+ 1 is a prime power p^k <= bound.
  for (int n = 1;; ++n) {
    Int two_n = Int{1} << n;
    Int x = (sign == Sign::Plus) ? two_n - 1 : two_n + 1;
    if (x > bound) {
      if (two_n - 1 > bound) break;
      continue;
    }
    if (x < 2) continue;
    auto f = factorize(x);
    if (f.terms.size() == 1) {
      out.push_back({f.terms[0].prime, f.terms[0].exponent, n});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.p, a.k, a.n) < std::make_tuple(b.p, b.k, b.n);
  });
  return out;
}

std::vector<Lemma22Solution> solve_lemma22(Sign sign, Int bound) {
  if (bound > (Int{1} << 40)) throw DomainError("solve_lemma22: bound above 2^40");
  std::vector<Lemma22Solution> out;
  for (Int k = 1; k <= bound; ++k) {
    U128 v = (sign == Sign::Plus)
                 ? static_cast<U128>(k) * k + k + 1
                 : static_cast<U128>(k) * k - k + 1;
    int n = 0;
    while (v % 3 == 0) {
      v /= 3;
      ++n;
    }
    if (v == 1 && n >= 1) out.push_back({k, n});
  }
  return out;
}

bool q_mod9_in_4_7(Int q) { return q % 9 == 4 || q % 9 == 7; }
bool f_mod6_pm1(Int f) { return f % 6 == 1 || f % 6 == 5; }
bool f_mod6_eq5(Int f) { return f % 6 == 5; }
bool q_mod12_eq7(Int q) { return q % 12 == 7; }

bool q_odd_power_of_3(Int q) {
  if (q <= 3) return false;
  int f = 0;
  while (q % 3 == 0) {
    q /= 3;
    ++f;
  }
  return q == 1 && f % 2 == 1;
}

CongruenceFlags congruence_predicates(Int value) {
  if (value < 1) throw DomainError("congruence_predicates: argument must be >= 1");
  return {q_mod9_in_4_7(value), f_mod6_pm1(value), f_mod6_eq5(value),
          q_mod12_eq7(value), q_odd_power_of_3(value)};
}

std::optional<std::pair<Int, int>> prime_power(Int q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.terms.size() != 1) return std::nullopt;
  return std::make_pair(f.terms[0].prime, f.terms[0].exponent);
}

}  // namespace hallmark::arith
