#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hallmark/errors.hpp"

namespace hallmark::arith {

using Int = std::int64_t;

/// Deterministic primality test (Miller–Rabin with the 64-bit witness set).
bool is_prime(Int n);

/// A sorted, duplicate-free set of primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<Int> primes);  // validates and sorts

  const std::vector<Int>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  bool contains(Int p) const;
  bool subset_of(const PrimeSet& other) const;

  PrimeSet intersect(const PrimeSet& other) const;
  PrimeSet unite(const PrimeSet& other) const;
  /// Set difference this \ other.
  PrimeSet minus(const PrimeSet& other) const;
  /// Complement within an explicit universe (never within all primes).
  PrimeSet complement_within(const PrimeSet& universe) const;

  bool operator==(const PrimeSet& other) const { return primes_ == other.primes_; }
  std::string to_string() const;  // {2,3,7}

 private:
  std::vector<Int> primes_;
};

struct Factorization {
  struct Term {
    Int prime;
    int exponent;
    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms;  // sorted by prime

  Int value() const;  // reassembles the integer
  PrimeSet spectrum() const;
  bool operator==(const Factorization&) const = default;
};

/// Exact factorization of n >= 1. Trial division below 10^6, then
/// deterministic Pollard rho. Throws DomainError for n < 1.
Factorization factorize(Int n);

/// pi(n): the set of prime divisors of n.
PrimeSet prime_spectrum(Int n);

/// n_pi: the largest divisor of n whose prime factors all lie in pi.
Int pi_part(Int n, const PrimeSet& pi);

/// e(q, r): multiplicative order of q modulo an odd prime r, with the
/// convention e(q, 2) = 1 if q = 1 (mod 4) and 2 if q = 3 (mod 4).
Int mult_order(Int q, Int r);

/// If p = 2^f - 1 is prime, returns f.
std::optional<int> mersenne_exponent(Int p);

struct Lemma21Solution {
  Int p;
  int k;
  int n;
  bool operator==(const Lemma21Solution&) const = default;
};

enum class Sign { Plus, Minus };

/// All (p, k, n) with p prime, k,n >= 1, p^k <= bound and p^k + 1 = 2^n
/// (Plus) or p^k - 1 = 2^n (Minus). Exhaustive over the range.
std::vector<Lemma21Solution> solve_lemma21(Sign sign, Int bound);

struct Lemma22Solution {
  Int k;
  int n;
  bool operator==(const Lemma22Solution&) const = default;
};

/// All (k, n) with 1 <= k <= bound and k^2 + k + 1 = 3^n (Plus) or
/// k^2 - k + 1 = 3^n (Minus).
std::vector<Lemma22Solution> solve_lemma22(Sign sign, Int bound);

// Congruence predicates used by the classification criteria.
bool q_mod9_in_4_7(Int q);      // q = 4 or 7 (mod 9)
bool f_mod6_pm1(Int f);         // f = +-1 (mod 6)
bool f_mod6_eq5(Int f);         // f = 5 (mod 6)
bool q_mod12_eq7(Int q);        // q = 7 (mod 12)
bool q_odd_power_of_3(Int q);   // q = 3^f > 3 with f odd

struct CongruenceFlags {
  bool q_mod9_in_4_7;
  bool f_mod6_pm1;
  bool f_mod6_eq5;
  bool q_mod12_eq7;
  bool q_odd_power_of_3;
};
CongruenceFlags congruence_predicates(Int value);

/// If q = p^f for a prime p and f >= 1, returns (p, f).
std::optional<std::pair<Int, int>> prime_power(Int q);

Int gcd(Int a, Int b);
Int pow_int(Int base, int exp);      // throws DomainError on 64-bit overflow
Int pow_mod(Int base, Int exp, Int mod);

}  // namespace hallmark::arith
