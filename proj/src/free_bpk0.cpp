#include "pmalg/free_bpk0.hpp"

#include "pmalg/constructions.hpp"

namespace pmalg {

namespace {

BigNat binomial(int n, int i) {
  if (i < 0 || i > n) return 0;
  BigNat r = 1;
  for (int j = 1; j <= i; ++j) r = r * (n - j + 1) / j;
  return r;
}

// m (m-1) ... (m-k+1); zero once k exceeds m.
BigNat falling_factorial(const BigNat& m, int k) {
  BigNat r = 1;
  for (int j = 0; j < k; ++j) {
    if (m - j <= 0) return 0;
    r *= m - j;
  }
  return r;
}

BigNat pow_int(const BigNat& base, int exp) {
  BigNat r = 1;
  for (int j = 0; j < exp; ++j) r *= base;
  return r;
}

Algebra simple_of_type(int k) {
  if (k == 0) return build_si({1, 0});
  return build_si({k, 1});  // k = 1 yields the three-element Kleene chain
}

}  // namespace

const BigNat& CountTable::g(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("g is defined for n, k >= 0");
  auto it = g_.find({n, k});
  if (it != g_.end()) return it->second;
  BigNat value = falling_factorial(BigNat(1) << n, k);
  for (int i = 1; i <= n; ++i) value -= binomial(n, i) * g(n - i, k);
  return g_.emplace(std::make_pair(n, k), std::move(value)).first->second;
}

BigNat CountTable::f(int n, int k, int i) {
  if (i < 0 || i > n) throw DomainError("f requires 0 <= i <= n");
  return binomial(n, i) * g(n - i, k);
}

BigNat g_count(int n, int k) {
  CountTable t;
  return t.g(n, k);
}

BigNat f_count(int n, int k, int i) {
  CountTable t;
  return t.f(n, k, i);
}

BigNat surjection_count(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("surjection_count is defined for n, k >= 0");
  if (k == 0) return pow_int(2, n);
  if (k == 1) return pow_int(3, n) - pow_int(2, n);
  CountTable t;
  BigNat total = 0;
  for (int i = 0; i <= n; ++i) total += pow_int(2, n - i) * t.f(n, k, i);
  return total;
}

BigNat factor_multiplicity(int n, int k) {
  BigNat sur = surjection_count(n, k);
  if (k <= 1) return sur;
  BigNat fact = 1;
  for (int j = 2; j <= k; ++j) fact *= j;
  BigNat q, r;
  boost::multiprecision::divide_qr(sur, fact, q, r);
  if (r != 0)
    throw Error("internal consistency: " + std::to_string(k) +
                "! does not divide the surjection count for n = " + std::to_string(n));
  return q;
}

FreeDecomposition free_decomposition(int n) {
  if (n < 1) throw DomainError("free_decomposition requires n >= 1");
  FreeDecomposition d;
  d.generators = n;
  long long top = 1LL << n;
  for (long long k = 0; k <= top; ++k) {
    FreeFactor fac;
    fac.k = static_cast<int>(k);
    fac.multiplicity = factor_multiplicity(n, fac.k);
    fac.factor_size = (k == 0) ? 2 : (k == 1) ? 3 : (BigNat(1) << (k + 1)) - 1;
    d.factors.push_back(std::move(fac));
  }
  return d;
}

BigNat free_size(const FreeDecomposition& d) {
  BigNat total = 1;
  for (const FreeFactor& fac : d.factors) {
    if (fac.multiplicity > 1'000'000'000)
      throw CapError("free_size exponent too large to evaluate");
    BigNat p = pow_int(fac.factor_size, fac.multiplicity.convert_to<int>());
    total *= p;
  }
  return total;
}

BigNat free_size(int n) { return free_size(free_decomposition(n)); }

namespace {

// Counts completions of a prefix whose generated subuniverse is `closed`.
BigNat count_completions(const Algebra& a, const Bitset& closed, int remaining) {
  if (closed.count() == a.size()) return pow_int(a.size(), remaining);
  if (remaining == 0) return 0;
  BigNat total = 0;
  BigNat unchanged = 0;  // extending by an element already generated
  bool have_unchanged = false;
  for (int x = 0; x < a.size(); ++x) {
    if (closed.test(x)) {
      if (!have_unchanged) {
        unchanged = count_completions(a, closed, remaining - 1);
        have_unchanged = true;
      }
      total += unchanged;
    } else {
      Bitset s = closed;
      s.set(x);
      total += count_completions(a, subuniverse_closure(a, s), remaining - 1);
    }
  }
  return total;
}

}  // namespace

BigNat oracle_surjection_count(int n, int k, long long tuple_cap) {
  if (n < 0 || k < 0) throw DomainError("oracle requires n, k >= 0");
  Algebra a = simple_of_type(k);
  BigNat tuples = pow_int(a.size(), n);
  if (tuples > tuple_cap)
    throw CapError("oracle tuple space " + tuples.str() + " exceeds cap " +
                   std::to_string(tuple_cap));
  return count_completions(a, subuniverse_closure(a, Bitset(a.size())), n);
}

}  // namespace pmalg
