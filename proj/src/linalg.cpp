#include "raag/linalg.hpp"

#include <cctype>
#include <cstdlib>
#include <random>

namespace raag {

std::size_t default_memory_limit() {
  constexpr std::size_t fallback = std::size_t{2} << 30;
  const char* env = std::getenv("RAAG_MEMORY_LIMIT");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const unsigned long long base = std::strtoull(env, &end, 10);
  if (end == env) return fallback;
  std::size_t scale = 1;
  switch (std::toupper(static_cast<unsigned char>(*end))) {
    case 'K':
      scale = std::size_t{1} << 10;
      break;
    case 'M':
      scale = std::size_t{1} << 20;
      break;
    case 'G':
      scale = std::size_t{1} << 30;
      break;
    default:
      break;
  }
  return static_cast<std::size_t>(base) * scale;
}

ModPrimeField::value ModPrimeField::from_rational(const mpq_class& q) const {
  const mpz_class p(std::to_string(p_));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0)
    throw InternalError("denominator divisible by the modular prime");
  const value n = std::stoull(num.get_str());
  const value d = std::stoull(den.get_str());
  return mul(n, inv(d));
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
    if (n % small == 0) return n == small;
  // Deterministic Miller-Rabin for 64-bit inputs.
  ModPrimeField f(n);
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = f.pow(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = f.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 61,
                                                    (std::uint64_t{1} << 62) - 1);
  for (;;) {
    const std::uint64_t c = dist(rng) | 1U;
    if (is_prime(c)) return c;
  }
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> random_prime_pair() {
  std::random_device rd;
  std::mt19937_64 rng((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
  const std::uint64_t a = random_prime(rng);
  std::uint64_t b = random_prime(rng);
  while (b == a) b = random_prime(rng);
  return {a, b};
}

}  // namespace raag
