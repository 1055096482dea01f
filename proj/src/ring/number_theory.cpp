#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "comax/ring.hpp"

namespace comax {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    std::uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(static_cast<std::uint32_t>(d), e);
  }
  if (n > 1) out.emplace_back(static_cast<std::uint32_t>(n), 1);
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if ((static_cast<std::uint64_t>(a) * x) % p == 1) return x;
  return 0;
}

// Remainder of a modulo b over Z_p; b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint32_t factor = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.back()) * lead_inv) % p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = (static_cast<std::uint64_t>(factor) * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly monic_from_code(std::uint64_t code, std::uint32_t p, std::uint32_t degree) {
  Poly poly(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    poly[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  poly[degree] = 1;
  return poly;
}

}  // namespace

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p) || k == 0) throw RingError("least_irreducible: need prime p and k >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  // Candidates in increasing order of their coefficient code, which matches
  // lexicographic order read from the highest non-leading coefficient down.
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = monic_from_code(code, p, k);
    bool irreducible = true;
    for (std::uint32_t d = 1; irreducible && 2 * d <= k; ++d) {
      std::uint64_t divisors = 1;
      for (std::uint32_t i = 0; i < d; ++i) divisors *= p;
      for (std::uint64_t dc = 0; dc < divisors; ++dc) {
        if (poly_mod(f, monic_from_code(dc, p, d), p).empty()) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

}  // namespace comax
