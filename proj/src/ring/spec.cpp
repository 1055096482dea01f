#include <sstream>
#include <string>

#include "comax/ring.hpp"

namespace comax {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string to_string(const BaseSpec& base) {
  return std::visit(Overloaded{[](const Zn& z) { return "Z" + std::to_string(z.n); },
                               [](const GF& g) {
                                 std::uint64_t q = 1;
                                 for (std::uint32_t i = 0; i < g.k; ++i) q *= g.p;
                                 return "GF(" + std::to_string(q) + ")";
                               }},
                    base);
}

std::string to_string(const RingSpec& spec) {
  std::ostringstream out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i) out << " x ";
    out << to_string(spec.factors[i]);
  }
  return out.str();
}

std::size_t validate(const RingSpec& spec, const RingLimits& limits) {
  if (spec.factors.empty()) throw RingError("ring spec has no factors");
  std::uint64_t total = 1;
  for (const auto& base : spec.factors) {
    std::uint64_t size = 0;
    if (const auto* z = std::get_if<Zn>(&base)) {
      if (z->n < 2) throw RingError("Z" + std::to_string(z->n) + ": modulus must be at least 2");
      size = z->n;
    } else {
      const auto& g = std::get<GF>(base);
      if (!is_prime(g.p)) throw RingError("GF: characteristic " + std::to_string(g.p) + " is not prime");
      if (g.k < 1) throw RingError("GF: degree must be at least 1");
      size = 1;
      for (std::uint32_t i = 0; i < g.k; ++i) {
        size *= g.p;
        if (size > limits.max_size)
          throw GuardExceeded("GF(" + std::to_string(g.p) + "^" + std::to_string(g.k) + ") exceeds the size cap " +
                          std::to_string(limits.max_size));
      }
    }
    total *= size;
    if (total > limits.max_size)
      throw GuardExceeded("ring " + to_string(spec) + " exceeds the size cap " + std::to_string(limits.max_size));
  }
  return static_cast<std::size_t>(total);
}

}  // namespace comax
