#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "comax/ring.hpp"

namespace comax::detail {

struct RingData {
  std::shared_ptr<const Arithmetic> arith;
  std::size_t size = 0;
  std::uint32_t one = 0;
  RingLimits limits;

  // Full operation tables for small rings; empty otherwise.
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint16_t> neg_table;

  std::optional<RingSpec> spec;
  std::vector<FactorInfo> factors;
  std::vector<std::uint32_t> place_values;  // mixed-radix weights, first factor most significant

  std::optional<Ring> parent;
  std::vector<Element> representatives;
  std::vector<Element> coset_of;

  std::vector<Element> units;
  Bitset unit_mask;
  std::vector<Ideal> principal;
  std::vector<std::uint32_t> principal_id;
  std::vector<Ideal> ideals;
  std::vector<Ideal> maximal;
  Ideal radical;
  std::vector<SSignature> signatures;
};

std::shared_ptr<const Arithmetic> make_product_arithmetic(const RingSpec& spec, std::vector<FactorInfo>& factors,
                                                          std::vector<std::uint32_t>& place_values);
std::shared_ptr<const Arithmetic> make_quotient_arithmetic(const Ring& parent, std::vector<Element> representatives,
                                                           std::vector<Element> coset_of, std::string name);

// Fills tables and every cache from `arith`, running the internal
// cross-checks. Throws InternalError on disagreement.
void populate(RingData& data);

}  // namespace comax::detail
