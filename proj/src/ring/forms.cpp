#include <algorithm>

#include "comax/ring.hpp"

namespace comax {

std::vector<LocalFactor> local_factors(const Ring& r) {
  std::vector<Element> idempotents;
  for (std::size_t x = 1; x < r.size(); ++x)
    if (r.mul(element(x), element(x)) == element(x)) idempotents.push_back(element(x));

  std::vector<LocalFactor> out;
  for (Element e : idempotents) {
    // Primitive: no nonzero idempotent f ≠ e with fe = f.
    const bool primitive = std::none_of(idempotents.begin(), idempotents.end(),
                                        [&](Element f) { return f != e && r.mul(f, e) == f; });
    if (!primitive) continue;
    const Ideal& re = r.principal_ideals()[r.principal_id(e)];
    LocalFactor lf;
    lf.idempotent = e;
    lf.size = re.size();
    lf.radical_size = re.mask.intersection_count(r.radical().mask);
    lf.residue_field_size = lf.size / lf.radical_size;
    out.push_back(lf);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> spec_local_factor_sizes(const RingSpec& spec) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& base : spec.factors) {
    if (const auto* z = std::get_if<Zn>(&base)) {
      for (auto [p, e] : factorize(z->n)) {
        std::size_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) q *= p;
        out.emplace_back(q, q / p);
      }
    } else {
      const auto& g = std::get<GF>(base);
      std::size_t q = 1;
      for (std::uint32_t i = 0; i < g.k; ++i) q *= g.p;
      out.emplace_back(q, 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<Element, Element>> radical_primality_witness(const Ring& r) {
  std::vector<Element> outside;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (!r.in_radical(element(x))) outside.push_back(element(x));
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i; j < outside.size(); ++j)
      if (r.in_radical(r.mul(outside[i], outside[j]))) return std::make_pair(outside[i], outside[j]);
  return std::nullopt;
}

RingForm classify(const Ring& r) {
  RingForm f;
  const auto factors = local_factors(r);
  f.max_ideals = r.maximal_ideals().size();
  f.local_factor_count = factors.size();
  if (f.local_factor_count != f.max_ideals)
    throw InternalError("local factor count differs from |Max| for " + r.name());
  if (r.spec()) {
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (const auto& lf : factors) sizes.emplace_back(lf.size, lf.radical_size);
    std::sort(sizes.begin(), sizes.end());
    if (sizes != spec_local_factor_sizes(*r.spec()))
      throw InternalError("idempotent and spec local factorizations disagree for " + r.name());
  }
  const auto is_field = [](const LocalFactor& lf) { return lf.is_field(); };
  const auto has_size_two = [](const LocalFactor& lf) { return lf.size == 2; };

  f.local = f.max_ideals == 1;
  f.field = f.local && r.radical().size() == 1;
  f.local_times_local = factors.size() == 2;
  f.field_times_field = factors.size() == 2 && std::all_of(factors.begin(), factors.end(), is_field);
  f.z2_times_field = f.field_times_field && std::any_of(factors.begin(), factors.end(), has_size_two);
  f.z2_times_z2 = f.field_times_field && std::all_of(factors.begin(), factors.end(), has_size_two);
  f.z2_cubed = factors.size() == 3 && std::all_of(factors.begin(), factors.end(), [](const LocalFactor& lf) {
                 return lf.is_field() && lf.size == 2;
               });
  f.field_times_local = factors.size() == 2 && std::any_of(factors.begin(), factors.end(), is_field);
  f.radical_prime = !radical_primality_witness(r).has_value();
  return f;
}

}  // namespace comax
