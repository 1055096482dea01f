#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ring_data.hpp"

namespace comax {

namespace {

constexpr std::size_t kTableLimit = 1024;
constexpr std::size_t kExhaustiveCheckLimit = 512;

Ideal ideal_from_mask(Bitset mask, std::vector<Element> generators) {
  Ideal ideal;
  for (std::size_t i : mask.indices()) ideal.members.push_back(element(i));
  ideal.generators = std::move(generators);
  ideal.mask = std::move(mask);
  return ideal;
}

// I + J as a union of additive cosets of I.
Bitset sum_mask(const Ring& r, const std::vector<Element>& a_members, const Bitset& a_mask,
                const std::vector<Element>& b_members) {
  Bitset out = a_mask;
  for (Element b : b_members) {
    if (out.test(index_of(b))) continue;
    for (Element a : a_members) out.set(index_of(r.add(a, b)));
  }
  return out;
}

bool size_then_lex_less(const Ideal& a, const Ideal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lexicographic_less(a, b);
}

}  // namespace

bool lexicographic_less(const Ideal& a, const Ideal& b) {
  return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(), b.members.end());
}

std::size_t SSignature::count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::string SSignature::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < width_; ++i) {
    if (!test(i)) continue;
    if (!first) out += ",";
    out += "m" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

// ---- Ring accessors ----

std::size_t Ring::size() const { return data_->size; }
Element Ring::one() const { return element(data_->one); }

Element Ring::add(Element a, Element b) const {
  const auto& d = *data_;
  if (!d.add_table.empty()) return element(d.add_table[index_of(a) * d.size + index_of(b)]);
  return element(d.arith->add(index_of(a), index_of(b)));
}

Element Ring::mul(Element a, Element b) const {
  const auto& d = *data_;
  if (!d.mul_table.empty()) return element(d.mul_table[index_of(a) * d.size + index_of(b)]);
  return element(d.arith->mul(index_of(a), index_of(b)));
}

Element Ring::neg(Element a) const {
  const auto& d = *data_;
  if (!d.neg_table.empty()) return element(d.neg_table[index_of(a)]);
  return element(d.arith->neg(index_of(a)));
}

Element Ring::arith(Element a, Element b, ArithOp op) const {
  if (index_of(a) >= size() || (op != ArithOp::neg && index_of(b) >= size()))
    throw RingError("element index out of range for " + name());
  switch (op) {
    case ArithOp::add:
      return add(a, b);
    case ArithOp::mul:
      return mul(a, b);
    case ArithOp::neg:
      return neg(a);
    case ArithOp::sub:
      return sub(a, b);
  }
  throw RingError("unknown arithmetic operation");
}

std::string Ring::name() const { return data_->arith->name(); }
std::string Ring::element_name(Element e) const { return data_->arith->element_name(index_of(e)); }

const std::optional<RingSpec>& Ring::spec() const { return data_->spec; }
const std::vector<FactorInfo>& Ring::factors() const { return data_->factors; }

std::vector<std::uint32_t> Ring::decode(Element e) const {
  const auto& d = *data_;
  if (!d.spec) throw RingError("decode: " + name() + " is not a product ring");
  if (index_of(e) >= d.size) throw RingError("decode: element index out of range");
  std::vector<std::uint32_t> out(d.factors.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (index_of(e) / d.place_values[i]) % d.factors[i].size;
  return out;
}

Element Ring::encode(std::span<const std::uint32_t> components) const {
  const auto& d = *data_;
  if (!d.spec) throw RingError("encode: " + name() + " is not a product ring");
  if (components.size() != d.factors.size()) throw RingError("encode: wrong number of components");
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i] >= d.factors[i].size) throw RingError("encode: component out of range");
    index += components[i] * d.place_values[i];
  }
  return element(index);
}

const Ring* Ring::parent() const { return data_->parent ? &*data_->parent : nullptr; }

Element Ring::representative(Element e) const {
  if (!data_->parent) return e;
  return data_->representatives.at(index_of(e));
}

Element Ring::coset_of(Element parent_element) const {
  if (!data_->parent) return parent_element;
  return data_->coset_of.at(index_of(parent_element));
}

const std::vector<Element>& Ring::units() const { return data_->units; }
const Bitset& Ring::unit_mask() const { return data_->unit_mask; }
const Ideal& Ring::radical() const { return data_->radical; }
const std::vector<Ideal>& Ring::ideals() const { return data_->ideals; }
const std::vector<Ideal>& Ring::maximal_ideals() const { return data_->maximal; }
const std::vector<Ideal>& Ring::principal_ideals() const { return data_->principal; }
std::size_t Ring::principal_id(Element x) const { return data_->principal_id.at(index_of(x)); }
SSignature Ring::signature(Element x) const { return data_->signatures.at(index_of(x)); }
const RingLimits& Ring::limits() const { return data_->limits; }

// ---- construction ----

namespace detail {

void populate(RingData& d) {
  const auto& arith = *d.arith;
  d.size = arith.size();
  d.one = arith.one();
  const std::size_t n = d.size;

  if (n <= kTableLimit) {
    d.add_table.resize(n * n);
    d.mul_table.resize(n * n);
    d.neg_table.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
      d.neg_table[a] = static_cast<std::uint16_t>(arith.neg(a));
      for (std::uint32_t b = 0; b < n; ++b) {
        d.add_table[a * n + b] = static_cast<std::uint16_t>(arith.add(a, b));
        d.mul_table[a * n + b] = static_cast<std::uint16_t>(arith.mul(a, b));
      }
    }
  }
  const Ring ring{std::shared_ptr<const RingData>(&d, [](const RingData*) {})};

  // Principal ideals Rx.
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> seen;
  std::vector<Bitset> masks;
  std::vector<Element> first_generator;
  std::vector<std::uint32_t> raw_id(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    Bitset m(n);
    for (std::uint32_t r = 0; r < n; ++r) m.set(index_of(ring.mul(element(r), element(x))));
    auto [it, inserted] = seen.emplace(std::move(m), static_cast<std::uint32_t>(masks.size()));
    if (inserted) {
      masks.push_back(it->first);
      first_generator.push_back(element(x));
    }
    raw_id[x] = it->second;
  }
  std::vector<Ideal> principal;
  for (std::size_t i = 0; i < masks.size(); ++i) principal.push_back(ideal_from_mask(masks[i], {first_generator[i]}));
  std::vector<std::uint32_t> order(principal.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return lexicographic_less(principal[a], principal[b]); });
  std::vector<std::uint32_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<std::uint32_t>(i);
    d.principal.push_back(principal[order[i]]);
  }
  d.principal_id.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) d.principal_id[x] = rank[raw_id[x]];

  // Units: 1 ∈ Rx, i.e. an inverse exists.
  d.unit_mask = Bitset(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (d.principal[d.principal_id[x]].mask.test(d.one)) {
      d.unit_mask.set(x);
      d.units.push_back(element(x));
    }
  }
  if (d.spec) {
    // Componentwise criterion: every component is a unit of its base ring.
    for (std::uint32_t x = 0; x < n; ++x) {
      bool unit = true;
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        const std::uint32_t c = (x / d.place_values[i]) % d.factors[i].size;
        if (const auto* z = std::get_if<Zn>(&d.factors[i].base)) {
          unit = unit && std::gcd(c, z->n) == 1;
        } else {
          unit = unit && c != 0;
        }
      }
      if (unit != d.unit_mask.test(x)) throw InternalError("unit criteria disagree for " + ring.name());
    }
  }

  d.ideals = compute_all_ideals(ring);
  std::sort(d.ideals.begin(), d.ideals.end(), size_then_lex_less);

  Bitset full(n);
  full.set_all();
  for (std::size_t i = 0; i < d.ideals.size(); ++i) {
    const Ideal& a = d.ideals[i];
    if (a.mask == full) continue;
    bool maximal = true;
    for (std::size_t j = i + 1; j < d.ideals.size() && maximal; ++j) {
      const Ideal& b = d.ideals[j];
      if (b.mask != full && b.size() > a.size() && a.is_subset_of(b)) maximal = false;
    }
    if (maximal) d.maximal.push_back(a);
  }
  std::sort(d.maximal.begin(), d.maximal.end(), lexicographic_less);
  if (d.maximal.empty() || d.maximal.size() > 64) throw InternalError("unexpected maximal ideal count");

  if (d.spec) {
    const auto structural = structural_maximal_ideals(ring);
    bool same = structural.size() == d.maximal.size();
    for (std::size_t i = 0; same && i < structural.size(); ++i) same = structural[i].mask == d.maximal[i].mask;
    if (!same) throw InternalError("lattice and structural maximal ideals disagree for " + ring.name());
  }

  Bitset radical = full;
  for (const auto& m : d.maximal) radical &= m.mask;
  d.radical = ideal_from_mask(radical, {});
  d.radical.generators = d.radical.members;

  if (n <= kExhaustiveCheckLimit) {
    // J(R) = { x : 1 + rx is a unit for every r }.
    for (std::uint32_t x = 0; x < n; ++x) {
      bool quasi_regular = true;
      for (std::uint32_t r = 0; r < n && quasi_regular; ++r)
        quasi_regular = d.unit_mask.test(index_of(ring.add(ring.one(), ring.mul(element(r), element(x)))));
      if (quasi_regular != radical.test(x)) throw InternalError("radical criteria disagree for " + ring.name());
    }
  }

  d.signatures.resize(n);
  const std::size_t width = d.maximal.size();
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < width; ++i)
      if (d.maximal[i].mask.test(x)) bits |= std::uint64_t{1} << i;
    d.signatures[x] = SSignature(bits, width);
  }
}

}  // namespace detail

Ring make_ring(const RingSpec& spec, const RingLimits& limits) {
  validate(spec, limits);
  auto data = std::make_shared<detail::RingData>();
  data->limits = limits;
  data->spec = spec;
  data->arith = detail::make_product_arithmetic(spec, data->factors, data->place_values);
  detail::populate(*data);
  return Ring(std::move(data));
}

// ---- ideal operations ----

Ideal principal_ideal(const Ring& r, Element x) {
  if (index_of(x) >= r.size()) throw RingError("principal_ideal: element index out of range");
  Ideal out = r.principal_ideals()[r.principal_id(x)];
  out.generators = {x};
  return out;
}

Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b) {
  Ideal out = ideal_from_mask(sum_mask(r, a.members, a.mask, b.members), a.generators);
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  return out;
}

Ideal zero_ideal(const Ring& r) {
  Bitset m(r.size());
  m.set(0);
  return ideal_from_mask(std::move(m), {r.zero()});
}

Ideal whole_ring(const Ring& r) {
  Bitset m(r.size());
  m.set_all();
  return ideal_from_mask(std::move(m), {r.one()});
}

Ideal ideal_generated_by(const Ring& r, std::span<const Element> generators) {
  Ideal out = zero_ideal(r);
  out.generators.clear();
  for (Element g : generators) out = ideal_sum(r, out, principal_ideal(r, g));
  if (generators.empty()) out.generators = {r.zero()};
  return out;
}

std::vector<Ideal> compute_all_ideals(const Ring& r) {
  const auto& principal = r.principal_ideals();
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Ideal> ideals;
  auto guard = [&] {
    if (ideals.size() > r.limits().max_ideals)
      throw GuardExceeded("ideal lattice of " + r.name() + " exceeds " + std::to_string(r.limits().max_ideals));
  };
  for (const auto& p : principal) {
    seen.insert(p.mask);
    ideals.push_back(p);
  }
  guard();
  // Every ideal of a finite ring is a finite sum of principal ideals, so
  // closing under "+ principal" reaches the whole lattice.
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (const auto& p : principal) {
      if (p.is_subset_of(ideals[i])) continue;
      Bitset s = sum_mask(r, ideals[i].members, ideals[i].mask, p.members);
      if (seen.contains(s)) continue;
      seen.insert(s);
      auto gens = ideals[i].generators;
      gens.push_back(p.generators.front());
      ideals.push_back(ideal_from_mask(std::move(s), std::move(gens)));
      guard();
    }
  }
  return ideals;
}

const std::vector<Ideal>& all_ideals(const Ring& r) { return r.ideals(); }
const std::vector<Ideal>& maximal_ideals(const Ring& r) { return r.maximal_ideals(); }
const Ideal& jacobson_radical(const Ring& r) { return r.radical(); }
const std::vector<Element>& units(const Ring& r) { return r.units(); }

SSignature s_signature(const Ring& r, Element x) {
  if (index_of(x) >= r.size()) throw RingError("s_signature: element index out of range");
  return r.signature(x);
}

std::vector<Ideal> structural_maximal_ideals(const Ring& r) {
  std::vector<Ideal> out;
  if (!r.spec()) return out;
  const auto& factors = r.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::uint32_t> primes;
    if (const auto* z = std::get_if<Zn>(&factors[i].base)) {
      for (auto [p, e] : factorize(z->n)) primes.push_back(p);
    } else {
      primes.push_back(0);  // the zero ideal of a field
    }
    for (std::uint32_t p : primes) {
      Bitset m(r.size());
      for (std::size_t x = 0; x < r.size(); ++x) {
        const std::uint32_t c = r.decode(element(x))[i];
        if (p == 0 ? c == 0 : c % p == 0) m.set(x);
      }
      out.push_back(ideal_from_mask(std::move(m), {}));
    }
  }
  std::sort(out.begin(), out.end(), lexicographic_less);
  return out;
}

bool sum_contains_one(const Ring& r, const Ideal& a, const Ideal& b) {
  for (Element m : a.members)
    if (b.contains(r.sub(r.one(), m))) return true;
  return false;
}

bool is_comaximal(const Ring& r, Element x, Element y) {
  if (index_of(x) >= r.size() || index_of(y) >= r.size()) throw RingError("is_comaximal: element index out of range");
  const bool by_sum =
      sum_contains_one(r, r.principal_ideals()[r.principal_id(x)], r.principal_ideals()[r.principal_id(y)]);
  const bool by_signature = r.signature(x).disjoint(r.signature(y));
  if (by_sum != by_signature)
    throw InternalError("co-maximality criteria disagree on (" + r.element_name(x) + ", " + r.element_name(y) +
                        ") in " + r.name());
  return by_sum;
}

Ring quotient_ring(const Ring& r, const Ideal& ideal) {
  if (ideal.mask.size() != r.size()) throw RingError("quotient_ring: ideal belongs to a different ring");
  if (!ideal.is_subset_of(r.radical()))
    throw RingError("quotient_ring: ideal is not contained in the Jacobson radical");
  const std::size_t n = r.size();
  std::vector<Element> reps;
  std::vector<Element> coset_of(n);
  Bitset assigned(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned.test(x)) continue;
    const Element index = element(reps.size());
    reps.push_back(element(x));
    for (Element i : ideal.members) {
      const Element y = r.add(element(x), i);
      assigned.set(index_of(y));
      coset_of[index_of(y)] = index;
    }
  }
  std::string name;
  if (ideal == r.radical()) {
    name = "(" + r.name() + ")/J";
  } else if (ideal.size() == 1) {
    name = "(" + r.name() + ")/0";
  } else {
    name = "(" + r.name() + ")/{";
    for (std::size_t i = 0; i < ideal.members.size(); ++i) name += (i ? "," : "") + r.element_name(ideal.members[i]);
    name += "}";
  }
  auto data = std::make_shared<detail::RingData>();
  data->limits = r.limits();
  data->parent = r;
  data->representatives = reps;
  data->coset_of = coset_of;
  data->arith = detail::make_quotient_arithmetic(r, std::move(reps), std::move(coset_of), std::move(name));
  detail::populate(*data);
  return Ring(std::move(data));
}

StableRange stable_range_one(const Ring& r) {
  const auto& principal = r.principal_ideals();
  const std::size_t k = principal.size();
  std::vector<char> comax(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) comax[a * k + b] = sum_contains_one(r, principal[a], principal[b]);
  StableRange out;
  for (std::size_t x = 0; x < r.size(); ++x) {
    const std::size_t px = r.principal_id(element(x));
    for (std::size_t p = 0; p < k; ++p) {
      if (!comax[px * k + p]) continue;
      // {x + ty : t ∈ R} is the coset x + Ry.
      bool hit = false;
      for (Element m : principal[p].members) {
        if (r.is_unit(r.add(element(x), m))) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        out.holds = false;
        out.violation = std::make_pair(element(x), principal[p].generators.front());
        return out;
      }
    }
  }
  return out;
}

}  // namespace comax
