#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "comax/bitset.hpp"

namespace comax {

// Invalid ring description or violated operation precondition.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size guard was hit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagreed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Zn {
  std::uint32_t n = 2;
  friend bool operator==(const Zn&, const Zn&) = default;
};

struct GF {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  friend bool operator==(const GF&, const GF&) = default;
};

using BaseSpec = std::variant<Zn, GF>;

struct RingSpec {
  std::vector<BaseSpec> factors;
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

std::string to_string(const BaseSpec& base);
// Canonical text form, e.g. "Z2 x GF(4)". Parses back to the same spec.
std::string to_string(const RingSpec& spec);

struct RingLimits {
  std::size_t max_size = 4096;
  std::size_t max_ideals = 100000;
};

// Checks factor validity and the size cap; returns the total size.
std::size_t validate(const RingSpec& spec, const RingLimits& limits = {});

bool is_prime(std::uint64_t n);
// n = p^k with p prime, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n);
// Prime-power factorization in increasing prime order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint64_t n);

// Lexicographically least monic irreducible polynomial of degree k over Z_p,
// coefficients low-to-high, leading 1 included.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k);

// Mixed-radix element index; first factor is the most significant digit.
enum class Element : std::uint32_t {};

constexpr std::uint32_t index_of(Element e) { return static_cast<std::uint32_t>(e); }
constexpr Element element(std::size_t i) { return static_cast<Element>(i); }

enum class ArithOp { add, mul, neg, sub };

struct Ideal {
  std::vector<Element> members;  // sorted by index
  std::vector<Element> generators;
  Bitset mask;

  std::size_t size() const { return members.size(); }
  bool contains(Element e) const { return mask.test(index_of(e)); }
  bool is_subset_of(const Ideal& o) const { return mask.is_subset_of(o.mask); }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.mask == b.mask; }
};

// Member-lexicographic order used for every ideal listing.
bool lexicographic_less(const Ideal& a, const Ideal& b);

// Set of maximal ideals containing an element, as a bitmask over the ring's
// maximal-ideal list.
class SSignature {
 public:
  SSignature() = default;
  SSignature(std::uint64_t bits, std::size_t width) : bits_(bits), width_(width) {}

  std::uint64_t bits() const { return bits_; }
  std::size_t width() const { return width_; }
  bool empty() const { return bits_ == 0; }
  bool full() const { return width_ == 64 ? bits_ == ~std::uint64_t{0} : bits_ == (std::uint64_t{1} << width_) - 1; }
  bool test(std::size_t i) const { return (bits_ >> i) & 1U; }
  bool disjoint(const SSignature& o) const { return (bits_ & o.bits_) == 0; }
  SSignature operator|(const SSignature& o) const { return {bits_ | o.bits_, width_}; }
  SSignature operator&(const SSignature& o) const { return {bits_ & o.bits_, width_}; }
  std::size_t count() const;
  std::string to_string() const;

  friend bool operator==(const SSignature&, const SSignature&) = default;
  friend auto operator<=>(const SSignature& a, const SSignature& b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
  std::size_t width_ = 0;
};

namespace detail {

// Element arithmetic on indices 0..size-1, with 0 the zero element.
class Arithmetic {
 public:
  virtual ~Arithmetic() = default;
  virtual std::size_t size() const = 0;
  virtual std::uint32_t one() const = 0;
  virtual std::uint32_t add(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t mul(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t neg(std::uint32_t a) const = 0;
  virtual std::string element_name(std::uint32_t a) const = 0;
  virtual std::string name() const = 0;
};

struct RingData;
void populate(RingData& data);

}  // namespace detail

// Per-factor data of a product ring.
struct FactorInfo {
  BaseSpec base;
  std::uint32_t size = 0;
  // GF factors only: the irreducible modulus, coefficients low-to-high.
  std::vector<std::uint32_t> modulus;
};

// A finite commutative ring with its ideal-theoretic data precomputed.
// Immutable; copies share state.
class Ring {
 public:
  std::size_t size() const;
  Element zero() const { return element(0); }
  Element one() const;

  Element add(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  // Range-checked arithmetic; `b` is ignored for neg.
  Element arith(Element a, Element b, ArithOp op) const;

  std::string name() const;
  std::string element_name(Element e) const;

  // Product rings: the describing spec, per-factor data, and component codec.
  const std::optional<RingSpec>& spec() const;
  const std::vector<FactorInfo>& factors() const;
  std::vector<std::uint32_t> decode(Element e) const;
  Element encode(std::span<const std::uint32_t> components) const;

  // Quotient rings: parent ring, coset representative per element, and the
  // coset index of every parent element.
  const Ring* parent() const;
  Element representative(Element e) const;
  Element coset_of(Element parent_element) const;

  const std::vector<Element>& units() const;
  const Bitset& unit_mask() const;
  bool is_unit(Element e) const { return unit_mask().test(index_of(e)); }

  const Ideal& radical() const;
  bool in_radical(Element e) const { return radical().contains(e); }

  // Full ideal lattice sorted by (size, members).
  const std::vector<Ideal>& ideals() const;
  // Maximal ideals in member-lexicographic order.
  const std::vector<Ideal>& maximal_ideals() const;
  bool is_local() const { return maximal_ideals().size() == 1; }

  // Distinct principal ideals in member-lexicographic order; each carries
  // its least generator.
  const std::vector<Ideal>& principal_ideals() const;
  std::size_t principal_id(Element x) const;

  SSignature signature(Element x) const;

  const RingLimits& limits() const;

 private:
  friend Ring make_ring(const RingSpec&, const RingLimits&);
  friend Ring quotient_ring(const Ring&, const Ideal&);
  friend void detail::populate(detail::RingData&);
  explicit Ring(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::RingData> data_;
};

Ring make_ring(const RingSpec& spec, const RingLimits& limits = {});

Ideal principal_ideal(const Ring& r, Element x);
Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b);
Ideal zero_ideal(const Ring& r);
Ideal whole_ring(const Ring& r);
// Smallest ideal containing `generators`.
Ideal ideal_generated_by(const Ring& r, std::span<const Element> generators);

// Principal ideals closed under pairwise sum to fixpoint. Throws
// GuardExceeded past limits.max_ideals.
std::vector<Ideal> compute_all_ideals(const Ring& r);

const std::vector<Ideal>& all_ideals(const Ring& r);
const std::vector<Ideal>& maximal_ideals(const Ring& r);
const Ideal& jacobson_radical(const Ring& r);
const std::vector<Element>& units(const Ring& r);
SSignature s_signature(const Ring& r, Element x);

// Maximal ideals of a product ring read off its local refactorization
// (Zn split into prime-power factors). Empty for quotient rings.
std::vector<Ideal> structural_maximal_ideals(const Ring& r);

// True iff Rx + Ry = R. Computes both 1 ∈ Rx + Ry and S_x ∩ S_y = ∅ and
// throws InternalError if they disagree.
bool is_comaximal(const Ring& r, Element x, Element y);
// 1 ∈ I + J, computed from member sets alone.
bool sum_contains_one(const Ring& r, const Ideal& a, const Ideal& b);

// Ring of cosets R/I for an ideal I ⊆ J(R). Coset indices follow the order
// of least members.
Ring quotient_ring(const Ring& r, const Ideal& ideal);

struct StableRange {
  bool holds = true;
  std::optional<std::pair<Element, Element>> violation;
};

StableRange stable_range_one(const Ring& r);

// One local direct factor Re for a primitive idempotent e.
struct LocalFactor {
  Element idempotent{};
  std::size_t size = 0;
  std::size_t radical_size = 0;
  std::size_t residue_field_size = 0;
  bool is_field() const { return radical_size == 1; }
};

// Decomposition R ≅ ∏ Re_i over primitive idempotents, ordered by idempotent
// index. Works on any ring, including quotients.
std::vector<LocalFactor> local_factors(const Ring& r);

// Sizes (|R_i|, |J(R_i)|) of the local factors implied by a spec, with every
// Zn replaced by its prime-power pieces. Sorted.
std::vector<std::pair<std::size_t, std::size_t>> spec_local_factor_sizes(const RingSpec& spec);

// Structural ring-form predicates used by theorem checks.
struct RingForm {
  std::size_t max_ideals = 0;
  std::size_t local_factor_count = 0;
  bool local = false;
  bool field = false;
  bool field_times_field = false;
  bool z2_times_field = false;
  bool z2_cubed = false;
  bool z2_times_z2 = false;
  bool field_times_local = false;
  bool local_times_local = false;
  bool radical_prime = false;
};

RingForm classify(const Ring& r);

// xy ∈ J ⇒ x ∈ J or y ∈ J, checked exhaustively; the witness pair if not.
std::optional<std::pair<Element, Element>> radical_primality_witness(const Ring& r);

}  // namespace comax
