#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ring_data.hpp"

namespace comax::detail {

namespace {

// One base ring: Z_n, or GF(p^k) with elements coded as sum c_i p^i.
struct Component {
  bool is_field_ext = false;
  std::uint32_t n = 0;  // Z_n modulus, or the characteristic p for GF
  std::uint32_t k = 1;
  std::uint32_t size = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> mul_table;  // GF with size <= 256

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (!is_field_ext) return (a + b) % n;
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((a % n + b % n) % n) * place;
      a /= n;
      b /= n;
      place *= n;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (!is_field_ext) return (n - a) % n;
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((n - a % n) % n) * place;
      a /= n;
      place *= n;
    }
    return out;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!is_field_ext) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % n);
    if (!mul_table.empty()) return mul_table[a * size + b];
    return poly_mul(a, b);
  }

  std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = n;
    std::vector<std::uint64_t> ca(k), cb(k), prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      ca[i] = a % p;
      cb[i] = b % p;
      a /= p;
      b /= p;
    }
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    // Reduce with the monic modulus: x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
    for (std::size_t d = 2 * k - 1; d >= k; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (std::uint32_t i = 0; i < k; ++i)
        prod[d - k + i] = (prod[d - k + i] + (p - modulus[i]) % p * c) % p;
    }
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += static_cast<std::uint32_t>(prod[i]) * place;
      place *= p;
    }
    return out;
  }

  std::string name(std::uint32_t a) const {
    if (!is_field_ext || k == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::vector<std::string> terms;
    std::vector<std::uint32_t> coeffs(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      coeffs[i] = a % n;
      a /= n;
    }
    for (std::uint32_t i = k; i-- > 0;) {
      const std::uint32_t c = coeffs[i];
      if (c == 0) continue;
      std::string t;
      if (i == 0) {
        t = std::to_string(c);
      } else {
        if (c != 1) t = std::to_string(c);
        t += "a";
        if (i > 1) t += "^" + std::to_string(i);
      }
      terms.push_back(t);
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? "+" : "") + terms[i];
    return out;
  }
};

class ProductArithmetic final : public Arithmetic {
 public:
  ProductArithmetic(RingSpec spec, std::vector<Component> components, std::vector<std::uint32_t> place_values)
      : spec_(std::move(spec)), components_(std::move(components)), place_(std::move(place_values)) {
    size_ = 1;
    for (const auto& c : components_) size_ *= c.size;
    one_ = 0;
    for (std::size_t i = 0; i < components_.size(); ++i) one_ += place_[i];
  }

  std::size_t size() const override { return size_; }
  std::uint32_t one() const override { return one_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    return combine(a, b, [](const Component& c, std::uint32_t x, std::uint32_t y) { return c.add(x, y); });
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return combine(a, b, [](const Component& c, std::uint32_t x, std::uint32_t y) { return c.mul(x, y); });
  }
  std::uint32_t neg(std::uint32_t a) const override {
    return combine(a, a, [](const Component& c, std::uint32_t x, std::uint32_t) { return c.neg(x); });
  }

  std::string element_name(std::uint32_t a) const override {
    if (components_.size() == 1) return components_[0].name(a);
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) out += ",";
      out += components_[i].name((a / place_[i]) % components_[i].size);
    }
    return out + ")";
  }

  std::string name() const override { return to_string(spec_); }

 private:
  template <typename Op>
  std::uint32_t combine(std::uint32_t a, std::uint32_t b, Op op) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const auto& c = components_[i];
      out += op(c, (a / place_[i]) % c.size, (b / place_[i]) % c.size) * place_[i];
    }
    return out;
  }

  RingSpec spec_;
  std::vector<Component> components_;
  std::vector<std::uint32_t> place_;
  std::size_t size_ = 0;
  std::uint32_t one_ = 0;
};

class QuotientArithmetic final : public Arithmetic {
 public:
  QuotientArithmetic(Ring parent, std::vector<Element> reps, std::vector<Element> coset_of, std::string name)
      : parent_(std::move(parent)), reps_(std::move(reps)), coset_of_(std::move(coset_of)), name_(std::move(name)) {}

  std::size_t size() const override { return reps_.size(); }
  std::uint32_t one() const override { return lift(parent_.one()); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return lift(parent_.add(reps_[a], reps_[b])); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override { return lift(parent_.mul(reps_[a], reps_[b])); }
  std::uint32_t neg(std::uint32_t a) const override { return lift(parent_.neg(reps_[a])); }
  std::string element_name(std::uint32_t a) const override { return "[" + parent_.element_name(reps_[a]) + "]"; }
  std::string name() const override { return name_; }

 private:
  std::uint32_t lift(Element parent_element) const { return index_of(coset_of_[index_of(parent_element)]); }

  Ring parent_;
  std::vector<Element> reps_;
  std::vector<Element> coset_of_;
  std::string name_;
};

}  // namespace

std::shared_ptr<const Arithmetic> make_product_arithmetic(const RingSpec& spec, std::vector<FactorInfo>& factors,
                                                          std::vector<std::uint32_t>& place_values) {
  std::vector<Component> components;
  factors.clear();
  for (const auto& base : spec.factors) {
    Component c;
    FactorInfo info;
    info.base = base;
    if (const auto* z = std::get_if<Zn>(&base)) {
      c.n = z->n;
      c.size = z->n;
    } else {
      const auto& g = std::get<GF>(base);
      c.is_field_ext = true;
      c.n = g.p;
      c.k = g.k;
      c.size = 1;
      for (std::uint32_t i = 0; i < g.k; ++i) c.size *= g.p;
      c.modulus = least_irreducible(g.p, g.k);
      info.modulus = c.modulus;
      if (c.size <= 256) {
        c.mul_table.resize(static_cast<std::size_t>(c.size) * c.size);
        for (std::uint32_t a = 0; a < c.size; ++a)
          for (std::uint32_t b = 0; b < c.size; ++b) c.mul_table[a * c.size + b] = c.poly_mul(a, b);
      }
    }
    info.size = c.size;
    factors.push_back(info);
    components.push_back(std::move(c));
  }
  place_values.assign(components.size(), 1);
  for (std::size_t i = components.size(); i-- > 1;) place_values[i - 1] = place_values[i] * components[i].size;
  return std::make_shared<ProductArithmetic>(spec, std::move(components), place_values);
}

std::shared_ptr<const Arithmetic> make_quotient_arithmetic(const Ring& parent, std::vector<Element> representatives,
                                                           std::vector<Element> coset_of, std::string name) {
  return std::make_shared<QuotientArithmetic>(parent, std::move(representatives), std::move(coset_of),
                                              std::move(name));
}

}  // namespace comax::detail
