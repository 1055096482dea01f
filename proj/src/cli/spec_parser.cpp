#include "comax/spec_parser.hpp"

#include <cctype>
#include <limits>

namespace comax {

ParseError::ParseError(const std::string& message, std::size_t position)
    : RingError(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingSpec expr() {
    RingSpec spec;
    spec.factors.push_back(atom());
    while (product_sign()) spec.factors.push_back(atom());
    skip_space();
    if (pos_ != text_.size()) throw ParseError("expected 'x' or end of input", pos_);
    return spec;
  }

  BaseSpec single() {
    BaseSpec b = atom();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected text after factor", pos_);
    return b;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool literal(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  bool product_sign() { return literal("x") || literal("\xC3\x97"); }

  void expect(std::string_view word) {
    if (!literal(word)) throw ParseError("expected '" + std::string(word) + "'", pos_);
  }

  std::uint32_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return static_cast<std::uint32_t>(value);
  }

  BaseSpec atom() {
    skip_space();
    const std::size_t start = pos_;
    if (literal("GF")) {
      expect("(");
      const std::size_t at = (skip_space(), pos_);
      const std::uint32_t q = integer();
      expect(")");
      const auto pk = prime_power(q);
      if (!pk) throw ParseError("GF(" + std::to_string(q) + "): order is not a prime power", at);
      return GF{pk->first, pk->second};
    }
    if (literal("Z")) {
      const std::size_t at = (skip_space(), pos_);
      const std::uint32_t n = integer();
      if (n < 2) throw ParseError("Z" + std::to_string(n) + ": modulus must be at least 2", at);
      return Zn{n};
    }
    throw ParseError("expected 'Z<n>' or 'GF(<q>)'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text, const RingLimits& limits) {
  RingSpec spec = Parser(text).expr();
  validate(spec, limits);
  return spec;
}

BaseSpec parse_base_spec(std::string_view text, const RingLimits& limits) {
  BaseSpec b = Parser(text).single();
  validate(RingSpec{{b}}, limits);
  return b;
}

}  // namespace comax
