#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "comax/ring.hpp"

namespace comax {

// Malformed spec text. `position` is a byte offset into the input.
class ParseError : public RingError {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// expr := atom ("x" atom)*, atom := "Z" integer | "GF(" integer ")".
// Whitespace is ignored and "×" is accepted for "x". The result is
// validated: RingError for bad factors, GuardExceeded past the size cap.
RingSpec parse_ring_spec(std::string_view text, const RingLimits& limits = {});

// A single atom, e.g. "GF(8)".
BaseSpec parse_base_spec(std::string_view text, const RingLimits& limits = {});

}  // namespace comax
