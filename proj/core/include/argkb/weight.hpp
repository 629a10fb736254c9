#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace argkb {

/// A certainty degree in [0, 1], stored as an integer count of 1e-9 units
/// so that comparisons, min and max are exact.
class Weight {
 public:
  static constexpr std::int64_t kScale = 1'000'000'000;
  static constexpr int kDigits = 9;

  constexpr Weight() = default;

  static constexpr Weight zero() { return Weight{0}; }
  static constexpr Weight one() { return Weight{kScale}; }

  /// Throws PreconditionError when units is outside [0, kScale].
  static Weight from_units(std::int64_t units);

  /// Parses "1", "0", "0.6", "1.0", ".25". At most kDigits fractional digits.
  /// Throws ParseError on malformed text or values outside [0, 1].
  static Weight parse(std::string_view text);

  /// Nearest representable weight to num/den (ties round up). Only used for
  /// default layer weights; everything else is exact.
  static Weight from_ratio(std::int64_t num, std::int64_t den);

  constexpr std::int64_t units() const { return units_; }
  constexpr bool is_zero() const { return units_ == 0; }

  /// Shortest decimal rendering: "0", "1", "0.6", "0.25".
  std::string to_string() const;

  friend constexpr auto operator<=>(Weight, Weight) = default;

 private:
  constexpr explicit Weight(std::int64_t units) : units_(units) {}

  std::int64_t units_ = 0;
};

}  // namespace argkb
