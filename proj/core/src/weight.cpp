#include "argkb/weight.hpp"

#include <cctype>

#include "argkb/errors.hpp"

namespace argkb {

Weight Weight::from_units(std::int64_t units) {
  if (units < 0 || units > kScale) {
    throw PreconditionError("weight units out of range: " + std::to_string(units));
  }
  return Weight{units};
}

Weight Weight::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> Weight {
    throw ParseError("invalid weight '" + std::string(text) + "': " + why, 1, 1);
  };
  if (text.empty()) return fail("empty");

  std::size_t pos = 0;
  std::int64_t whole = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    whole = whole * 10 + (text[pos] - '0');
    if (whole > 1) return fail("above 1");
    any_digit = true;
    ++pos;
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (frac_digits == kDigits) return fail("more than 9 fractional digits");
      frac = frac * 10 + (text[pos] - '0');
      ++frac_digits;
      any_digit = true;
      ++pos;
    }
  }
  if (!any_digit || pos != text.size()) return fail("not a decimal number");
  for (int i = frac_digits; i < kDigits; ++i) frac *= 10;

  const std::int64_t units = whole * kScale + frac;
  if (units > kScale) return fail("above 1");
  return Weight{units};
}

Weight Weight::from_ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw PreconditionError("weight ratio outside [0, 1]");
  }
  // num * kScale fits comfortably for the layer counts this is used with.
  __extension__ using Wide = __int128;
  const Wide scaled = static_cast<Wide>(num) * kScale;
  const auto units = static_cast<std::int64_t>((scaled * 2 + den) / (2 * den));
  return Weight{units};
}

std::string Weight::to_string() const {
  if (units_ == kScale) return "1";
  if (units_ == 0) return "0";
  std::string frac = std::to_string(units_);
  frac.insert(0, static_cast<std::size_t>(kDigits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return "0." + frac;
}

}  // namespace argkb
