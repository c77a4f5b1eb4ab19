#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scaleqm/rational.hpp"

namespace scaleqm {

/// Fixed-point numerals over the letters a..j (a=0, ..., j=9), with an
/// optional sign and at most one point, e.g. "dfa.ggi" or "-a.jjhgbi".
struct NumeralString {
  bool negative = false;
  std::string integer_digits;
  /// Trailing 'a' letters are dropped: they never change the value.
  std::string fraction_digits;
  std::string raw;

  /// Normalized text: sign (only if the digits are not all 'a'), integer
  /// letters, and the fraction when non-empty.
  std::string canonical() const;
  bool is_zero() const;
};

class NumeralError : public std::invalid_argument {
 public:
  enum class Kind { illegal_character, multiple_points, empty_digits };

  NumeralError(Kind kind, std::size_t position, const std::string& what)
      : std::invalid_argument(what), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

int digit_value(char letter);
char digit_letter(int value);

NumeralString parse_numeral(std::string_view text);

/// Positional base-ten value under a=0..j=9 (the unscaled valuation v_1).
Rational canonical_value(const NumeralString& numeral);

/// Choice of the strings that carry the values 0 and 1. The unit string's
/// canonical value is the scaling factor t of the resulting structure.
class NumeralBasis {
 public:
  NumeralBasis(NumeralString zero, NumeralString unit);

  static NumeralBasis standard();

  const NumeralString& zero() const { return zero_; }
  const NumeralString& unit() const { return unit_; }
  const Rational& scale() const { return scale_; }

 private:
  NumeralString zero_;
  NumeralString unit_;
  Rational scale_;
};

/// v_t(n) = v_1(n) / t.
Rational scaled_value(const NumeralString& numeral, const NumeralBasis& basis);

/// Total order: sign first (zero is unsigned), then integer letters padded
/// on the left with 'a', then fraction letters padded on the right with 'a'.
/// Agrees with the numeric order of canonical_value.
std::strong_ordering lex_compare(const NumeralString& lhs, const NumeralString& rhs);

}  // namespace scaleqm
