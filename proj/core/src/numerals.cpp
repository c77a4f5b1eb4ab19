#include "scaleqm/numerals.hpp"

#include <algorithm>

namespace scaleqm {

namespace {

bool is_digit_letter(char c) { return c >= 'a' && c <= 'j'; }

bool all_zero_letters(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == 'a'; });
}

std::strong_ordering compare_magnitude(const NumeralString& lhs, const NumeralString& rhs) {
  const std::size_t int_width = std::max(lhs.integer_digits.size(), rhs.integer_digits.size());
  const std::string li = std::string(int_width - lhs.integer_digits.size(), 'a') + lhs.integer_digits;
  const std::string ri = std::string(int_width - rhs.integer_digits.size(), 'a') + rhs.integer_digits;
  if (auto c = li <=> ri; c != 0) return c;

  const std::size_t frac_width = std::max(lhs.fraction_digits.size(), rhs.fraction_digits.size());
  std::string lf = lhs.fraction_digits;
  std::string rf = rhs.fraction_digits;
  lf.resize(frac_width, 'a');
  rf.resize(frac_width, 'a');
  return lf <=> rf;
}

}  // namespace

int digit_value(char letter) {
  if (!is_digit_letter(letter)) {
    throw NumeralError(NumeralError::Kind::illegal_character, 0,
                       std::string("not a digit letter: '") + letter + "'");
  }
  return letter - 'a';
}

char digit_letter(int value) {
  if (value < 0 || value > 9) throw std::out_of_range("digit value outside 0..9");
  return static_cast<char>('a' + value);
}

std::string NumeralString::canonical() const {
  std::string out;
  if (negative && !is_zero()) out += '-';
  out += integer_digits;
  if (!fraction_digits.empty()) out += '.' + fraction_digits;
  return out;
}

bool NumeralString::is_zero() const {
  return all_zero_letters(integer_digits) && all_zero_letters(fraction_digits);
}

NumeralString parse_numeral(std::string_view text) {
  NumeralString out;
  out.raw = std::string(text);

  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    out.negative = text[pos] == '-';
    ++pos;
  }

  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_point) {
        throw NumeralError(NumeralError::Kind::multiple_points, pos,
                           "numeral '" + out.raw + "' has more than one point");
      }
      seen_point = true;
    } else if (is_digit_letter(c)) {
      (seen_point ? out.fraction_digits : out.integer_digits) += c;
    } else {
      throw NumeralError(NumeralError::Kind::illegal_character, pos,
                         "numeral '" + out.raw + "' has illegal character '" + std::string(1, c) +
                             "' at position " + std::to_string(pos));
    }
  }

  if (out.integer_digits.empty() || (seen_point && out.fraction_digits.empty())) {
    throw NumeralError(NumeralError::Kind::empty_digits, text.size(),
                       "numeral '" + out.raw + "' needs letters on both sides of the point");
  }

  while (!out.fraction_digits.empty() && out.fraction_digits.back() == 'a') out.fraction_digits.pop_back();
  return out;
}

Rational canonical_value(const NumeralString& numeral) {
  mpz_class numerator = 0;
  for (char c : numeral.integer_digits) numerator = numerator * 10 + digit_value(c);
  for (char c : numeral.fraction_digits) numerator = numerator * 10 + digit_value(c);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, numeral.fraction_digits.size());
  Rational value(numerator, denominator);
  value.canonicalize();
  if (numeral.negative) value = -value;
  return value;
}

NumeralBasis::NumeralBasis(NumeralString zero, NumeralString unit)
    : zero_(std::move(zero)), unit_(std::move(unit)), scale_(canonical_value(unit_)) {
  if (canonical_value(zero_) != 0) {
    throw std::invalid_argument("zero string '" + zero_.raw + "' does not have value 0");
  }
  if (scale_ == 0) {
    throw std::invalid_argument("unit string '" + unit_.raw + "' has value 0");
  }
}

NumeralBasis NumeralBasis::standard() { return {parse_numeral("a.a"), parse_numeral("b.a")}; }

Rational scaled_value(const NumeralString& numeral, const NumeralBasis& basis) {
  Rational v = canonical_value(numeral) / basis.scale();
  return v;
}

std::strong_ordering lex_compare(const NumeralString& lhs, const NumeralString& rhs) {
  const bool lneg = lhs.negative && !lhs.is_zero();
  const bool rneg = rhs.negative && !rhs.is_zero();
  if (lneg != rneg) return lneg ? std::strong_ordering::less : std::strong_ordering::greater;
  const auto mag = compare_magnitude(lhs, rhs);
  return lneg ? 0 <=> mag : mag;
}

}  // namespace scaleqm
