#include "spr/bigint.hpp"

#include <stdexcept>

namespace spr {

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text.front() == '+' ? text.substr(1) : text));
}

BigInt shifted(const BigInt& v, const BigInt& base, unsigned exponent) {
  return v * boost::multiprecision::pow(base, exponent);
}

BigInt from_digits(std::initializer_list<BigInt> low_to_high, const BigInt& base) {
  BigInt value = 0;
  BigInt place = 1;
  for (const BigInt& z : low_to_high) {
    value += z * place;
    place *= base;
  }
  return value;
}

std::vector<BigInt> to_digits(BigInt v, const BigInt& base) {
  if (v < 0) throw std::invalid_argument("to_digits expects a non-negative value");
  std::vector<BigInt> out;
  while (v > 0) {
    out.push_back(v % base);
    v /= base;
  }
  return out;
}

}  // namespace spr
