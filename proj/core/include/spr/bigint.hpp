#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spr {

using BigInt = boost::multiprecision::cpp_int;

/// Decimal text, optionally signed. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);
inline std::string to_string(const BigInt& v) { return v.str(); }

/// v * base^exponent
BigInt shifted(const BigInt& v, const BigInt& base, unsigned exponent);

/// Signed base-`base` digits z_0, z_1, ... summed as sum z_i * base^i.
BigInt from_digits(std::initializer_list<BigInt> low_to_high, const BigInt& base);

/// Plain base-`base` digits of a non-negative value, least significant first.
std::vector<BigInt> to_digits(BigInt v, const BigInt& base);

}  // namespace spr
