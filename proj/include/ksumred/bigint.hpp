#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ksumred {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Strict decimal parse: optional '-', then at least one digit.
BigInt parse_decimal(std::string_view text);
std::string to_decimal(const BigInt& x);

BigInt ipow(const BigInt& base, unsigned exponent);

// Number of bits of |x| (0 for x = 0).
unsigned bit_length(const BigInt& x);

// ceil(log2(x)) for x >= 1.
unsigned ceil_log2(const BigInt& x);

// Floor of the nonnegative remainder, i.e. x mod m in [0, m-1] for m > 0.
BigInt floor_mod(const BigInt& x, const BigInt& m);

BigInt binomial(unsigned n, unsigned k);

// Maximum bit length over a set of values.
unsigned max_bit_length(const std::vector<BigInt>& xs);

std::int64_t to_i64(const BigInt& x);

}  // namespace ksumred
