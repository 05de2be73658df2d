#include "ksumred/bigint.hpp"

#include "ksumred/errors.hpp"

#include <algorithm>
#include <limits>

namespace ksumred {

BigInt parse_decimal(std::string_view text) {
    std::size_t start = 0;
    if (!text.empty() && text.front() == '-') start = 1;
    if (start == text.size()) throw ValidationError("empty integer literal");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw ValidationError("invalid integer literal '" + std::string(text) + "'");
    }
    BigInt value(std::string(text.substr(start)));
    return start == 1 ? BigInt(-value) : value;
}

std::string to_decimal(const BigInt& x) { return x.str(); }

BigInt ipow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

unsigned bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

unsigned ceil_log2(const BigInt& x) {
    if (x < 1) throw RangeError("ceil_log2 of a value below 1");
    if (x == 1) return 0;
    return bit_length(BigInt(x - 1));
}

BigInt floor_mod(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

unsigned max_bit_length(const std::vector<BigInt>& xs) {
    unsigned bits = 0;
    for (const auto& x : xs) bits = std::max(bits, bit_length(x));
    return bits;
}

std::int64_t to_i64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw RangeError("value " + x.str() + " does not fit in 64 bits");
    return x.convert_to<std::int64_t>();
}

}  // namespace ksumred
