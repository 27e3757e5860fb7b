#include "nonortho/bitstring.hpp"

#include <stdexcept>

namespace nonortho {

namespace {

std::vector<std::uint8_t> bits_from_text(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("bit string is empty");
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
}

}  // namespace

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw std::invalid_argument("bit string is empty");
    }
    if (bits_.size() % 2 != 0) {
        throw std::invalid_argument("bit string length must be even; pad odd input first");
    }
    for (std::uint8_t b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("bit values must be 0 or 1");
        }
    }
}

BitString BitString::parse(std::string_view text) {
    auto bits = bits_from_text(text);
    if (bits.size() % 2 != 0) {
        bits.insert(bits.begin(), 0);
    }
    return BitString(std::move(bits));
}

std::string BitString::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (std::uint8_t b : bits_) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

BitString pad_left(const std::vector<std::uint8_t>& odd_bits) {
    if (odd_bits.empty()) {
        throw std::invalid_argument("cannot pad an empty bit sequence");
    }
    if (odd_bits.size() % 2 == 0) {
        throw std::invalid_argument("pad_left expects an odd-length bit sequence");
    }
    std::vector<std::uint8_t> padded;
    padded.reserve(odd_bits.size() + 1);
    padded.push_back(0);
    padded.insert(padded.end(), odd_bits.begin(), odd_bits.end());
    return BitString(std::move(padded));
}

BitString pad_left(std::string_view odd_text) { return pad_left(bits_from_text(odd_text)); }

BitString bitstring_from_index(std::uint64_t value, int n) {
    if (n < 1 || n > 32) {
        throw std::invalid_argument("bitstring_from_index requires 1 <= n <= 32");
    }
    const int len = 2 * n;
    if (len < 64 && value >= (std::uint64_t{1} << len)) {
        throw std::invalid_argument("value does not fit in 2n bits");
    }
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        bits[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((value >> (len - 1 - i)) & 1u);
    }
    return BitString(std::move(bits));
}

}  // namespace nonortho
