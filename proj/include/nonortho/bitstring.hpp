#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nonortho {

/// Classical bit string of even length 2n. Odd-length raw input has to go
/// through pad_left (or parse, which pads automatically) before it can
/// become a BitString.
class BitString {
public:
    explicit BitString(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters. Odd-length input is padded
    /// with a single leading 0.
    static BitString parse(std::string_view text);

    int size() const { return static_cast<int>(bits_.size()); }  // 2n
    int pair_count() const { return size() / 2; }                // n
    int bit(int i) const { return bits_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Prepends a single 0 to an odd-length bit sequence, making it even.
BitString pad_left(const std::vector<std::uint8_t>& odd_bits);
BitString pad_left(std::string_view odd_text);

/// The 2n-bit string whose unsigned value is `value`, most significant bit
/// first. Used to enumerate all 2^{2n} strings at a given n.
BitString bitstring_from_index(std::uint64_t value, int n);

}  // namespace nonortho
