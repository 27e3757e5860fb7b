#include "nonortho/report.hpp"

#include <bit>
#include <stdexcept>

#include "nonortho/errors.hpp"

namespace nonortho {

SpaceReport report_space(int n) {
    if (n < 1) {
        throw std::invalid_argument("report_space requires n >= 1");
    }
    if (n > 31) {
        throw GuardError("string count exceeds the 64-bit range");
    }
    const int ceil_log2_n = std::bit_width(static_cast<unsigned>(n) - 1u);
    return SpaceReport{
        std::uint64_t{1} << (2 * n),  // 2^{2n} encodable strings
        2 * n,
        ceil_log2_n + 2,
        4 * n,
    };
}

}  // namespace nonortho
