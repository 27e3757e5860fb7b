#pragma once

#include <cstdint>
#include <string_view>

namespace nonortho {

inline constexpr std::string_view kArtifactVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Space cost of encoding all 2^{2n} strings of 2n bits.
struct SpaceReport {
    std::uint64_t strings = 0;     // 2^{2n}
    int qubits_standard = 0;       // 2n
    int qubits_nonorthogonal = 0;  // ceil(log2 n) + 2
    int dimension = 0;             // 4n
};

SpaceReport report_space(int n);

}  // namespace nonortho
