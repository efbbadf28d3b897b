#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace qst {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a, used to fingerprint run configurations in output headers.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Format a double for CSV output with enough digits to round-trip exactly.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string hex_string(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace qst
