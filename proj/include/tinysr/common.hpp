#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tinysr {

// Error taxonomy. Every failure surfaced to callers is one of these, so the
// CLI can map them onto exit codes and tests can assert on the category.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};
struct ArgumentError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct DatasetError : Error {
    using Error::Error;
};
struct StagingError : Error {
    using Error::Error;
};
struct VersioningError : Error {
    using Error::Error;
};
struct NumericsError : Error {
    using Error::Error;
};

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace tinysr
