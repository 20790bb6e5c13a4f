#pragma once
#include <string>

#include "iugehp/config_io.hpp"

namespace testing_support {

inline std::string source_path(const std::string& relative) {
    return std::string(IUGEHP_SOURCE_DIR) + "/" + relative;
}

inline iugehp::RunConfig fixture(const std::string& name) {
    return iugehp::load_config(source_path("fixtures/" + name));
}

inline double rel_err(double value, double reference) {
    const double denom = std::abs(reference) > 1e-30 ? std::abs(reference) : 1e-30;
    return std::abs(value - reference) / denom;
}

// error relative to max(1, |reference|); the large-|z| erf values need this
inline double mixed_err(double value, double reference) {
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

}  // namespace testing_support
