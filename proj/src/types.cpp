#include "garchfit/types.hpp"

#include <charconv>

#include "garchfit/errors.hpp"

namespace garchfit {

std::string to_string(const FeatureSetKind& kind) {
    switch (kind.kind) {
        case StatKind::MomentsG6: return "moments-g6";
        case StatKind::MomentsG8: return "moments-g8";
        case StatKind::MomentsG10: return "moments-g10";
        case StatKind::AutocovLag: return "autocov-" + std::to_string(kind.lag);
    }
    throw FormatError("unknown feature-set kind enum value");
}

FeatureSetKind parse_kind(const std::string& text) {
    if (text == "moments-g6") return FeatureSetKind::moments_g6();
    if (text == "moments-g8") return FeatureSetKind::moments_g8();
    if (text == "moments-g10") return FeatureSetKind::moments_g10();
    constexpr const char* prefix = "autocov-";
    if (text.rfind(prefix, 0) == 0) {
        const std::string digits = text.substr(8);
        int lag = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), lag);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && lag >= 1) {
            return FeatureSetKind::autocov(lag);
        }
    }
    throw FormatError("unrecognized feature-set kind '" + text +
                      "' (expected moments-g6|moments-g8|moments-g10|autocov-<n>)");
}

int required_moment_order(const FeatureSetKind& kind) noexcept {
    switch (kind.kind) {
        case StatKind::MomentsG6: return 3;
        case StatKind::MomentsG8: return 4;
        case StatKind::MomentsG10: return 5;
        case StatKind::AutocovLag: return 2;
    }
    return 2;
}

}  // namespace garchfit
