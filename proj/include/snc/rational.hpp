#ifndef SNC_RATIONAL_HPP
#define SNC_RATIONAL_HPP

#include <boost/rational.hpp>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace snc {

/// Exact weight type. Comparisons of weight sums are exact equalities.
using rational = boost::rational<std::int64_t>;

inline std::string to_string(const rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p" or "p/q" (q > 0). Returns nullopt on malformed text.
inline std::optional<rational> parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
        std::int64_t v = 0;
        if (s.empty()) return std::nullopt;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
        return v;
    };
    auto slash = text.find('/');
    auto num = parse_int(text.substr(0, slash));
    if (!num) return std::nullopt;
    if (slash == std::string_view::npos) return rational(*num);
    auto den = parse_int(text.substr(slash + 1));
    if (!den || *den <= 0) return std::nullopt;
    return rational(*num, *den);
}

}  // namespace snc

#endif
