#include "huri/decimal.hpp"

#include <cctype>
#include <cstdlib>

namespace huri {

std::optional<Decimal> Decimal::parse(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) {
        return std::nullopt;
    }

    std::int64_t integer = 0;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (integer > (INT64_MAX - 9) / 10) {
            return std::nullopt;
        }
        integer = integer * 10 + (text[pos] - '0');
        ++digits;
        ++pos;
    }
    if (digits == 0) {
        return std::nullopt;
    }

    std::int64_t frac = 0;
    if (pos < text.size()) {
        if (text[pos] != '.') {
            return std::nullopt;
        }
        ++pos;
        std::size_t frac_digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            frac = frac * 10 + (text[pos] - '0');
            ++frac_digits;
            ++pos;
        }
        if (frac_digits == 0 || frac_digits > 4 || pos != text.size()) {
            return std::nullopt;
        }
        for (std::size_t i = frac_digits; i < 4; ++i) {
            frac *= 10;
        }
    }

    if (integer > (INT64_MAX - frac) / kScale) {
        return std::nullopt;
    }
    std::int64_t raw = integer * kScale + frac;
    return from_raw(negative ? -raw : raw);
}

std::string Decimal::str() const {
    std::int64_t abs = raw_ < 0 ? -raw_ : raw_;
    std::string out = raw_ < 0 ? "-" : "";
    out += std::to_string(abs / kScale);
    std::int64_t frac = abs % kScale;
    if (frac != 0) {
        char buf[6];
        std::snprintf(buf, sizeof buf, "%04lld", static_cast<long long>(frac));
        std::string tail(buf);
        while (tail.back() == '0') {
            tail.pop_back();
        }
        out += '.';
        out += tail;
    }
    return out;
}

}  // namespace huri
