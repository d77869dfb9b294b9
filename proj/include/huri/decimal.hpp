#ifndef HURI_DECIMAL_HPP
#define HURI_DECIMAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace huri {

// Exact fixed-point number with four fractional digits. All money-like
// quantities (external utilities, itemset utilities, profits, thresholds)
// are carried as Decimal so threshold comparisons never drift.
class Decimal {
  public:
    static constexpr std::int64_t kScale = 10'000;

    constexpr Decimal() = default;

    static constexpr Decimal from_raw(std::int64_t raw) {
        Decimal d;
        d.raw_ = raw;
        return d;
    }

    static constexpr Decimal from_int(std::int64_t value) { return from_raw(value * kScale); }

    // Accepts an optional sign, digits, and at most four fractional digits.
    // Returns nullopt on anything else (including empty input and overflow).
    static std::optional<Decimal> parse(std::string_view text);

    [[nodiscard]] constexpr std::int64_t raw() const { return raw_; }
    [[nodiscard]] constexpr bool is_negative() const { return raw_ < 0; }
    [[nodiscard]] constexpr bool is_integer() const { return raw_ % kScale == 0; }
    [[nodiscard]] constexpr std::int64_t integer_part() const { return raw_ / kScale; }
    [[nodiscard]] constexpr double to_double() const {
        return static_cast<double>(raw_) / static_cast<double>(kScale);
    }

    // Minimal representation: "45", "4.25", "0.4", "-1.5".
    [[nodiscard]] std::string str() const;

    constexpr Decimal& operator+=(Decimal rhs) {
        raw_ += rhs.raw_;
        return *this;
    }
    constexpr Decimal& operator-=(Decimal rhs) {
        raw_ -= rhs.raw_;
        return *this;
    }

    friend constexpr Decimal operator+(Decimal a, Decimal b) { return from_raw(a.raw_ + b.raw_); }
    friend constexpr Decimal operator-(Decimal a, Decimal b) { return from_raw(a.raw_ - b.raw_); }
    // Scaling by an exact integer factor (quantities, threshold scaling).
    friend constexpr Decimal operator*(Decimal a, std::int64_t k) { return from_raw(a.raw_ * k); }
    friend constexpr Decimal operator*(std::int64_t k, Decimal a) { return a * k; }

    friend constexpr auto operator<=>(Decimal, Decimal) = default;

  private:
    std::int64_t raw_ = 0;
};

}  // namespace huri

#endif
