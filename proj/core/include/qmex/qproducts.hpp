#pragma once

#include "qmex/series.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qmex {

/// A series parameter of the form sign * q^exponent, or 0 when sign == 0.
/// These are the only parameter values the Pochhammer and hypergeometric
/// routines accept; everything built here stays inside Z[[q]].
struct Monomial {
    int sign = 0;               // -1, 0 or +1
    std::size_t exponent = 0;   // forced to 0 when sign == 0

    static Monomial zero() { return {}; }
    static Monomial q(std::size_t e = 1) { return {1, e}; }
    static Monomial neg_q(std::size_t e = 1) { return {-1, e}; }

    bool is_zero() const { return sign == 0; }

    friend Monomial operator*(Monomial a, Monomial b) {
        if (a.sign * b.sign == 0) return {};
        return {a.sign * b.sign, a.exponent + b.exponent};
    }
    friend Monomial operator-(Monomial a) {
        return {-a.sign, a.sign == 0 ? 0 : a.exponent};
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// "0", "1", "-1", "q", "-q", "q^2", ... Used in builder and case ids.
    std::string str() const;
    static Monomial parse(std::string_view text);  // inverse of str()
};

/// (a; q^base)_count = prod_{k=0}^{count-1} (1 - a q^{base k}), truncated.
/// The empty product (count == 0) is 1.
TruncatedSeries pochhammer_finite(Monomial a, std::size_t base, std::size_t count,
                                  std::size_t order);

/// (a; q^base)_infinity. Requires a == 0 or exponent(a) >= 1 so that the
/// product converges coefficientwise; factors that are 1 mod q^{order+1} are
/// skipped, making the truncation exact.
TruncatedSeries pochhammer_infinite(Monomial a, std::size_t base, std::size_t order);

/// Gaussian binomial coefficient as an exact polynomial in q of degree
/// bottom*(top - bottom) when top >= bottom >= 0, and the zero series
/// otherwise. Computed by exact polynomial division with a vanishing-remainder
/// check; throws if `order` is smaller than the polynomial degree (the result
/// would be silently truncated).
TruncatedSeries qbinomial(long long top, long long bottom, std::size_t order);

/// 1-phi-0 basic hypergeometric sum: sum_k (a;q^base)_k / (q^base;q^base)_k * z^k.
/// z must be 0 or have exponent >= 1 so the sum terminates q-adically.
TruncatedSeries phi_1_0(Monomial a, Monomial z, std::size_t base, std::size_t order);

/// 2-phi-1 basic hypergeometric sum:
///   sum_k (a;q^base)_k (b;q^base)_k / ((q^base;q^base)_k (c;q^base)_k) * z^k.
/// c must be 0 or have exponent >= 1 (c = +-1 leaves Z[[q]]); z as in phi_1_0.
/// The number of terms is derived from the q-adic valuation of z unless
/// `terms` is given explicitly.
TruncatedSeries phi_2_1(Monomial a, Monomial b, Monomial c, Monomial z,
                        std::size_t base, std::size_t order,
                        std::optional<std::size_t> terms = std::nullopt);

}  // namespace qmex
