#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qmex {

/// Exact signed integer coefficient. Several of the series handled here have
/// coefficients past 64 bits (overpartition counts do so near weight 190),
/// so there is no machine-integer fast path anywhere.
using Coefficient = boost::multiprecision::cpp_int;

/// A power series in q known exactly through q^order: coefficient(k) is the
/// true coefficient of q^k for every k <= order(). Binary operations between
/// series of different orders truncate the result to the smaller order.
///
/// Instances are plain values. Once built they can be shared across threads
/// read-only; the in-place helpers (mul_factor, div_factor, add_shifted, ...)
/// exist for the construction phase of the builders and run in O(order).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
    static TruncatedSeries one(std::size_t order);
    /// c * q^k, all-zero when k > order.
    static TruncatedSeries monomial(const Coefficient& c, std::size_t k, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Coefficient& coefficient(std::size_t k) const;
    std::span<const Coefficient> coefficients() const { return coeffs_; }
    bool is_zero() const;

    /// Keep coefficients 0..new_order; requires new_order <= order().
    TruncatedSeries truncated(std::size_t new_order) const;
    /// q -> q^m (m >= 1): coefficient of q^{mk} becomes coefficient(k);
    /// everything else is zero. Result keeps this order.
    TruncatedSeries substitute_q_power(std::size_t m) const;
    /// q -> -q: negates the coefficients of odd powers.
    TruncatedSeries alternate_sign() const;
    /// Multiplicative inverse up to order(). The constant term must be +1 or
    /// -1, otherwise no integer-coefficient inverse exists at this truncation.
    TruncatedSeries inverse() const;
    TruncatedSeries shifted(std::size_t k) const;  // * q^k
    TruncatedSeries scaled(const Coefficient& c) const;

    void set_coefficient(std::size_t k, const Coefficient& c);
    void add_to_coefficient(std::size_t k, const Coefficient& c);

    /// this += scale * q^shift * other, clipped to order().
    void add_shifted(const TruncatedSeries& other, std::size_t shift,
                     const Coefficient& scale = 1);
    /// this *= (1 + sign q^k), sign in {-1, 0, +1}. k == 0 scales by 1 + sign.
    void mul_factor(int sign, std::size_t k);
    /// this /= (1 + sign q^k) exactly as a power series; requires k >= 1.
    void div_factor(int sign, std::size_t k);
    /// this *= c q^k (drops the top k coefficients).
    void shift_scale(std::size_t k, const Coefficient& c);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a);

    /// Equal as stored values: same order and same coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<Coefficient> coeffs_;
};

/// Outcome of comparing two series coefficientwise up to the smaller order.
struct SeriesComparison {
    std::size_t compared_order = 0;
    std::optional<std::size_t> first_mismatch;  // smallest differing exponent
    bool agree() const { return !first_mismatch.has_value(); }
};

SeriesComparison equal_up_to(const TruncatedSeries& a, const TruncatedSeries& b);

/// Human-readable form, e.g. "1 + 2q - q^3". Intended for diagnostics.
std::string to_string(const TruncatedSeries& s);

}  // namespace qmex
