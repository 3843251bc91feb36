#include "qmex/qproducts.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace qmex {

std::string Monomial::str() const {
    if (sign == 0) return "0";
    std::string s = sign < 0 ? "-" : "";
    if (exponent == 0) return s + "1";
    s += "q";
    if (exponent > 1) s += "^" + std::to_string(exponent);
    return s;
}

Monomial Monomial::parse(std::string_view text) {
    std::string_view rest = text;
    int sign = 1;
    if (!rest.empty() && rest.front() == '-') {
        sign = -1;
        rest.remove_prefix(1);
    }
    if (rest == "0") {
        if (sign < 0) throw std::invalid_argument("bad monomial: " + std::string(text));
        return {};
    }
    if (rest == "1") return {sign, 0};
    if (rest.empty() || rest.front() != 'q')
        throw std::invalid_argument("bad monomial: " + std::string(text));
    rest.remove_prefix(1);
    if (rest.empty()) return {sign, 1};
    if (rest.front() != '^') throw std::invalid_argument("bad monomial: " + std::string(text));
    rest.remove_prefix(1);
    std::size_t e = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
    if (ec != std::errc() || p != rest.data() + rest.size() || e == 0)
        throw std::invalid_argument("bad monomial: " + std::string(text));
    return {sign, e};
}

namespace {

void check_base(std::size_t base) {
    if (base == 0) throw std::invalid_argument("base must be >= 1");
}

}  // namespace

TruncatedSeries pochhammer_finite(Monomial a, std::size_t base, std::size_t count,
                                  std::size_t order) {
    check_base(base);
    TruncatedSeries s = TruncatedSeries::one(order);
    if (a.is_zero()) return s;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t e = a.exponent + base * k;
        if (e > order) break;  // remaining factors are 1 mod q^{order+1}
        s.mul_factor(-a.sign, e);
        if (e == 0 && a.sign == 1) break;  // factor (1 - 1): product is zero from here on
    }
    return s;
}

TruncatedSeries pochhammer_infinite(Monomial a, std::size_t base, std::size_t order) {
    check_base(base);
    if (!a.is_zero() && a.exponent == 0)
        throw std::invalid_argument(
            "pochhammer_infinite: parameter " + a.str() +
            " has no coefficientwise-convergent infinite product");
    TruncatedSeries s = TruncatedSeries::one(order);
    if (a.is_zero()) return s;
    for (std::size_t e = a.exponent; e <= order; e += base) s.mul_factor(-a.sign, e);
    return s;
}

TruncatedSeries qbinomial(long long top, long long bottom, std::size_t order) {
    if (bottom < 0 || top < bottom) return TruncatedSeries::zero(order);
    const std::size_t n = static_cast<std::size_t>(bottom);
    const std::size_t m = static_cast<std::size_t>(top);
    const std::size_t degree = n * (m - n);
    if (order < degree)
        throw std::invalid_argument("qbinomial: order " + std::to_string(order) +
                                    " would truncate a polynomial of degree " +
                                    std::to_string(degree));
    // Work at the degree of the numerator product so the division is a true
    // polynomial division with a checkable remainder.
    std::size_t numerator_degree = 0;
    for (std::size_t k = m - n + 1; k <= m; ++k) numerator_degree += k;
    const std::size_t work = std::max(order, numerator_degree);

    TruncatedSeries s = TruncatedSeries::one(work);
    for (std::size_t k = m - n + 1; k <= m; ++k) s.mul_factor(-1, k);
    for (std::size_t k = 1; k <= n; ++k) s.div_factor(-1, k);
    for (std::size_t i = degree + 1; i <= work; ++i) {
        if (!s.coefficient(i).is_zero())
            throw std::logic_error("qbinomial: division left a nonzero remainder");
    }
    return s.truncated(order);
}

namespace {

// Core of the phi sums: sum_{k>=0} prod(upper)_k / ((q^base)_k prod(lower)_k) z^k.
// Term k is obtained from term k-1 by O(order) binomial-factor updates, so the
// whole sum costs O(order^2 / exponent(z)).
TruncatedSeries phi_sum(const std::vector<Monomial>& upper, const std::vector<Monomial>& lower,
                        Monomial z, std::size_t base, std::size_t order,
                        std::optional<std::size_t> terms) {
    check_base(base);
    for (const Monomial& c : lower) {
        if (!c.is_zero() && c.exponent == 0)
            throw std::invalid_argument("unsupported parameter " + c.str() +
                                        " in series denominator; add a bespoke builder");
    }
    if (z.is_zero()) return TruncatedSeries::one(order);  // only k = 0 survives
    if (z.exponent == 0)
        throw std::invalid_argument("unsupported argument " + z.str() +
                                    "; add a bespoke builder");

    const std::size_t max_k = terms ? *terms : order / z.exponent;
    TruncatedSeries sum = TruncatedSeries::one(order);
    TruncatedSeries term = TruncatedSeries::one(order);
    for (std::size_t k = 1; k <= max_k; ++k) {
        for (const Monomial& a : upper) {
            if (!a.is_zero()) term.mul_factor(-a.sign, a.exponent + base * (k - 1));
        }
        term.div_factor(-1, base * k);
        for (const Monomial& c : lower) {
            if (!c.is_zero()) term.div_factor(-c.sign, c.exponent + base * (k - 1));
        }
        term.shift_scale(z.exponent, z.sign);
        if (term.is_zero()) break;
        sum.add_shifted(term, 0);
    }
    return sum;
}

}  // namespace

TruncatedSeries phi_1_0(Monomial a, Monomial z, std::size_t base, std::size_t order) {
    return phi_sum({a}, {}, z, base, order, std::nullopt);
}

TruncatedSeries phi_2_1(Monomial a, Monomial b, Monomial c, Monomial z,
                        std::size_t base, std::size_t order,
                        std::optional<std::size_t> terms) {
    return phi_sum({a, b}, {c}, z, base, order, terms);
}

}  // namespace qmex
