#include "qmex/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmex {

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Coefficient& c, std::size_t k,
                                          std::size_t order) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
}

const Coefficient& TruncatedSeries::coefficient(std::size_t k) const {
    if (k >= coeffs_.size()) throw std::out_of_range("coefficient index beyond truncation order");
    return coeffs_[k];
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Coefficient& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    if (new_order > order()) throw std::invalid_argument("truncated: new order exceeds stored order");
    TruncatedSeries s(new_order);
    std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order) + 1,
              s.coeffs_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::substitute_q_power(std::size_t m) const {
    if (m == 0) throw std::invalid_argument("substitute_q_power: power must be >= 1");
    TruncatedSeries s(order());
    for (std::size_t k = 0; m * k <= order(); ++k) s.coeffs_[m * k] = coeffs_[k];
    return s;
}

TruncatedSeries TruncatedSeries::alternate_sign() const {
    TruncatedSeries s(*this);
    for (std::size_t k = 1; k < s.coeffs_.size(); k += 2) s.coeffs_[k].backend().negate();
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const Coefficient& a0 = coeffs_[0];
    if (a0 != 1 && a0 != -1) throw std::domain_error("not invertible at this truncation");
    const std::size_t n = order();
    TruncatedSeries b(n);
    b.coeffs_[0] = a0;  // 1/(+-1) = +-1
    for (std::size_t i = 1; i <= n; ++i) {
        Coefficient acc;
        for (std::size_t k = 1; k <= i; ++k) {
            if (!coeffs_[k].is_zero()) acc += coeffs_[k] * b.coeffs_[i - k];
        }
        b.coeffs_[i] = -a0 * acc;
    }
    return b;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
    TruncatedSeries s(order());
    for (std::size_t i = k; i <= order(); ++i) s.coeffs_[i] = coeffs_[i - k];
    return s;
}

TruncatedSeries TruncatedSeries::scaled(const Coefficient& c) const {
    TruncatedSeries s(*this);
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

void TruncatedSeries::set_coefficient(std::size_t k, const Coefficient& c) {
    if (k >= coeffs_.size()) throw std::out_of_range("coefficient index beyond truncation order");
    coeffs_[k] = c;
}

void TruncatedSeries::add_to_coefficient(std::size_t k, const Coefficient& c) {
    if (k >= coeffs_.size()) throw std::out_of_range("coefficient index beyond truncation order");
    coeffs_[k] += c;
}

void TruncatedSeries::add_shifted(const TruncatedSeries& other, std::size_t shift,
                                  const Coefficient& scale) {
    if (scale.is_zero() || shift > order()) return;
    const std::size_t top = std::min(order() - shift, other.order());
    if (scale == 1) {
        for (std::size_t i = 0; i <= top; ++i) coeffs_[i + shift] += other.coeffs_[i];
    } else {
        for (std::size_t i = 0; i <= top; ++i) coeffs_[i + shift] += scale * other.coeffs_[i];
    }
}

void TruncatedSeries::mul_factor(int sign, std::size_t k) {
    if (sign == 0) return;
    if (k == 0) {
        // constant factor 1 + sign
        const int c = 1 + sign;
        for (auto& x : coeffs_) x *= c;
        return;
    }
    if (k > order()) return;
    for (std::size_t i = order(); i >= k; --i) {
        if (sign > 0)
            coeffs_[i] += coeffs_[i - k];
        else
            coeffs_[i] -= coeffs_[i - k];
    }
}

void TruncatedSeries::div_factor(int sign, std::size_t k) {
    if (sign == 0) return;
    if (k == 0) throw std::domain_error("div_factor: constant binomial factor is not a unit");
    if (k > order()) return;
    for (std::size_t i = k; i <= order(); ++i) {
        if (sign > 0)
            coeffs_[i] -= coeffs_[i - k];
        else
            coeffs_[i] += coeffs_[i - k];
    }
}

void TruncatedSeries::shift_scale(std::size_t k, const Coefficient& c) {
    if (k > order() || c.is_zero()) {
        std::fill(coeffs_.begin(), coeffs_.end(), Coefficient{});
        return;
    }
    for (std::size_t i = order() + 1; i-- > k;) {
        coeffs_[i] = coeffs_[i - k] * c;
    }
    std::fill(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k), Coefficient{});
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j + i <= n; ++j) {
            if (!b.coeffs_[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a);
    for (auto& x : r.coeffs_) x.backend().negate();
    return r;
}

SeriesComparison equal_up_to(const TruncatedSeries& a, const TruncatedSeries& b) {
    SeriesComparison cmp;
    cmp.compared_order = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= cmp.compared_order; ++k) {
        if (a.coefficient(k) != b.coefficient(k)) {
            cmp.first_mismatch = k;
            break;
        }
    }
    return cmp;
}

std::string to_string(const TruncatedSeries& s) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        const Coefficient& c = s.coefficient(k);
        if (c.is_zero()) continue;
        Coefficient abs_c = c < 0 ? Coefficient(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = abs_c == 1;
        if (k == 0 || !unit) out << abs_c.str();
        if (k > 0) {
            out << "q";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace qmex
