#include "qmex/special.hpp"

#include <charconv>
#include <stdexcept>

namespace qmex {

namespace {

using TS = TruncatedSeries;

std::size_t triangle(std::size_t n) { return n * (n + 1) / 2; }

// prod_{m in the residue class} (1+q^m)/(1-q^m); step 1 for all parts,
// step 2 starting at 1 for odd parts.
TS overpartition_product(std::size_t start, std::size_t step, std::size_t order) {
    TS s = TS::one(order);
    for (std::size_t m = start; m <= order; m += step) {
        s.mul_factor(1, m);
        s.div_factor(-1, m);
    }
    return s;
}

// q^i/(1+q^i) = sum_{r>=1} (-1)^{r-1} q^{ri}, accumulated in place.
void add_geometric_alternating(TS& s, std::size_t i, int sign = 1) {
    int r = sign;
    for (std::size_t t = i; t <= s.order(); t += i) {
        s.add_to_coefficient(t, r);
        r = -r;
    }
}

// q^i/(1-q^i) = sum_{r>=1} q^{ri}, accumulated in place.
void add_geometric(TS& s, std::size_t i) {
    for (std::size_t t = i; t <= s.order(); t += i) s.add_to_coefficient(t, 1);
}

// (q)_inf G_0 + 2 (q)_inf sum_{n>=1} q^n/((q)_n(1+q^n)) G_n, where
// G_n = sum_{i>n} q^i/(1+q^i). This is both "B.rhs" and the tail part of
// "thm5.rhs"; the n = 0 summand absorbs the factor 2 since 1/(1+q^0) = 1/2.
TS weighted_tail_sum(std::size_t order) {
    const TS qinf = pochhammer_infinite(Monomial::q(), 1, order);
    TS tail = tail_series(0, order);
    TS total = qinf * tail;

    TS acc(order);
    TS inv_poch = TS::one(order);
    // term n = q^n/((q)_n(1+q^n)) G_n has valuation 2n+1; running to n = order is safe
    for (std::size_t n = 1; n <= order; ++n) {
        inv_poch.div_factor(-1, n);  // 1/(q)_n
        TS weight = inv_poch;
        weight.div_factor(1, n);     // 1/((q)_n (1+q^n))
        weight.shift_scale(n, 1);    // q^n / ...
        add_geometric_alternating(tail, n, -1);  // G_{n-1} -> G_n
        acc.add_shifted(weight * tail, 0);
    }
    total.add_shifted(qinf * acc, 0, 2);
    return total;
}

// sum_{n>=1} (-1)^n (q^2;q^2)_n q^n H_n(q^2), shared by "thm6.rhs" and "D.rhs".
// Term n has valuation n + 2, so the sum stops once n + 2 exceeds the order.
TS alternating_q2_harmonic_sum(std::size_t order) {
    TS sum(order);
    TS poch = TS::one(order);
    TS harmonic(order);
    for (std::size_t n = 1; n + 2 <= order; ++n) {
        poch.mul_factor(-1, 2 * n);   // (q^2;q^2)_n
        add_geometric(harmonic, 2 * n);  // H_n(q^2)
        sum.add_shifted(poch * harmonic, n, n % 2 ? -1 : 1);
    }
    return sum;
}

// Raw counting sum: sum over the mex value n of
//   q^{lead(n)} * prod_{m>n}(1 + q^{base m - offset}) / denominator(n),
// where the denominator is prod_m (1 - q^{base m - offset}) with the m = n
// factor excluded when exclude_n is set. base/offset place the parts (all
// parts: base 1 offset 0; odd parts: base 2 offset 1).
template <typename LeadFn>
TS direct_count_sum(std::size_t base, std::size_t offset, bool exclude_n, LeadFn lead,
                    std::size_t order) {
    auto part = [&](std::size_t m) { return base * m - offset; };
    TS inv_all = TS::one(order);
    for (std::size_t m = 1; part(m) <= order; ++m) inv_all.div_factor(-1, part(m));
    TS tail = TS::one(order);
    for (std::size_t m = 1; part(m) <= order; ++m) tail.mul_factor(1, part(m));

    TS sum(order);
    for (std::size_t n = 1; lead(n) <= order; ++n) {
        if (part(n) <= order) tail.div_factor(1, part(n));  // now prod_{m>n}(1+q^{part(m)})
        TS denom = inv_all;
        if (exclude_n && part(n) <= order) denom.mul_factor(-1, part(n));
        sum.add_shifted(tail * denom, lead(n));
    }
    return sum;
}

std::size_t parse_index(std::string_view text) {
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || p != text.data() + text.size())
        throw std::invalid_argument("bad builder index: " + std::string(text));
    return n;
}

// "key=value" -> value, insisting on the key.
std::string_view parse_kv(std::string_view token, std::string_view key) {
    if (token.size() < key.size() + 1 || token.substr(0, key.size()) != key ||
        token[key.size()] != '=')
        throw std::invalid_argument("expected " + std::string(key) + "=... in builder id");
    return token.substr(key.size() + 1);
}

}  // namespace

TS overpartition_gf(std::size_t order) { return overpartition_product(1, 1, order); }

TS odd_overpartition_gf(std::size_t order) { return overpartition_product(1, 2, order); }

TS r_rep1(std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 0; triangle(n) <= order; ++n) {
        if (n > 0) inv.div_factor(1, n);  // 1/(-q)_n
        sum.add_shifted(inv, triangle(n));
    }
    return sum;
}

TS r_rep2(std::size_t order) {
    TS sum = TS::one(order);
    TS poch = TS::one(order);  // (q)_{n-1}
    for (std::size_t n = 1; n <= order; ++n) {
        sum.add_shifted(poch, n, n % 2 ? 1 : -1);
        poch.mul_factor(-1, n);
    }
    return sum;
}

TS r_rep3(std::size_t order) {
    const TS qinf = pochhammer_infinite(Monomial::q(), 1, order);
    TS inner(order);
    TS inv = TS::one(order);
    for (std::size_t n = 1; n <= order; ++n) {
        inv.div_factor(-1, n);  // 1/(q)_n
        TS t = inv;
        t.div_factor(1, n);     // 1/((q)_n (1+q^n))
        inner.add_shifted(t, n);
    }
    TS result = qinf;
    result.add_shifted(qinf * inner, 0, 2);
    return result;
}

TS companion_f(std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 1; n * n <= order; ++n) {
        inv.div_factor(-1, 2 * n - 1);  // 1/(q;q^2)_n
        sum.add_shifted(inv, n * n, n % 2 ? -1 : 1);
    }
    return sum;
}

TS companion_f_neg(std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 1; n * n <= order; ++n) {
        inv.div_factor(1, 2 * n - 1);  // 1/(-q;q^2)_n
        sum.add_shifted(inv, n * n);
    }
    return sum;
}

TS mock_theta_f0(std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 0; n * n <= order; ++n) {
        if (n > 0) inv.div_factor(1, n);  // 1/(-q)_n
        sum.add_shifted(inv, n * n);
    }
    return sum;
}

namespace {

TS mock_theta_f1_impl(int sign, std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 0; 2 * n * n + 2 * n <= order; ++n) {
        inv.div_factor(-sign, 2 * n + 1);  // 1/(sign*q; q^2)_{n+1}
        sum.add_shifted(inv, 2 * n * n + 2 * n);
    }
    return sum;
}

}  // namespace

TS mock_theta_f1(std::size_t order) { return mock_theta_f1_impl(1, order); }

TS mock_theta_f1_neg(std::size_t order) { return mock_theta_f1_impl(-1, order); }

TS tail_series(std::size_t n, std::size_t order) {
    TS sum(order);
    for (std::size_t i = n + 1; i <= order; ++i) add_geometric_alternating(sum, i);
    return sum;
}

TS q_harmonic(std::size_t n, std::size_t order) {
    TS sum(order);
    for (std::size_t i = 1; i <= n && i <= order; ++i) add_geometric(sum, i);
    return sum;
}

TS q_harmonic_binom_form(std::size_t n, std::size_t order) {
    TS sum(order);
    for (std::size_t i = 1; i <= n && triangle(i) <= order; ++i) {
        const std::size_t degree = i * (n - i);
        TS t = qbinomial(static_cast<long long>(n), static_cast<long long>(i),
                         std::max(order, degree));
        if (t.order() > order) t = t.truncated(order);
        t.div_factor(-1, i);  // [n i]_q / (1-q^i)
        sum.add_shifted(t, triangle(i), i % 2 ? 1 : -1);
    }
    return sum;
}

TS divisor_lambert(std::size_t order) {
    TS sum(order);
    for (std::size_t i = 1; i <= order; ++i) add_geometric(sum, i);
    return sum;
}

TS divisor_signed(std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t i = 1; triangle(i) <= order; ++i) {
        inv.div_factor(-1, i);  // 1/(q)_i
        TS t = inv;
        t.div_factor(-1, i);    // 1/((q)_i (1-q^i))
        sum.add_shifted(t, triangle(i), i % 2 ? 1 : -1);
    }
    return sum;
}

TS omex_count_gf(std::size_t order) {
    TS two_minus_r = -r_rep1(order);
    two_minus_r.add_to_coefficient(0, 2);
    return overpartition_gf(order) * two_minus_r;
}

TS omoex_count_gf(std::size_t order) {
    TS one_minus_f = -companion_f_neg(order);
    one_minus_f.add_to_coefficient(0, 1);
    return odd_overpartition_gf(order) * one_minus_f;
}

TS tilde_omex_count_gf(std::size_t order) {
    TS f0_minus_one = mock_theta_f0(order);
    f0_minus_one.add_to_coefficient(0, -1);
    return overpartition_gf(order) * f0_minus_one;
}

TS tilde_omoex_count_gf(std::size_t order) {
    return (odd_overpartition_gf(order) * mock_theta_f1_neg(order)).shifted(1);
}

TS omex_count_direct(std::size_t order) {
    return direct_count_sum(1, 0, true, [](std::size_t n) { return n * (n - 1) / 2; }, order);
}

TS omoex_count_direct(std::size_t order) {
    return direct_count_sum(2, 1, true, [](std::size_t n) { return (n - 1) * (n - 1); }, order);
}

TS tilde_omex_count_direct(std::size_t order) {
    return direct_count_sum(1, 0, false, [](std::size_t n) { return n * n; }, order);
}

TS tilde_omoex_count_direct(std::size_t order) {
    return direct_count_sum(2, 1, false, [](std::size_t n) { return 2 * n * n - 2 * n + 1; },
                            order);
}

TS sigma_omex_gf(std::size_t order) {
    TS inner = r_rep1(order) - weighted_tail_sum(order);
    return overpartition_gf(order) * inner;
}

TS sigma_omoex_index_gf(std::size_t order) {
    TS inner = TS::one(order);
    inner.add_shifted(alternating_q2_harmonic_sum(order), 1);
    return odd_overpartition_gf(order) * inner;
}

TS gasrah_sum(Monomial z, std::size_t order) {
    if (z.is_zero()) return TS::one(order);
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 0;; ++n) {
        const std::size_t valuation = n * z.exponent + n * (n - 1) / 2;
        if (valuation > order) break;
        if (n > 0) inv.div_factor(z.sign, z.exponent + n);  // 1/(-zq)_n
        sum.add_shifted(inv, valuation, z.sign == -1 && n % 2 ? -1 : 1);
    }
    return sum;
}

TS gupta_lhs(Monomial c, Monomial t, std::size_t order) {
    if (c == Monomial{1, 0})
        throw std::invalid_argument("gupta: c = 1 makes the paired sum singular");
    if (t.is_zero() || t.exponent == 0)
        throw std::invalid_argument("gupta: t must have exponent >= 1");
    const TS t_inf = pochhammer_infinite(t, 1, order);
    TS sum(order);
    TS poch = TS::one(order);  // (t)_n
    for (std::size_t n = 0;; ++n) {
        // (t)_n - (t)_inf has valuation exponent(t) + n
        if (n * c.exponent + t.exponent + n > order) break;
        if (c.is_zero() && n > 0) break;
        sum.add_shifted(poch - t_inf, n * c.exponent,
                        c.sign == -1 && n % 2 ? -1 : 1);
        poch.mul_factor(-t.sign, t.exponent + n);
    }
    return sum;
}

TS gupta_rhs(Monomial c, Monomial t, std::size_t order) {
    if (c == Monomial{1, 0})
        throw std::invalid_argument("gupta: c = 1 makes the paired sum singular");
    if (t.is_zero() || t.exponent == 0)
        throw std::invalid_argument("gupta: t must have exponent >= 1");
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 1; n * t.exponent <= order; ++n) {
        inv.div_factor(-1, n);  // 1/(q)_n
        TS term = inv;
        if (!c.is_zero()) term.div_factor(-c.sign, c.exponent + n);  // 1/(1 - c q^n)
        sum.add_shifted(term, n * t.exponent, t.sign == -1 && n % 2 ? -1 : 1);
    }
    return pochhammer_infinite(t, 1, order) * sum;
}

TS a_series(std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 1; n * (n - 1) / 2 <= order; ++n) {
        inv.div_factor(1, n);
        sum.add_shifted(inv, n * (n - 1) / 2, n);
    }
    return sum;
}

TS b_series(std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 1; triangle(n) <= order; ++n) {
        inv.div_factor(1, n);
        sum.add_shifted(inv, triangle(n), n);
    }
    return sum;
}

TS b_series_tails(std::size_t order) { return weighted_tail_sum(order); }

TS c_series(std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 1; (n - 1) * (n - 1) <= order; ++n) {
        inv.div_factor(1, 2 * n - 1);  // 1/(-q;q^2)_n
        sum.add_shifted(inv, (n - 1) * (n - 1), n);
    }
    return sum;
}

TS c_series_closed(std::size_t order) {
    TS s = companion_f_neg(order);
    s.add_to_coefficient(0, 1);
    return s;
}

TS d_series(std::size_t order) {
    TS sum(order);
    TS inv = TS::one(order);
    for (std::size_t n = 1; n * n <= order; ++n) {
        inv.div_factor(1, 2 * n - 1);
        sum.add_shifted(inv, n * n, n);
    }
    return sum;
}

TS d_series_closed(std::size_t order) {
    TS s = companion_f_neg(order);
    s.add_shifted(alternating_q2_harmonic_sum(order), 1, -1);
    return s;
}

TS build(std::string_view id, std::size_t order) {
    if (id == "P.bar") return overpartition_gf(order);
    if (id == "P.bar.odd") return odd_overpartition_gf(order);
    if (id == "R.rep1") return r_rep1(order);
    if (id == "R.rep2") return r_rep2(order);
    if (id == "R.rep3") return r_rep3(order);
    if (id == "F") return companion_f(order);
    if (id == "F.negq") return companion_f_neg(order);
    if (id == "f0") return mock_theta_f0(order);
    if (id == "F1") return mock_theta_f1(order);
    if (id == "F1.negq") return mock_theta_f1_neg(order);
    if (id == "divisor.lambert") return divisor_lambert(order);
    if (id == "divisor.signed") return divisor_signed(order);
    if (id == "thm1.rhs") return omex_count_gf(order);
    if (id == "thm2.rhs") return omoex_count_gf(order);
    if (id == "thm3.rhs") return tilde_omex_count_gf(order);
    if (id == "thm4.rhs") return tilde_omoex_count_gf(order);
    if (id == "thm5.rhs") return sigma_omex_gf(order);
    if (id == "thm6.rhs") return sigma_omoex_index_gf(order);
    if (id == "thm1.comb") return omex_count_direct(order);
    if (id == "thm2.comb") return omoex_count_direct(order);
    if (id == "thm3.comb") return tilde_omex_count_direct(order);
    if (id == "thm4.comb") return tilde_omoex_count_direct(order);
    if (id == "A.lhs") return a_series(order);
    if (id == "B.lhs") return b_series(order);
    if (id == "B.rhs") return b_series_tails(order);
    if (id == "C.lhs") return c_series(order);
    if (id == "C.rhs") return c_series_closed(order);
    if (id == "D.lhs") return d_series(order);
    if (id == "D.rhs") return d_series_closed(order);

    constexpr std::string_view g_tail = "G.tail.";
    if (id.starts_with(g_tail)) return tail_series(parse_index(id.substr(g_tail.size())), order);
    constexpr std::string_view h_au = "H.qharm.AU.";
    if (id.starts_with(h_au))
        return q_harmonic_binom_form(parse_index(id.substr(h_au.size())), order);
    constexpr std::string_view h_q = "H.qharm.";
    if (id.starts_with(h_q)) return q_harmonic(parse_index(id.substr(h_q.size())), order);
    constexpr std::string_view gasrah = "gasrah.lhs.";
    if (id.starts_with(gasrah))
        return gasrah_sum(Monomial::parse(parse_kv(id.substr(gasrah.size()), "z")), order);
    for (auto [prefix, fn] : {std::pair{std::string_view{"gupta.lhs."}, &gupta_lhs},
                              std::pair{std::string_view{"gupta.rhs."}, &gupta_rhs}}) {
        if (!id.starts_with(prefix)) continue;
        std::string_view rest = id.substr(prefix.size());
        const std::size_t dot = rest.find(".t=");
        if (dot == std::string_view::npos)
            throw std::invalid_argument("bad gupta builder id: " + std::string(id));
        Monomial c = Monomial::parse(parse_kv(rest.substr(0, dot), "c"));
        Monomial t = Monomial::parse(parse_kv(rest.substr(dot + 1), "t"));
        return fn(c, t, order);
    }
    throw std::invalid_argument("unknown series id: " + std::string(id));
}

std::vector<std::string> builder_ids() {
    return {
        "P.bar",     "P.bar.odd", "R.rep1",    "R.rep2",    "R.rep3",
        "F",         "F.negq",    "f0",        "F1",        "F1.negq",
        "divisor.lambert", "divisor.signed",
        "thm1.rhs",  "thm2.rhs",  "thm3.rhs",  "thm4.rhs",  "thm5.rhs", "thm6.rhs",
        "thm1.comb", "thm2.comb", "thm3.comb", "thm4.comb",
        "A.lhs",     "B.lhs",     "B.rhs",     "C.lhs",     "C.rhs",
        "D.lhs",     "D.rhs",
        "G.tail.0",  "H.qharm.1", "H.qharm.AU.1",
        "gasrah.lhs.z=q", "gupta.lhs.c=-1.t=q", "gupta.rhs.c=-1.t=q",
    };
}

}  // namespace qmex
