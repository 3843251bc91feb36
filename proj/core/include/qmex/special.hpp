#pragma once

#include "qmex/qproducts.hpp"
#include "qmex/series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qmex {

// Builders for the named series of the catalog. Each is a pure function of
// the truncation order; every infinite sum stops once the next summand's
// q-adic valuation exceeds the order, so the truncations are exact.

/// "P.bar": prod (1+q^m)/(1-q^m), the overpartition generating function.
TruncatedSeries overpartition_gf(std::size_t order);
/// "P.bar.odd": same product over odd m only.
TruncatedSeries odd_overpartition_gf(std::size_t order);

/// "R.rep1": sum_{n>=0} q^{n(n+1)/2} / (-q)_n.
TruncatedSeries r_rep1(std::size_t order);
/// "R.rep2": 1 + sum_{n>=1} (-1)^{n-1} q^n (q)_{n-1}.
TruncatedSeries r_rep2(std::size_t order);
/// "R.rep3": (q)_inf + 2 (q)_inf sum_{n>=1} q^n / ((q)_n (1+q^n)).
TruncatedSeries r_rep3(std::size_t order);

/// "F": sum_{n>=1} (-1)^n q^{n^2} / (q;q^2)_n.
TruncatedSeries companion_f(std::size_t order);
/// "F.negq": F with q -> -q, built directly as sum q^{n^2} / (-q;q^2)_n.
TruncatedSeries companion_f_neg(std::size_t order);
/// "f0": sum_{n>=0} q^{n^2} / (-q)_n (fifth order mock theta function).
TruncatedSeries mock_theta_f0(std::size_t order);
/// "F1": sum_{n>=0} q^{2n^2+2n} / (q;q^2)_{n+1} (fifth order mock theta function).
TruncatedSeries mock_theta_f1(std::size_t order);
/// "F1.negq": F1 with q -> -q.
TruncatedSeries mock_theta_f1_neg(std::size_t order);

/// "G.tail.n": sum_{i>n} q^i / (1+q^i).
TruncatedSeries tail_series(std::size_t n, std::size_t order);
/// "H.qharm.n": sum_{i=1..n} q^i / (1-q^i), the q-harmonic number.
TruncatedSeries q_harmonic(std::size_t n, std::size_t order);
/// "H.qharm.AU.n": sum_{i=1..n} (-1)^{i-1} q^{i(i+1)/2} [n i]_q / (1-q^i),
/// the finite q-binomial form of the q-harmonic number.
TruncatedSeries q_harmonic_binom_form(std::size_t n, std::size_t order);

/// "divisor.lambert": sum_{i>=1} q^i / (1-q^i); coefficient n is d(n).
TruncatedSeries divisor_lambert(std::size_t order);
/// "divisor.signed": sum_{i>=1} (-1)^{i-1} q^{i(i+1)/2} / ((1-q^i)(q)_i).
TruncatedSeries divisor_signed(std::size_t order);

/// "thm1.rhs".."thm4.rhs": closed forms of the four counting functions.
TruncatedSeries omex_count_gf(std::size_t order);         // P.bar (2 - R)
TruncatedSeries omoex_count_gf(std::size_t order);        // P.bar.odd (1 - F(-q))
TruncatedSeries tilde_omex_count_gf(std::size_t order);   // P.bar (f0 - 1)
TruncatedSeries tilde_omoex_count_gf(std::size_t order);  // q P.bar.odd F1(-q)

/// "thm1.comb".."thm4.comb": the same counting functions as raw sums over the
/// mex value n, one product term per n, before any series simplification.
TruncatedSeries omex_count_direct(std::size_t order);
TruncatedSeries omoex_count_direct(std::size_t order);
TruncatedSeries tilde_omex_count_direct(std::size_t order);
TruncatedSeries tilde_omoex_count_direct(std::size_t order);

/// "thm5.rhs": P.bar (R - (q)_inf G_0 - 2 (q)_inf sum_{n>=1} q^n/((q)_n(1+q^n)) G_n).
/// The n = 0 term of the tail sum is folded with the prefactor 2 so all
/// coefficients stay integers.
TruncatedSeries sigma_omex_gf(std::size_t order);
/// "thm6.rhs": P.bar.odd (1 + q sum_{n>=1} (-1)^n (q^2;q^2)_n q^n H_n(q^2)).
TruncatedSeries sigma_omoex_index_gf(std::size_t order);

/// "gasrah.lhs.z=..": sum_{n>=0} z^n q^{n(n-1)/2} / (-zq)_n, equal to 1 + z.
TruncatedSeries gasrah_sum(Monomial z, std::size_t order);
/// "gupta.lhs.c=..t=..": sum_{n>=0} c^n ((t)_n - (t)_inf). Rejects c = 1.
TruncatedSeries gupta_lhs(Monomial c, Monomial t, std::size_t order);
/// "gupta.rhs.c=..t=..": (t)_inf sum_{n>=1} t^n / ((q)_n (1 - c q^n)).
TruncatedSeries gupta_rhs(Monomial c, Monomial t, std::size_t order);

/// "A.lhs".."D.rhs": the weighted (z-derivative at z = 1) endpoint series of
/// the two sigma identities, pre-differentiated into single-variable sums.
TruncatedSeries a_series(std::size_t order);         // sum n q^{n(n-1)/2} / (-q)_n
TruncatedSeries b_series(std::size_t order);         // sum n q^{n(n+1)/2} / (-q)_n
TruncatedSeries b_series_tails(std::size_t order);   // tail form of b_series
TruncatedSeries c_series(std::size_t order);         // sum n q^{(n-1)^2} / (-q;q^2)_n
TruncatedSeries c_series_closed(std::size_t order);  // 1 + F(-q)
TruncatedSeries d_series(std::size_t order);         // sum n q^{n^2} / (-q;q^2)_n
TruncatedSeries d_series_closed(std::size_t order);  // F(-q) - q sum (-1)^n (q^2;q^2)_n q^n H_n(q^2)

/// Build a series by its stable string id ("R.rep1", "thm5.rhs", "G.tail.3",
/// "gasrah.lhs.z=q", "gupta.rhs.c=-1.t=q", ...). Throws std::invalid_argument
/// for an unknown id.
TruncatedSeries build(std::string_view id, std::size_t order);

/// The fixed ids plus one representative of each parameterized family.
/// Parameterized families accept any valid parameter, e.g. "G.tail.7".
std::vector<std::string> builder_ids();

}  // namespace qmex
