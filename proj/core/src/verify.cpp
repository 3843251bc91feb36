#include "qmex/verify.hpp"

#include "qmex/overpartitions.hpp"
#include "qmex/qproducts.hpp"
#include "qmex/special.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace qmex {

namespace {

using TS = TruncatedSeries;

TS counting_series(std::size_t order, const std::function<std::int64_t(int)>& count) {
    TS s(order);
    for (std::size_t n = 0; n <= order; ++n)
        s.set_coefficient(n, Coefficient(count(static_cast<int>(n))));
    return s;
}

SeriesBuilderFn enum_counts(std::int64_t (*count)(int, StatKind), StatKind kind) {
    return [count, kind](std::size_t order) {
        return counting_series(order, [&](int n) { return count(n, kind); });
    };
}

SeriesBuilderFn builder(std::string id) {
    return [id = std::move(id)](std::size_t order) { return build(id, order); };
}

Monomial monomial_ratio(Monomial num, Monomial den) {
    if (num.is_zero()) return {};
    if (den.is_zero() || num.exponent < den.exponent)
        throw std::invalid_argument("parameter ratio " + num.str() + "/" + den.str() +
                                    " is not a monomial");
    return {num.sign * den.sign, num.exponent - den.exponent};
}

// sum_k (a)_k (b)_k / ((q)_k (c)_k) z^k, base q^m.
SeriesBuilderFn heine_lhs(Monomial a, Monomial b, Monomial c, Monomial z, std::size_t m) {
    return [=](std::size_t order) { return phi_2_1(a, b, c, z, m, order); };
}

// (b)_inf (az)_inf / ((c)_inf (z)_inf) * phi_2_1(c/b, z; az; q^m, b).
SeriesBuilderFn heine_rhs(Monomial a, Monomial b, Monomial c, Monomial z, std::size_t m) {
    return [=](std::size_t order) {
        TS pre = pochhammer_infinite(b, m, order) * pochhammer_infinite(a * z, m, order);
        pre = pre * pochhammer_infinite(c, m, order).inverse();
        pre = pre * pochhammer_infinite(z, m, order).inverse();
        return pre * phi_2_1(monomial_ratio(c, b), z, a * z, b, m, order);
    };
}

void add_qbinom_theorem_case(std::vector<IdentityCase>& cases, Monomial a, Monomial z) {
    cases.push_back(
        {"qbinom.a=" + a.str() + ".z=" + z.str(),
         "q-binomial theorem instance: sum (a)_k z^k/(q)_k = (az)_inf/(z)_inf",
         200, false,
         [a, z](std::size_t order) { return phi_1_0(a, z, 1, order); },
         [a, z](std::size_t order) {
             return pochhammer_infinite(a * z, 1, order) *
                    pochhammer_infinite(z, 1, order).inverse();
         }});
}

void add_gasrah_case(std::vector<IdentityCase>& cases, Monomial z) {
    cases.push_back({"gasrah.z=" + z.str(),
                     "sum z^n q^{n(n-1)/2}/(-zq)_n collapses to 1 + z",
                     200, false,
                     [z](std::size_t order) { return gasrah_sum(z, order); },
                     [z](std::size_t order) {
                         TS s = TS::one(order);
                         if (!z.is_zero() && z.exponent <= order)
                             s.add_to_coefficient(z.exponent, z.sign);
                         return s;
                     }});
}

void add_gupta_case(std::vector<IdentityCase>& cases, Monomial c, Monomial t) {
    cases.push_back({"gupta.c=" + c.str() + ".t=" + t.str(),
                     "sum c^n ((t)_n - (t)_inf) equals (t)_inf sum t^n/((q)_n(1-cq^n))",
                     150, false,
                     builder("gupta.lhs.c=" + c.str() + ".t=" + t.str()),
                     builder("gupta.rhs.c=" + c.str() + ".t=" + t.str())});
}

std::vector<IdentityCase> make_registry() {
    std::vector<IdentityCase> cases;

    // Counting identities, enumeration against closed form.
    cases.push_back({"thm1", "omex-restricted count equals P.bar (2 - R)", 25, true,
                     enum_counts(&count_restricted, StatKind::omex), builder("thm1.rhs")});
    cases.push_back({"thm2", "omoex-restricted count equals P.bar.odd (1 - F(-q))", 25, true,
                     enum_counts(&count_restricted, StatKind::omoex), builder("thm2.rhs")});
    cases.push_back({"thm3", "tilde-omex-restricted count equals P.bar (f0 - 1)", 25, true,
                     enum_counts(&count_restricted, StatKind::tilde_omex), builder("thm3.rhs")});
    cases.push_back({"thm4", "tilde-omoex-restricted count equals q P.bar.odd F1(-q)", 25, true,
                     enum_counts(&count_restricted, StatKind::tilde_omoex),
                     builder("thm4.rhs")});
    cases.push_back({"thm5", "sum of omex over the restricted class equals its tail-series form",
                     25, true,
                     [](std::size_t order) {
                         return counting_series(order, [](int n) { return sigma_omex(n); });
                     },
                     builder("thm5.rhs")});
    cases.push_back({"thm6",
                     "sum of omoex indices over the restricted class equals its q-harmonic form",
                     25, true,
                     [](std::size_t order) {
                         return counting_series(order,
                                                [](int n) { return sigma_omoex_index(n); });
                     },
                     builder("thm6.rhs")});

    // The same four counting functions, raw product sums against closed forms.
    for (int k = 1; k <= 4; ++k) {
        const std::string id = "thm" + std::to_string(k);
        cases.push_back({id + ".series",
                         "raw per-mex product sum equals the closed form",
                         200, false, builder(id + ".comb"), builder(id + ".rhs")});
    }

    // Enumeration totals against the product generating functions.
    cases.push_back({"P.bar.count", "overpartition totals match prod (1+q^m)/(1-q^m)", 25, true,
                     [](std::size_t order) {
                         return counting_series(
                             order, [](int n) { return count_overpartitions(n, false); });
                     },
                     builder("P.bar")});
    cases.push_back({"P.bar.odd.count", "odd-part overpartition totals match the odd product",
                     25, true,
                     [](std::size_t order) {
                         return counting_series(
                             order, [](int n) { return count_overpartitions(n, true); });
                     },
                     builder("P.bar.odd")});

    // Signed combinatorial reading of F.
    cases.push_back({"F.signed",
                     "signed count of odd-part partitions with full initial runs equals F",
                     30, true,
                     [](std::size_t order) {
                         return counting_series(
                             order, [](int n) { return n == 0 ? 0 : f_signed_count(n); });
                     },
                     builder("F")});

    // The three representations of R.
    cases.push_back({"R.rep12", "triangular-number sum for R equals the alternating form",
                     500, false, builder("R.rep1"), builder("R.rep2")});
    cases.push_back({"R.rep13", "triangular-number sum for R equals the weighted-product form",
                     500, false, builder("R.rep1"), builder("R.rep3")});

    // F(-q) built by sign flip vs built directly.
    cases.push_back({"F.negq", "alternate_sign(F) equals the direct build of F(-q)", 200, false,
                     [](std::size_t order) { return companion_f(order).alternate_sign(); },
                     builder("F.negq")});

    // q-harmonic numbers vs their q-binomial form.
    for (std::size_t n = 1; n <= 50; ++n) {
        const std::string ns = std::to_string(n);
        cases.push_back({"AU." + ns,
                         "q-harmonic number H_" + ns + " equals its q-binomial form",
                         200, false, builder("H.qharm." + ns), builder("H.qharm.AU." + ns)});
    }

    // Divisor generating function, three ways.
    cases.push_back({"divisor.signed_vs_lambert",
                     "signed triangular-number series equals the Lambert series",
                     300, false, builder("divisor.signed"), builder("divisor.lambert")});
    cases.push_back({"divisor.count",
                     "Lambert series coefficients equal divisor counts by trial division",
                     300, false,
                     [](std::size_t order) {
                         return counting_series(order, [](int n) {
                             std::int64_t d = 0;
                             for (int i = 1; i <= n; ++i) d += n % i == 0;
                             return d;
                         });
                     },
                     builder("divisor.lambert")});

    add_gasrah_case(cases, Monomial::q());
    add_gasrah_case(cases, Monomial::q(2));
    add_gasrah_case(cases, Monomial::q(3));
    add_gasrah_case(cases, Monomial::neg_q());
    add_gasrah_case(cases, Monomial::neg_q(2));

    add_gupta_case(cases, Monomial::neg_q(0), Monomial::q());   // c = -1, t = q
    add_gupta_case(cases, Monomial::q(), Monomial::q());
    add_gupta_case(cases, Monomial::neg_q(), Monomial::q(2));

    add_qbinom_theorem_case(cases, Monomial::zero(), Monomial::q());
    add_qbinom_theorem_case(cases, Monomial::neg_q(), Monomial::q());
    add_qbinom_theorem_case(cases, Monomial::q(2), Monomial::q());
    add_qbinom_theorem_case(cases, Monomial::neg_q(0), Monomial::q());
    add_qbinom_theorem_case(cases, Monomial::q(), Monomial::q(2));
    add_qbinom_theorem_case(cases, Monomial::neg_q(2), Monomial::q(3));

    // Transformation instances with every parameter a monomial on both sides.
    struct HeineInstance {
        Monomial a, b, c, z;
        std::size_t base;
    };
    const HeineInstance heine[] = {
        {Monomial::q(), Monomial::neg_q(), Monomial::neg_q(2), Monomial::q(), 1},
        {Monomial::q(2), Monomial::neg_q(), Monomial::neg_q(3), Monomial::q(), 1},
        {Monomial::neg_q(), Monomial::q(2), Monomial::neg_q(3), Monomial::q(), 1},
        {Monomial::zero(), Monomial::q(), Monomial::neg_q(2), Monomial::q(), 1},
        {Monomial::neg_q(), Monomial::q(2), Monomial::neg_q(3), Monomial::q(2), 2},
        {Monomial::q(), Monomial::neg_q(2), Monomial::neg_q(3), Monomial::q(), 1},
    };
    int heine_index = 0;
    for (const auto& h : heine) {
        cases.push_back({"heine." + std::to_string(++heine_index),
                         "series transformation instance a=" + h.a.str() + " b=" + h.b.str() +
                             " c=" + h.c.str() + " z=" + h.z.str() + " base=q^" +
                             std::to_string(h.base),
                         200, false, heine_lhs(h.a, h.b, h.c, h.z, h.base),
                         heine_rhs(h.a, h.b, h.c, h.z, h.base)});
    }

    // Endpoint identities of the sigma derivations.
    cases.push_back({"A.vs.R", "weighted companion sum A equals R", 200, false,
                     builder("A.lhs"), builder("R.rep1")});
    cases.push_back({"B.lhs_vs_rhs", "weighted triangular sum B equals its tail form", 200,
                     false, builder("B.lhs"), builder("B.rhs")});
    cases.push_back({"C.lhs_vs_rhs", "weighted odd sum C equals 1 + F(-q)", 200, false,
                     builder("C.lhs"), builder("C.rhs")});
    cases.push_back({"D.lhs_vs_rhs", "weighted odd sum D equals its q-harmonic form", 200,
                     false, builder("D.lhs"), builder("D.rhs")});

    return cases;
}

}  // namespace

const std::vector<IdentityCase>& registry() {
    static const std::vector<IdentityCase> cases = make_registry();
    return cases;
}

const IdentityCase* find_case(std::string_view name) {
    for (const IdentityCase& c : registry())
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<const IdentityCase*> select_cases(std::string_view selector) {
    std::vector<const IdentityCase*> out;
    for (const IdentityCase& c : registry()) {
        if (selector == "all" || c.name == selector ||
            (c.name.size() > selector.size() + 1 && c.name.starts_with(selector) &&
             c.name[selector.size()] == '.'))
            out.push_back(&c);
    }
    return out;
}

VerificationReport compare_series(std::string name, const TruncatedSeries& lhs,
                                  const TruncatedSeries& rhs) {
    VerificationReport report;
    report.name = std::move(name);
    const SeriesComparison cmp = equal_up_to(lhs, rhs);
    report.compared_order = cmp.compared_order;
    report.passed = cmp.agree();
    if (cmp.first_mismatch) {
        const std::size_t k = *cmp.first_mismatch;
        report.first_mismatch = CoefficientMismatch{k, lhs.coefficient(k), rhs.coefficient(k)};
    }
    return report;
}

VerificationReport run_case(const IdentityCase& c, std::size_t order, std::size_t enum_bound) {
    const std::size_t effective = c.enumeration_backed ? std::min(order, enum_bound) : order;
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report = compare_series(c.name, c.lhs(effective), c.rhs(effective));
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

VerificationReport verify_case(std::string_view name, std::size_t order,
                               std::size_t enum_bound) {
    const IdentityCase* c = find_case(name);
    if (!c) throw std::invalid_argument("unknown identity case: " + std::string(name));
    return run_case(*c, order, enum_bound);
}

std::vector<VerificationReport> verify_all(std::size_t order, std::size_t enum_bound) {
    std::vector<const IdentityCase*> cases;
    for (const IdentityCase& c : registry()) cases.push_back(&c);
    return run_cases(cases, order, enum_bound);
}

std::vector<VerificationReport> run_cases(const std::vector<const IdentityCase*>& cases,
                                          std::optional<std::size_t> order,
                                          std::size_t enum_bound) {
    std::vector<VerificationReport> reports;
    reports.reserve(cases.size());
    for (const IdentityCase* c : cases)
        reports.push_back(run_case(*c, order.value_or(c->default_order), enum_bound));
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.name < b.name;
              });
    return reports;
}

std::string report_to_json(const VerificationReport& report, bool include_elapsed) {
    nlohmann::ordered_json j;
    j["name"] = report.name;
    j["compared_order"] = report.compared_order;
    j["status"] = report.passed ? "pass" : "fail";
    if (report.first_mismatch) {
        j["first_mismatch"] = {{"exponent", report.first_mismatch->exponent},
                               {"lhs", report.first_mismatch->lhs.str()},
                               {"rhs", report.first_mismatch->rhs.str()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (include_elapsed) j["elapsed_ms"] = report.elapsed_ms;
    return j.dump();
}

}  // namespace qmex
