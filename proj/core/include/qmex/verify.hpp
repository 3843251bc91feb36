#pragma once

#include "qmex/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmex {

using SeriesBuilderFn = std::function<TruncatedSeries(std::size_t order)>;

/// One verifiable identity: two ways of building the same series. Cases whose
/// left side comes from brute-force enumeration are flagged so runs can cap
/// them at an enumeration bound.
struct IdentityCase {
    std::string name;         // stable id, e.g. "thm2", "R.rep12", "gasrah.z=q"
    std::string statement;    // what equals what, in words
    std::size_t default_order = 100;
    bool enumeration_backed = false;
    SeriesBuilderFn lhs;
    SeriesBuilderFn rhs;
};

struct CoefficientMismatch {
    std::size_t exponent = 0;
    Coefficient lhs;
    Coefficient rhs;
};

struct VerificationReport {
    std::string name;
    std::size_t compared_order = 0;
    bool passed = false;
    std::optional<CoefficientMismatch> first_mismatch;
    double elapsed_ms = 0.0;
};

/// The full fixed catalog of identities, in registration order.
const std::vector<IdentityCase>& registry();

/// Exact lookup; nullptr when absent.
const IdentityCase* find_case(std::string_view name);

/// "all", an exact case name, or a dotted prefix ("thm2" also selects
/// "thm2.series"; "AU" selects every AU.n). Empty result for no match.
std::vector<const IdentityCase*> select_cases(std::string_view selector);

/// Compare two already-built series; the core of every verification.
VerificationReport compare_series(std::string name, const TruncatedSeries& lhs,
                                  const TruncatedSeries& rhs);

/// Build both sides of a case at `order` — enumeration-backed sides at
/// min(order, enum_bound) — and compare coefficientwise.
VerificationReport run_case(const IdentityCase& c, std::size_t order, std::size_t enum_bound);

/// Like run_case but by name; throws std::invalid_argument for unknown names.
VerificationReport verify_case(std::string_view name, std::size_t order,
                               std::size_t enum_bound = 25);

/// Run every case in the catalog at the given order; reports sorted by name.
std::vector<VerificationReport> verify_all(std::size_t order, std::size_t enum_bound);

/// Run the selected cases, each at `order` if given and at its registered
/// default order otherwise; reports sorted by name.
std::vector<VerificationReport> run_cases(const std::vector<const IdentityCase*>& cases,
                                          std::optional<std::size_t> order,
                                          std::size_t enum_bound);

/// {"name", "compared_order", "status", "first_mismatch", ["elapsed_ms"]},
/// coefficients as exact decimal strings.
std::string report_to_json(const VerificationReport& report, bool include_elapsed = true);

}  // namespace qmex
