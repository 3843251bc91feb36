// qmex: expand, enumerate, tabulate and verify the overpartition mex q-series.

#include "qmex/overpartitions.hpp"
#include "qmex/special.hpp"
#include "qmex/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void print_csv_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << csv_escape(fields[i]);
    }
    std::cout << '\n';
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

std::size_t default_enum_bound() {
    if (const char* env = std::getenv("QMEX_MAX_ENUM")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return static_cast<std::size_t>(v);
        throw std::invalid_argument("QMEX_MAX_ENUM is not a non-negative integer");
    }
    return 20;
}

int run_expand(const std::string& id, std::size_t order, const std::string& format) {
    const qmex::TruncatedSeries s = qmex::build(id, order);
    if (format == "json") {
        ordered_json j;
        j["id"] = id;
        j["order"] = order;
        ordered_json coeffs = ordered_json::array();
        for (std::size_t n = 0; n <= order; ++n) coeffs.push_back(s.coefficient(n).str());
        j["coefficients"] = coeffs;
        print_json(j);
    } else {
        print_csv_row({"n", "coefficient"});
        for (std::size_t n = 0; n <= order; ++n)
            print_csv_row({std::to_string(n), s.coefficient(n).str()});
    }
    return kExitOk;
}

int run_enumerate(int n, bool odd_only, const std::string& stat_name,
                  const std::string& format) {
    std::optional<qmex::StatKind> stat;
    if (!stat_name.empty()) {
        stat = qmex::stat_kind_from_string(stat_name);
        if (qmex::requires_odd_parts(*stat) && !odd_only)
            throw std::invalid_argument("statistic " + stat_name +
                                        " is defined on odd parts only; pass --odd");
    }

    struct Row {
        std::string parts;
        int value = 0;
        bool restricted = false;
    };
    std::vector<Row> rows;
    qmex::for_each_overpartition(n, odd_only, [&](const qmex::Overpartition& p) {
        Row row;
        row.parts = p.str();
        if (stat) {
            row.value = qmex::statistic(p, *stat);
            row.restricted = qmex::satisfies_restriction(p, *stat);
        }
        rows.push_back(std::move(row));
    });

    if (format == "json") {
        ordered_json j;
        j["n"] = n;
        j["odd_only"] = odd_only;
        j["stat"] = stat ? ordered_json(stat_name) : ordered_json(nullptr);
        ordered_json out = ordered_json::array();
        for (const Row& row : rows) {
            ordered_json r;
            r["parts"] = row.parts;
            if (stat) {
                r["value"] = row.value;
                r["restricted"] = row.restricted;
            }
            out.push_back(std::move(r));
        }
        j["rows"] = out;
        print_json(j);
    } else {
        if (stat) {
            print_csv_row({"parts", "value", "restricted"});
            for (const Row& row : rows)
                print_csv_row({row.parts, std::to_string(row.value),
                               row.restricted ? "true" : "false"});
        } else {
            print_csv_row({"parts"});
            for (const Row& row : rows) print_csv_row({row.parts});
        }
    }
    return kExitOk;
}

struct TableColumn {
    const char* name;
    const char* series_id;
    std::int64_t (*count)(int);
};

const TableColumn kTableColumns[] = {
    {"m.bar", "thm1.rhs", [](int n) { return qmex::count_restricted(n, qmex::StatKind::omex); }},
    {"m.bar.odd", "thm2.rhs",
     [](int n) { return qmex::count_restricted(n, qmex::StatKind::omoex); }},
    {"m.tilde", "thm3.rhs",
     [](int n) { return qmex::count_restricted(n, qmex::StatKind::tilde_omex); }},
    {"m.tilde.odd", "thm4.rhs",
     [](int n) { return qmex::count_restricted(n, qmex::StatKind::tilde_omoex); }},
    {"sigma.omex", "thm5.rhs", [](int n) { return qmex::sigma_omex(n); }},
    {"sigma.omoex.index", "thm6.rhs", [](int n) { return qmex::sigma_omoex_index(n); }},
};

int run_table(std::size_t max_n, const std::vector<std::string>& stats,
              std::size_t enum_bound, const std::string& format) {
    if (max_n > enum_bound)
        throw std::invalid_argument("--max-n " + std::to_string(max_n) +
                                    " exceeds the enumeration bound " +
                                    std::to_string(enum_bound));
    std::vector<const TableColumn*> columns;
    if (stats.empty()) {
        for (const TableColumn& c : kTableColumns) columns.push_back(&c);
    } else {
        for (const std::string& name : stats) {
            const TableColumn* found = nullptr;
            for (const TableColumn& c : kTableColumns)
                if (name == c.name) found = &c;
            if (!found) throw std::invalid_argument("unknown table column: " + name);
            columns.push_back(found);
        }
    }

    std::vector<qmex::TruncatedSeries> series;
    series.reserve(columns.size());
    for (const TableColumn* c : columns) series.push_back(qmex::build(c->series_id, max_n));

    if (format == "json") {
        ordered_json j;
        j["max_n"] = max_n;
        ordered_json rows = ordered_json::array();
        for (std::size_t n = 0; n <= max_n; ++n) {
            ordered_json row;
            row["n"] = n;
            for (std::size_t i = 0; i < columns.size(); ++i) {
                const auto enumerated = columns[i]->count(static_cast<int>(n));
                const auto& coeff = series[i].coefficient(n);
                row[columns[i]->name] = {{"enumeration", std::to_string(enumerated)},
                                         {"series", coeff.str()},
                                         {"agree", coeff == enumerated}};
            }
            rows.push_back(std::move(row));
        }
        j["rows"] = rows;
        print_json(j);
    } else {
        std::vector<std::string> header{"n"};
        for (const TableColumn* c : columns) {
            header.push_back(std::string(c->name) + ".enumeration");
            header.push_back(std::string(c->name) + ".series");
            header.push_back(std::string(c->name) + ".agree");
        }
        print_csv_row(header);
        for (std::size_t n = 0; n <= max_n; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (std::size_t i = 0; i < columns.size(); ++i) {
                const auto enumerated = columns[i]->count(static_cast<int>(n));
                const auto& coeff = series[i].coefficient(n);
                row.push_back(std::to_string(enumerated));
                row.push_back(coeff.str());
                row.push_back(coeff == enumerated ? "true" : "false");
            }
            print_csv_row(row);
        }
    }
    return kExitOk;
}

int run_verify(const std::string& selector, std::optional<std::size_t> order,
               std::size_t enum_bound, bool timings, const std::string& format) {
    const auto cases = qmex::select_cases(selector);
    if (cases.empty()) throw std::invalid_argument("unknown identity case: " + selector);
    const auto reports = qmex::run_cases(cases, order, enum_bound);

    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& r : reports)
            out.push_back(ordered_json::parse(qmex::report_to_json(r, timings)));
        print_json(out);
    } else {
        std::vector<std::string> header{"name", "compared_order", "status",
                                        "mismatch_exponent", "mismatch_lhs", "mismatch_rhs"};
        if (timings) header.push_back("elapsed_ms");
        print_csv_row(header);
        for (const auto& r : reports) {
            std::vector<std::string> row{r.name, std::to_string(r.compared_order),
                                         r.passed ? "pass" : "fail"};
            if (r.first_mismatch) {
                row.push_back(std::to_string(r.first_mismatch->exponent));
                row.push_back(r.first_mismatch->lhs.str());
                row.push_back(r.first_mismatch->rhs.str());
            } else {
                row.insert(row.end(), {"", "", ""});
            }
            if (timings) row.push_back(std::to_string(r.elapsed_ms));
            print_csv_row(row);
        }
    }

    std::size_t failures = 0;
    for (const auto& r : reports) failures += !r.passed;
    std::cerr << reports.size() - failures << "/" << reports.size() << " identities verified\n";
    return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"overpartition minimal-excludant q-series toolkit"};
    app.require_subcommand(1);
    std::string format = "json";

    auto* expand = app.add_subcommand("expand", "print the coefficients of a named series");
    std::string expand_id;
    std::size_t expand_order = 100;
    expand->add_option("id", expand_id, "series id, e.g. R.rep1, P.bar, thm5.rhs, G.tail.3")
        ->required();
    expand->add_option("--order", expand_order, "truncation order");
    expand->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* enumerate = app.add_subcommand("enumerate", "list the overpartitions of a weight");
    int enum_n = 0;
    bool odd_only = false;
    std::string stat_name;
    enumerate->add_option("--n", enum_n, "weight to enumerate")->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--odd", odd_only, "restrict to odd parts");
    enumerate->add_option("--stat", stat_name, "annotate with a statistic")
        ->check(CLI::IsMember({"omex", "omoex", "tilde-omex", "tilde-omoex"}));
    enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    std::size_t enum_bound = 0;
    const char* enum_bound_help =
        "cap for enumeration-backed computations (env QMEX_MAX_ENUM, else 20)";

    auto* table = app.add_subcommand(
        "table", "tabulate enumeration counts against series coefficients");
    std::size_t max_n = 10;
    std::vector<std::string> table_stats;
    table->add_option("--max-n", max_n, "largest weight")->required();
    table->add_option("--stat", table_stats, "columns to include (default: all)");
    auto* table_bound = table->add_option("--enum-bound", enum_bound, enum_bound_help);
    table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "check identities from the catalog");
    std::string selector = "all";
    long long verify_order = -1;
    bool timings = false;
    verify->add_option("case", selector, "case name, dotted prefix, or \"all\"");
    verify->add_option("--order", verify_order,
                       "truncation order (default: each case's registered order)")
        ->check(CLI::NonNegativeNumber);
    auto* verify_bound = verify->add_option("--enum-bound", enum_bound, enum_bound_help);
    verify->add_flag("--timings", timings, "include elapsed_ms in reports");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
        if (table_bound->count() == 0 && verify_bound->count() == 0)
            enum_bound = default_enum_bound();

        if (*expand) return run_expand(expand_id, expand_order, format);
        if (*enumerate) return run_enumerate(enum_n, odd_only, stat_name, format);
        if (*table) return run_table(max_n, table_stats, enum_bound, format);
        if (*verify) {
            std::optional<std::size_t> order;
            if (verify_order >= 0) order = static_cast<std::size_t>(verify_order);
            return run_verify(selector, order, enum_bound, timings, format);
        }
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
