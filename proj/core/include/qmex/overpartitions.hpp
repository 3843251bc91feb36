#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qmex {

/// The four minimal-excludant statistics on overpartitions.
///   omex        smallest positive integer absent (overlined or not)
///   omoex       smallest positive odd integer absent; odd parts only
///   tilde_omex  smallest k with no overlined k, under 1 < 1~ < 2 < 2~ < ...
///   tilde_omoex odd analog of tilde_omex; odd parts only
enum class StatKind { omex, omoex, tilde_omex, tilde_omoex };

StatKind stat_kind_from_string(std::string_view name);  // "omex", "tilde-omex", ...
std::string_view to_string(StatKind kind);
bool requires_odd_parts(StatKind kind);

/// A partition whose first occurrence of a value may be overlined. Overline
/// marks live on part values (at most one per value); the weight ignores them.
class Overpartition {
public:
    Overpartition() = default;
    /// `parts` in any order with repeats; `overlined` must be a subset of the
    /// part values without duplicates.
    Overpartition(std::vector<int> parts, std::vector<int> overlined);

    /// Inverse of str(): "5~+4~+4+2+1", "" for the empty overpartition.
    static Overpartition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }        // descending
    const std::vector<int>& overlined() const { return overlined_; }  // ascending
    bool has_part(int value) const;
    bool is_overlined(int value) const;
    int multiplicity(int value) const;
    int weight() const;
    bool all_parts_odd() const;
    bool empty() const { return parts_.empty(); }

    /// Canonical text: parts descending, the overlined copy of a value first,
    /// overlines written as a "~" suffix. Empty overpartition renders as "".
    std::string str() const;

    friend bool operator==(const Overpartition&, const Overpartition&) = default;

private:
    std::vector<int> parts_;
    std::vector<int> overlined_;
};

int omex(const Overpartition& p);
int omoex(const Overpartition& p);              // throws on an even part
int tilde_omex(const Overpartition& p);
int tilde_omoex(const Overpartition& p);        // throws on an even part
int statistic(const Overpartition& p, StatKind kind);

/// The side condition under which the counting functions count:
///   omex / omoex   no (odd) value below the statistic is overlined
///   tilde kinds    every value below the statistic occurs both plain and
///                  overlined, and the statistic's value occurs plain
bool satisfies_restriction(const Overpartition& p, StatKind kind);

/// Visit every overpartition of `weight` exactly once, in a deterministic
/// order: underlying partitions in descending lexicographic order, then
/// overline subsets by ascending bitmask over the distinct values (bit i is
/// the i-th smallest distinct value).
void for_each_overpartition(int weight, bool odd_only,
                            const std::function<void(const Overpartition&)>& visit);
std::vector<Overpartition> enumerate_overpartitions(int weight, bool odd_only = false);

std::int64_t count_overpartitions(int weight, bool odd_only);
std::int64_t count_restricted(int weight, StatKind kind);

/// Counts of restricted overpartitions of `weight` keyed by statistic value;
/// for omoex the key is the index m with omoex = 2m - 1. Only the omex and
/// omoex kinds have a distribution here.
std::map<int, std::int64_t> mex_distribution(int weight, StatKind kind);

/// Sum of omex over the omex-restricted overpartitions of `weight`.
std::int64_t sigma_omex(int weight);
/// Sum of (omoex + 1)/2 over the omoex-restricted odd overpartitions.
std::int64_t sigma_omoex_index(int weight);
/// Sum of omex over all overpartitions, no restriction. Exploratory only;
/// no identity in the catalog uses it.
std::int64_t sigma_omex_unrestricted(int weight);

/// Over partitions of `weight` into odd parts in which every odd number below
/// the largest part occurs: (count with largest part = 3 mod 4) minus (count
/// with largest part = 1 mod 4). Requires weight >= 1.
std::int64_t f_signed_count(int weight);

}  // namespace qmex
