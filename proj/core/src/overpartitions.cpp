#include "qmex/overpartitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qmex {

StatKind stat_kind_from_string(std::string_view name) {
    if (name == "omex") return StatKind::omex;
    if (name == "omoex") return StatKind::omoex;
    if (name == "tilde-omex") return StatKind::tilde_omex;
    if (name == "tilde-omoex") return StatKind::tilde_omoex;
    throw std::invalid_argument("unknown statistic: " + std::string(name));
}

std::string_view to_string(StatKind kind) {
    switch (kind) {
        case StatKind::omex: return "omex";
        case StatKind::omoex: return "omoex";
        case StatKind::tilde_omex: return "tilde-omex";
        case StatKind::tilde_omoex: return "tilde-omoex";
    }
    throw std::logic_error("bad StatKind");
}

bool requires_odd_parts(StatKind kind) {
    return kind == StatKind::omoex || kind == StatKind::tilde_omoex;
}

Overpartition::Overpartition(std::vector<int> parts, std::vector<int> overlined)
    : parts_(std::move(parts)), overlined_(std::move(overlined)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("overpartition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    std::sort(overlined_.begin(), overlined_.end());
    if (std::adjacent_find(overlined_.begin(), overlined_.end()) != overlined_.end())
        throw std::invalid_argument("a value can be overlined at most once");
    for (int v : overlined_) {
        if (!std::binary_search(parts_.rbegin(), parts_.rend(), v))
            throw std::invalid_argument("overlined value " + std::to_string(v) +
                                        " is not a part");
    }
}

Overpartition Overpartition::parse(std::string_view text) {
    std::vector<int> parts;
    std::vector<int> overlined;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('+', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        bool over = false;
        if (!tok.empty() && tok.back() == '~') {
            over = true;
            tok.remove_suffix(1);
        }
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw std::invalid_argument("bad overpartition text: " + std::string(text));
        parts.push_back(value);
        if (over) overlined.push_back(value);
        pos = end + 1;
    }
    return Overpartition(std::move(parts), std::move(overlined));
}

bool Overpartition::has_part(int value) const {
    return std::binary_search(parts_.rbegin(), parts_.rend(), value);
}

bool Overpartition::is_overlined(int value) const {
    return std::binary_search(overlined_.begin(), overlined_.end(), value);
}

int Overpartition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Overpartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Overpartition::all_parts_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; });
}

std::string Overpartition::str() const {
    std::string out;
    std::size_t i = 0;
    while (i < parts_.size()) {
        const int v = parts_[i];
        std::size_t run = 0;
        while (i + run < parts_.size() && parts_[i + run] == v) ++run;
        for (std::size_t j = 0; j < run; ++j) {
            if (!out.empty()) out += '+';
            out += std::to_string(v);
            if (j == 0 && is_overlined(v)) out += '~';
        }
        i += run;
    }
    return out;
}

namespace {

void check_parity(const Overpartition& p, StatKind kind) {
    if (requires_odd_parts(kind) && !p.all_parts_odd())
        throw std::invalid_argument(std::string(to_string(kind)) +
                                    " requires all parts odd");
}

}  // namespace

int omex(const Overpartition& p) {
    int k = 1;
    while (p.has_part(k)) ++k;
    return k;
}

int omoex(const Overpartition& p) {
    check_parity(p, StatKind::omoex);
    int k = 1;
    while (p.has_part(k)) k += 2;
    return k;
}

int tilde_omex(const Overpartition& p) {
    int k = 1;
    while (p.is_overlined(k)) ++k;
    return k;
}

int tilde_omoex(const Overpartition& p) {
    check_parity(p, StatKind::tilde_omoex);
    int k = 1;
    while (p.is_overlined(k)) k += 2;
    return k;
}

int statistic(const Overpartition& p, StatKind kind) {
    switch (kind) {
        case StatKind::omex: return omex(p);
        case StatKind::omoex: return omoex(p);
        case StatKind::tilde_omex: return tilde_omex(p);
        case StatKind::tilde_omoex: return tilde_omoex(p);
    }
    throw std::logic_error("bad StatKind");
}

bool satisfies_restriction(const Overpartition& p, StatKind kind) {
    check_parity(p, kind);
    switch (kind) {
        case StatKind::omex: {
            const int m = omex(p);
            for (int v : p.overlined())
                if (v < m) return false;
            return true;
        }
        case StatKind::omoex: {
            const int m = omoex(p);
            for (int v : p.overlined())
                if (v < m) return false;
            return true;
        }
        case StatKind::tilde_omex: {
            const int k = tilde_omex(p);
            for (int j = 1; j < k; ++j)
                if (p.multiplicity(j) < 2) return false;  // j overlined by choice of k
            return p.has_part(k);  // k~ absent by choice of k, so this copy is plain
        }
        case StatKind::tilde_omoex: {
            const int k = tilde_omoex(p);
            for (int j = 1; j < k; j += 2)
                if (p.multiplicity(j) < 2) return false;  // j overlined by choice of k
            return p.has_part(k);
        }
    }
    throw std::logic_error("bad StatKind");
}

namespace {

// Partitions of n with parts <= maxp, descending lexicographic, largest first.
void for_each_partition(int n, int maxp, bool odd_only,
                        std::vector<int>& scratch,
                        const std::function<void(const std::vector<int>&)>& visit) {
    if (n == 0) {
        visit(scratch);
        return;
    }
    for (int k = std::min(n, maxp); k >= 1; --k) {
        if (odd_only && k % 2 == 0) continue;
        scratch.push_back(k);
        for_each_partition(n - k, k, odd_only, scratch, visit);
        scratch.pop_back();
    }
}

}  // namespace

void for_each_overpartition(int weight, bool odd_only,
                            const std::function<void(const Overpartition&)>& visit) {
    if (weight < 0) throw std::invalid_argument("weight must be >= 0");
    std::vector<int> scratch;
    for_each_partition(weight, weight, odd_only, scratch, [&](const std::vector<int>& parts) {
        std::vector<int> distinct(parts.rbegin(), parts.rend());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        const std::size_t d = distinct.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
            std::vector<int> overlined;
            for (std::size_t i = 0; i < d; ++i)
                if (mask >> i & 1) overlined.push_back(distinct[i]);
            visit(Overpartition(parts, std::move(overlined)));
        }
    });
}

std::vector<Overpartition> enumerate_overpartitions(int weight, bool odd_only) {
    std::vector<Overpartition> out;
    for_each_overpartition(weight, odd_only, [&](const Overpartition& p) { out.push_back(p); });
    return out;
}

std::int64_t count_overpartitions(int weight, bool odd_only) {
    std::int64_t count = 0;
    for_each_overpartition(weight, odd_only, [&](const Overpartition&) { ++count; });
    return count;
}

std::int64_t count_restricted(int weight, StatKind kind) {
    std::int64_t count = 0;
    for_each_overpartition(weight, requires_odd_parts(kind), [&](const Overpartition& p) {
        if (satisfies_restriction(p, kind)) ++count;
    });
    return count;
}

std::map<int, std::int64_t> mex_distribution(int weight, StatKind kind) {
    if (kind != StatKind::omex && kind != StatKind::omoex)
        throw std::invalid_argument("mex_distribution supports only omex and omoex");
    std::map<int, std::int64_t> dist;
    for_each_overpartition(weight, requires_odd_parts(kind), [&](const Overpartition& p) {
        if (!satisfies_restriction(p, kind)) return;
        const int value = statistic(p, kind);
        const int key = kind == StatKind::omoex ? (value + 1) / 2 : value;
        ++dist[key];
    });
    return dist;
}

std::int64_t sigma_omex(int weight) {
    std::int64_t sum = 0;
    for_each_overpartition(weight, false, [&](const Overpartition& p) {
        if (satisfies_restriction(p, StatKind::omex)) sum += omex(p);
    });
    return sum;
}

std::int64_t sigma_omoex_index(int weight) {
    std::int64_t sum = 0;
    for_each_overpartition(weight, true, [&](const Overpartition& p) {
        if (satisfies_restriction(p, StatKind::omoex)) sum += (omoex(p) + 1) / 2;
    });
    return sum;
}

std::int64_t sigma_omex_unrestricted(int weight) {
    std::int64_t sum = 0;
    for_each_overpartition(weight, false, [&](const Overpartition& p) { sum += omex(p); });
    return sum;
}

std::int64_t f_signed_count(int weight) {
    if (weight < 1) throw std::invalid_argument("f_signed_count requires weight >= 1");
    std::int64_t total = 0;
    std::vector<int> scratch;
    for_each_partition(weight, weight, true, scratch, [&](const std::vector<int>& parts) {
        const int largest = parts.front();
        for (int j = 1; j < largest; j += 2) {
            if (!std::binary_search(parts.rbegin(), parts.rend(), j)) return;
        }
        total += largest % 4 == 3 ? 1 : -1;
    });
    return total;
}

}  // namespace qmex
