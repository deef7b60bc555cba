#pragma once

// Brute-force set model of the series algebra. Instant p is cell 2p and
// minute m is cell 2m+1, so a proper [b,e) is the cells 2b+1..2e-1 and a
// point p is the single cell 2p. Everything here works on explicit cell sets
// and never calls into the library operators.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "iterata/series.hpp"

namespace oracle {

using iterata::ConvexInterval;
using iterata::Instant;
using Cells = std::set<long long>;
using Items = std::vector<ConvexInterval>;

inline Cells cells(const ConvexInterval& i) {
    Cells c;
    if (i.beg == i.end) {
        c.insert(2 * i.beg);
    } else {
        for (long long k = 2 * i.beg + 1; k <= 2 * i.end - 1; ++k) c.insert(k);
    }
    return c;
}

inline Cells cells(const Items& items) {
    Cells c;
    for (const auto& i : items) {
        auto x = cells(i);
        c.insert(x.begin(), x.end());
    }
    return c;
}

inline bool subset(const Cells& a, const Cells& b) {
    return std::all_of(a.begin(), a.end(), [&](long long x) { return b.count(x) != 0; });
}

inline std::vector<std::pair<long long, long long>> runs(const Cells& c) {
    std::vector<std::pair<long long, long long>> out;
    for (long long x : c) {
        if (!out.empty() && out.back().second + 1 == x) out.back().second = x;
        else out.emplace_back(x, x);
    }
    return out;
}

// A run of cells as intervals: even end cells are boundary instants.
inline Items pieces(long long lo, long long hi) {
    Items out;
    std::optional<ConvexInterval> tail;
    if (lo % 2 == 0) {
        out.push_back(ConvexInterval::point(lo / 2));
        ++lo;
    }
    if (hi >= lo && hi % 2 == 0) {
        tail = ConvexInterval::point(hi / 2);
        --hi;
    }
    if (lo <= hi) out.emplace_back((lo - 1) / 2, (hi + 1) / 2);
    if (tail) out.push_back(*tail);
    return out;
}

inline Items restrict_strict(const Items& s, const Items& j) {
    Cells u = cells(j);
    Items out;
    for (const auto& i : s) {
        if (subset(cells(i), u)) out.push_back(i);
    }
    return out;
}

inline Items restrict_soft(const Items& s, const Items& j) {
    Cells u = cells(j);
    Items out;
    for (const auto& i : s) {
        Cells both;
        for (long long x : cells(i)) {
            if (u.count(x)) both.insert(x);
        }
        for (auto [lo, hi] : runs(both)) {
            auto p = pieces(lo, hi);
            out.insert(out.end(), p.begin(), p.end());
        }
    }
    return out;
}

// Elements of s1 inside component k of s2, in order.
inline std::vector<Items> members(const Items& s1, const Items& s2) {
    std::vector<Items> out(s2.size());
    for (const auto& i : s1) {
        for (std::size_t k = 0; k < s2.size(); ++k) {
            if (subset(cells(i), cells(s2[k]))) {
                out[k].push_back(i);
                break;
            }
        }
    }
    return out;
}

inline Items restrict_nth(const Items& s1, const Items& s2, std::size_t n) {
    Items out;
    for (const auto& m : members(s1, s2)) {
        if (m.size() >= n) out.push_back(m[n - 1]);
    }
    return out;
}

inline std::vector<std::size_t> ratio(const Items& s1, const Items& s2) {
    std::vector<std::size_t> out;
    for (const auto& m : members(s1, s2)) out.push_back(m.size());
    return out;
}

inline ConvexInterval hull(const Items& g) {
    Instant lo = g.front().beg, hi = g.front().end;
    for (const auto& i : g) {
        lo = std::min(lo, i.beg);
        hi = std::max(hi, i.end);
    }
    return {lo, hi};
}

inline Items agglo(const Items& s, std::size_t p) {
    Items out;
    for (std::size_t k = 0; k < s.size(); k += p) {
        Items g(s.begin() + static_cast<std::ptrdiff_t>(k),
                s.begin() + static_cast<std::ptrdiff_t>(std::min(s.size(), k + p)));
        out.push_back(hull(g));
    }
    return out;
}

inline Items extract_pattern(const Items& s, std::size_t n, std::size_t p) {
    Items out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k % p < n) out.push_back(s[k]);
    }
    return out;
}

// Per reference component: its cells minus those of s1, split into maximal
// runs, each trimmed to minute boundaries. An untouched point component
// stays a point.
inline Items complement(const Items& s1, const Items& ref) {
    Cells taken = cells(s1);
    Items out;
    for (const auto& j : ref) {
        if (j.beg == j.end) {
            if (!taken.count(2 * j.beg)) out.push_back(j);
            continue;
        }
        Cells rest;
        for (long long x : cells(j)) {
            if (!taken.count(x)) rest.insert(x);
        }
        for (auto [lo, hi] : runs(rest)) {
            if (lo % 2 == 0) ++lo;
            if (hi % 2 == 0) --hi;
            if (lo <= hi) out.emplace_back((lo - 1) / 2, (hi + 1) / 2);
        }
    }
    return out;
}

inline Items gap(const Items& s) {
    if (s.empty()) return {};
    return complement(s, {hull(s)});
}

// For each a, the first b lying entirely at or after the end of a. Returns
// nullopt when two spans overlap.
inline std::optional<Items> intdef(const Items& a, const Items& b) {
    Items out;
    for (const auto& x : a) {
        std::optional<ConvexInterval> match;
        for (const auto& y : b) {
            if (x.end <= y.beg && !(x == y)) {
                match = y;
                break;
            }
        }
        if (!match) break;
        out.emplace_back(x.beg, std::max(x.end, match->end));
    }
    for (std::size_t k = 1; k < out.size(); ++k) {
        if (out[k - 1].end > out[k].beg || out[k - 1] == out[k]) return std::nullopt;
    }
    return out;
}

// ---- random series ----

struct SeriesGen {
    std::mt19937_64 rng;
    explicit SeriesGen(std::uint64_t seed) : rng(seed) {}

    long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

    // up to max_items elements with offsets <= limit; about one in six is a point
    Items series(std::size_t max_items = 30, Instant limit = 500, Instant max_gap = 15, Instant max_len = 25) {
        Items out;
        std::size_t count = static_cast<std::size_t>(uniform(0, static_cast<long long>(max_items)));
        Instant pos = uniform(0, 20);
        bool last_point = false;
        for (std::size_t k = 0; k < count; ++k) {
            Instant gap = uniform(0, max_gap);
            bool point = uniform(0, 5) == 0;
            if (point && last_point && gap == 0) gap = 1;
            Instant len = point ? 0 : uniform(1, max_len);
            Instant b = pos + gap;
            if (b + len > limit) break;
            out.emplace_back(b, b + len);
            pos = b + len;
            last_point = point;
        }
        return out;
    }

    // the elements of s lying in some component of parent
    Items nested(const Items& parent) {
        Items fine = series(30, 500, 4, 8);
        Items out;
        for (const auto& i : fine) {
            for (const auto& j : parent) {
                if (subset(cells(i), cells(j))) {
                    out.push_back(i);
                    break;
                }
            }
        }
        return out;
    }
};

} // namespace oracle
