#include "iterata/series.hpp"

#include <algorithm>

#include "iterata/errors.hpp"

namespace iterata {

namespace {

std::string pair_text(const ConvexInterval& a, const ConvexInterval& b) {
    return to_string(a) + " and " + to_string(b);
}

// Index (0-based) of the element of s containing i, if any.
std::optional<std::size_t> component_index(const Series& s, const ConvexInterval& i) {
    const auto& items = s.items();
    auto it = std::upper_bound(items.begin(), items.end(), i.beg,
                               [](Instant v, const ConvexInterval& x) { return v < x.beg; });
    std::size_t idx = static_cast<std::size_t>(it - items.begin());
    for (int back = 1; back <= 2 && idx >= static_cast<std::size_t>(back); ++back) {
        const auto& cand = items[idx - back];
        if (contains(cand, i)) return idx - back;
    }
    return std::nullopt;
}

std::optional<std::size_t> element_index(const Series& s, const ConvexInterval& i) {
    const auto& items = s.items();
    auto it = std::lower_bound(items.begin(), items.end(), i);
    if (it != items.end() && *it == i) return static_cast<std::size_t>(it - items.begin());
    return std::nullopt;
}

} // namespace

bool is_series(const std::vector<ConvexInterval>& items) noexcept {
    for (std::size_t k = 1; k < items.size(); ++k) {
        if (!order_leq(items[k - 1], items[k]) || items[k - 1] == items[k]) return false;
    }
    return true;
}

Series::Series(std::vector<ConvexInterval> items) : items_(std::move(items)) {
    for (std::size_t k = 1; k < items_.size(); ++k) {
        if (!order_leq(items_[k - 1], items_[k]) || items_[k - 1] == items_[k]) {
            throw Error(ErrorCode::NotASeries,
                        "items " + std::to_string(k) + " and " + std::to_string(k + 1) +
                            " overlap or are out of order: " + pair_text(items_[k - 1], items_[k]));
        }
    }
}

Series make_series(std::vector<ConvexInterval> items) { return Series(std::move(items)); }

ConvexInterval nth(const Series& s, std::size_t n) {
    if (n < 1 || n > s.size()) {
        throw Error(ErrorCode::OutOfRange,
                    "index " + std::to_string(n) + " outside 1.." + std::to_string(s.size()));
    }
    return s.items()[n - 1];
}

std::optional<ConvexInterval> succ(const Series& s, const ConvexInterval& i) {
    std::size_t k = ordre(s, i);
    if (k == s.size()) return std::nullopt;
    return s.items()[k];
}

ConvexInterval fst(const Series& s) {
    if (s.empty()) throw Error(ErrorCode::EmptyInput, "fst of an empty series");
    return s.items().front();
}

std::size_t ordre(const Series& s, const ConvexInterval& i) {
    auto idx = element_index(s, i);
    if (!idx) throw Error(ErrorCode::NotAnElement, to_string(i) + " is not an element of the series");
    return *idx + 1;
}

GeneralizedInterval ext(const Series& s) {
    if (s.empty()) throw Error(ErrorCode::EmptyInput, "ext of an empty series");
    return GeneralizedInterval(s.items());
}

ConvexInterval convexify(const Series& s) { return convexify(s.items()); }

bool included(const Series& s1, const Series& s2) {
    return std::all_of(s1.begin(), s1.end(),
                       [&](const ConvexInterval& i) { return component_index(s2, i).has_value(); });
}

bool extracted(const Series& s1, const Series& s2) {
    return std::all_of(s1.begin(), s1.end(),
                       [&](const ConvexInterval& i) { return element_index(s2, i).has_value(); });
}

std::size_t RatioMap::at(const ConvexInterval& j) const {
    for (const auto& [k, v] : entries) {
        if (k == j) return v;
    }
    throw Error(ErrorCode::NotAnElement, to_string(j) + " is not in the parent series");
}

bool RatioMap::is_constant(std::size_t n) const noexcept {
    return std::all_of(entries.begin(), entries.end(), [&](const auto& e) { return e.second == n; });
}

std::size_t RatioMap::total() const noexcept {
    std::size_t t = 0;
    for (const auto& e : entries) t += e.second;
    return t;
}

RatioMap ratio(const Series& s1, const Series& s2) {
    RatioMap out;
    out.entries.reserve(s2.size());
    for (const auto& j : s2) out.entries.emplace_back(j, 0);
    for (const auto& i : s1) {
        auto idx = component_index(s2, i);
        if (!idx) throw Error(ErrorCode::NotIncluded, to_string(i) + " lies in no element of the parent");
        ++out.entries[*idx].second;
    }
    return out;
}

ConvexInterval compos(const ConvexInterval& i, const Series& s2) {
    auto idx = component_index(s2, i);
    if (!idx) throw Error(ErrorCode::NoComponent, to_string(i) + " lies in no element of the series");
    return s2.items()[*idx];
}

Series complement(const Series& s1, const Series& ref) {
    std::vector<std::vector<ConvexInterval>> inside(ref.size());
    for (const auto& i : s1) {
        auto idx = component_index(ref, i);
        if (!idx) throw Error(ErrorCode::NotIncluded, to_string(i) + " lies outside the reference");
        inside[*idx].push_back(i);
    }
    std::vector<ConvexInterval> out;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        const auto& j = ref.items()[k];
        if (j.is_point()) {
            if (inside[k].empty()) out.push_back(j);
            continue;
        }
        Instant cursor = j.beg;
        for (const auto& i : inside[k]) {
            if (i.beg > cursor) out.emplace_back(cursor, i.beg);
            cursor = i.end;
        }
        if (j.end > cursor) out.emplace_back(cursor, j.end);
    }
    return Series(std::move(out));
}

Series complement(const Series& s1, const ConvexInterval& ref) { return complement(s1, Series({ref})); }

Series gap(const Series& s) {
    if (s.empty()) return {};
    ConvexInterval hull = convexify(s);
    // a point at either end of the hull is a boundary instant, not inside it
    return complement(restrict(s, hull, RestrictMode::Strict), hull);
}

Series restrict(const Series& s, const ConvexInterval& j, RestrictMode mode) {
    std::vector<ConvexInterval> out;
    for (const auto& i : s) {
        if (mode == RestrictMode::Strict) {
            if (contains(j, i)) out.push_back(i);
        } else if (auto x = intersection(i, j)) {
            out.push_back(*x);
        }
    }
    return Series(std::move(out));
}

Series restrict(const Series& s, const GeneralizedInterval& j, RestrictMode mode) {
    std::vector<ConvexInterval> out;
    for (const auto& i : s) {
        if (mode == RestrictMode::Strict) {
            if (j.contains(i)) out.push_back(i);
        } else {
            auto pieces = j.clip(i);
            out.insert(out.end(), pieces.begin(), pieces.end());
        }
    }
    return Series(std::move(out));
}

Series restrict_series(const Series& s1, const Series& s2, RestrictMode mode) {
    if (s2.empty()) return {};
    return restrict(s1, ext(s2), mode);
}

Series restrict_set(const Series& s1, const Series& s2, const std::set<std::size_t>& e) {
    std::vector<ConvexInterval> out;
    std::optional<std::size_t> current;
    std::size_t rank = 0;
    for (const auto& i : s1) {
        auto idx = component_index(s2, i);
        if (!idx) continue;
        if (idx != current) {
            current = idx;
            rank = 0;
        }
        ++rank;
        if (e.count(rank) != 0) out.push_back(i);
    }
    return Series(std::move(out));
}

Series restrict_nth(const Series& s1, const Series& s2, std::size_t n) {
    return restrict_set(s1, s2, {n});
}

Series restrict_pred(const Series& s, const std::function<bool(const ConvexInterval&)>& c) {
    std::vector<ConvexInterval> out;
    std::copy_if(s.begin(), s.end(), std::back_inserter(out), c);
    return Series(std::move(out));
}

Series quotient(const Series& s, const std::function<long long(std::size_t)>& grouping) {
    std::vector<ConvexInterval> out;
    std::set<long long> closed;
    std::optional<long long> current;
    std::vector<ConvexInterval> members;
    auto flush = [&] {
        if (!members.empty()) out.push_back(convexify(members));
        members.clear();
    };
    for (std::size_t k = 1; k <= s.size(); ++k) {
        long long g = grouping(k);
        if (!current || g != *current) {
            if (closed.count(g) != 0) {
                throw Error(ErrorCode::IncompatibleEquivalence,
                            "class " + std::to_string(g) + " is not a contiguous run (index " +
                                std::to_string(k) + ")");
            }
            if (current) closed.insert(*current);
            flush();
            current = g;
        }
        members.push_back(s.items()[k - 1]);
    }
    flush();
    return Series(std::move(out));
}

Series agglo(const Series& s, std::size_t n) {
    if (n < 1) throw Error(ErrorCode::BadPattern, "agglomeration size must be at least 1");
    return quotient(s, [n](std::size_t i) { return static_cast<long long>((i - 1) / n); });
}

Series extract_first(const Series& s, std::size_t n) {
    std::size_t m = std::min(n, s.size());
    return Series(std::vector<ConvexInterval>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(m)));
}

Series extract_last(const Series& s, std::size_t n) {
    std::size_t m = std::min(n, s.size());
    return Series(std::vector<ConvexInterval>(s.end() - static_cast<std::ptrdiff_t>(m), s.end()));
}

Series extract_pattern(const Series& s, std::size_t n, std::size_t p) {
    if (p < 1 || n > p) {
        throw Error(ErrorCode::BadPattern,
                    "pattern keeps " + std::to_string(n) + " out of " + std::to_string(p));
    }
    std::vector<ConvexInterval> out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k % p < n) out.push_back(s.items()[k]);
    }
    return Series(std::move(out));
}

Series begins(const Series& s) {
    std::vector<ConvexInterval> out;
    for (const auto& j : s) {
        auto p = ConvexInterval::point(j.beg);
        if (out.empty() || out.back() != p) out.push_back(p);
    }
    return Series(std::move(out));
}

Series intdef(const Series& a, const Series& b) {
    std::vector<ConvexInterval> out;
    std::vector<std::pair<ConvexInterval, ConvexInterval>> sources;
    std::size_t k = 0;
    for (const auto& x : a) {
        while (k < b.size() && !(order_leq(x, b.items()[k]) && x != b.items()[k])) ++k;
        if (k == b.size()) break;
        const auto& y = b.items()[k];
        ConvexInterval span{x.beg, std::max(x.end, y.end)};
        if (!out.empty() && (!order_leq(out.back(), span) || out.back() == span)) {
            throw Error(ErrorCode::NotASeries,
                        "intdef spans overlap: " + pair_text(out.back(), span) + " built from " +
                            pair_text(sources.back().first, sources.back().second) + " and " +
                            pair_text(x, y));
        }
        out.push_back(span);
        sources.emplace_back(x, y);
    }
    return Series(std::move(out));
}

bool is_contiguous(const Series& s) noexcept {
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s.items()[k - 1].end != s.items()[k].beg) return false;
    }
    return true;
}

std::string to_string(const Series& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ", ";
        out += to_string(s.items()[k]);
    }
    return out + "}";
}

} // namespace iterata
