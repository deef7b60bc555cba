#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "iterata/interval.hpp"

namespace iterata {

// Ordered sequence of pairwise disjoint convex intervals; indices are 1-based
// in the public operations.
class Series {
public:
    Series() = default;
    // Validates order and disjointness; throws NotASeries.
    explicit Series(std::vector<ConvexInterval> items);

    const std::vector<ConvexInterval>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<ConvexInterval> items_;
};

enum class RestrictMode { Strict, Soft };

Series make_series(std::vector<ConvexInterval> items);
bool is_series(const std::vector<ConvexInterval>& items) noexcept;

ConvexInterval nth(const Series& s, std::size_t n);
std::optional<ConvexInterval> succ(const Series& s, const ConvexInterval& i);
ConvexInterval fst(const Series& s);
std::size_t ordre(const Series& s, const ConvexInterval& i);

GeneralizedInterval ext(const Series& s);
ConvexInterval convexify(const Series& s);

bool included(const Series& s1, const Series& s2);
bool extracted(const Series& s1, const Series& s2);

// Counts per parent element, keyed by the parent interval.
struct RatioMap {
    std::vector<std::pair<ConvexInterval, std::size_t>> entries;

    std::size_t at(const ConvexInterval& j) const;
    bool is_constant(std::size_t n) const noexcept;
    std::size_t total() const noexcept;
};

RatioMap ratio(const Series& s1, const Series& s2);
ConvexInterval compos(const ConvexInterval& i, const Series& s2);

Series complement(const Series& s1, const Series& ref);
Series complement(const Series& s1, const ConvexInterval& ref);
Series gap(const Series& s);

Series restrict(const Series& s, const ConvexInterval& j, RestrictMode mode);
// With a non-convex J in soft mode, an item crossing several parts yields one
// clipped piece per part it meets.
Series restrict(const Series& s, const GeneralizedInterval& j, RestrictMode mode);
Series restrict_series(const Series& s1, const Series& s2, RestrictMode mode);
Series restrict_nth(const Series& s1, const Series& s2, std::size_t n);
Series restrict_set(const Series& s1, const Series& s2, const std::set<std::size_t>& e);
Series restrict_pred(const Series& s, const std::function<bool(const ConvexInterval&)>& c);

// grouping maps a 1-based index to a class id.
Series quotient(const Series& s, const std::function<long long(std::size_t)>& grouping);
Series agglo(const Series& s, std::size_t n);

Series extract_first(const Series& s, std::size_t n);
Series extract_last(const Series& s, std::size_t n);
Series extract_pattern(const Series& s, std::size_t n, std::size_t p);

Series begins(const Series& s);
Series intdef(const Series& a, const Series& b);
bool is_contiguous(const Series& s) noexcept;

std::string to_string(const Series& s);

} // namespace iterata
