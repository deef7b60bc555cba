#include "iterata/interval.hpp"

#include <algorithm>

#include "iterata/errors.hpp"

namespace iterata {

ConvexInterval::ConvexInterval(Instant b, Instant e) : beg(b), end(e) {
    if (b > e) {
        throw Error(ErrorCode::InvalidInput,
                    "interval with beg > end: [" + std::to_string(b) + "," + std::to_string(e) + ")");
    }
}

std::string to_string(const ConvexInterval& i) {
    if (i.is_point()) return "[" + std::to_string(i.beg) + "]";
    return "[" + std::to_string(i.beg) + "," + std::to_string(i.end) + ")";
}

bool order_leq(const ConvexInterval& i, const ConvexInterval& j) noexcept { return i.end <= j.beg; }

bool contains(const ConvexInterval& outer, const ConvexInterval& inner) noexcept {
    if (outer.is_point()) return inner == outer;
    if (inner.is_point()) return outer.beg < inner.beg && inner.beg < outer.end;
    return outer.beg <= inner.beg && inner.end <= outer.end;
}

std::optional<ConvexInterval> intersection(const ConvexInterval& a, const ConvexInterval& b) noexcept {
    if (a.is_point()) {
        if (contains(b, a)) return a;
        return std::nullopt;
    }
    if (b.is_point()) {
        if (contains(a, b)) return b;
        return std::nullopt;
    }
    Instant lo = std::max(a.beg, b.beg);
    Instant hi = std::min(a.end, b.end);
    if (lo < hi) return ConvexInterval{lo, hi};
    return std::nullopt;
}

bool intersects(const ConvexInterval& a, const ConvexInterval& b) noexcept {
    return intersection(a, b).has_value();
}

ConvexInterval convexify(const std::vector<ConvexInterval>& parts) {
    if (parts.empty()) throw Error(ErrorCode::EmptyInput, "convexify of an empty set");
    Instant lo = parts.front().beg;
    Instant hi = parts.front().end;
    for (const auto& p : parts) {
        lo = std::min(lo, p.beg);
        hi = std::max(hi, p.end);
    }
    return {lo, hi};
}

namespace {

std::pair<Instant, Instant> cells(const ConvexInterval& i) {
    if (i.is_point()) return {2 * i.beg, 2 * i.beg};
    return {2 * i.beg + 1, 2 * i.end - 1};
}

} // namespace

GeneralizedInterval::GeneralizedInterval(std::vector<ConvexInterval> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error(ErrorCode::EmptyInput, "generalized interval without parts");
    std::sort(parts_.begin(), parts_.end());
    parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
    std::vector<Run> runs;
    for (const auto& p : parts_) {
        auto [lo, hi] = cells(p);
        runs.push_back({lo, hi});
    }
    std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.lo < b.lo; });
    for (const auto& r : runs) {
        if (!runs_.empty() && r.lo <= runs_.back().hi + 1) {
            runs_.back().hi = std::max(runs_.back().hi, r.hi);
        } else {
            runs_.push_back(r);
        }
    }
}

Instant GeneralizedInterval::beg() const noexcept {
    Instant b = parts_.front().beg;
    for (const auto& p : parts_) b = std::min(b, p.beg);
    return b;
}

Instant GeneralizedInterval::end() const noexcept {
    Instant e = parts_.front().end;
    for (const auto& p : parts_) e = std::max(e, p.end);
    return e;
}

bool GeneralizedInterval::contains(const ConvexInterval& i) const {
    auto [lo, hi] = cells(i);
    auto it = std::upper_bound(runs_.begin(), runs_.end(), lo, [](Instant v, const Run& r) { return v < r.lo; });
    if (it == runs_.begin()) return false;
    --it;
    return it->lo <= lo && hi <= it->hi;
}

std::vector<ConvexInterval> GeneralizedInterval::clip(const ConvexInterval& i) const {
    auto [lo, hi] = cells(i);
    std::vector<ConvexInterval> out;
    auto it = std::upper_bound(runs_.begin(), runs_.end(), lo, [](Instant v, const Run& r) { return v < r.lo; });
    if (it != runs_.begin()) --it;
    for (; it != runs_.end() && it->lo <= hi; ++it) {
        Instant a = std::max(lo, it->lo), b = std::min(hi, it->hi);
        if (a > b) continue;
        std::optional<ConvexInterval> trailing;
        if (a % 2 == 0) {
            out.push_back(ConvexInterval::point(a / 2));
            ++a;
        }
        if (b >= a && b % 2 == 0) {
            trailing = ConvexInterval::point(b / 2);
            --b;
        }
        if (a <= b) out.emplace_back((a - 1) / 2, (b + 1) / 2);
        if (trailing) out.push_back(*trailing);
    }
    return out;
}

} // namespace iterata
