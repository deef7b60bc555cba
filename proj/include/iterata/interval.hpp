#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iterata {

// Minutes from the frame origin.
using Instant = std::int64_t;

// [beg,end) when beg < end; the instant beg when beg == end.
//
// A proper interval covers the minutes beg..end-1. A point is the boundary
// instant between minute p-1 and minute p, so it sits strictly after
// anything ending at p and strictly before anything starting at p. It lies
// inside a proper interval only when beg < p < end.
struct ConvexInterval {
    Instant beg = 0;
    Instant end = 0;

    ConvexInterval() = default;
    ConvexInterval(Instant b, Instant e);

    static ConvexInterval point(Instant p) { return {p, p}; }

    bool is_point() const noexcept { return beg == end; }
    Instant length() const noexcept { return end - beg; }

    friend bool operator==(const ConvexInterval&, const ConvexInterval&) = default;
    friend auto operator<=>(const ConvexInterval&, const ConvexInterval&) = default;
};

std::string to_string(const ConvexInterval& i);

// end(I) <= beg(J)
bool order_leq(const ConvexInterval& i, const ConvexInterval& j) noexcept;

// Point-wise inclusion of I in J.
bool contains(const ConvexInterval& outer, const ConvexInterval& inner) noexcept;

std::optional<ConvexInterval> intersection(const ConvexInterval& a, const ConvexInterval& b) noexcept;
bool intersects(const ConvexInterval& a, const ConvexInterval& b) noexcept;

ConvexInterval convexify(const std::vector<ConvexInterval>& parts);

// Finite union of convex intervals; parts are kept sorted and distinct.
class GeneralizedInterval {
public:
    explicit GeneralizedInterval(std::vector<ConvexInterval> parts);

    const std::vector<ConvexInterval>& parts() const noexcept { return parts_; }
    Instant beg() const noexcept;
    Instant end() const noexcept;
    ConvexInterval hull() const { return convexify(parts_); }
    // I lies inside the union of the parts.
    bool contains(const ConvexInterval& i) const;
    // I intersected with the union, one piece per maximal covered stretch.
    // A stretch closed by a boundary instant yields that instant as an extra
    // point piece.
    std::vector<ConvexInterval> clip(const ConvexInterval& i) const;

private:
    // Instants and minutes interleaved: instant p is cell 2p, minute m is
    // cell 2m+1. The union is kept as maximal runs of cells.
    struct Run {
        Instant lo, hi;
    };
    std::vector<ConvexInterval> parts_;
    std::vector<Run> runs_;
};

} // namespace iterata
