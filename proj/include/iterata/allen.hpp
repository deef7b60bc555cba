#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iterata::allen {

enum class Base : std::uint8_t { p, m, o, fi, di, s, eq, si, d, f, oi, mi, pi };

inline constexpr std::size_t kBaseCount = 13;
inline constexpr std::array<Base, kBaseCount> kAllBase{Base::p,  Base::m,  Base::o, Base::fi, Base::di,
                                                       Base::s,  Base::eq, Base::si, Base::d, Base::f,
                                                       Base::oi, Base::mi, Base::pi};

struct Code {
    int x;
    int y;
    friend bool operator==(const Code&, const Code&) = default;
};

Code code(Base r) noexcept;
std::optional<Base> from_code(Code c) noexcept;
std::string_view name(Base r) noexcept;
std::optional<Base> base_from_name(std::string_view s) noexcept;
// componentwise order of the lattice
bool lattice_leq(Base a, Base b) noexcept;
Base lattice_inf(Base a, Base b) noexcept;
Base lattice_sup(Base a, Base b) noexcept;
Base transpose(Base r) noexcept;

// Relation between two proper intervals given by their endpoints (b1 < e1, b2 < e2).
Base relation_between(long long b1, long long e1, long long b2, long long e2);

class RelationSet {
public:
    constexpr RelationSet() = default;
    constexpr explicit RelationSet(std::uint16_t bits) : bits_(bits & kMask) {}
    RelationSet(std::initializer_list<Base> rs);

    static constexpr RelationSet full() { return RelationSet(kMask); }
    static RelationSet single(Base r) { return RelationSet{r}; }

    bool has(Base r) const noexcept { return (bits_ >> static_cast<int>(r)) & 1U; }
    void add(Base r) noexcept { bits_ |= static_cast<std::uint16_t>(1U << static_cast<int>(r)); }
    bool empty() const noexcept { return bits_ == 0; }
    bool is_full() const noexcept { return bits_ == kMask; }
    std::size_t size() const noexcept;
    std::uint16_t bits() const noexcept { return bits_; }
    bool subset_of(RelationSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    std::vector<Base> members() const;

    RelationSet operator&(RelationSet o) const noexcept { return RelationSet(bits_ & o.bits_); }
    RelationSet operator|(RelationSet o) const noexcept { return RelationSet(bits_ | o.bits_); }
    friend bool operator==(const RelationSet&, const RelationSet&) = default;

    static constexpr std::uint16_t kMask = (1U << kBaseCount) - 1;

private:
    std::uint16_t bits_ = 0;
};

struct ConvexRelation {
    Base lo;
    Base hi;

    ConvexRelation(Base l, Base h);
    RelationSet extension() const;
    friend bool operator==(const ConvexRelation&, const ConvexRelation&) = default;
};

RelationSet compose_base(Base r, Base s);
RelationSet transpose(RelationSet r);
RelationSet compose_set(RelationSet r, RelationSet s);
ConvexRelation compose_convex(ConvexRelation a, ConvexRelation b);
// Uses the convex fast path when both operands are convex.
RelationSet compose(RelationSet r, RelationSet s);

ConvexRelation convex_hull(RelationSet r);
bool is_convex(RelationSet r);
bool is_pointizable(RelationSet r);
bool is_preconvex(RelationSet r);

// Every convex relation, i.e. every lattice interval [a,b] with a <= b.
std::vector<ConvexRelation> all_convex_relations();

enum class Vocabulary { Sdt, Freksa, Accary };
ConvexRelation vocab(Vocabulary source, std::string_view name);
std::vector<std::pair<std::string, ConvexRelation>> vocabulary_entries(Vocabulary source);

// "{p,m}", "[p,di]", "g:SUCC", "f:ol", "a:begin_in", a bare base name, "full" or "{}".
RelationSet parse_relation(std::string_view text);
std::string to_text(RelationSet r);
std::string to_text(ConvexRelation r);

} // namespace iterata::allen
