#include "iterata/allen.hpp"

#include <algorithm>
#include <bit>

#include "iterata/errors.hpp"
#include "iterata/text.hpp"

namespace iterata::allen {

namespace {

constexpr std::array<Code, kBaseCount> kCodes{{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 4},
}};

constexpr std::array<std::string_view, kBaseCount> kNames{"p", "m",  "o",  "fi", "di", "s", "eq",
                                                          "si", "d", "f", "oi", "mi", "pi"};

constexpr std::array<Base, kBaseCount> kTranspose{Base::pi, Base::mi, Base::oi, Base::f,  Base::d,
                                                  Base::si, Base::eq, Base::s,  Base::di, Base::fi,
                                                  Base::o,  Base::m,  Base::p};

// Position of an endpoint relative to [b,e): 0 before, 1 at b, 2 inside, 3 at e, 4 after.
int locate(long long v, long long b, long long e) {
    if (v < b) return 0;
    if (v == b) return 1;
    if (v < e) return 2;
    if (v == e) return 3;
    return 4;
}

using Table = std::array<std::array<RelationSet, kBaseCount>, kBaseCount>;

Table build_table() {
    Table t{};
    constexpr int kMax = 6;
    struct Iv {
        int b, e;
    };
    std::vector<Iv> ivs;
    for (int b = 0; b < kMax; ++b) {
        for (int e = b + 1; e < kMax; ++e) ivs.push_back({b, e});
    }
    for (const auto& x : ivs) {
        for (const auto& y : ivs) {
            Base rxy = relation_between(x.b, x.e, y.b, y.e);
            for (const auto& z : ivs) {
                Base ryz = relation_between(y.b, y.e, z.b, z.e);
                t[static_cast<int>(rxy)][static_cast<int>(ryz)].add(relation_between(x.b, x.e, z.b, z.e));
            }
        }
    }
    return t;
}

const Table& table() {
    static const Table t = build_table();
    return t;
}

} // namespace

Code code(Base r) noexcept { return kCodes[static_cast<int>(r)]; }

std::optional<Base> from_code(Code c) noexcept {
    for (std::size_t k = 0; k < kBaseCount; ++k) {
        if (kCodes[k] == c) return static_cast<Base>(k);
    }
    return std::nullopt;
}

std::string_view name(Base r) noexcept { return kNames[static_cast<int>(r)]; }

std::optional<Base> base_from_name(std::string_view s) noexcept {
    for (std::size_t k = 0; k < kBaseCount; ++k) {
        if (kNames[k] == s) return static_cast<Base>(k);
    }
    return std::nullopt;
}

bool lattice_leq(Base a, Base b) noexcept {
    Code ca = code(a), cb = code(b);
    return ca.x <= cb.x && ca.y <= cb.y;
}

Base lattice_inf(Base a, Base b) noexcept {
    Code ca = code(a), cb = code(b);
    return *from_code({std::min(ca.x, cb.x), std::min(ca.y, cb.y)});
}

Base lattice_sup(Base a, Base b) noexcept {
    Code ca = code(a), cb = code(b);
    return *from_code({std::max(ca.x, cb.x), std::max(ca.y, cb.y)});
}

Base transpose(Base r) noexcept { return kTranspose[static_cast<int>(r)]; }

Base relation_between(long long b1, long long e1, long long b2, long long e2) {
    if (!(b1 < e1) || !(b2 < e2)) {
        throw Error(ErrorCode::InvalidInput, "Allen relations need proper intervals");
    }
    return *from_code({locate(b1, b2, e2), locate(e1, b2, e2)});
}

RelationSet::RelationSet(std::initializer_list<Base> rs) {
    for (Base r : rs) add(r);
}

std::size_t RelationSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Base> RelationSet::members() const {
    std::vector<Base> out;
    for (Base r : kAllBase) {
        if (has(r)) out.push_back(r);
    }
    return out;
}

ConvexRelation::ConvexRelation(Base l, Base h) : lo(l), hi(h) {
    if (!lattice_leq(l, h)) {
        throw Error(ErrorCode::RelationSyntax,
                    "not a lattice interval: [" + std::string(name(l)) + "," + std::string(name(h)) + "]");
    }
}

RelationSet ConvexRelation::extension() const {
    RelationSet out;
    for (Base r : kAllBase) {
        if (lattice_leq(lo, r) && lattice_leq(r, hi)) out.add(r);
    }
    return out;
}

RelationSet compose_base(Base r, Base s) { return table()[static_cast<int>(r)][static_cast<int>(s)]; }

RelationSet transpose(RelationSet r) {
    RelationSet out;
    for (Base b : r.members()) out.add(transpose(b));
    return out;
}

RelationSet compose_set(RelationSet r, RelationSet s) {
    RelationSet out;
    for (Base a : r.members()) {
        for (Base b : s.members()) out = out | compose_base(a, b);
        if (out.is_full()) break;
    }
    return out;
}

ConvexRelation compose_convex(ConvexRelation a, ConvexRelation b) {
    ConvexRelation lo = convex_hull(compose_base(a.lo, b.lo));
    ConvexRelation hi = convex_hull(compose_base(a.hi, b.hi));
    return {lo.lo, hi.hi};
}

RelationSet compose(RelationSet r, RelationSet s) {
    if (r.empty() || s.empty()) return {};
    if (is_convex(r) && is_convex(s)) return compose_convex(convex_hull(r), convex_hull(s)).extension();
    return compose_set(r, s);
}

ConvexRelation convex_hull(RelationSet r) {
    if (r.empty()) throw Error(ErrorCode::EmptyRelation, "convex hull of the empty relation");
    auto ms = r.members();
    Base lo = ms.front(), hi = ms.front();
    for (Base b : ms) {
        lo = lattice_inf(lo, b);
        hi = lattice_sup(hi, b);
    }
    return {lo, hi};
}

bool is_convex(RelationSet r) { return !r.empty() && convex_hull(r).extension() == r; }

bool is_pointizable(RelationSet r) {
    if (r.empty()) return false;
    RelationSet hull = convex_hull(r).extension();
    RelationSet removed(hull.bits() & ~r.bits());
    RelationSet covered;
    for (int coord = 0; coord < 2; ++coord) {
        for (int v : {1, 3}) {
            RelationSet slice;
            for (Base b : hull.members()) {
                Code c = code(b);
                if ((coord == 0 ? c.x : c.y) == v) slice.add(b);
            }
            if (!slice.empty() && slice.subset_of(removed)) covered = covered | slice;
        }
    }
    return covered == removed;
}

bool is_preconvex(RelationSet r) {
    if (r.empty()) return false;
    RelationSet removed(convex_hull(r).extension().bits() & ~r.bits());
    static const RelationSet kLowDim{Base::m, Base::fi, Base::s, Base::eq, Base::si, Base::f, Base::mi};
    return removed.subset_of(kLowDim);
}

std::vector<ConvexRelation> all_convex_relations() {
    std::vector<ConvexRelation> out;
    for (Base a : kAllBase) {
        for (Base b : kAllBase) {
            if (lattice_leq(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<std::pair<std::string, ConvexRelation>> vocabulary_entries(Vocabulary source) {
    using B = Base;
    switch (source) {
    case Vocabulary::Sdt:
        return {{"SUCC", {B::d, B::pi}}, {"SIMUL", {B::m, B::mi}}, {"PREC", {B::p, B::di}}, {"ACCESS", {B::fi, B::si}}};
    case Vocabulary::Freksa:
        return {{"ol", {B::p, B::di}}, {"yo", {B::d, B::pi}}, {"pr", {B::p, B::m}},  {"hh", {B::s, B::si}},
                {"tt", {B::fi, B::f}}, {"sd", {B::mi, B::pi}}, {"sv", {B::di, B::pi}}, {"sb", {B::p, B::d}},
                {"bd", {B::o, B::pi}}, {"db", {B::p, B::oi}}, {"ct", {B::o, B::oi}},  {"ob", {B::p, B::o}},
                {"yb", {B::oi, B::pi}}, {"oc", {B::o, B::di}}, {"sc", {B::di, B::oi}}, {"bc", {B::o, B::d}},
                {"yc", {B::d, B::oi}}};
    case Vocabulary::Accary:
        return {{"common_period", {B::m, B::mi}}, {"begin_before", {B::p, B::di}}, {"fuzzy_before", {B::p, B::m}},
                {"fuzzy_during", {B::s, B::f}},   {"common_begin", {B::s, B::si}},  {"common_end", {B::fi, B::f}},
                {"begin_in", {B::s, B::mi}},      {"end_in", {B::m, B::f}},         {"first_to_end", {B::p, B::f}}};
    }
    return {};
}

ConvexRelation vocab(Vocabulary source, std::string_view n) {
    for (const auto& [k, v] : vocabulary_entries(source)) {
        if (k == n) return v;
    }
    throw Error(ErrorCode::UnknownVocabName, "unknown vocabulary name: " + std::string(n));
}

RelationSet parse_relation(std::string_view raw) {
    std::string t = text::trim(raw);
    auto fail = [&]() -> RelationSet { throw Error(ErrorCode::RelationSyntax, "bad relation syntax: " + t); };
    if (t.empty()) return fail();
    if (t == "full" || t == "?") return RelationSet::full();
    if (t.size() > 2 && t[1] == ':') {
        std::string_view n = std::string_view(t).substr(2);
        switch (t[0]) {
        case 'g': return vocab(Vocabulary::Sdt, n).extension();
        case 'f': return vocab(Vocabulary::Freksa, n).extension();
        case 'a': return vocab(Vocabulary::Accary, n).extension();
        default: return fail();
        }
    }
    auto parts = [&](std::string_view inner) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : inner) {
            if (c == ',') {
                out.push_back(text::trim(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!text::trim(cur).empty() || !out.empty()) out.push_back(text::trim(cur));
        return out;
    };
    auto base = [&](const std::string& n) {
        auto b = base_from_name(n);
        if (!b) throw Error(ErrorCode::RelationSyntax, "unknown base relation '" + n + "' in " + t);
        return *b;
    };
    if (t.front() == '{' && t.back() == '}') {
        RelationSet out;
        for (const auto& n : parts(std::string_view(t).substr(1, t.size() - 2))) out.add(base(n));
        return out;
    }
    if (t.front() == '[' && t.back() == ']') {
        auto ps = parts(std::string_view(t).substr(1, t.size() - 2));
        if (ps.size() != 2) return fail();
        return ConvexRelation(base(ps[0]), base(ps[1])).extension();
    }
    return RelationSet{base(t)};
}

std::string to_text(RelationSet r) {
    std::string out = "{";
    bool first = true;
    for (Base b : r.members()) {
        if (!first) out += ",";
        out += name(b);
        first = false;
    }
    return out + "}";
}

std::string to_text(ConvexRelation r) {
    return "[" + std::string(name(r.lo)) + "," + std::string(name(r.hi)) + "]";
}

} // namespace iterata::allen
