#include <algorithm>

#include "iterata/cti.hpp"
#include "iterata/errors.hpp"

namespace iterata::cti {

Threshold plupart_threshold() { return {Cmp::Gt, 66, 100, 1}; }
Threshold certains_threshold() { return {Cmp::Lt, 33, 100, 1}; }

Threshold frequency_threshold(FreqAdverb a) {
    switch (a) {
    case FreqAdverb::Souvent: return plupart_threshold();
    case FreqAdverb::Parfois: return certains_threshold();
    case FreqAdverb::Rarement: return {Cmp::Lt, 15, 100, 1};
    }
    return plupart_threshold();
}

namespace {

struct Ctx {
    const Frame& frame;
    const DenoteOptions& opts;
};

Denotation eval(const NodePtr& ast, const Ctx& c);

bool intdef_derived(const NodePtr& p) { return p && std::holds_alternative<IntdefNode>(p->v); }

Series nc_series(const NcSpec& nc, const Ctx& c) {
    Series s = gen(nc.name, c.frame, c.opts.mode, c.opts.calendar);
    if (!nc.suite) return s;
    Series parent = witness(eval(nc.suite, c));
    RestrictMode mode = intdef_derived(nc.suite) ? RestrictMode::Soft : c.opts.mode;
    return restrict_series(s, parent, mode);
}

Family family(Series base, decltype(Family::constraint) constraint, const Ctx& c) {
    Family f{std::move(base), std::move(constraint), c.opts.lenient};
    witness(f); // raises DegenerateFamily when nothing can satisfy the constraint
    return f;
}

struct EvalVisitor {
    const Ctx& c;

    Denotation operator()(const DetNode& d) const {
        Series s = nc_series(d.nc, c);
        switch (d.det) {
        case Det::Les: return {s};
        case Det::Un: return {family(s, Card{1}, c)};
        case Det::Plupart: return {family(s, plupart_threshold(), c)};
        case Det::Certains: return {family(s, certains_threshold(), c)};
        }
        return {s};
    }
    Denotation operator()(const NcSpec& nc) const { return {nc_series(nc, c)}; }
    Denotation operator()(const ParNode& p) const {
        Series parent = nc_series(p.nc2, c);
        Series base = restrict_series(nc_series(p.nc1, c), parent, RestrictMode::Strict);
        return {family(base, RatioConst{parent, static_cast<std::size_t>(p.n), Membership::Extracted}, c)};
    }
    Denotation operator()(const FoisParNode& f) const {
        Series parent = nc_series(f.nc, c);
        return {family(parent, RatioConst{parent, static_cast<std::size_t>(f.n), Membership::Included}, c)};
    }
    Denotation operator()(const SurNode& s) const {
        Series base = nc_series(s.nc, c);
        Series groups = agglo(base, static_cast<std::size_t>(s.p));
        return {family(base, RatioConst{groups, static_cast<std::size_t>(s.n), Membership::Extracted}, c)};
    }
    Denotation operator()(const TousLesNNode& t) const {
        return {extract_pattern(nc_series(t.nc, c), 1, static_cast<std::size_t>(t.n))};
    }
    Denotation operator()(const NthNode& t) const {
        Series s = gen(t.nc, c.frame, c.opts.mode, c.opts.calendar);
        Series parent = t.parent ? witness(eval(t.parent, c)) : Series({c.frame.span()});
        return {restrict_nth(s, parent, static_cast<std::size_t>(t.n))};
    }
    Denotation operator()(const ClockNode& k) const {
        Series pts = clock_points(k.hour, k.minute, c.frame);
        if (!k.within) return {pts};
        return {restrict_series(pts, witness(eval(k.within, c)), RestrictMode::Strict)};
    }
    Denotation operator()(const IntdefNode& i) const {
        return {intdef(witness(eval(i.a, c)), witness(eval(i.b, c)))};
    }
    Denotation operator()(const FreqNode& f) const {
        return {family(witness(eval(f.inner, c)), frequency_threshold(f.adverb), c)};
    }
};

Denotation eval(const NodePtr& ast, const Ctx& c) { return std::visit(EvalVisitor{c}, ast->v); }

[[noreturn]] void degenerate(const std::string& why) { throw Error(ErrorCode::DegenerateFamily, why); }

bool threshold_holds(std::size_t m, std::size_t n, const Threshold& t) {
    if (n == 0 || m < t.min_card) return false;
    long long lhs = static_cast<long long>(m) * t.den;
    long long rhs = static_cast<long long>(n) * t.num;
    return t.op == Cmp::Gt ? lhs > rhs : lhs < rhs;
}

// base elements grouped by the parent component containing them
std::vector<std::vector<ConvexInterval>> by_component(const Series& base, const Series& parent) {
    std::vector<std::vector<ConvexInterval>> groups(parent.size());
    std::size_t k = 0;
    for (const auto& i : base) {
        while (k < parent.size() && parent.items()[k].end < i.beg) ++k;
        for (std::size_t t = k; t < parent.size() && parent.items()[t].beg <= i.beg; ++t) {
            if (contains(parent.items()[t], i)) {
                groups[t].push_back(i);
                break;
            }
        }
    }
    return groups;
}

} // namespace

Denotation denote(const NodePtr& ast, const Frame& frame, const DenoteOptions& opts) {
    return eval(ast, Ctx{frame, opts});
}

bool family_check(const Series& cand, const Family& f) {
    if (auto* e = std::get_if<Exact>(&f.constraint)) return cand == e->series;
    if (auto* k = std::get_if<Card>(&f.constraint)) return cand.size() == k->k && extracted(cand, f.base);
    if (auto* t = std::get_if<Threshold>(&f.constraint)) {
        return extracted(cand, f.base) && threshold_holds(cand.size(), f.base.size(), *t);
    }
    const auto& r = std::get<RatioConst>(f.constraint);
    bool member = r.membership == Membership::Extracted ? extracted(cand, f.base) : included(cand, f.base);
    if (!member || !included(cand, r.parent)) return false;
    RatioMap counts = ratio(cand, r.parent);
    if (!f.lenient) return counts.is_constant(r.n);
    auto avail = by_component(f.base, r.parent);
    for (std::size_t k = 0; k < counts.entries.size(); ++k) {
        std::size_t want = r.membership == Membership::Extracted ? std::min(r.n, avail[k].size()) : r.n;
        if (counts.entries[k].second != want) return false;
    }
    return true;
}

Series witness(const Family& f) {
    Series out;
    const std::size_t n = f.base.size();
    if (auto* e = std::get_if<Exact>(&f.constraint)) {
        out = e->series;
    } else if (auto* k = std::get_if<Card>(&f.constraint)) {
        if (k->k > n) degenerate("cannot pick " + std::to_string(k->k) + " of " + std::to_string(n) + " elements");
        out = extract_first(f.base, k->k);
    } else if (auto* t = std::get_if<Threshold>(&f.constraint)) {
        if (n == 0) degenerate("threshold over an empty base");
        std::size_t m = 0;
        if (t->op == Cmp::Gt) {
            m = std::min<std::size_t>(n, static_cast<std::size_t>(n * t->num / t->den) + 1);
        } else {
            long long c = (static_cast<long long>(n) * t->num + t->den - 1) / t->den;
            m = static_cast<std::size_t>(std::max<long long>(static_cast<long long>(t->min_card), c - 1));
        }
        if (m > n || !threshold_holds(m, n, *t)) {
            degenerate("no sub-series of a " + std::to_string(n) + "-element base meets the threshold");
        }
        out = extract_first(f.base, m);
    } else {
        const auto& r = std::get<RatioConst>(f.constraint);
        std::vector<ConvexInterval> items;
        if (r.membership == Membership::Extracted) {
            auto groups = by_component(f.base, r.parent);
            for (std::size_t k = 0; k < groups.size(); ++k) {
                if (groups[k].size() < r.n && !f.lenient) {
                    degenerate("component " + to_string(r.parent.items()[k]) + " holds " +
                               std::to_string(groups[k].size()) + " elements, fewer than " + std::to_string(r.n));
                }
                std::size_t take = std::min(r.n, groups[k].size());
                items.insert(items.end(), groups[k].begin(), groups[k].begin() + static_cast<std::ptrdiff_t>(take));
            }
        } else {
            for (const auto& j : r.parent) {
                Instant len = j.length();
                for (std::size_t k = 0; k < r.n; ++k) {
                    Instant off = static_cast<Instant>(k + 1) * len / static_cast<Instant>(r.n + 1);
                    items.push_back(ConvexInterval::point(j.beg + off));
                }
            }
        }
        if (!is_series(items)) degenerate("evenly spaced points collide inside a component");
        out = Series(std::move(items));
    }
    if (!family_check(out, f)) degenerate("the canonical candidate does not satisfy the family constraint");
    return out;
}

Series witness(const Denotation& d) {
    if (d.concrete()) return d.series();
    return witness(d.family());
}

ComparisonReport compare(const Denotation& d1, const Denotation& d2) {
    Series a = witness(d1);
    Series b = witness(d2);
    ComparisonReport r;
    r.equal = a == b;
    auto direction = [](bool ab, bool ba) -> std::string {
        if (ab && ba) return "both";
        if (ab) return "first-in-second";
        if (ba) return "second-in-first";
        return "";
    };
    bool ea = extracted(a, b), eb = extracted(b, a);
    bool ia = included(a, b), ib = included(b, a);
    r.extracted_either_way = ea || eb;
    r.included_either_way = ia || ib;
    r.extracted_direction = direction(ea, eb);
    r.included_direction = direction(ia, ib);
    bool meet = false;
    std::size_t k = 0;
    for (const auto& x : a) {
        while (k < b.size() && b.items()[k].end < x.beg) ++k;
        for (std::size_t t = k; t < b.size() && b.items()[t].beg <= x.end; ++t) {
            if (intersects(x, b.items()[t])) {
                meet = true;
                break;
            }
        }
        if (meet) break;
    }
    r.overlapping = meet;
    r.point_disjoint = !meet;
    return r;
}

} // namespace iterata::cti
