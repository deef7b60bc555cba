#include "iterata/sdt.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <set>

#include "iterata/errors.hpp"
#include "iterata/text.hpp"

namespace iterata::sdt {

SdtConfig SdtConfig::defaults() {
    SdtConfig c;
    c.tense_map = {
        {Tense::PasseSimple, {Aspect::Aoristique, TenseValue::Passe}},
        {Tense::Imparfait, {Aspect::Inaccompli, TenseValue::Passe}},
        {Tense::PasseCompose, {Aspect::Aoristique, TenseValue::Passe}},
        {Tense::PlusQueParfait, {Aspect::Accompli, TenseValue::Passe}},
        {Tense::Present, {Aspect::Inaccompli, TenseValue::Present}},
        {Tense::Futur, {Aspect::Aoristique, TenseValue::Futur}},
    };
    return c;
}

std::string to_string(PointRel r) {
    switch (r) {
    case PointRel::Lt: return "<";
    case PointRel::Le: return "<=";
    case PointRel::Eq: return "=";
    case PointRel::Adj: return "adj";
    case PointRel::Ll: return "<<";
    }
    return "";
}

std::string to_string(Vendler v) {
    switch (v) {
    case Vendler::Etat: return "etat";
    case Vendler::Activite: return "activite";
    case Vendler::Accomplissement: return "accomplissement";
    case Vendler::Achevement: return "achevement";
    }
    return "";
}

std::string to_string(Tense t) {
    switch (t) {
    case Tense::Present: return "present";
    case Tense::Imparfait: return "imparfait";
    case Tense::PasseSimple: return "passe_simple";
    case Tense::PasseCompose: return "passe_compose";
    case Tense::PlusQueParfait: return "plus_que_parfait";
    case Tense::Futur: return "futur";
    }
    return "";
}

std::string to_string(Aspect a) {
    switch (a) {
    case Aspect::Aoristique: return "aoristique";
    case Aspect::Inaccompli: return "inaccompli";
    case Aspect::Accompli: return "accompli";
    case Aspect::Prospectif: return "prospectif";
    }
    return "";
}

std::string to_string(TenseValue t) {
    switch (t) {
    case TenseValue::Passe: return "passe";
    case TenseValue::Present: return "present";
    case TenseValue::Futur: return "futur";
    }
    return "";
}

std::string to_string(Diagnosis d) {
    switch (d) {
    case Diagnosis::Ok: return "ok";
    case Diagnosis::ResolvedIteration: return "resolved_iteration";
    case Diagnosis::ResolvedContraction: return "resolved_contraction";
    case Diagnosis::Insoluble: return "insoluble";
    }
    return "";
}

std::string to_string(Reading r) {
    switch (r) {
    case Reading::Iterative: return "iterative";
    case Reading::Durative: return "durative";
    case Reading::Ambiguous: return "ambiguous";
    }
    return "";
}

std::string to_string(Role r) {
    switch (r) {
    case Role::Enonciation: return "enonciation";
    case Role::Proces: return "proces";
    case Role::Reference: return "reference";
    case Role::Circonstanciel: return "circonstanciel";
    case Role::Serie: return "serie";
    case Role::SerieReference: return "serie_reference";
    }
    return "";
}

void validate(const Clause& c) {
    std::set<std::size_t> kinds;
    for (const auto& circ : c.circumstancials) {
        if (!kinds.insert(circ.index()).second) {
            throw Error(ErrorCode::InvalidClause, "at most one circumstancial of each kind");
        }
        std::visit(
            [](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, PendantDuree> || std::is_same_v<T, EnDuree> ||
                              std::is_same_v<T, DepuisDuree>) {
                    if (x.minutes <= 0) throw Error(ErrorCode::InvalidClause, "durations must be positive");
                } else if constexpr (std::is_same_v<T, AClock>) {
                    if (x.hour < 0 || x.hour > 23 || x.minute < 0 || x.minute > 59) {
                        throw Error(ErrorCode::InvalidClause, "clock time out of range");
                    }
                } else {
                    if (!x.ast) throw Error(ErrorCode::InvalidClause, "empty iterative circumstancial");
                }
            },
            circ);
    }
    if (c.adverb && c.adverb->kind == Adverb::Kind::IterativeCount && c.adverb->count < 1) {
        throw Error(ErrorCode::InvalidClause, "occurrence count must be positive");
    }
}

// ---- point network ----

std::size_t PointNetwork::node(const std::string& n) {
    auto [it, fresh] = index_.try_emplace(n, index_.size());
    return it->second;
}

void PointNetwork::add(const Bound& b) {
    std::size_t x = node(b.a), y = node(b.b);
    // each edge reads: pos(to) - pos(from) >= (macro, micro)
    switch (b.rel) {
    case PointRel::Lt: edges_.push_back({x, y, 0, 1}); break;
    case PointRel::Le: edges_.push_back({x, y, 0, 0}); break;
    case PointRel::Eq:
        edges_.push_back({x, y, 0, 0});
        edges_.push_back({y, x, 0, 0});
        break;
    case PointRel::Adj:
        edges_.push_back({x, y, 0, 1});
        edges_.push_back({y, x, 0, -1});
        break;
    case PointRel::Ll: edges_.push_back({x, y, 1, 0}); break;
    }
}

bool PointNetwork::consistent() const {
    using W = std::pair<long long, long long>;
    const W none{LLONG_MIN / 4, 0};
    const std::size_t n = index_.size();
    std::vector<std::vector<W>> L(n, std::vector<W>(n, none));
    for (std::size_t i = 0; i < n; ++i) L[i][i] = {0, 0};
    for (const auto& e : edges_) L[e.from][e.to] = std::max(L[e.from][e.to], W{e.macro, e.micro});
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (L[i][k] == none) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (L[k][j] == none) continue;
                W via{L[i][k].first + L[k][j].first, L[i][k].second + L[k][j].second};
                if (via > L[i][j]) L[i][j] = via;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (L[i][i] > W{0, 0}) return false;
        }
    }
    return true;
}

// ---- instructions ----

TenseEntry tense_entry(const Clause& c, const SdtConfig& cfg) {
    auto it = cfg.tense_map.find(c.tense);
    if (it == cfg.tense_map.end()) throw Error(ErrorCode::InvalidClause, "no aspect for tense " + to_string(c.tense));
    TenseEntry e = it->second;
    bool depuis = std::any_of(c.circumstancials.begin(), c.circumstancials.end(),
                              [](const Circumstancial& x) { return std::holds_alternative<DepuisDuree>(x); });
    if (c.tense == Tense::PasseCompose && depuis) e.aspect = Aspect::Accompli;
    return e;
}

namespace {

bool telic(Vendler v) { return v == Vendler::Accomplissement || v == Vendler::Achevement; }
bool punctual(Vendler v) { return v == Vendler::Achevement; }

struct Level {
    std::string p1, p2, r1, r2;
    Aspect aspect;
    bool intrinsic;
};

const Level kOcc{"B1", "B2", "I", "II", Aspect::Aoristique, false};
const Level kSeries{"Bs1", "Bs2", "Is", "IIs", Aspect::Inaccompli, false};

void aspect_bounds(std::vector<Bound>& out, const Level& l, Aspect a) {
    const std::string src = "aspect " + to_string(a);
    switch (a) {
    case Aspect::Aoristique:
        out.push_back({l.r1, PointRel::Eq, l.p1, src});
        out.push_back({l.r2, PointRel::Eq, l.p2, src});
        break;
    case Aspect::Inaccompli:
        out.push_back({l.p1, PointRel::Lt, l.r1, src});
        out.push_back({l.r2, PointRel::Lt, l.p2, src});
        break;
    case Aspect::Accompli: out.push_back({l.p2, PointRel::Lt, l.r1, src}); break;
    case Aspect::Prospectif: out.push_back({l.r2, PointRel::Lt, l.p1, src}); break;
    }
}

void tense_bounds(std::vector<Bound>& out, const Level& l, TenseValue t) {
    const std::string src = "temps " + to_string(t);
    switch (t) {
    case TenseValue::Passe: out.push_back({l.r2, PointRel::Lt, "01", src}); break;
    case TenseValue::Present:
        out.push_back({l.r1, PointRel::Le, "02", src});
        out.push_back({"01", PointRel::Le, l.r2, src});
        break;
    case TenseValue::Futur: out.push_back({"02", PointRel::Lt, l.r1, src}); break;
    }
}

struct CircNames {
    std::string node, b, e;
};

// pendant/en/clock share the ct1/ct2 naming in order; depuis is ct1'/ct2'
std::vector<std::optional<CircNames>> circ_names(const Clause& c) {
    std::vector<std::optional<CircNames>> out;
    const std::array<const char*, 3> suffix{"", "b", "c"};
    std::size_t k = 0;
    for (const auto& circ : c.circumstancials) {
        if (std::holds_alternative<CtiCirc>(circ)) {
            out.emplace_back();
        } else if (std::holds_alternative<DepuisDuree>(circ)) {
            out.push_back(CircNames{"circonstanciel_depuis", "ct1'", "ct2'"});
        } else {
            std::string s = suffix[std::min<std::size_t>(k, 2)];
            std::string node = std::holds_alternative<PendantDuree>(circ) ? "circonstanciel_pendant"
                               : std::holds_alternative<EnDuree>(circ)    ? "circonstanciel_en"
                                                                          : "circonstanciel_heure";
            out.push_back(CircNames{node, "ct1" + s, "ct2" + s});
            ++k;
        }
    }
    return out;
}

std::string circ_label(const Circumstancial& c) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PendantDuree>) return "pendant";
            else if constexpr (std::is_same_v<T, EnDuree>) return "en";
            else if constexpr (std::is_same_v<T, DepuisDuree>) return "depuis";
            else if constexpr (std::is_same_v<T, AClock>) return "heure";
            else return "cti";
        },
        c);
}

// Bounds coded by one circumstancial against the level it is scoped to.
void circ_bounds(std::vector<Bound>& out, const Circumstancial& circ, const CircNames& n, const Level& l) {
    const std::string src = circ_label(circ);
    if (std::holds_alternative<PendantDuree>(circ)) {
        out.push_back({n.b, PointRel::Eq, l.p1, src});
        out.push_back({l.p1, PointRel::Eq, l.r1, src});
        out.push_back({n.e, PointRel::Eq, l.p2, src});
        out.push_back({l.p2, PointRel::Eq, l.r2, src});
    } else if (std::holds_alternative<EnDuree>(circ)) {
        out.push_back({n.b, PointRel::Eq, l.p1, src});
        out.push_back({n.e, PointRel::Eq, l.p2, src});
    } else if (std::holds_alternative<DepuisDuree>(circ)) {
        const std::string& start = l.aspect == Aspect::Accompli ? l.p2 : l.p1;
        out.push_back({n.b, PointRel::Eq, start, src});
        out.push_back({n.e, PointRel::Eq, l.r2, src});
        out.push_back({n.b, PointRel::Lt, l.r1, src});
    } else if (std::holds_alternative<AClock>(circ)) {
        out.push_back({n.b, PointRel::Le, l.p1, src});
        out.push_back({l.p2, PointRel::Le, n.e, src});
    }
}

void circ_internal(std::vector<Bound>& out, const Circumstancial& circ, const CircNames& n) {
    PointRel r = std::holds_alternative<AClock>(circ) ? PointRel::Adj : PointRel::Ll;
    out.push_back({n.b, r, n.e, n.node});
}

struct Plan {
    bool iterate = false;
    bool contract = false;
    std::vector<bool> on_series; // per circumstancial
};

struct Candidate {
    SdtStructure s;
    bool ok = false;
};

bool explicit_iteration(const Clause& c) {
    if (c.adverb && (c.adverb->kind == Adverb::Kind::IterativeCount || c.adverb->kind == Adverb::Kind::Frequency)) {
        return true;
    }
    return std::any_of(c.circumstancials.begin(), c.circumstancials.end(),
                       [](const Circumstancial& x) { return std::holds_alternative<CtiCirc>(x); });
}

Candidate assemble(const Clause& c, const SdtConfig& cfg, const Plan& plan) {
    Candidate out;
    SdtStructure& s = out.s;
    TenseEntry te = tense_entry(c, cfg);
    s.tense_value = te.value;
    s.telic = telic(c.vendler);
    s.series_telic = c.adverb && c.adverb->kind == Adverb::Kind::IterativeCount;

    Level occ = kOcc;
    occ.intrinsic = s.telic;
    Level ser = kSeries;
    ser.intrinsic = s.series_telic;

    s.intervals.push_back({Role::Enonciation, "enonciation", "01", "02"});
    s.intervals.push_back({Role::Proces, "proces", "B1", "B2"});
    s.intervals.push_back({Role::Reference, "reference", "I", "II"});
    s.bounds.push_back({"01", PointRel::Lt, "02", "enonciation"});
    s.bounds.push_back({"I", PointRel::Lt, "II", "reference"});
    bool point_process = punctual(c.vendler) || plan.contract;
    s.bounds.push_back({"B1", point_process ? PointRel::Adj : PointRel::Ll, "B2",
                        plan.contract ? "contraction" : "proces"});

    if (plan.iterate) {
        s.aspect = Aspect::Aoristique;
        // the series carries the aspect the tense codes
        s.aspect_series = te.aspect;
        ser.aspect = te.aspect;
        s.intervals.push_back({Role::Serie, "serie", "Bs1", "Bs2"});
        s.intervals.push_back({Role::SerieReference, "serie_reference", "Is", "IIs"});
        s.bounds.push_back({"Bs1", PointRel::Ll, "Bs2", "serie"});
        s.bounds.push_back({"Is", PointRel::Lt, "IIs", "serie_reference"});
        s.bounds.push_back({"Bs1", PointRel::Le, "B1", "iteration"});
        s.bounds.push_back({"B2", PointRel::Le, "Bs2", "iteration"});
        aspect_bounds(s.bounds, occ, Aspect::Aoristique);
        aspect_bounds(s.bounds, ser, te.aspect);
        tense_bounds(s.bounds, ser, te.value);
    } else {
        s.aspect = te.aspect;
        occ.aspect = te.aspect;
        aspect_bounds(s.bounds, occ, te.aspect);
        tense_bounds(s.bounds, occ, te.value);
    }

    auto names = circ_names(c);
    std::vector<std::string> telicity;
    for (std::size_t k = 0; k < c.circumstancials.size(); ++k) {
        if (!names[k]) continue;
        const auto& circ = c.circumstancials[k];
        const Level& l = plan.iterate && plan.on_series[k] ? ser : occ;
        s.intervals.push_back({Role::Circonstanciel, names[k]->node, names[k]->b, names[k]->e});
        circ_internal(s.bounds, circ, *names[k]);
        circ_bounds(s.bounds, circ, *names[k], l);
        if (std::holds_alternative<PendantDuree>(circ) && l.intrinsic) {
            telicity.push_back("pendant requires extrinsic bounds");
        }
        if (std::holds_alternative<EnDuree>(circ) && !l.intrinsic) {
            telicity.push_back("en requires intrinsic bounds");
        }
    }

    PointNetwork net;
    for (const auto& b : s.bounds) net.add(b);
    out.ok = net.consistent() && telicity.empty();
    if (!out.ok) {
        s.conflicts = telicity;
        if (!net.consistent()) {
            // markers whose removal restores consistency
            std::set<std::string> sources;
            for (const auto& b : s.bounds) sources.insert(b.source);
            for (const auto& src : sources) {
                PointNetwork without;
                for (const auto& b : s.bounds) {
                    if (b.source != src) without.add(b);
                }
                if (without.consistent()) s.conflicts.push_back(src);
            }
            if (s.conflicts.size() == telicity.size()) s.conflicts.push_back("bound network");
        }
    }
    return out;
}

// depuis measures the series; en does too once a count fixes the number of occurrences
bool prefers_series(const Circumstancial& x, const Clause& c) {
    if (std::holds_alternative<DepuisDuree>(x)) return true;
    return std::holds_alternative<EnDuree>(x) && c.adverb && c.adverb->kind == Adverb::Kind::IterativeCount;
}
bool is_duration(const Circumstancial& c) {
    return std::holds_alternative<PendantDuree>(c) || std::holds_alternative<EnDuree>(c);
}

// Scopings ordered by the number of circumstancials moved off their preferred level.
std::optional<Candidate> try_iteration(const Clause& c, const SdtConfig& cfg, bool contract, bool durations_on_series) {
    const std::size_t k = c.circumstancials.size();
    std::vector<unsigned> masks(1u << k);
    for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    for (unsigned m : masks) {
        Plan plan{true, contract, std::vector<bool>(k)};
        bool allowed = true;
        for (std::size_t t = 0; t < k; ++t) {
            bool flipped = (m >> t) & 1u;
            plan.on_series[t] = prefers_series(c.circumstancials[t], c) != flipped;
            if (durations_on_series && is_duration(c.circumstancials[t]) && !plan.on_series[t]) allowed = false;
        }
        if (!allowed) continue;
        Candidate cand = assemble(c, cfg, plan);
        if (cand.ok) return cand;
    }
    return std::nullopt;
}

bool has_clock(const Clause& c) {
    return std::any_of(c.circumstancials.begin(), c.circumstancials.end(),
                       [](const Circumstancial& x) { return std::holds_alternative<AClock>(x); });
}

} // namespace

std::vector<Bound> instructions(const Clause& c, const SdtConfig& cfg) {
    validate(c);
    TenseEntry te = tense_entry(c, cfg);
    Level occ = kOcc;
    occ.aspect = te.aspect;
    std::vector<Bound> out;
    aspect_bounds(out, occ, te.aspect);
    tense_bounds(out, occ, te.value);
    auto names = circ_names(c);
    for (std::size_t k = 0; k < c.circumstancials.size(); ++k) {
        if (names[k]) circ_bounds(out, c.circumstancials[k], *names[k], occ);
    }
    return out;
}

SdtStructure build_structure(const Clause& c, const SdtConfig& cfg) {
    validate(c);
    const bool contractible = has_clock(c) && !punctual(c.vendler);

    if (explicit_iteration(c)) {
        if (auto r = try_iteration(c, cfg, false, false)) return r->s;
        if (contractible) {
            if (auto r = try_iteration(c, cfg, true, false)) {
                r->s.diagnosis = Diagnosis::ResolvedContraction;
                return r->s;
            }
        }
        Candidate failed = assemble(c, cfg, Plan{true, false, std::vector<bool>(c.circumstancials.size(), true)});
        failed.s.diagnosis = Diagnosis::Insoluble;
        return failed.s;
    }

    Candidate base = assemble(c, cfg, Plan{false, false, {}});
    if (!c.plausible_duration && c.reiterable) {
        if (auto r = try_iteration(c, cfg, false, true)) {
            r->s.diagnosis = Diagnosis::ResolvedIteration;
            r->s.conflicts = {"implausible duration"};
            return r->s;
        }
    } else if (base.ok) {
        return base.s;
    }

    if (contractible) {
        Candidate k = assemble(c, cfg, Plan{false, true, {}});
        if (k.ok) {
            k.s.diagnosis = Diagnosis::ResolvedContraction;
            k.s.conflicts = base.s.conflicts;
            return k.s;
        }
    }
    if (c.reiterable) {
        for (bool contract : {false, true}) {
            if (contract && !contractible) continue;
            if (auto r = try_iteration(c, cfg, contract, false)) {
                r->s.diagnosis = Diagnosis::ResolvedIteration;
                r->s.conflicts = base.s.conflicts;
                return r->s;
            }
        }
    }
    base.s.diagnosis = Diagnosis::Insoluble;
    return base.s;
}

// ---- Allen translation ----

namespace {

enum class Sign { Lt, Eq, Gt };

struct Signature {
    // b1 vs b2, b1 vs e2, e1 vs b2, e1 vs e2
    std::array<Sign, 4> s;
};

Sign sign(long long a, long long b) { return a < b ? Sign::Lt : a == b ? Sign::Eq : Sign::Gt; }

const std::array<Signature, 13>& signatures() {
    static const std::array<Signature, 13> table = [] {
        std::array<Signature, 13> t{};
        for (int b1 = 0; b1 < 5; ++b1)
            for (int e1 = b1 + 1; e1 < 6; ++e1)
                for (int b2 = 0; b2 < 5; ++b2)
                    for (int e2 = b2 + 1; e2 < 6; ++e2) {
                        auto r = allen::relation_between(b1, e1, b2, e2);
                        t[static_cast<std::size_t>(r)] = {{sign(b1, b2), sign(b1, e2), sign(e1, b2), sign(e1, e2)}};
                    }
        return t;
    }();
    return table;
}

void add_sign(PointNetwork& net, const std::string& x, Sign s, const std::string& y) {
    switch (s) {
    case Sign::Lt: net.add({x, PointRel::Lt, y, ""}); break;
    case Sign::Eq: net.add({x, PointRel::Eq, y, ""}); break;
    case Sign::Gt: net.add({y, PointRel::Lt, x, ""}); break;
    }
}

} // namespace

QualNetwork to_network(const SdtStructure& s) {
    QualNetwork net;
    for (const auto& iv : s.intervals) net.add_node(iv.name);
    for (std::size_t i = 0; i < s.intervals.size(); ++i) {
        for (std::size_t j = i + 1; j < s.intervals.size(); ++j) {
            const auto& x = s.intervals[i];
            const auto& y = s.intervals[j];
            std::set<std::string> ends{x.beg, x.end, y.beg, y.end};
            std::set<std::string> xs{x.beg, x.end}, ys{y.beg, y.end};
            std::vector<Bound> local;
            bool cross = false;
            for (const auto& b : s.bounds) {
                if (!ends.count(b.a) || !ends.count(b.b)) continue;
                local.push_back(b);
                if ((xs.count(b.a) && ys.count(b.b)) || (ys.count(b.a) && xs.count(b.b))) cross = true;
            }
            if (!cross) continue;
            allen::RelationSet allowed;
            for (allen::Base r : allen::kAllBase) {
                PointNetwork pn;
                for (const auto& b : local) pn.add(b);
                const auto& sig = signatures()[static_cast<std::size_t>(r)].s;
                add_sign(pn, x.beg, sig[0], y.beg);
                add_sign(pn, x.beg, sig[1], y.end);
                add_sign(pn, x.end, sig[2], y.beg);
                add_sign(pn, x.end, sig[3], y.end);
                if (pn.consistent()) allowed.add(r);
            }
            net.add_constraint(x.name, y.name, allowed);
        }
    }
    return net;
}

std::optional<Bounding> adverb_iteration(const Clause& c) {
    if (!c.adverb) return std::nullopt;
    if (c.adverb->kind == Adverb::Kind::IterativeCount) return Bounding{true, c.adverb->count, std::nullopt};
    if (c.adverb->kind == Adverb::Kind::Frequency) return Bounding{false, std::nullopt, c.adverb->frequency};
    return std::nullopt;
}

Reading encore_deja(const Clause& c, Adverb::Kind adverb, const SdtConfig& cfg) {
    if (adverb != Adverb::Kind::Encore && adverb != Adverb::Kind::Deja) {
        throw Error(ErrorCode::InvalidClause, "encore_deja expects encore or deja");
    }
    Aspect a = tense_entry(c, cfg).aspect;
    if (a == Aspect::Aoristique || telic(c.vendler)) return Reading::Iterative;
    return Reading::Ambiguous;
}

// ---- JSON ----

namespace {

template <class E>
E lookup(const std::map<std::string, E>& m, const std::string& key, const char* what) {
    auto it = m.find(text::fold_string(key));
    if (it == m.end()) throw Error(ErrorCode::InvalidClause, std::string("unknown ") + what + ": " + key);
    return it->second;
}

long long minutes_of(const nlohmann::json& j) {
    long long total = 0;
    bool any = false;
    const std::pair<const char*, long long> units[]{
        {"minutes", 1}, {"hours", 60}, {"days", 1440}, {"years", 525600}};
    for (auto [key, scale] : units) {
        if (j.contains(key)) {
            total += j.at(key).get<long long>() * scale;
            any = true;
        }
    }
    if (!any) throw Error(ErrorCode::InvalidClause, "duration needs minutes, hours, days or years");
    return total;
}

} // namespace

Clause clause_from_json(const nlohmann::json& j) {
    static const std::map<std::string, Vendler> vendlers{{"etat", Vendler::Etat},
                                                         {"activite", Vendler::Activite},
                                                         {"accomplissement", Vendler::Accomplissement},
                                                         {"achevement", Vendler::Achevement}};
    static const std::map<std::string, Tense> tenses{{"present", Tense::Present},
                                                     {"imparfait", Tense::Imparfait},
                                                     {"passe_simple", Tense::PasseSimple},
                                                     {"passe_compose", Tense::PasseCompose},
                                                     {"plus_que_parfait", Tense::PlusQueParfait},
                                                     {"futur", Tense::Futur}};
    static const std::map<std::string, cti::FreqAdverb> freqs{{"souvent", cti::FreqAdverb::Souvent},
                                                              {"parfois", cti::FreqAdverb::Parfois},
                                                              {"rarement", cti::FreqAdverb::Rarement}};
    try {
        Clause c;
        c.vendler = lookup(vendlers, j.at("vendler").get<std::string>(), "vendler class");
        c.tense = lookup(tenses, j.at("tense").get<std::string>(), "tense");
        c.reiterable = j.value("reiterable", false);
        c.plausible_duration = j.value("plausible_duration", true);
        for (const auto& circ : j.value("circumstancials", nlohmann::json::array())) {
            std::string kind = circ.at("kind").get<std::string>();
            if (kind == "pendant") c.circumstancials.push_back(PendantDuree{minutes_of(circ)});
            else if (kind == "en") c.circumstancials.push_back(EnDuree{minutes_of(circ)});
            else if (kind == "depuis") c.circumstancials.push_back(DepuisDuree{minutes_of(circ)});
            else if (kind == "clock")
                c.circumstancials.push_back(AClock{circ.at("hour").get<int>(), circ.value("minute", 0)});
            else if (kind == "cti") c.circumstancials.push_back(CtiCirc{cti::parse(circ.at("text").get<std::string>())});
            else throw Error(ErrorCode::InvalidClause, "unknown circumstancial kind: " + kind);
        }
        if (j.contains("adverb") && !j.at("adverb").is_null()) {
            const auto& a = j.at("adverb");
            std::string kind = a.at("kind").get<std::string>();
            Adverb adv{Adverb::Kind::Encore};
            if (kind == "encore") adv.kind = Adverb::Kind::Encore;
            else if (kind == "deja") adv.kind = Adverb::Kind::Deja;
            else if (kind == "iterative_count") {
                adv.kind = Adverb::Kind::IterativeCount;
                adv.count = a.at("n").get<int>();
            } else if (kind == "frequency") {
                adv.kind = Adverb::Kind::Frequency;
                adv.frequency = lookup(freqs, a.at("class").get<std::string>(), "frequency class");
            } else {
                throw Error(ErrorCode::InvalidClause, "unknown adverb kind: " + kind);
            }
            c.adverb = adv;
        }
        validate(c);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidClause, e.what());
    }
}

nlohmann::json to_json(const SdtStructure& s) {
    nlohmann::json j;
    j["diagnosis"] = to_string(s.diagnosis);
    j["aspect"] = to_string(s.aspect);
    j["aspect_series"] = s.aspect_series ? nlohmann::json(to_string(*s.aspect_series)) : nlohmann::json(nullptr);
    j["tense_value"] = to_string(s.tense_value);
    j["telic"] = s.telic;
    if (s.iterative()) j["series_telic"] = s.series_telic;
    j["intervals"] = nlohmann::json::array();
    for (const auto& iv : s.intervals) {
        j["intervals"].push_back({{"role", to_string(iv.role)}, {"name", iv.name}, {"beg", iv.beg}, {"end", iv.end}});
    }
    j["bounds"] = nlohmann::json::array();
    for (const auto& b : s.bounds) {
        j["bounds"].push_back({{"a", b.a}, {"rel", to_string(b.rel)}, {"b", b.b}, {"source", b.source}});
    }
    j["conflicts"] = s.conflicts;
    return j;
}

} // namespace iterata::sdt
