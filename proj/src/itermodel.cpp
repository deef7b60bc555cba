#include "iterata/itermodel.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "iterata/errors.hpp"
#include "iterata/text.hpp"

namespace iterata::itermodel {

ModelSpan::ModelSpan(ModelOffset b, ModelOffset e) : beg(b), end(e) {
    if (e < b) throw Error(ErrorCode::InvalidIteration, "model span ends before it begins");
}

double frequency_density(cti::FreqAdverb cls) noexcept {
    switch (cls) {
    case cti::FreqAdverb::Souvent: return 0.75;
    case cti::FreqAdverb::Parfois: return 0.25;
    case cti::FreqAdverb::Rarement: return 0.1;
    }
    return 0.0;
}

namespace {

bool has_slot(const IterativeModel& m, const std::string& name) {
    return std::any_of(m.slots.begin(), m.slots.end(), [&](const ProcessModel& p) { return p.name == name; });
}

std::pair<std::string, std::string> endpoint(const std::string& ref) {
    auto dot = ref.find('.');
    if (dot == std::string::npos) return {ref, "proces"};
    return {ref.substr(0, dot), ref.substr(dot + 1)};
}

} // namespace

void validate(const Iteration& it) {
    if (std::holds_alternative<Numeric>(it.iterator)) {
        if (std::get<Numeric>(it.iterator).n < 1) throw Error(ErrorCode::InvalidIteration, "Numeric needs n >= 1");
        if (!it.intrinsically_bounded) {
            throw Error(ErrorCode::InvalidIteration, "a numeric iterator bounds the iteration intrinsically");
        }
    }
    if (std::holds_alternative<Frequential>(it.iterator) && it.intrinsically_bounded) {
        throw Error(ErrorCode::InvalidIteration, "a frequential iterator bounds the iteration extrinsically");
    }
    if (auto* b = std::get_if<ByIntervals>(&it.iterator); b && b->series.empty()) {
        throw Error(ErrorCode::InvalidIteration, "ByIntervals needs a nonempty series");
    }
    if (it.model.slots.empty()) throw Error(ErrorCode::InvalidIteration, "a model has at least one slot");
    std::set<std::string> names;
    for (const auto& s : it.model.slots) {
        if (!names.insert(s.name).second) throw Error(ErrorCode::InvalidIteration, "duplicate slot " + s.name);
        if (s.nested) validate(*s.nested);
    }
    for (const auto& r : it.model.relations) {
        for (const auto& end : {r.from, r.to}) {
            auto [slot, part] = endpoint(end);
            if (!has_slot(it.model, slot) || (part != "proces" && part != "reference")) {
                throw Error(ErrorCode::InvalidIteration, "relation endpoint " + end + " names no slot");
            }
        }
    }
}

namespace {

struct Projection {
    long long m0, mlen;
    ConvexInterval target;

    Instant at(ModelOffset o) const {
        if (mlen == 0) return target.beg;
        return target.beg + (o.v - m0) * target.length() / mlen;
    }
    ConvexInterval map(const ModelSpan& s) const { return {at(s.beg), at(s.end)}; }
};

Projection projection(const IterativeModel& m, const ConvexInterval& target) {
    long long lo = m.slots.front().model_interval.beg.v;
    long long hi = m.slots.front().model_interval.end.v;
    for (const auto& s : m.slots) {
        lo = std::min({lo, s.model_interval.beg.v, s.reference_interval.beg.v});
        hi = std::max({hi, s.model_interval.end.v, s.reference_interval.end.v});
    }
    return {lo, hi - lo, target};
}

std::vector<Itere> instantiate_in(const Iteration& it, const Frame& frame, std::optional<ConvexInterval> cadre);

Itere project(const Iteration& it, const Frame& frame, std::size_t index, const ConvexInterval& anchor,
              const ConvexInterval& slot) {
    Itere out{index, anchor, slot, {}, {}, {}};
    Projection p = projection(it.model, anchor);
    for (const auto& s : it.model.slots) {
        ConvexInterval span = p.map(s.model_interval);
        out.realized_slots.emplace(s.name, span);
        if (s.nested) out.inner.emplace(s.name, instantiate_in(*s.nested, frame, span));
    }
    return out;
}

void check_in_frame(const Series& s, const Frame& frame, const char* what) {
    if (!s.empty() && (s.items().front().beg < 0 || s.items().back().end > frame.length())) {
        throw Error(ErrorCode::InvalidIteration, std::string(what) + " leave the frame");
    }
}

std::vector<Itere> instantiate_in(const Iteration& it, const Frame& frame, std::optional<ConvexInterval> cadre) {
    validate(it);
    if (it.cadre) cadre = it.cadre;
    std::vector<Itere> out;
    if (auto* b = std::get_if<ByIntervals>(&it.iterator)) {
        check_in_frame(b->series, frame, "iterator intervals");
        Series s = cadre ? restrict(b->series, *cadre, RestrictMode::Strict) : b->series;
        for (const auto& c : s) out.push_back(project(it, frame, out.size() + 1, c, c));
    } else if (auto* n = std::get_if<Numeric>(&it.iterator)) {
        if (!cadre) throw Error(ErrorCode::MissingCadre, "a numeric iterator needs a cadre");
        const Instant len = cadre->length();
        for (int k = 0; k < n->n; ++k) {
            Instant off = static_cast<Instant>(k + 1) * len / (n->n + 1);
            ConvexInterval anchor = ConvexInterval::point(cadre->beg + off);
            out.push_back(project(it, frame, out.size() + 1, anchor, *cadre));
        }
        if (!is_series([&] {
                std::vector<ConvexInterval> v;
                for (const auto& i : out) v.push_back(i.anchor);
                return v;
            }())) {
            throw Error(ErrorCode::InvalidIteration, "cadre too short for " + std::to_string(n->n) + " occurrences");
        }
    } else if (auto* f = std::get_if<Frequential>(&it.iterator)) {
        Series units = gen(f->unit_hint, frame);
        if (cadre) units = restrict(units, *cadre, RestrictMode::Strict);
        const std::size_t cap = units.size();
        const auto count = static_cast<std::size_t>(std::llround(frequency_density(f->cls) * static_cast<double>(cap)));
        for (std::size_t k = 0; k < count; ++k) {
            const ConvexInterval& u = units.items()[k * cap / count];
            out.push_back(project(it, frame, out.size() + 1, u, u));
        }
    } else {
        const auto& e = std::get<Eventive>(it.iterator);
        if (e.triggers.empty()) throw Error(ErrorCode::EmptyTriggerSeries, "no trigger to iterate on");
        check_in_frame(e.triggers, frame, "triggers");
        for (const auto& t : e.triggers) {
            Itere i = project(it, frame, out.size() + 1, t, t);
            i.realized_slots.emplace("declencheur", t);
            out.push_back(std::move(i));
        }
    }
    return out;
}

} // namespace

std::vector<Itere> instantiate(const Iteration& it, const Frame& frame) { return instantiate_in(it, frame, std::nullopt); }

std::vector<Itere> override_itere(const std::vector<Itere>& iteres, std::size_t index, const Patch& patch) {
    auto it = std::find_if(iteres.begin(), iteres.end(), [&](const Itere& i) { return i.index == index; });
    if (it == iteres.end()) throw Error(ErrorCode::OutOfRange, "no itere with index " + std::to_string(index));
    std::vector<Itere> out = iteres;
    Itere& target = out[static_cast<std::size_t>(it - iteres.begin())];
    if (patch.anchor) {
        if (!contains(target.slot, *patch.anchor)) {
            throw Error(ErrorCode::OverrideOutOfSlot,
                        to_string(*patch.anchor) + " leaves the iterator slot " + to_string(target.slot));
        }
        target.anchor = *patch.anchor;
        target.overrides["anchor"] = to_string(*patch.anchor);
    }
    for (const auto& [name, span] : patch.slots) {
        if (!target.realized_slots.count(name)) {
            throw Error(ErrorCode::InvalidIteration, "no slot " + name + " in itere " + std::to_string(index));
        }
        if (!contains(target.slot, span)) {
            throw Error(ErrorCode::OverrideOutOfSlot, to_string(span) + " leaves the iterator slot " + to_string(target.slot));
        }
        target.realized_slots[name] = span;
        target.overrides["slot." + name] = to_string(span);
    }
    for (const auto& [field, value] : patch.content) target.overrides[field] = value;
    return out;
}

allen::ConvexRelation default_relation(RelationKind kind) {
    using allen::Base;
    switch (kind) {
    case RelationKind::Causal: return {Base::p, Base::m};
    case RelationKind::Meronymic: return {Base::o, Base::oi};
    case RelationKind::Temporal: break;
    }
    return {Base::p, Base::pi};
}

allen::RelationSet aspect_relation(sdt::Aspect a) {
    using allen::Base;
    switch (a) {
    case sdt::Aspect::Aoristique: return {Base::eq};
    case sdt::Aspect::Inaccompli: return {Base::di};
    case sdt::Aspect::Accompli: return {Base::p};
    case sdt::Aspect::Prospectif: return {Base::pi};
    }
    return allen::RelationSet::full();
}

PathConsistencyResult model_consistency(const IterativeModel& model) {
    QualNetwork net;
    for (const auto& s : model.slots) {
        net.add_node(s.name + ".proces");
        net.add_node(s.name + ".reference");
        if (s.aspect) net.add_constraint(s.name + ".proces", s.name + ".reference", aspect_relation(*s.aspect));
    }
    for (const auto& r : model.relations) {
        auto [a, pa] = endpoint(r.from);
        auto [b, pb] = endpoint(r.to);
        if (!has_slot(model, a) || !has_slot(model, b)) {
            throw Error(ErrorCode::InvalidIteration, "relation between unknown slots " + r.from + ", " + r.to);
        }
        allen::ConvexRelation rel = r.kind == RelationKind::Temporal ? r.relation : default_relation(r.kind);
        net.add_constraint(a + "." + pa, b + "." + pb, rel);
    }
    return path_consistency(net);
}

// ---- JSON ----

namespace {

ConvexInterval interval_from_json(const nlohmann::json& j, const Frame& frame) {
    return {frame.to_instant(parse_iso(j.at(0).get<std::string>())),
            frame.to_instant(parse_iso(j.at(1).get<std::string>()))};
}

Series series_from_json(const nlohmann::json& j, const Frame& frame) {
    std::vector<ConvexInterval> items;
    for (const auto& x : j) items.push_back(interval_from_json(x, frame));
    return make_series(std::move(items));
}

ModelSpan span_from_json(const nlohmann::json& j) {
    return {ModelOffset{j.at(0).get<long long>()}, ModelOffset{j.at(1).get<long long>()}};
}

Iterator iterator_from_json(const nlohmann::json& j, const Frame& frame) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "by_intervals") {
        if (j.contains("cti")) {
            auto d = cti::denote(cti::parse(j.at("cti").get<std::string>()), frame);
            return ByIntervals{cti::witness(d)};
        }
        return ByIntervals{series_from_json(j.at("intervals"), frame)};
    }
    if (kind == "numeric") return Numeric{j.at("n").get<int>()};
    if (kind == "frequential") {
        static const std::map<std::string, cti::FreqAdverb> classes{{"souvent", cti::FreqAdverb::Souvent},
                                                                    {"parfois", cti::FreqAdverb::Parfois},
                                                                    {"rarement", cti::FreqAdverb::Rarement}};
        auto c = classes.find(text::fold_string(j.at("class").get<std::string>()));
        if (c == classes.end()) throw Error(ErrorCode::InvalidIteration, "unknown frequency class");
        return Frequential{c->second, calendar_name(j.at("unit").get<std::string>())};
    }
    if (kind == "eventive") return Eventive{series_from_json(j.at("triggers"), frame)};
    throw Error(ErrorCode::InvalidIteration, "unknown iterator kind: " + kind);
}

std::optional<sdt::Aspect> aspect_from_json(const nlohmann::json& j) {
    if (!j.contains("aspect")) return std::nullopt;
    static const std::map<std::string, sdt::Aspect> aspects{{"aoristique", sdt::Aspect::Aoristique},
                                                            {"inaccompli", sdt::Aspect::Inaccompli},
                                                            {"accompli", sdt::Aspect::Accompli},
                                                            {"prospectif", sdt::Aspect::Prospectif}};
    auto it = aspects.find(text::fold_string(j.at("aspect").get<std::string>()));
    if (it == aspects.end()) throw Error(ErrorCode::InvalidIteration, "unknown aspect");
    return it->second;
}

Iteration parse_iteration(const nlohmann::json& j, const Frame& frame) {
    Iteration it{iterator_from_json(j.at("iterator"), frame), {}, std::nullopt, j.value("bounded", false)};
    if (j.contains("cadre") && !j.at("cadre").is_null()) it.cadre = interval_from_json(j.at("cadre"), frame);
    const auto& m = j.at("model");
    for (const auto& s : m.at("slots")) {
        ModelSpan model = span_from_json(s.at("model"));
        ModelSpan ref = s.contains("reference") ? span_from_json(s.at("reference")) : model;
        ProcessModel pm{s.at("name").get<std::string>(), model, ref, aspect_from_json(s), nullptr};
        if (s.contains("iteration")) pm.nested = std::make_shared<const Iteration>(parse_iteration(s.at("iteration"), frame));
        it.model.slots.push_back(std::move(pm));
    }
    for (const auto& r : m.value("relations", nlohmann::json::array())) {
        std::string kind = r.at("kind").get<std::string>();
        RelationKind k = kind == "causal"       ? RelationKind::Causal
                         : kind == "meronymic" ? RelationKind::Meronymic
                         : kind == "temporal"  ? RelationKind::Temporal
                                               : throw Error(ErrorCode::InvalidIteration, "unknown relation kind " + kind);
        allen::ConvexRelation rel = default_relation(k);
        if (k == RelationKind::Temporal) {
            allen::RelationSet set = allen::parse_relation(r.at("relation").get<std::string>());
            if (!allen::is_convex(set)) throw Error(ErrorCode::InvalidIteration, "temporal relations must be convex");
            rel = allen::convex_hull(set);
        }
        it.model.relations.push_back({k, rel, r.at("from").get<std::string>(), r.at("to").get<std::string>()});
    }
    validate(it);
    return it;
}

nlohmann::json interval_json(const ConvexInterval& i, const Frame& frame) {
    return nlohmann::json::array({frame.iso(i.beg), frame.iso(i.end)});
}

} // namespace

Iteration iteration_from_json(const nlohmann::json& j, const Frame& frame) {
    try {
        return parse_iteration(j, frame);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidIteration, e.what());
    }
}

nlohmann::json to_json(const std::vector<Itere>& iteres, const Frame& frame) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& i : iteres) {
        nlohmann::json j{{"index", i.index}, {"anchor", interval_json(i.anchor, frame)}};
        j["slots"] = nlohmann::json::object();
        for (const auto& [name, span] : i.realized_slots) j["slots"][name] = interval_json(span, frame);
        if (!i.inner.empty()) {
            j["inner"] = nlohmann::json::object();
            for (const auto& [name, v] : i.inner) j["inner"][name] = to_json(v, frame);
        }
        if (!i.overrides.empty()) j["overrides"] = i.overrides;
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace iterata::itermodel
