#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "iterata/calendar.hpp"
#include "iterata/cti.hpp"
#include "iterata/network.hpp"
#include "iterata/sdt.hpp"

namespace iterata::itermodel {

// Model temporality: offsets from a model origin. Deliberately not
// convertible to or from Instant.
struct ModelOffset {
    long long v;
    friend auto operator<=>(const ModelOffset&, const ModelOffset&) = default;
};

struct ModelSpan {
    ModelOffset beg;
    ModelOffset end;
    ModelSpan(ModelOffset b, ModelOffset e);
    long long length() const noexcept { return end.v - beg.v; }
    friend bool operator==(const ModelSpan&, const ModelSpan&) = default;
};

struct ByIntervals {
    Series series;
};
struct Numeric {
    int n;
};
struct Frequential {
    cti::FreqAdverb cls;
    CalendarName unit_hint;
};
struct Eventive {
    Series triggers;
};

using Iterator = std::variant<ByIntervals, Numeric, Frequential, Eventive>;

struct Iteration;

struct ProcessModel {
    std::string name;
    ModelSpan model_interval;
    ModelSpan reference_interval;
    std::optional<sdt::Aspect> aspect;
    // a slot may itself be an iteration, instantiated inside the slot's span
    std::shared_ptr<const Iteration> nested;
};

enum class RelationKind { Temporal, Causal, Meronymic };

// from/to name a slot's process ("nettoyer") or its reference ("nettoyer.reference")
struct ModelRelation {
    RelationKind kind;
    allen::ConvexRelation relation; // used for Temporal only
    std::string from;
    std::string to;
};

struct IterativeModel {
    std::vector<ProcessModel> slots;
    std::vector<ModelRelation> relations;
};

struct Iteration {
    Iterator iterator;
    IterativeModel model;
    std::optional<ConvexInterval> cadre;
    bool intrinsically_bounded = false;
};

// Throws InvalidIteration when the iteration breaks its invariants.
void validate(const Iteration& it);

struct Itere {
    std::size_t index; // 1-based
    ConvexInterval anchor;
    // what an anchor override must stay inside: the iterator component,
    // the trigger, or the cadre
    ConvexInterval slot;
    std::map<std::string, ConvexInterval> realized_slots;
    std::map<std::string, std::vector<Itere>> inner;
    std::map<std::string, std::string> overrides;
};

double frequency_density(cti::FreqAdverb cls) noexcept;

std::vector<Itere> instantiate(const Iteration& it, const Frame& frame);

struct Patch {
    std::optional<ConvexInterval> anchor;
    std::map<std::string, ConvexInterval> slots;
    std::map<std::string, std::string> content;
};

std::vector<Itere> override_itere(const std::vector<Itere>& iteres, std::size_t index, const Patch& patch);

allen::ConvexRelation default_relation(RelationKind kind);
allen::RelationSet aspect_relation(sdt::Aspect a); // proces vs reference

// Nodes are "<slot>.proces" and "<slot>.reference".
PathConsistencyResult model_consistency(const IterativeModel& model);

Iteration iteration_from_json(const nlohmann::json& j, const Frame& frame);
nlohmann::json to_json(const std::vector<Itere>& iteres, const Frame& frame);

} // namespace iterata::itermodel
