#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "iterata/cti.hpp"
#include "iterata/network.hpp"

namespace iterata::sdt {

enum class Vendler { Etat, Activite, Accomplissement, Achevement };
enum class Tense { Present, Imparfait, PasseSimple, PasseCompose, PlusQueParfait, Futur };
enum class Aspect { Aoristique, Inaccompli, Accompli, Prospectif };
enum class TenseValue { Passe, Present, Futur };
enum class Diagnosis { Ok, ResolvedIteration, ResolvedContraction, Insoluble };
enum class Reading { Iterative, Durative, Ambiguous };

// durations in minutes
struct PendantDuree {
    long long minutes;
};
struct EnDuree {
    long long minutes;
};
struct DepuisDuree {
    long long minutes;
};
struct AClock {
    int hour;
    int minute;
};
struct CtiCirc {
    cti::NodePtr ast;
};

using Circumstancial = std::variant<PendantDuree, EnDuree, DepuisDuree, AClock, CtiCirc>;

struct Adverb {
    enum class Kind { Encore, Deja, IterativeCount, Frequency };
    Kind kind;
    int count = 0;
    cti::FreqAdverb frequency = cti::FreqAdverb::Souvent;
};

struct Clause {
    Vendler vendler = Vendler::Activite;
    bool reiterable = false;
    bool plausible_duration = true;
    Tense tense = Tense::Present;
    std::vector<Circumstancial> circumstancials;
    std::optional<Adverb> adverb;
};

// Throws InvalidClause on non-positive durations or repeated circumstancial kinds.
void validate(const Clause& c);

// Point relations between interval endpoints. Adj is an immediate successor:
// strictly after, with no room for anything in between. Ll asks for a
// non-zero extent at the reporting granularity.
enum class PointRel { Lt, Le, Eq, Adj, Ll };

struct Bound {
    std::string a;
    PointRel rel;
    std::string b;
    std::string source; // the marker that coded it
};

std::string to_string(PointRel r);

enum class Role { Enonciation, Proces, Reference, Circonstanciel, Serie, SerieReference };

struct RoleInterval {
    Role role;
    std::string name;
    std::string beg;
    std::string end;
};

struct TenseEntry {
    Aspect aspect;
    TenseValue value;
};

struct SdtConfig {
    std::map<Tense, TenseEntry> tense_map;
    static SdtConfig defaults();
};

struct SdtStructure {
    std::vector<RoleInterval> intervals;
    std::vector<Bound> bounds;
    Aspect aspect;
    std::optional<Aspect> aspect_series;
    TenseValue tense_value;
    Diagnosis diagnosis = Diagnosis::Ok;
    bool telic = false;
    bool series_telic = false;
    // markers that could not be satisfied in the unresolved reading
    std::vector<std::string> conflicts;

    bool iterative() const noexcept { return aspect_series.has_value(); }
};

// Consistency of point constraints, with "<" an infinitesimal step and "<<"
// a unit step.
class PointNetwork {
public:
    void add(const Bound& b);
    bool consistent() const;

private:
    std::map<std::string, std::size_t> index_;
    struct Edge {
        std::size_t from, to;
        long long macro, micro;
    };
    std::vector<Edge> edges_;
    std::size_t node(const std::string& n);
};

TenseEntry tense_entry(const Clause& c, const SdtConfig& cfg = SdtConfig::defaults());

std::vector<Bound> instructions(const Clause& c, const SdtConfig& cfg = SdtConfig::defaults());
SdtStructure build_structure(const Clause& c, const SdtConfig& cfg = SdtConfig::defaults());
QualNetwork to_network(const SdtStructure& s);

struct Bounding {
    bool intrinsic;
    std::optional<int> occurrences;
    std::optional<cti::FreqAdverb> density;
};
// nullopt when the clause carries no iterative adverb
std::optional<Bounding> adverb_iteration(const Clause& c);

Reading encore_deja(const Clause& c, Adverb::Kind adverb, const SdtConfig& cfg = SdtConfig::defaults());

std::string to_string(Vendler v);
std::string to_string(Tense t);
std::string to_string(Aspect a);
std::string to_string(TenseValue t);
std::string to_string(Diagnosis d);
std::string to_string(Reading r);
std::string to_string(Role r);

Clause clause_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SdtStructure& s);

} // namespace iterata::sdt
