#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "iterata/calendar.hpp"
#include "iterata/series.hpp"

namespace iterata::cti {

enum class Det { Les, Un, Plupart, Certains };
enum class FreqAdverb { Souvent, Parfois, Rarement };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct NcSpec {
    CalendarName name;
    NodePtr suite; // null: the frame
};

struct DetNode {
    Det det;
    NcSpec nc;
};

// n NC1 par NC2
struct ParNode {
    int n;
    NcSpec nc1;
    NcSpec nc2;
};

// n fois par NC
struct FoisParNode {
    int n;
    NcSpec nc;
};

// n NC sur p
struct SurNode {
    int n;
    int p;
    NcSpec nc;
};

// tous les n NC
struct TousLesNNode {
    int n;
    NcSpec nc;
};

// le n-ieme NC de PARENT; a null parent means the frame
struct NthNode {
    int n;
    CalendarName nc;
    NodePtr parent;
};

// a hh:mm, optionally restricted to the days of another expression
struct ClockNode {
    int hour;
    int minute;
    NodePtr within;
};

// de A a B
struct IntdefNode {
    NodePtr a;
    NodePtr b;
};

struct FreqNode {
    FreqAdverb adverb;
    NodePtr inner;
};

struct Node {
    std::variant<DetNode, NcSpec, ParNode, FoisParNode, SurNode, TousLesNNode, NthNode, ClockNode, IntdefNode,
                 FreqNode>
        v;
};

bool operator==(const Node& a, const Node& b);
bool operator==(const NcSpec& a, const NcSpec& b);
bool same_tree(const NodePtr& a, const NodePtr& b);

template <class T>
NodePtr make(T value) {
    return std::make_shared<const Node>(Node{std::move(value)});
}

// Input is folded to lowercase ASCII first, so diacritics are tolerated.
NodePtr parse(std::string_view text);
std::string render(const NodePtr& ast);
// Indented tree form, for debugging and CLI output.
std::string describe(const NodePtr& ast);

// ---- denotations ----

enum class Membership { Extracted, Included };
enum class Cmp { Gt, Lt };

struct Exact {
    Series series;
};
struct Card {
    std::size_t k;
};
struct RatioConst {
    Series parent;
    std::size_t n;
    Membership membership;
};
// |candidate| / |base| compared to num/den
struct Threshold {
    Cmp op;
    long num;
    long den;
    std::size_t min_card;
};

struct Family {
    Series base;
    std::variant<Exact, Card, RatioConst, Threshold> constraint;
    // components of the parent with fewer than n base elements contribute all of them
    bool lenient = false;
};

struct Denotation {
    std::variant<Series, Family> value;

    bool concrete() const noexcept { return std::holds_alternative<Series>(value); }
    const Series& series() const { return std::get<Series>(value); }
    const Family& family() const { return std::get<Family>(value); }
};

struct DenoteOptions {
    RestrictMode mode = RestrictMode::Strict;
    bool lenient = false;
    CalendarConfig calendar;
};

Threshold plupart_threshold();
Threshold certains_threshold();
Threshold frequency_threshold(FreqAdverb a);

Denotation denote(const NodePtr& ast, const Frame& frame, const DenoteOptions& opts = {});
bool family_check(const Series& candidate, const Family& family);
Series witness(const Family& family);
Series witness(const Denotation& d);

struct ComparisonReport {
    bool equal = false;
    bool extracted_either_way = false;
    bool included_either_way = false;
    bool point_disjoint = false;
    bool overlapping = false;
    // which direction held, when one did: "first-in-second", "second-in-first" or "both"
    std::string extracted_direction;
    std::string included_direction;
};

ComparisonReport compare(const Denotation& d1, const Denotation& d2);

// ---- classification of temporal expressions ----

enum class Category {
    SiteConvexe,
    SiteNonConvexe,
    MarqueurDePositionnement,
    DescripteurDeTemporaliteInterne,
    Selecteur,
};

struct Classification {
    Category category;
    std::string subcategory; // empty when the category has none
};

std::string category_text(Category c);
Classification classify(const NodePtr& ast);
Classification classify(std::string_view phrase);

} // namespace iterata::cti
