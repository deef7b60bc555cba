#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iterata/allen.hpp"

namespace iterata {

// Interval variables with pairwise Allen labels; edge(j,i) is always the
// transpose of edge(i,j) and a missing edge is the full set.
class QualNetwork {
public:
    std::size_t add_node(const std::string& name);
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    allen::RelationSet edge(std::size_t i, std::size_t j) const;
    allen::RelationSet edge(std::string_view a, std::string_view b) const;
    // Overwrites both directions.
    void set_edge(std::size_t i, std::size_t j, allen::RelationSet r);

    // Intersects edge(i,j) with r, creating nodes as needed. Returns false when
    // the edge becomes empty, which also marks the network inconsistent.
    bool add_constraint(const std::string& a, const std::string& b, allen::RelationSet r);
    bool add_constraint(const std::string& a, const std::string& b, allen::ConvexRelation r);

    bool has_empty_edge() const noexcept;

    friend bool operator==(const QualNetwork&, const QualNetwork&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<allen::RelationSet>> edges_;
};

enum class Verdict { Inconsistent, Consistent, PathConsistentUndecided };
std::string to_string(Verdict v);

struct PathConsistencyResult {
    QualNetwork network;
    Verdict verdict;
};

// With a seed, the initial queue is shuffled and arcs are popped in a random
// order; without one the queue is FIFO.
PathConsistencyResult path_consistency(const QualNetwork& net,
                                       std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct Scenario {
    QualNetwork network; // every edge a single base relation
    std::vector<std::pair<long long, long long>> endpoints;
};

Scenario find_scenario(const QualNetwork& net);
std::string export_chronogram(const QualNetwork& net);

// "<node> <relation> <node>" per line, '#' starts a comment.
QualNetwork parse_network(std::string_view text);

} // namespace iterata
