#include "iterata/network.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include "iterata/errors.hpp"
#include "iterata/text.hpp"

namespace iterata {

using allen::Base;
using allen::RelationSet;

std::size_t QualNetwork::add_node(const std::string& name) {
    if (auto k = find(name)) return *k;
    names_.push_back(name);
    for (auto& row : edges_) row.push_back(RelationSet::full());
    edges_.emplace_back(names_.size(), RelationSet::full());
    edges_.back().back() = RelationSet{Base::eq};
    return names_.size() - 1;
}

std::optional<std::size_t> QualNetwork::find(std::string_view name) const {
    for (std::size_t k = 0; k < names_.size(); ++k) {
        if (names_[k] == name) return k;
    }
    return std::nullopt;
}

std::size_t QualNetwork::index(std::string_view name) const {
    if (auto k = find(name)) return *k;
    throw Error(ErrorCode::InvalidInput, "unknown node: " + std::string(name));
}

RelationSet QualNetwork::edge(std::size_t i, std::size_t j) const { return edges_.at(i).at(j); }

RelationSet QualNetwork::edge(std::string_view a, std::string_view b) const { return edge(index(a), index(b)); }

void QualNetwork::set_edge(std::size_t i, std::size_t j, RelationSet r) {
    edges_.at(i).at(j) = r;
    edges_.at(j).at(i) = allen::transpose(r);
}

bool QualNetwork::add_constraint(const std::string& a, const std::string& b, RelationSet r) {
    std::size_t i = add_node(a);
    std::size_t j = add_node(b);
    set_edge(i, j, edge(i, j) & r);
    return !edge(i, j).empty();
}

bool QualNetwork::add_constraint(const std::string& a, const std::string& b, allen::ConvexRelation r) {
    return add_constraint(a, b, r.extension());
}

bool QualNetwork::has_empty_edge() const noexcept {
    for (const auto& row : edges_) {
        for (const auto& e : row) {
            if (e.empty()) return true;
        }
    }
    return false;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Inconsistent: return "Inconsistent";
    case Verdict::Consistent: return "Consistent";
    case Verdict::PathConsistentUndecided: return "PathConsistentUndecided";
    }
    return "?";
}

PathConsistencyResult path_consistency(const QualNetwork& input, std::optional<std::uint64_t> shuffle_seed) {
    QualNetwork net = input;
    const std::size_t n = net.size();
    if (net.has_empty_edge()) return {net, Verdict::Inconsistent};

    using Arc = std::pair<std::size_t, std::size_t>;
    std::deque<Arc> queue;
    std::vector<std::vector<char>> queued(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            queue.emplace_back(i, j);
            queued[i][j] = 1;
        }
    }
    std::mt19937_64 rng(shuffle_seed.value_or(0));
    if (shuffle_seed) std::shuffle(queue.begin(), queue.end(), rng);

    auto push = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        if (!queued[a][b]) {
            queued[a][b] = 1;
            queue.emplace_back(a, b);
        }
    };
    // R_ab := R_ab ∩ (R_ac ∘ R_cb); false when it empties
    auto revise = [&](std::size_t a, std::size_t b, std::size_t c, bool& changed) {
        RelationSet old = net.edge(a, b);
        RelationSet now = old & allen::compose(net.edge(a, c), net.edge(c, b));
        changed = now != old;
        if (changed) net.set_edge(a, b, now);
        return !now.empty();
    };

    while (!queue.empty()) {
        Arc arc;
        if (shuffle_seed) {
            std::uniform_int_distribution<std::size_t> pick(0, queue.size() - 1);
            std::size_t k = pick(rng);
            arc = queue[k];
            queue[k] = queue.back();
            queue.pop_back();
        } else {
            arc = queue.front();
            queue.pop_front();
        }
        auto [i, j] = arc;
        queued[i][j] = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            bool changed = false;
            if (!revise(i, k, j, changed)) return {net, Verdict::Inconsistent};
            if (changed) push(i, k);
            if (!revise(k, j, i, changed)) return {net, Verdict::Inconsistent};
            if (changed) push(k, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!allen::is_preconvex(net.edge(i, j))) return {net, Verdict::PathConsistentUndecided};
        }
    }
    return {net, Verdict::Consistent};
}

namespace {

bool search(QualNetwork& net) {
    auto pc = path_consistency(net);
    if (pc.verdict == Verdict::Inconsistent) return false;
    net = pc.network;
    const std::size_t n = net.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            RelationSet r = net.edge(i, j);
            if (r.size() <= 1) continue;
            for (Base b : r.members()) {
                QualNetwork trial = net;
                trial.set_edge(i, j, RelationSet{b});
                if (search(trial)) {
                    net = trial;
                    return true;
                }
            }
            return false;
        }
    }
    return true;
}

std::vector<std::pair<long long, long long>> endpoints_of(const QualNetwork& net) {
    const std::size_t n = net.size();
    const std::size_t m = 2 * n;
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (std::size_t i = 0; i < n; ++i) less.emplace_back(2 * i, 2 * i + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Base r = net.edge(i, j).members().front();
            allen::Code c = allen::code(r);
            for (int side = 0; side < 2; ++side) {
                std::size_t pt = 2 * i + side;
                int v = side == 0 ? c.x : c.y;
                std::size_t y1 = 2 * j, y2 = 2 * j + 1;
                switch (v) {
                case 0: less.emplace_back(pt, y1); break;
                case 1: parent[root(pt)] = root(y1); break;
                case 2: less.emplace_back(y1, pt); less.emplace_back(pt, y2); break;
                case 3: parent[root(pt)] = root(y2); break;
                default: less.emplace_back(y2, pt); break;
                }
            }
        }
    }
    std::vector<long long> rank(m, 0);
    // Bellman-style relaxation; the order graph is acyclic for a consistent scenario.
    for (std::size_t round = 0; round <= m; ++round) {
        bool moved = false;
        for (auto [a, b] : less) {
            std::size_t ra = root(a), rb = root(b);
            if (rank[rb] < rank[ra] + 1) {
                rank[rb] = rank[ra] + 1;
                moved = true;
            }
        }
        if (!moved) break;
        if (round == m) throw Error(ErrorCode::NoScenario, "cyclic endpoint order");
    }
    std::vector<std::pair<long long, long long>> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(rank[root(2 * i)], rank[root(2 * i + 1)]);
    return out;
}

} // namespace

Scenario find_scenario(const QualNetwork& input) {
    QualNetwork net = input;
    if (!search(net)) throw Error(ErrorCode::NoScenario, "no consistent scenario exists");
    return {net, endpoints_of(net)};
}

std::string export_chronogram(const QualNetwork& net) {
    Scenario sc = find_scenario(net);
    std::size_t width = 0;
    long long horizon = 0;
    for (const auto& n : net.names()) width = std::max(width, n.size());
    for (const auto& e : sc.endpoints) horizon = std::max(horizon, e.second);
    std::ostringstream out;
    out << "# one consistent scenario; other models may exist\n";
    for (std::size_t i = 0; i < net.size(); ++i) {
        const auto& [b, e] = sc.endpoints[i];
        std::string name = net.names()[i];
        name.resize(width, ' ');
        out << name << " |";
        for (long long t = 0; t < horizon; ++t) out << (t >= b && t < e ? '#' : '.');
        out << "| [" << b << "," << e << ")\n";
    }
    return out.str();
}

QualNetwork parse_network(std::string_view src) {
    QualNetwork net;
    std::istringstream in{std::string(src)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto words = text::split_words(line);
        if (words.empty()) continue;
        if (words.size() == 1) {
            net.add_node(words[0]);
            continue;
        }
        if (words.size() < 3) {
            throw Error(ErrorCode::InvalidInput, "line " + std::to_string(lineno) + ": expected <node> <relation> <node>");
        }
        std::string rel;
        for (std::size_t k = 1; k + 1 < words.size(); ++k) rel += words[k];
        RelationSet r;
        try {
            r = allen::parse_relation(rel);
        } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
        }
        net.add_constraint(words.front(), words.back(), r);
    }
    return net;
}

} // namespace iterata
