#include "porank/relation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace porank {

StrictRelation::StrictRelation(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("StrictRelation: M must be >= 1");
    edges_.assign(static_cast<std::size_t>(m) * m, 0);
}

void StrictRelation::set_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("StrictRelation: reflexive edge");
    if (edge(j, i)) throw std::invalid_argument("StrictRelation: asymmetry violation");
    edges_[static_cast<std::size_t>(i) * m_ + j] = 1;
}

int StrictRelation::edge_count() const {
    int n = 0;
    for (const auto e : edges_) n += e;
    return n;
}

std::vector<std::pair<int, int>> StrictRelation::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            if (edge(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

namespace {

enum class Mark : std::uint8_t { unseen, active, done };

bool dfs_finds_cycle(const StrictRelation& r, int node, std::vector<Mark>& marks) {
    marks[node] = Mark::active;
    for (int next = 0; next < r.size(); ++next) {
        if (!r.edge(node, next)) continue;
        if (marks[next] == Mark::active) return true;
        if (marks[next] == Mark::unseen && dfs_finds_cycle(r, next, marks)) return true;
    }
    marks[node] = Mark::done;
    return false;
}

} // namespace

bool has_cycle(const StrictRelation& r) {
    std::vector<Mark> marks(r.size(), Mark::unseen);
    for (int start = 0; start < r.size(); ++start) {
        if (marks[start] == Mark::unseen && dfs_finds_cycle(r, start, marks)) return true;
    }
    return false;
}

bool is_transitive(const StrictRelation& r) {
    const int m = r.size();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (!r.edge(i, j)) continue;
            for (int k = 0; k < m; ++k) {
                if (r.edge(j, k) && !r.edge(i, k)) return false;
            }
        }
    }
    return true;
}

PartialOrder::PartialOrder(StrictRelation relation) : relation_(std::move(relation)) {
    if (has_cycle(relation_)) throw std::invalid_argument("PartialOrder: relation has a cycle");
    if (!is_transitive(relation_)) throw std::invalid_argument("PartialOrder: relation not transitive");
}

PartialOrder transitive_closure(const StrictRelation& r) {
    if (has_cycle(r)) {
        throw std::invalid_argument("transitive_closure: input contains a cycle");
    }
    const int m = r.size();
    StrictRelation closed = r;
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) {
            if (!closed.edge(i, k)) continue;
            for (int j = 0; j < m; ++j) {
                if (closed.edge(k, j) && !closed.edge(i, j)) closed.set_edge(i, j);
            }
        }
    }
    return PartialOrder(std::move(closed));
}

ValuedPreferenceRelation::ValuedPreferenceRelation(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("ValuedPreferenceRelation: M must be >= 1");
    p_.assign(static_cast<std::size_t>(m) * m, 0.5);
}

void ValuedPreferenceRelation::set_pair(int i, int j, double value) {
    if (i == j) throw std::invalid_argument("ValuedPreferenceRelation: diagonal is fixed");
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::invalid_argument("ValuedPreferenceRelation: probability outside [0,1]");
    }
    p_[static_cast<std::size_t>(i) * m_ + j] = value;
    p_[static_cast<std::size_t>(j) * m_ + i] = 1.0 - value;
}

bool ValuedPreferenceRelation::is_reciprocal(double tolerance) const {
    for (int i = 0; i < m_; ++i) {
        for (int j = i + 1; j < m_; ++j) {
            if (std::abs(p(i, j) + p(j, i) - 1.0) > tolerance) return false;
        }
    }
    return true;
}

std::vector<double> ValuedPreferenceRelation::candidate_thresholds() const {
    std::vector<double> values;
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            if (i == j) continue;
            const double v = p(i, j);
            if (v >= 0.5 && v < 1.0) values.push_back(v);
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

} // namespace porank
