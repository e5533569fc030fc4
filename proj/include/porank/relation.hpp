#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace porank {

/// Irreflexive, asymmetric boolean relation over M labels.
/// edge(i, j) asserts that label i is preferred to label j.
class StrictRelation {
public:
    explicit StrictRelation(int m);

    int size() const { return m_; }
    bool edge(int i, int j) const { return edges_[static_cast<std::size_t>(i) * m_ + j] != 0; }
    void set_edge(int i, int j);
    void clear_edge(int i, int j) { edges_[static_cast<std::size_t>(i) * m_ + j] = 0; }

    int edge_count() const;
    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const StrictRelation& other) const = default;

private:
    int m_;
    std::vector<std::uint8_t> edges_;
};

/// True iff the directed graph contains a cycle (depth-first search).
bool has_cycle(const StrictRelation& r);

/// True iff edge(i,j) and edge(j,k) imply edge(i,k) for all triples.
bool is_transitive(const StrictRelation& r);

/// A strict relation that additionally guarantees transitivity and acyclicity.
class PartialOrder {
public:
    /// Validates the given relation; throws std::invalid_argument if it is
    /// cyclic or not transitive.
    explicit PartialOrder(StrictRelation relation);

    int size() const { return relation_.size(); }
    bool edge(int i, int j) const { return relation_.edge(i, j); }
    int edge_count() const { return relation_.edge_count(); }
    std::vector<std::pair<int, int>> edge_list() const { return relation_.edge_list(); }
    const StrictRelation& relation() const { return relation_; }

    bool operator==(const PartialOrder& other) const = default;

private:
    StrictRelation relation_;
};

/// Smallest transitive superset of r (Floyd-Warshall reachability, O(M^3)).
/// Throws if r contains a cycle, since the closure would then violate asymmetry.
PartialOrder transitive_closure(const StrictRelation& r);

/// Reciprocal M x M matrix of pairwise preference probabilities:
/// p(i, j) + p(j, i) = 1 for i != j. The diagonal is fixed at 0.5 and never read.
class ValuedPreferenceRelation {
public:
    explicit ValuedPreferenceRelation(int m);

    int size() const { return m_; }
    double p(int i, int j) const { return p_[static_cast<std::size_t>(i) * m_ + j]; }

    /// Sets p(i, j) = value and p(j, i) = 1 - value.
    void set_pair(int i, int j, double value);

    /// Verifies reciprocity within the given tolerance (exact vote fractions
    /// pass at 0; model-derived entries at 1e-12).
    bool is_reciprocal(double tolerance = 1e-12) const;

    /// Distinct off-diagonal values in [0.5, 1), sorted ascending.
    std::vector<double> candidate_thresholds() const;

private:
    int m_;
    std::vector<double> p_;
};

} // namespace porank
