#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "porank/rng.hpp"

namespace porank {

/// A complete ranking of M labels, stored as a permutation of {0..M-1}.
///
/// order[i] is the label placed at position i, position 0 being the
/// most preferred. positions() gives the inverse view: positions()[l]
/// is the position at which label l appears.
class Ranking {
public:
    explicit Ranking(std::vector<int> order);

    static Ranking identity(int m);
    static Ranking random(int m, Rng& rng);

    int size() const { return static_cast<int>(order_.size()); }
    int label_at(int position) const { return order_[position]; }
    int position_of(int label) const { return positions_[label]; }

    const std::vector<int>& order() const { return order_; }
    const std::vector<int>& positions() const { return positions_; }

    /// True iff label a appears before label b.
    bool prefers(int a, int b) const { return positions_[a] < positions_[b]; }

    /// Exchanges the positions of labels a and b.
    Ranking with_transposed(int a, int b) const;

    bool operator==(const Ranking& other) const { return order_ == other.order_; }

private:
    std::vector<int> order_;
    std::vector<int> positions_;
};

/// Number of label pairs ordered differently by a and b (Kendall's tau distance).
int kendall_distance(const Ranking& a, const Ranking& b);

/// Largest M for which full enumeration of the symmetric group is permitted
/// (9! = 362880 rankings keeps exact computations sub-second).
inline constexpr int kEnumerationCap = 9;

/// All M! rankings of M labels in lexicographic order of their order vectors.
/// Throws if M exceeds kEnumerationCap.
std::vector<Ranking> enumerate_rankings(int m);

/// Calls fn for every ranking of M labels without materializing the list.
void for_each_ranking(int m, const std::function<void(const Ranking&)>& fn);

using RankingDistance = std::function<double(const Ranking&, const Ranking&)>;

/// Samples random triples (pi, pi', (a,b)) with a before b in both rankings,
/// transposes a and b in pi' to obtain pi'', and reports whether
/// D(pi, pi') <= D(pi, pi'') held for every sampled triple.
bool check_transposition_property(const RankingDistance& distance, int samples, int m,
                                  std::uint64_t rng_seed);

} // namespace porank
