#include "porank/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace porank {

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)) {
    const int m = static_cast<int>(order_.size());
    if (m < 1) throw std::invalid_argument("Ranking: empty order");
    positions_.assign(m, -1);
    for (int pos = 0; pos < m; ++pos) {
        const int label = order_[pos];
        if (label < 0 || label >= m) {
            throw std::invalid_argument("Ranking: label " + std::to_string(label) +
                                        " out of range for M=" + std::to_string(m));
        }
        if (positions_[label] != -1) {
            throw std::invalid_argument("Ranking: duplicate label " + std::to_string(label));
        }
        positions_[label] = pos;
    }
}

Ranking Ranking::identity(int m) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    return Ranking(std::move(order));
}

Ranking Ranking::random(int m, Rng& rng) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    return Ranking(std::move(order));
}

Ranking Ranking::with_transposed(int a, int b) const {
    std::vector<int> order = order_;
    std::swap(order[positions_[a]], order[positions_[b]]);
    return Ranking(std::move(order));
}

int kendall_distance(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("kendall_distance: rankings of different size");
    }
    const int m = a.size();
    int discordant = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const int da = a.position_of(i) - a.position_of(j);
            const int db = b.position_of(i) - b.position_of(j);
            if ((da < 0) != (db < 0)) ++discordant;
        }
    }
    return discordant;
}

namespace {

void check_enumeration_cap(int m) {
    if (m < 1) throw std::invalid_argument("enumerate_rankings: M must be >= 1");
    if (m > kEnumerationCap) {
        throw std::invalid_argument("enumerate_rankings: M=" + std::to_string(m) +
                                    " exceeds enumeration cap " + std::to_string(kEnumerationCap));
    }
}

} // namespace

std::vector<Ranking> enumerate_rankings(int m) {
    check_enumeration_cap(m);
    std::vector<Ranking> out;
    for_each_ranking(m, [&out](const Ranking& r) { out.push_back(r); });
    return out;
}

void for_each_ranking(int m, const std::function<void(const Ranking&)>& fn) {
    check_enumeration_cap(m);
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    do {
        fn(Ranking(order));
    } while (std::next_permutation(order.begin(), order.end()));
}

bool check_transposition_property(const RankingDistance& distance, int samples, int m,
                                  std::uint64_t rng_seed) {
    if (m < 2) throw std::invalid_argument("check_transposition_property: M must be >= 2");
    Rng rng(rng_seed);
    for (int s = 0; s < samples; ++s) {
        const Ranking pi = Ranking::random(m, rng);
        Ranking pi_prime = Ranking::random(m, rng);
        // Need a pair ordered the same way in both rankings; such a pair
        // exists unless pi_prime is the exact reversal of pi.
        while (kendall_distance(pi, pi_prime) == m * (m - 1) / 2) {
            pi_prime = Ranking::random(m, rng);
        }
        int a, b;
        do {
            a = static_cast<int>(rng.below(m));
            b = static_cast<int>(rng.below(m));
        } while (a == b || pi.prefers(a, b) != pi_prime.prefers(a, b));
        if (pi.prefers(b, a)) std::swap(a, b);

        const Ranking pi_second = pi_prime.with_transposed(a, b);
        if (distance(pi, pi_prime) > distance(pi, pi_second)) return false;
    }
    return true;
}

} // namespace porank
