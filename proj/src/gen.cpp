#include "pariton/gen.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace pariton {

ParityGame random_game(int n, int max_prio, int min_deg, int max_deg, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_game: n must be positive");
    if (max_prio < 0) throw std::invalid_argument("random_game: max_prio must be >= 0");
    if (min_deg < 1 || max_deg < min_deg)
        throw std::invalid_argument("random_game: need 1 <= min_deg <= max_deg");

    SplitMix64 rng(seed);
    std::vector<PositionSpec> specs(n);
    for (int v = 0; v < n; ++v) {
        specs[v].id = v;
        specs[v].priority = int(rng.range(0, max_prio));
        specs[v].owner = int(rng.below(2));
        int lo = std::min(min_deg, n), hi = std::min(max_deg, n);
        int deg = int(rng.range(lo, hi));
        // Floyd's algorithm: deg distinct values from [0, n).
        std::unordered_set<int64_t> chosen;
        for (int j = n - deg; j < n; ++j) {
            int64_t t = rng.range(0, j);
            if (!chosen.insert(t).second) {
                t = j;
                chosen.insert(t);
            }
            specs[v].successors.push_back(t);
        }
        std::sort(specs[v].successors.begin(), specs[v].successors.end());
    }
    return ParityGame::from_specs(specs);
}

ParityGame ladder_game(int k) {
    if (k < 1) throw std::invalid_argument("ladder_game: k must be positive");
    const int n = 2 * k;
    std::vector<PositionSpec> specs(n);
    for (int i = 0; i < n; ++i) {
        specs[i].id = i;
        specs[i].priority = i;
        specs[i].owner = i % 2;
        specs[i].successors = {(i + 1) % n};
    }
    return ParityGame::from_specs(specs);
}

ParityGame clique_game(int k) {
    if (k < 1) throw std::invalid_argument("clique_game: k must be positive");
    std::vector<PositionSpec> specs(k);
    for (int i = 0; i < k; ++i) {
        specs[i].id = i;
        specs[i].priority = i;
        specs[i].owner = i % 2;
        for (int j = 0; j < k; ++j) specs[i].successors.push_back(j);
    }
    return ParityGame::from_specs(specs);
}

}  // namespace pariton
