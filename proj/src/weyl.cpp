#include "thetasig/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace thetasig {

RatVec apply_word(const RootDatum& datum, const WeylWord& w, RatVec x) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (*it < 0 || *it >= datum.rank())
            throw BadGeneratorIndex("word letter " + std::to_string(*it));
        x = reflect(datum.simple_roots[*it], x);
    }
    return x;
}

WeylWord OrbitTable::word_to(std::size_t i) const {
    WeylWord w;
    int cur = static_cast<int>(i);
    while (entries[cur].parent >= 0) {
        w.letters.push_back(entries[cur].gen);
        cur = entries[cur].parent;
    }
    return w;
}

OrbitTable orbit_bfs(const RootDatum& datum, const std::vector<int>& generator_indices,
                     const RatVec& seed, std::size_t max_size) {
    for (int g : generator_indices)
        if (g < 0 || g >= datum.rank()) throw BadGeneratorIndex("generator " + std::to_string(g));
    if (!datum.in_tR(seed)) throw ConstraintViolation("orbit seed outside t_R");

    OrbitTable table;
    table.seed = seed;
    std::map<RatVec, int> index_of;
    index_of[seed] = 0;
    table.entries.push_back({seed, 0, -1, -1});

    std::size_t level_begin = 0, level_end = 1;
    int depth = 0;
    while (level_begin < level_end) {
        ++depth;
        // collect the next level, then sort before committing
        std::map<RatVec, std::pair<int, int>> next;  // point -> (parent, gen)
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (int g : generator_indices) {
                RatVec y = reflect(datum.simple_roots[g], table.entries[i].point);
                if (index_of.count(y) || next.count(y)) continue;
                next.emplace(std::move(y), std::make_pair(static_cast<int>(i), g));
            }
        for (auto& [pt, pg] : next) {
            if (table.entries.size() >= max_size)
                throw OrbitLimitExceeded("orbit exceeds " + std::to_string(max_size) + " points");
            index_of[pt] = static_cast<int>(table.entries.size());
            table.entries.push_back({pt, depth, pg.first, pg.second});
        }
        level_begin = level_end;
        level_end = table.entries.size();
    }
    return table;
}

std::vector<long long> flag_poincare(const RootDatum& datum,
                                     const std::vector<int>& parabolic_subset) {
    std::set<int> subset(parabolic_subset.begin(), parabolic_subset.end());
    if (subset.size() != parabolic_subset.size())
        throw InvalidParabolicSubset("duplicate index in parabolic subset");
    std::set<int> compact(datum.compact_simple_indices.begin(),
                          datum.compact_simple_indices.end());
    for (int i : subset)
        if (!compact.count(i))
            throw InvalidParabolicSubset("index " + std::to_string(i) +
                                         " is not a compact simple root");

    // Seed pairs to 1 against the compact simple roots kept out of H and to 0
    // against those of H, so its W_K-stabilizer is exactly W_H.
    RatVec seed(datum.ambient_dim, Rational(0));
    for (int i : datum.compact_simple_indices)
        if (!subset.count(i)) seed += datum.fundamental_coweights[i];

    OrbitTable orbit = orbit_bfs(datum, datum.compact_simple_indices, seed);
    std::vector<long long> betti(static_cast<std::size_t>(orbit.entries.back().depth) + 1, 0);
    for (const auto& e : orbit.entries) ++betti[e.depth];
    return betti;
}

}  // namespace thetasig
