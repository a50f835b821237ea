#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "thetasig/rootsys.hpp"

namespace thetasig {

// A word in simple reflections, by index into RootDatum::simple_roots.
// Convention: letters apply right to left, i.e. word {a, b, c} sends x to
// s_a(s_b(s_c(x))); the empty word is the identity.
struct WeylWord {
    std::vector<int> letters;
};

RatVec apply_word(const RootDatum& datum, const WeylWord& w, RatVec x);

inline WeylWord inverse(WeylWord w) {
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

struct OrbitEntry {
    RatVec point;
    int depth = 0;    // BFS level = minimal word length from the seed
    int parent = -1;  // index of the predecessor entry, -1 for the seed
    int gen = -1;     // generator applied to the parent to reach this point
};

struct OrbitTable {
    RatVec seed;
    std::vector<OrbitEntry> entries;  // grouped by depth, lexicographic within a level

    std::size_t size() const { return entries.size(); }
    // Word w with apply_word(w, seed) == entries[i].point.
    WeylWord word_to(std::size_t i) const;
};

// Full orbit of seed under the subgroup generated by the given simple
// reflections. Deterministic: each BFS level is sorted lexicographically
// before it is committed. Throws OrbitLimitExceeded past max_size.
OrbitTable orbit_bfs(const RootDatum& datum, const std::vector<int>& generator_indices,
                     const RatVec& seed, std::size_t max_size = 10'000'000);

// Betti numbers (b_0, b_2, b_4, ...) of the flag manifold K/H, where H is
// the centralizer whose simple roots are the given compact simple indices.
// b_{2r} counts minimal coset representatives of W_H in W_K of length r,
// realized as BFS depths on a seed stabilized exactly by W_H.
std::vector<long long> flag_poincare(const RootDatum& datum,
                                     const std::vector<int>& parabolic_subset);

}  // namespace thetasig
