#include "thetasig/signatures.hpp"

#include <algorithm>
#include <thread>

namespace thetasig {

bool SignatureSet::contains(const Signature& s) const {
    auto it = by_r_plus.find(s.r_plus);
    if (it == by_r_plus.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), s.r_minus);
}

void SignatureSet::insert(const Signature& s) {
    auto& v = by_r_plus[s.r_plus];
    auto it = std::lower_bound(v.begin(), v.end(), s.r_minus);
    if (it == v.end() || *it != s.r_minus) v.insert(it, s.r_minus);
}

Signature r_signature(const RootDatum& datum, const RatVec& x) {
    if (!datum.in_tR(x)) throw ConstraintViolation("point outside t_R: " + str(x));
    Signature sig;
    for (const auto& alpha : datum.pos_noncompact) {
        int s = dot(alpha, x).sign();
        if (s > 0)
            ++sig.r_plus;
        else if (s < 0)
            ++sig.r_minus;
    }
    return sig;
}

namespace {

// Representatives of W_K \ W: BFS words from the coweight of the noncompact
// simple root (whose stabilizer is exactly W_K) enumerate W / W_K; inverting
// each word turns left-coset representatives into right-coset ones.
std::vector<WeylWord> right_coset_reps(const RootDatum& datum) {
    std::vector<int> all(datum.rank());
    for (int i = 0; i < datum.rank(); ++i) all[i] = i;
    OrbitTable orbit =
        orbit_bfs(datum, all, datum.fundamental_coweights[datum.noncompact_simple]);
    std::vector<WeylWord> reps;
    reps.reserve(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) reps.push_back(inverse(orbit.word_to(i)));
    return reps;
}

RatVec subset_point(const RootDatum& datum, std::uint64_t mask) {
    RatVec x(datum.ambient_dim, Rational(0));
    for (int i = 0; i < datum.rank(); ++i)
        if (mask & (1ULL << i)) x += datum.fundamental_coweights[i];
    return x;
}

}  // namespace

void for_each_face_point(const RootDatum& datum, const std::function<void(const FacePoint&)>& fn) {
    const auto reps = right_coset_reps(datum);
    const std::uint64_t nmask = 1ULL << datum.rank();
    for (std::uint64_t mask = 1; mask < nmask; ++mask) {
        RatVec xb = subset_point(datum, mask);
        for (std::size_t c = 0; c < reps.size(); ++c)
            fn({apply_word(datum, reps[c], xb), mask, c});
    }
}

std::vector<RatVec> enumerate_face_points(const RootDatum& datum) {
    std::vector<RatVec> out;
    for_each_face_point(datum, [&](const FacePoint& fp) { out.push_back(fp.point); });
    return out;
}

SignatureSet attainable_signatures(const RootDatum& datum,
                                   const std::optional<std::set<int>>& r_plus_filter,
                                   int threads) {
    const auto reps = right_coset_reps(datum);
    const std::uint64_t nmask = 1ULL << datum.rank();

    auto scan = [&](std::uint64_t first, std::uint64_t step, std::set<Signature>& out) {
        for (std::uint64_t mask = first; mask < nmask; mask += step) {
            RatVec xb = subset_point(datum, mask);
            for (const auto& w : reps) out.insert(r_signature(datum, apply_word(datum, w, xb)));
        }
    };

    std::set<Signature> found;
    if (threads <= 1) {
        scan(1, 1, found);
    } else {
        std::vector<std::set<Signature>> parts(threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(scan, static_cast<std::uint64_t>(t + 1),
                              static_cast<std::uint64_t>(threads), std::ref(parts[t]));
        for (auto& th : pool) th.join();
        for (const auto& p : parts) found.insert(p.begin(), p.end());
    }

    SignatureSet set;
    for (const auto& s : found)
        if (!r_plus_filter || r_plus_filter->count(s.r_plus)) set.insert(s);
    return set;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw NotTabulated(what);
}

}  // namespace

SignatureSet closed_form_rminus(const PairDescriptor& desc, int r_plus, Aiii1Form aiii_form) {
    require(r_plus == 0 || r_plus == 1, "closed forms cover r_plus in {0,1} only");
    std::set<int> vals;
    const int m = desc.m, n = desc.n;
    switch (desc.type) {
        case CartanType::AIII:
            if (m == 1) {
                // rank one: [1, n] at r_plus = 0, [0, n-1] at r_plus = 1
                for (int v = 1 - r_plus; v <= n - r_plus; ++v) vals.insert(v);
            } else if (r_plus == 0) {
                for (int r = 0; r <= m - 1; ++r)
                    for (int t = 0; t <= n; ++t) {
                        if (r == 0 && t == 0) continue;
                        vals.insert(r * n + (m - r) * t);
                    }
            } else if (aiii_form == Aiii1Form::plain) {
                for (int r = 1; r <= m - 1; ++r)
                    for (int s = m + 2; s <= m + n; ++s) vals.insert(m * n + r - s);
            } else {
                for (int r = 0; r <= m - 1; ++r)
                    for (int s = m + 1; s <= m + n; ++s) vals.insert(m * n + r - s + 2);
            }
            break;
        case CartanType::BDI_even:
            if (r_plus == 0) {
                for (int v = m - 1; v <= 2 * m - 2; ++v) vals.insert(v);
            } else {
                require(m >= 4, "BDI-even r_plus=1 closed form requires m >= 4");
                vals.insert(1);
                for (int v = m - 1; v <= 2 * m - 3; ++v) vals.insert(v);
            }
            break;
        case CartanType::BDI_odd:
            if (r_plus == 0) {
                for (int v = m; v <= 2 * m - 1; ++v) vals.insert(v);
            } else {
                vals.insert(1);
                for (int v = m; v <= 2 * m - 2; ++v) vals.insert(v);
            }
            break;
        case CartanType::CI:
            if (r_plus == 0) {
                for (int r = 1; r <= n; ++r) vals.insert(r * (2 * n - r + 1) / 2);
            } else {
                require(n >= 3, "CI r_plus=1 closed form requires n >= 3");
                for (int s = 0; s < n; ++s) vals.insert(s + n * (n - 1) / 2);
            }
            break;
        case CartanType::DIII:
            if (r_plus == 0) {
                for (int s = 1; s <= n; ++s) vals.insert((s - 1) * (2 * n - s) / 2);
                for (int t = 1; t <= n - 1; ++t) vals.insert((t - 1) + (n - 1) * (n - 2) / 2);
            } else {
                for (int s = 1; s <= n - 2; ++s) {
                    vals.insert((s - 1) + (n - 1) * (n - 2) / 2);
                    vals.insert(2 * (s - 1) + (n - 2) * (n - 3) / 2);
                }
                vals.insert((n - 2) * (n + 1) / 2);
            }
            break;
        case CartanType::EIII:
            vals = r_plus == 0 ? std::set<int>{8, 11, 12, 13, 14, 15, 16}
                               : std::set<int>{5, 9, 11, 12, 13, 14, 15};
            break;
        case CartanType::EVII:
            vals = r_plus == 0 ? std::set<int>{17, 21, 22, 23, 24, 25, 26, 27}
                               : std::set<int>{10, 18, 21, 22, 23, 24, 25, 26};
            break;
    }
    SignatureSet set;
    set.by_r_plus[r_plus] = std::vector<int>(vals.begin(), vals.end());
    return set;
}

RatVec project_to_tR(const RootDatum& datum, const RatVec& x) {
    const auto& cons = datum.tr_constraints;
    const int k = static_cast<int>(cons.size());
    if (k == 0) return x;
    // solve (C C^T) lambda = C x, return x - C^T lambda
    std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k + 1));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) g[i][j] = dot(cons[i], cons[j]);
        g[i][k] = dot(cons[i], x);
    }
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (!g[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularSystem("degenerate constraint Gram matrix");
        std::swap(g[col], g[piv]);
        Rational inv = Rational(1) / g[col][col];
        for (auto& v : g[col]) v *= inv;
        for (int r = 0; r < k; ++r) {
            if (r == col || g[r][col].is_zero()) continue;
            Rational f = g[r][col];
            for (int c = col; c <= k; ++c) g[r][c] -= f * g[col][c];
        }
    }
    RatVec y = x;
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < datum.ambient_dim; ++c) y[c] -= g[i][k] * cons[i][c];
    return y;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::set<Signature> sample_signatures(const RootDatum& datum, int count, std::uint64_t seed) {
    std::set<Signature> out;
    std::uint64_t state = seed;
    int accepted = 0;
    long long attempts = 0;
    const long long attempt_cap = 200LL * count + 1000;
    while (accepted < count && attempts < attempt_cap) {
        ++attempts;
        RatVec x(datum.ambient_dim);
        for (auto& c : x) c = Rational(static_cast<long long>(splitmix64(state) % 21) - 10);
        x = project_to_tR(datum, x);
        if (is_zero(x)) continue;
        out.insert(r_signature(datum, x));
        ++accepted;
    }
    return out;
}

}  // namespace thetasig
