#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "thetasig/weyl.hpp"

namespace thetasig {

// (R+, R-) of the parabolic subalgebra q_x: counts of positive noncompact
// roots with alpha(x) > 0 resp. alpha(x) < 0.
struct Signature {
    int r_plus = 0;
    int r_minus = 0;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

// Attainable r_minus values, keyed by r_plus, each list sorted strictly
// increasing.
struct SignatureSet {
    std::map<int, std::vector<int>> by_r_plus;

    bool contains(const Signature& s) const;
    void insert(const Signature& s);
    friend bool operator==(const SignatureSet&, const SignatureSet&) = default;
};

Signature r_signature(const RootDatum& datum, const RatVec& x);

// One generic point per face of the Coxeter arrangement of Delta in t_R,
// modulo W_K, excluding x = 0: dominant-face points x_B = sum of coweights
// over a nonempty subset B of simples, pushed through a complete set of
// representatives of W_K \ W. Signatures are constant on faces and invariant
// under W_K, so this stream attains every signature attained by any x != 0.
struct FacePoint {
    RatVec point;
    std::uint64_t subset_mask = 0;  // bit i set <=> simple root i in B
    std::size_t coset = 0;          // index into the W_K \ W representative list
};

void for_each_face_point(const RootDatum& datum, const std::function<void(const FacePoint&)>& fn);

std::vector<RatVec> enumerate_face_points(const RootDatum& datum);

// Exact set of attainable signatures over x != 0, optionally filtered to the
// given r_plus values. threads > 1 partitions the face stream by subset; the
// merge is a set union, so the result does not depend on scheduling.
SignatureSet attainable_signatures(const RootDatum& datum,
                                   const std::optional<std::set<int>>& r_plus_filter = {},
                                   int threads = 1);

// The two printed presentations of the AIII (2 <= m <= n) closed form for
// r_plus = 1, which do not describe the same set: value mn+r-s over
// 1<=r<=m-1, m+2<=s<=m+n, versus mn+r-s+2 over 0<=r<=m-1, m+1<=s<=m+n.
enum class Aiii1Form { plain, shifted };

inline const char* to_string(Aiii1Form f) {
    return f == Aiii1Form::plain ? "mn+r-s" : "mn+r-s+2";
}

// Closed-form r_minus sets for r_plus in {0, 1}, evaluated over their stated
// parameter ranges. Throws NotTabulated outside those ranges (e.g. CI with
// n = 2 at r_plus = 1, BDI-even with m = 3 at r_plus = 1).
SignatureSet closed_form_rminus(const PairDescriptor& desc, int r_plus,
                                Aiii1Form aiii_form = Aiii1Form::plain);

// Randomized soundness oracle: signatures of pseudo-random nonzero integer
// vectors projected into t_R. Deterministic for a fixed seed; always a
// subset of attainable_signatures.
std::set<Signature> sample_signatures(const RootDatum& datum, int count, std::uint64_t seed);

// Orthogonal projection onto t_R (identity when there are no constraints).
RatVec project_to_tR(const RootDatum& datum, const RatVec& x);

}  // namespace thetasig
