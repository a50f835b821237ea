#pragma once

#include <string>
#include <vector>

#include "thetasig/rational.hpp"

namespace thetasig {

// Coordinate vector in the ambient Euclidean space. Roots and points of the
// torus subspace are both RatVecs; comparisons are exact and lexicographic
// (std::vector's <=> lifted from Rational), which is what the deterministic
// orbit enumeration orders by.
using RatVec = std::vector<Rational>;

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const RatVec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

inline RatVec& operator+=(RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline RatVec operator+(RatVec a, const RatVec& b) {
    a += b;
    return a;
}

inline RatVec operator-(RatVec a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sub: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline RatVec operator-(RatVec a) {
    for (auto& c : a) c = -c;
    return a;
}

inline RatVec operator*(const Rational& s, RatVec v) {
    for (auto& c : v) c *= s;
    return v;
}

inline std::string str(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    out += ")";
    return out;
}

}  // namespace thetasig
