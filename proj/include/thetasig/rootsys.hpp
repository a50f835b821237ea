#pragma once

#include <compare>
#include <string>
#include <vector>

#include "thetasig/ratvec.hpp"

namespace thetasig {

// The seven families of irreducible Hermitian symmetric pairs (G, K):
//   AIII      SU(m,n),        K = S(U(m) x U(n))
//   BDI_even  SO_0(2, 2m-2),  K = SO(2) x SO(2m-2)
//   BDI_odd   SO_0(2, 2m-1),  K = SO(2) x SO(2m-1)
//   CI        Sp(n, R),       K = U(n)
//   DIII      SO*(2n),        K = U(n)
//   EIII      e6(-14),        K = Spin(10) . U(1)
//   EVII      e7(-25),        K = E6 . U(1)
enum class CartanType { AIII, BDI_even, BDI_odd, CI, DIII, EIII, EVII };

std::string to_string(CartanType t);

// Classical parameters above this bound are rejected; the closed forms are
// parametric, so small instances are enough for exhaustive verification.
inline constexpr int kMaxClassicalParam = 12;

struct PairDescriptor {
    CartanType type;
    int m = 0;  // AIII: m; BDI_even/BDI_odd: m
    int n = 0;  // AIII: n; CI/DIII: n

    static PairDescriptor aiii(int m, int n);
    static PairDescriptor bdi_even(int m);
    static PairDescriptor bdi_odd(int m);
    static PairDescriptor ci(int n);
    static PairDescriptor diii(int n);
    static PairDescriptor eiii();
    static PairDescriptor evii();

    // type string as accepted by the CLI: AIII, BDI-even, BDI-odd, CI, DIII,
    // EIII, EVII. Validates parameter guards.
    static PairDescriptor parse(const std::string& type, int m, int n);

    std::string name() const;  // e.g. "AIII(2,3)", "BDI-odd(2)", "EVII"
    int real_rank() const;
    long long dim_complex() const;  // dim_C(G/K)

    friend auto operator<=>(const PairDescriptor&, const PairDescriptor&) = default;
};

// Realized root data for one pair, everything in ambient R^N coordinates.
// pos_compact/pos_noncompact hold one representative per root pair (the
// positive one for the fixed simple system).
struct RootDatum {
    PairDescriptor descriptor;
    int ambient_dim = 0;
    std::vector<RatVec> tr_constraints;  // c . x = 0 equations cutting out t_R
    std::vector<RatVec> simple_roots;    // Bourbaki order, psi_1 at index 0
    int noncompact_simple = -1;          // index into simple_roots
    std::vector<RatVec> pos_compact;
    std::vector<RatVec> pos_noncompact;
    std::vector<int> compact_simple_indices;
    std::vector<RatVec> fundamental_coweights;  // psi_i(omega_j) = delta_ij, in t_R

    int rank() const { return static_cast<int>(simple_roots.size()); }
    bool in_tR(const RatVec& x) const;
};

RootDatum build_root_datum(const PairDescriptor& desc);

// Pairing alpha(x) through the ambient dot product.
Rational eval_root(const RatVec& alpha, const RatVec& x);

// s_alpha(x) = x - 2(alpha,x)/(alpha,alpha) alpha
RatVec reflect(const RatVec& alpha, const RatVec& x);

// Positive system from an ordered real basis of t_R: alpha is positive when
// its first nonzero value on the basis is positive. Returns one of {alpha,
// -alpha} per root pair of the datum.
std::vector<RatVec> positive_system_from_basis(const RootDatum& datum,
                                               const std::vector<RatVec>& ordered_basis);

// Fundamental coweights omega_j in t_R with psi_i(omega_j) = delta_ij, by
// exact Gaussian elimination against the simple roots plus the t_R
// constraints. build_root_datum already calls this and stores the result.
std::vector<RatVec> solve_coweights(const std::vector<RatVec>& simple_roots,
                                    const std::vector<RatVec>& tr_constraints, int ambient_dim);

}  // namespace thetasig
