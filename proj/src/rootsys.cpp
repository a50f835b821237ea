#include "thetasig/rootsys.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace thetasig {

std::string to_string(CartanType t) {
    switch (t) {
        case CartanType::AIII: return "AIII";
        case CartanType::BDI_even: return "BDI-even";
        case CartanType::BDI_odd: return "BDI-odd";
        case CartanType::CI: return "CI";
        case CartanType::DIII: return "DIII";
        case CartanType::EIII: return "EIII";
        case CartanType::EVII: return "EVII";
    }
    return "?";
}

PairDescriptor PairDescriptor::aiii(int m, int n) {
    if (m < 1 || n < m) throw ParameterOutOfRange("AIII requires 1 <= m <= n");
    if (m == 1 && n == 1) throw ParameterOutOfRange("AIII(1,1) is excluded");
    if (m + n > kMaxClassicalParam)
        throw ParameterOutOfRange("AIII requires m+n <= " + std::to_string(kMaxClassicalParam));
    return {CartanType::AIII, m, n};
}

PairDescriptor PairDescriptor::bdi_even(int m) {
    if (m < 3) throw ParameterOutOfRange("BDI-even requires m >= 3");
    if (m > kMaxClassicalParam)
        throw ParameterOutOfRange("BDI-even requires m <= " + std::to_string(kMaxClassicalParam));
    return {CartanType::BDI_even, m, 0};
}

PairDescriptor PairDescriptor::bdi_odd(int m) {
    if (m < 2) throw ParameterOutOfRange("BDI-odd requires m >= 2");
    if (m > kMaxClassicalParam)
        throw ParameterOutOfRange("BDI-odd requires m <= " + std::to_string(kMaxClassicalParam));
    return {CartanType::BDI_odd, m, 0};
}

PairDescriptor PairDescriptor::ci(int n) {
    if (n < 2) throw ParameterOutOfRange("CI requires n >= 2");
    if (n > kMaxClassicalParam)
        throw ParameterOutOfRange("CI requires n <= " + std::to_string(kMaxClassicalParam));
    return {CartanType::CI, 0, n};
}

PairDescriptor PairDescriptor::diii(int n) {
    if (n < 4) throw ParameterOutOfRange("DIII requires n >= 4");
    if (n > kMaxClassicalParam)
        throw ParameterOutOfRange("DIII requires n <= " + std::to_string(kMaxClassicalParam));
    return {CartanType::DIII, 0, n};
}

PairDescriptor PairDescriptor::eiii() { return {CartanType::EIII, 0, 0}; }
PairDescriptor PairDescriptor::evii() { return {CartanType::EVII, 0, 0}; }

PairDescriptor PairDescriptor::parse(const std::string& type, int m, int n) {
    if (type == "AIII") return aiii(m, n);
    if (type == "BDI-even") return bdi_even(m);
    if (type == "BDI-odd") return bdi_odd(m);
    if (type == "CI") return ci(n);
    if (type == "DIII") return diii(n);
    if (type == "EIII") return eiii();
    if (type == "EVII") return evii();
    throw ParameterOutOfRange("unknown type '" + type + "'");
}

std::string PairDescriptor::name() const {
    switch (type) {
        case CartanType::AIII:
            return "AIII(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case CartanType::BDI_even: return "BDI-even(" + std::to_string(m) + ")";
        case CartanType::BDI_odd: return "BDI-odd(" + std::to_string(m) + ")";
        case CartanType::CI: return "CI(" + std::to_string(n) + ")";
        case CartanType::DIII: return "DIII(" + std::to_string(n) + ")";
        case CartanType::EIII: return "EIII";
        case CartanType::EVII: return "EVII";
    }
    return "?";
}

int PairDescriptor::real_rank() const {
    switch (type) {
        case CartanType::AIII: return std::min(m, n);
        case CartanType::BDI_even:
        case CartanType::BDI_odd: return 2;
        case CartanType::CI: return n;
        case CartanType::DIII: return n / 2;
        case CartanType::EIII: return 2;
        case CartanType::EVII: return 3;
    }
    return 0;
}

long long PairDescriptor::dim_complex() const {
    switch (type) {
        case CartanType::AIII: return static_cast<long long>(m) * n;
        case CartanType::BDI_even: return 2LL * m - 2;
        case CartanType::BDI_odd: return 2LL * m - 1;
        case CartanType::CI: return static_cast<long long>(n) * (n + 1) / 2;
        case CartanType::DIII: return static_cast<long long>(n) * (n - 1) / 2;
        case CartanType::EIII: return 16;
        case CartanType::EVII: return 27;
    }
    return 0;
}

bool RootDatum::in_tR(const RatVec& x) const {
    if (static_cast<int>(x.size()) != ambient_dim) return false;
    for (const auto& c : tr_constraints)
        if (!dot(c, x).is_zero()) return false;
    return true;
}

Rational eval_root(const RatVec& alpha, const RatVec& x) { return dot(alpha, x); }

RatVec reflect(const RatVec& alpha, const RatVec& x) {
    if (is_zero(alpha)) throw ZeroRoot("reflect: zero root");
    Rational c = Rational(2) * dot(alpha, x) / dot(alpha, alpha);
    RatVec out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * alpha[i];
    return out;
}

namespace {

RatVec basis_vec(int n, int i, Rational v = Rational(1)) {
    RatVec e(n, Rational(0));
    e[i] = v;
    return e;
}

// e_i - e_j
RatVec eij(int n, int i, int j) {
    RatVec v(n, Rational(0));
    v[i] = Rational(1);
    v[j] = Rational(-1);
    return v;
}

// e_i + e_j
RatVec eij_plus(int n, int i, int j) {
    RatVec v(n, Rational(0));
    v[i] = Rational(1);
    v[j] += Rational(1);
    return v;
}

// Even-parity sign patterns on five coordinates, in fixed lexicographic
// order. Index set A of the E-type noncompact root families.
std::vector<std::array<int, 5>> even_sign_patterns() {
    std::vector<std::array<int, 5>> out;
    for (int mask = 0; mask < 32; ++mask) {
        int bits = __builtin_popcount(mask);
        if (bits % 2) continue;
        std::array<int, 5> a{};
        for (int j = 0; j < 5; ++j) a[j] = (mask >> j) & 1;
        out.push_back(a);
    }
    return out;
}

void validate(const RootDatum& d) {
    const Rational half(1, 2);
    if (static_cast<long long>(d.pos_noncompact.size()) != d.descriptor.dim_complex())
        throw SingularSystem("root datum: |pos_noncompact| != dim_C(X) for " + d.descriptor.name());

    // coweights live in t_R and pair as delta_ij against the simple roots
    for (const auto& w : d.fundamental_coweights)
        if (!d.in_tR(w)) throw SingularSystem("coweight outside t_R");
    for (int i = 0; i < d.rank(); ++i)
        for (int j = 0; j < d.rank(); ++j) {
            Rational v = dot(d.simple_roots[i], d.fundamental_coweights[j]);
            if (v != Rational(i == j ? 1 : 0)) throw SingularSystem("psi_i(omega_j) != delta_ij");
        }

    // every listed root is positive on the sum of all coweights, and doubling
    // clears all denominators (half-integral coordinates only)
    RatVec rho_check(d.ambient_dim, Rational(0));
    for (const auto& w : d.fundamental_coweights) rho_check += w;
    for (const auto* side : {&d.pos_compact, &d.pos_noncompact})
        for (const auto& a : *side) {
            if (dot(a, rho_check).sign() <= 0) throw SingularSystem("non-positive root listed");
            for (const auto& c : a)
                if (!(c * Rational(2)).is_integer()) throw SingularSystem("root not half-integral");
        }
}

}  // namespace

std::vector<RatVec> solve_coweights(const std::vector<RatVec>& simple_roots,
                                    const std::vector<RatVec>& tr_constraints, int ambient_dim) {
    // Rows: one per simple root (rhs delta), then one per constraint (rhs 0).
    const int n = static_cast<int>(simple_roots.size());
    const int k = static_cast<int>(tr_constraints.size());
    const int rows = n + k;
    if (rows != ambient_dim) throw SingularSystem("coweight system is not square");

    // Augmented matrix [A | I_n 0] solved for all right-hand sides at once.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(ambient_dim + n, Rational(0)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < ambient_dim; ++c) a[r][c] = simple_roots[r][c];
        a[r][ambient_dim + r] = Rational(1);
    }
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < ambient_dim; ++c) a[n + r][c] = tr_constraints[r][c];

    for (int col = 0; col < ambient_dim; ++col) {
        int piv = -1;
        for (int r = col; r < rows; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularSystem("coweight system is singular");
        std::swap(a[col], a[piv]);
        Rational inv = Rational(1) / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (int c = col; c < ambient_dim + n; ++c) a[r][c] -= f * a[col][c];
        }
    }

    std::vector<RatVec> coweights(n, RatVec(ambient_dim, Rational(0)));
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < ambient_dim; ++c) coweights[j][c] = a[c][ambient_dim + j];
    return coweights;
}

std::vector<RatVec> positive_system_from_basis(const RootDatum& datum,
                                               const std::vector<RatVec>& ordered_basis) {
    std::vector<RatVec> out;
    std::vector<RatVec> all = datum.pos_compact;
    all.insert(all.end(), datum.pos_noncompact.begin(), datum.pos_noncompact.end());
    for (const auto& alpha : all) {
        int s = 0;
        for (const auto& h : ordered_basis) {
            s = dot(alpha, h).sign();
            if (s != 0) break;
        }
        if (s == 0) throw DegenerateBasis("root vanishes on the whole basis: " + str(alpha));
        out.push_back(s > 0 ? alpha : -alpha);
    }
    return out;
}

RootDatum build_root_datum(const PairDescriptor& desc) {
    RootDatum d;
    d.descriptor = desc;
    const Rational half(1, 2);

    switch (desc.type) {
        case CartanType::AIII: {
            const int m = desc.m, n = desc.n, N = m + n;
            d.ambient_dim = N;
            d.tr_constraints = {RatVec(N, Rational(1))};  // sum of coordinates = 0
            for (int j = 0; j + 1 < N; ++j) d.simple_roots.push_back(eij(N, j, j + 1));
            d.noncompact_simple = m - 1;  // psi_m = e_m - e_{m+1}
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) d.pos_compact.push_back(eij(N, i, j));
            for (int i = m; i < N; ++i)
                for (int j = i + 1; j < N; ++j) d.pos_compact.push_back(eij(N, i, j));
            for (int i = 0; i < m; ++i)
                for (int j = m; j < N; ++j) d.pos_noncompact.push_back(eij(N, i, j));
            break;
        }
        case CartanType::BDI_even: {
            const int m = desc.m;
            d.ambient_dim = m;
            for (int j = 0; j + 1 < m; ++j) d.simple_roots.push_back(eij(m, j, j + 1));
            d.simple_roots.push_back(eij_plus(m, m - 2, m - 1));  // psi_m = e_{m-1} + e_m
            d.noncompact_simple = 0;                              // psi_1 = e_1 - e_2
            for (int i = 1; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    d.pos_compact.push_back(eij(m, i, j));
                    d.pos_compact.push_back(eij_plus(m, i, j));
                }
            for (int j = 1; j < m; ++j) {
                d.pos_noncompact.push_back(eij(m, 0, j));
                d.pos_noncompact.push_back(eij_plus(m, 0, j));
            }
            break;
        }
        case CartanType::BDI_odd: {
            const int m = desc.m;
            d.ambient_dim = m;
            for (int j = 0; j + 1 < m; ++j) d.simple_roots.push_back(eij(m, j, j + 1));
            d.simple_roots.push_back(basis_vec(m, m - 1));  // psi_m = e_m
            d.noncompact_simple = 0;
            for (int i = 1; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    d.pos_compact.push_back(eij(m, i, j));
                    d.pos_compact.push_back(eij_plus(m, i, j));
                }
            for (int j = 1; j < m; ++j) d.pos_compact.push_back(basis_vec(m, j));
            for (int j = 1; j < m; ++j) {
                d.pos_noncompact.push_back(eij(m, 0, j));
                d.pos_noncompact.push_back(eij_plus(m, 0, j));
            }
            d.pos_noncompact.push_back(basis_vec(m, 0));
            break;
        }
        case CartanType::CI: {
            const int n = desc.n;
            d.ambient_dim = n;
            for (int j = 0; j + 1 < n; ++j) d.simple_roots.push_back(eij(n, j, j + 1));
            d.simple_roots.push_back(basis_vec(n, n - 1, Rational(2)));  // psi_n = 2 e_n
            d.noncompact_simple = n - 1;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) d.pos_compact.push_back(eij(n, i, j));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) d.pos_noncompact.push_back(eij_plus(n, i, j));
            for (int i = 0; i < n; ++i) d.pos_noncompact.push_back(basis_vec(n, i, Rational(2)));
            break;
        }
        case CartanType::DIII: {
            const int n = desc.n;
            d.ambient_dim = n;
            for (int j = 0; j + 1 < n; ++j) d.simple_roots.push_back(eij(n, j, j + 1));
            d.simple_roots.push_back(eij_plus(n, n - 2, n - 1));  // psi_n = e_{n-1} + e_n
            d.noncompact_simple = n - 1;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) d.pos_compact.push_back(eij(n, i, j));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) d.pos_noncompact.push_back(eij_plus(n, i, j));
            break;
        }
        case CartanType::EIII:
        case CartanType::EVII: {
            const int N = 8;
            d.ambient_dim = N;
            const bool e7 = desc.type == CartanType::EVII;

            // psi_1 = (e_1 - e_2 - e_3 - e_4 - e_5 - e_6 - e_7 + e_8)/2
            RatVec psi1(N, -half);
            psi1[0] = half;
            psi1[7] = half;
            d.simple_roots.push_back(psi1);
            d.simple_roots.push_back(eij_plus(N, 0, 1));  // psi_2 = e_1 + e_2
            d.simple_roots.push_back(eij(N, 1, 0));       // psi_3 = e_2 - e_1
            d.simple_roots.push_back(eij(N, 2, 1));       // psi_4
            d.simple_roots.push_back(eij(N, 3, 2));       // psi_5
            d.simple_roots.push_back(eij(N, 4, 3));       // psi_6
            if (e7) d.simple_roots.push_back(eij(N, 5, 4));  // psi_7 = e_6 - e_5

            if (e7) {
                d.tr_constraints = {eij_plus(N, 6, 7)};  // x_7 = -x_8
                d.noncompact_simple = 6;
            } else {
                d.tr_constraints = {eij(N, 5, 6), eij_plus(N, 6, 7)};  // x_6 = x_7 = -x_8
                d.noncompact_simple = 0;
            }

            // D5 block e_j +- e_i, 1 <= i < j <= 5, compact for both types
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) {
                    d.pos_compact.push_back(eij(N, j, i));
                    d.pos_compact.push_back(eij_plus(N, i, j));
                }

            const auto patterns = even_sign_patterns();
            if (e7) {
                // remaining compact roots: (-e_6 - e_7 + e_8 + sum (-1)^{a_j} e_j)/2
                for (const auto& a : patterns) {
                    RatVec v(N, Rational(0));
                    for (int j = 0; j < 5; ++j) v[j] = a[j] ? -half : half;
                    v[5] = -half;
                    v[6] = -half;
                    v[7] = half;
                    d.pos_compact.push_back(v);
                }
                // noncompact: beta_c = (e_6 - e_7 + e_8 - sum (-1)^{c_j} e_j)/2,
                // gamma_j^+- = e_6 +- e_j, and e_8 - e_7
                for (const auto& c : patterns) {
                    RatVec v(N, Rational(0));
                    for (int j = 0; j < 5; ++j) v[j] = c[j] ? half : -half;
                    v[5] = half;
                    v[6] = -half;
                    v[7] = half;
                    d.pos_noncompact.push_back(v);
                }
                for (int j = 0; j < 5; ++j) {
                    d.pos_noncompact.push_back(eij_plus(N, 5, j));
                    d.pos_noncompact.push_back(eij(N, 5, j));
                }
                d.pos_noncompact.push_back(eij(N, 7, 6));
            } else {
                // noncompact: gamma_a = (-e_6 - e_7 + e_8 + sum (-1)^{a_j} e_j)/2
                for (const auto& a : patterns) {
                    RatVec v(N, Rational(0));
                    for (int j = 0; j < 5; ++j) v[j] = a[j] ? -half : half;
                    v[5] = -half;
                    v[6] = -half;
                    v[7] = half;
                    d.pos_noncompact.push_back(v);
                }
            }
            break;
        }
    }

    for (int i = 0; i < d.rank(); ++i)
        if (i != d.noncompact_simple) d.compact_simple_indices.push_back(i);

    d.fundamental_coweights = solve_coweights(d.simple_roots, d.tr_constraints, d.ambient_dim);
    validate(d);
    return d;
}

}  // namespace thetasig
