// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Criteria marked PROVISIONAL follow the documented allowlist: the
// exhaustive enumerator is authoritative there and the comparison is
// reported instead of failed.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>

#include "qanalog.hpp"
#include "thetasig/hodge.hpp"

using namespace thetasig;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int id, std::string name) : id_(id), name_(std::move(name)) {
        start_ = std::chrono::steady_clock::now();
    }
    void fail(const std::string& why) {
        ok_ = false;
        detail_ += "    ! " + why + "\n";
    }
    void note(const std::string& what) { detail_ += "    - " + what + "\n"; }
    void finish(const std::string& annotation = "") {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        std::cout << (ok_ ? "[PASS]" : "[FAIL]") << " criterion " << id_ << ": " << name_ << " ("
                  << ms << " ms)";
        if (!annotation.empty()) std::cout << " -- " << annotation;
        std::cout << "\n" << detail_;
        if (!ok_) ++g_failures;
    }
    bool ok() const { return ok_; }

private:
    int id_;
    std::string name_;
    std::string detail_;
    bool ok_ = true;
    std::chrono::steady_clock::time_point start_;
};

std::vector<int> vals(const SignatureSet& s, int r_plus) {
    auto it = s.by_r_plus.find(r_plus);
    return it == s.by_r_plus.end() ? std::vector<int>{} : it->second;
}

std::string fmt(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

std::vector<PairDescriptor> aiii_grid() {
    std::vector<PairDescriptor> g;
    for (int n = 2; n <= 6; ++n) g.push_back(PairDescriptor::aiii(1, n));
    for (int m = 2; m <= 4; ++m)
        for (int n = m; m + n <= 8; ++n) g.push_back(PairDescriptor::aiii(m, n));
    return g;
}

std::vector<PairDescriptor> full_grid() {
    std::vector<PairDescriptor> g = aiii_grid();
    for (int m = 3; m <= 6; ++m) g.push_back(PairDescriptor::bdi_even(m));
    for (int m = 2; m <= 5; ++m) g.push_back(PairDescriptor::bdi_odd(m));
    for (int n = 2; n <= 5; ++n) g.push_back(PairDescriptor::ci(n));
    for (int n = 4; n <= 6; ++n) g.push_back(PairDescriptor::diii(n));
    g.push_back(PairDescriptor::eiii());
    g.push_back(PairDescriptor::evii());
    return g;
}

long long wk_order(const PairDescriptor& d) {
    auto fact = [](int k) {
        long long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    switch (d.type) {
        case CartanType::AIII: return fact(d.m) * fact(d.n);
        case CartanType::BDI_even: return (1LL << (d.m - 2)) * fact(d.m - 1);
        case CartanType::BDI_odd: return (1LL << (d.m - 1)) * fact(d.m - 1);
        case CartanType::CI:
        case CartanType::DIII: return fact(d.n);
        case CartanType::EIII: return 1920;    // |W(D5)|
        case CartanType::EVII: return 51840;   // |W(E6)|
    }
    return 0;
}

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(THETASIG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    return {WEXITSTATUS(pclose(pipe)), out};
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
    Criterion c(1, "exceptional signature sets reproduce exactly");
    const std::vector<int> e6_r0{8, 11, 12, 13, 14, 15, 16};
    const std::vector<int> e6_r1{5, 9, 11, 12, 13, 14, 15};
    const std::vector<int> e7_r0{17, 21, 22, 23, 24, 25, 26, 27};
    const std::vector<int> e7_r1{10, 18, 21, 22, 23, 24, 25, 26};

    SignatureSet s6 =
        attainable_signatures(build_root_datum(PairDescriptor::eiii()), std::set<int>{0, 1});
    SignatureSet s7 =
        attainable_signatures(build_root_datum(PairDescriptor::evii()), std::set<int>{0, 1});
    if (vals(s6, 0) != e6_r0) c.fail("EIII R+=0: got " + fmt(vals(s6, 0)));
    if (vals(s6, 1) != e6_r1) c.fail("EIII R+=1: got " + fmt(vals(s6, 1)));
    if (vals(s7, 0) != e7_r0) c.fail("EVII R+=0: got " + fmt(vals(s7, 0)));
    if (vals(s7, 1) != e7_r1) c.fail("EVII R+=1: got " + fmt(vals(s7, 1)));
    c.finish();
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
    Criterion c(2, "classical R+=0 sets equal the closed forms");
    for (const auto& desc : full_grid()) {
        if (desc.type == CartanType::EIII || desc.type == CartanType::EVII) continue;
        RootDatum d = build_root_datum(desc);
        auto enumerated = vals(attainable_signatures(d, std::set<int>{0}), 0);
        auto closed = vals(closed_form_rminus(desc, 0), 0);
        if (desc.type == CartanType::DIII) {
            // provisional cell: the closed form lists 0 from its s=1 term
            std::vector<int> closed_nz;
            for (int v : closed)
                if (v) closed_nz.push_back(v);
            if (enumerated == closed_nz)
                c.note(desc.name() + " PROVISIONAL: enumerator drops the s=1 value 0, rest agrees");
            else
                c.fail(desc.name() + ": enumerated " + fmt(enumerated) + " vs closed " +
                       fmt(closed));
        } else if (desc.type == CartanType::BDI_even && desc.m == 3) {
            if (enumerated == closed)
                c.note("BDI-even(3) PROVISIONAL: closed form confirmed by the enumerator");
            else
                c.note("BDI-even(3) PROVISIONAL: enumerated " + fmt(enumerated) + " vs closed " +
                       fmt(closed) + "; enumerator authoritative");
        } else if (enumerated != closed) {
            c.fail(desc.name() + ": enumerated " + fmt(enumerated) + " vs closed " + fmt(closed));
        }
    }
    c.finish();
}

// ---------------------------------------------------------------- criterion 3

void criterion3() {
    Criterion c(3, "classical R+=1 sets against the printed closed forms");
    bool aiii_neither = false;
    for (const auto& desc : full_grid()) {
        if (desc.type == CartanType::EIII || desc.type == CartanType::EVII) continue;
        if (desc.type == CartanType::CI && desc.n < 3) continue;
        if (desc.type == CartanType::BDI_even && desc.m < 4) continue;
        RootDatum d = build_root_datum(desc);
        auto enumerated = vals(attainable_signatures(d, std::set<int>{1}), 1);
        if (desc.type == CartanType::AIII && desc.m >= 2) {
            auto plain = vals(closed_form_rminus(desc, 1, Aiii1Form::plain), 1);
            auto shifted = vals(closed_form_rminus(desc, 1, Aiii1Form::shifted), 1);
            if (enumerated == plain) {
                c.note(desc.name() + ": matches variant mn+r-s");
            } else if (enumerated == shifted) {
                c.note(desc.name() + ": matches variant mn+r-s+2");
            } else {
                aiii_neither = true;
                c.note(desc.name() + " PROVISIONAL: neither variant matches; enumerated " +
                       fmt(enumerated) + ", mn+r-s " + fmt(plain) + ", mn+r-s+2 " + fmt(shifted));
            }
        } else {
            auto closed = vals(closed_form_rminus(desc, 1), 1);
            if (enumerated != closed)
                c.fail(desc.name() + ": enumerated " + fmt(enumerated) + " vs closed " +
                       fmt(closed));
        }
    }
    c.finish(aiii_neither ? "AIII rows recorded PROVISIONAL per the open-question policy; "
                            "the enumerated sets are authoritative"
                          : "");
}

// ---------------------------------------------------------------- criterion 4

void criterion4() {
    Criterion c(4, "antipodal swap and W_K-invariance on 1000 seeded points per type");
    std::uint64_t state = 0xC0FFEE;
    for (const auto& desc : full_grid()) {
        RootDatum d = build_root_datum(desc);
        long long violations = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            RatVec x(d.ambient_dim);
            for (auto& v : x) v = Rational(static_cast<long long>(splitmix(state) % 21) - 10);
            x = project_to_tR(d, x);
            Signature s = r_signature(d, x);
            Signature sneg = r_signature(d, -x);
            if (sneg.r_plus != s.r_minus || sneg.r_minus != s.r_plus) ++violations;
            for (int i : d.compact_simple_indices)
                if (r_signature(d, reflect(d.simple_roots[i], x)) != s) ++violations;
        }
        if (violations) c.fail(desc.name() + ": " + std::to_string(violations) + " violations");
    }
    c.finish();
}

// ---------------------------------------------------------------- criterion 5

void criterion5() {
    Criterion c(5, "dimension and coset counts");
    for (const auto& desc : full_grid()) {
        RootDatum d = build_root_datum(desc);
        if (static_cast<long long>(d.pos_noncompact.size()) != desc.dim_complex())
            c.fail(desc.name() + ": |noncompact| = " + std::to_string(d.pos_noncompact.size()) +
                   " != " + std::to_string(desc.dim_complex()));
    }
    auto cosets = [](const PairDescriptor& desc) {
        RootDatum d = build_root_datum(desc);
        std::vector<int> gens(d.rank());
        std::iota(gens.begin(), gens.end(), 0);
        return orbit_bfs(d, gens, d.fundamental_coweights[d.noncompact_simple]).size();
    };
    if (cosets(PairDescriptor::eiii()) != 27) c.fail("EIII coset count != 27");
    if (cosets(PairDescriptor::evii()) != 56) c.fail("EVII coset count != 56");
    c.finish();
}

// ---------------------------------------------------------------- criterion 6

void criterion6() {
    Criterion c(6, "flag Poincare properties on 20 seeded (type, subset) pairs");
    auto grid = full_grid();
    std::uint64_t state = 20260808;
    std::string drawn;
    for (int draw = 0; draw < 20; ++draw) {
        const auto& desc = grid[splitmix(state) % grid.size()];
        RootDatum d = build_root_datum(desc);
        std::vector<int> subset;
        for (int i : d.compact_simple_indices)
            if (splitmix(state) % 2) subset.push_back(i);

        auto b = flag_poincare(d, subset);
        std::string tag = desc.name() + " subset size " + std::to_string(subset.size());
        drawn += (draw ? ", " : "") + tag;
        if (b.front() != 1) c.fail(tag + ": b_0 != 1");
        auto rb = b;
        std::reverse(rb.begin(), rb.end());
        if (b != rb) c.fail(tag + ": not palindromic");

        // |W_H| by BFS on a W_H-regular seed; Lagrange against |W_K|
        RatVec seed(d.ambient_dim, Rational(0));
        for (int i : subset) seed += d.fundamental_coweights[i];
        long long wh = static_cast<long long>(orbit_bfs(d, subset, seed).size());
        long long sum = std::accumulate(b.begin(), b.end(), 0LL);
        if (sum * wh != wk_order(desc))
            c.fail(tag + ": sum(b)*|W_H| = " + std::to_string(sum * wh) +
                   " != |W_K| = " + std::to_string(wk_order(desc)));
    }

    // AIII flags against the independent q-analog forms
    RootDatum a23 = build_root_datum(PairDescriptor::aiii(2, 3));
    if (flag_poincare(a23, {}) != qanalog::mul(qanalog::q_factorial(2), qanalog::q_factorial(3)))
        c.fail("AIII(2,3) full flag != [2]_q! [3]_q!");
    // Grassmannian fibers: keep one block's wall set empty except a single cut
    if (flag_poincare(a23, {0, 2, 3}) != qanalog::Poly{1})
        c.fail("AIII(2,3) full parabolic subset is not a point");
    if (flag_poincare(a23, {0, 3}) != qanalog::gauss_binomial(3, 1))
        c.fail("AIII(2,3) Grassmannian Gr(1,3) fiber mismatch");
    if (flag_poincare(a23, {2, 3}) != qanalog::gauss_binomial(2, 1))
        c.fail("AIII(2,3) Grassmannian Gr(1,2) fiber mismatch");
    RootDatum a44 = build_root_datum(PairDescriptor::aiii(4, 4));
    if (flag_poincare(a44, {0, 1, 2, 4, 6}) !=
        qanalog::mul(qanalog::gauss_binomial(4, 4), qanalog::gauss_binomial(4, 2)))
        c.fail("AIII(4,4) Gr(2,4) fiber mismatch");

    // EVII with H of type D5 inside the compact E6: 27 cosets spread over
    // complex dimension 36 - 20 = 16, one new class at depth 1
    RootDatum e7 = build_root_datum(PairDescriptor::evii());
    auto b27 = flag_poincare(e7, {1, 2, 3, 4, 5});
    long long sum27 = std::accumulate(b27.begin(), b27.end(), 0LL);
    if (sum27 != 27 || b27.size() != 17 || b27[1] != 1)
        c.fail("EVII D5-fiber: got sum " + std::to_string(sum27) + ", degrees " +
               std::to_string(b27.size()));
    c.note("drew: " + drawn);
    c.finish();
}

// ---------------------------------------------------------------- criterion 7

void criterion7() {
    Criterion c(7, "low-degree vanishing and the H^{1,1} case list");
    for (const auto& desc : full_grid()) {
        SignatureProfile prof = SignatureProfile::compute(desc);
        for (int q = 1; q < desc.real_rank(); ++q)
            if (vanish_h0q(prof, q).value != Verdict::Zero)
                c.fail(desc.name() + ": H^{0," + std::to_string(q) +
                       "} not zero below the real rank");
        bool expect_iso = false;
        switch (desc.type) {
            case CartanType::AIII:
                expect_iso = desc.m >= 2 && !(desc.m == 2 && desc.n == 2);
                break;
            case CartanType::CI: expect_iso = desc.n >= 3; break;
            case CartanType::DIII: expect_iso = desc.n >= 5; break;
            case CartanType::EIII:
            case CartanType::EVII: expect_iso = true; break;
            default: break;
        }
        Verdict got = h11_structure(prof).value;
        Verdict want = expect_iso ? Verdict::IsomorphicToC : Verdict::Unconstrained;
        if (got != want)
            c.fail(desc.name() + ": h11 " + to_string(got) + ", expected " + to_string(want));
    }
    Verdict bdi2 = h11_structure(SignatureProfile::compute(PairDescriptor::bdi_odd(2))).value;
    if (bdi2 != Verdict::Unconstrained) c.fail("BDI-odd(2) h11 should be unconstrained");
    c.finish();
}

// ---------------------------------------------------------------- criterion 8

void criterion8() {
    Criterion c(8, "Leray-Hirsch Euler multiplicativity and point-fiber identity");
    std::uint64_t state = 88;
    for (int trial = 0; trial < 50; ++trial) {
        int dim = 1 + static_cast<int>(splitmix(state) % 4);
        HodgeDiamond x(dim);
        for (int p = 0; p <= dim; ++p)
            for (int q = 0; q <= dim; ++q)
                x.set(p, q, static_cast<long long>(splitmix(state) % 9));
        std::vector<long long> betti;
        int fdim = static_cast<int>(splitmix(state) % 4);
        betti.push_back(1);
        for (int r = 1; r <= fdim; ++r)
            betti.push_back(static_cast<long long>(splitmix(state) % 4));
        if (leray_hirsch(x, {1}) != x) c.fail("fiber (1) is not the identity");
        HodgeDiamond y = leray_hirsch(x, betti);
        long long bsum = std::accumulate(betti.begin(), betti.end(), 0LL);
        if (!y.fully_known() || y.euler_char() != x.euler_char() * bsum)
            c.fail("Euler multiplicativity violated at trial " + std::to_string(trial));
    }
    c.finish();
}

// ---------------------------------------------------------------- criterion 9

void criterion9() {
    Criterion c(9, "byte-identical CLI table artifacts across runs");
    const std::vector<std::string> suite = {
        "tables --which 2",
        "tables --which 2 --format csv",
        "tables --which 2 --format json",
        "tables --which 3",
        "tables --which 3 --format csv",
        "tables --which 3 --format json",
        "tables --which 4",
        "tables --which 4 --format csv",
        "tables --which 4 --format json",
    };
    for (const auto& args : suite) {
        auto [code1, out1] = run_cli(args);
        auto [code2, out2] = run_cli(args);
        if (code1 < 0 || code2 < 0) {
            c.fail(args + ": could not spawn CLI");
            continue;
        }
        if (code1 != code2 || out1 != out2) c.fail(args + ": runs differ");
        if (out1.empty()) c.fail(args + ": empty artifact");
        if (code1 == 3) c.fail(args + ": closed-form disagreement outside the allowlist");
    }
    c.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
