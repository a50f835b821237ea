#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thetasig/hodge.hpp"

using namespace thetasig;

namespace {

// deterministic random diamond with all entries known
HodgeDiamond random_diamond(std::uint64_t& state, int dim) {
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    HodgeDiamond d(dim);
    for (int p = 0; p <= dim; ++p)
        for (int q = 0; q <= dim; ++q) d.set(p, q, static_cast<long long>(next() % 7));
    return d;
}

}  // namespace

TEST_CASE("vanish_h0q") {
    SignatureProfile e6 = SignatureProfile::compute(PairDescriptor::eiii());
    CHECK(vanish_h0q(e6, 9).value == Verdict::Zero);
    CHECK(vanish_h0q(e6, 8).value == Verdict::Unconstrained);
    CHECK(vanish_h0q(e6, 1).value == Verdict::Zero);
    CHECK_THROWS_AS(vanish_h0q(e6, 0), ParameterOutOfRange);

    SignatureProfile ci3 = SignatureProfile::compute(PairDescriptor::ci(3));
    CHECK(vanish_h0q(ci3, 3).value == Verdict::Unconstrained);

    SignatureProfile e7 = SignatureProfile::compute(PairDescriptor::evii());
    CHECK(vanish_h0q(e7, 1).value == Verdict::Zero);

    // definitional round trip: Unconstrained exactly on the attainable set
    for (int q = 1; q <= 30; ++q)
        CHECK((vanish_h0q(e7, q).value == Verdict::Unconstrained) ==
              (e7.r0.count(q) != 0));
}

TEST_CASE("vanish_h1q") {
    SignatureProfile e6 = SignatureProfile::compute(PairDescriptor::eiii());
    CHECK(vanish_h1q(e6, 7).value == Verdict::Zero);
    CHECK(vanish_h1q(e6, 9).value == Verdict::Unconstrained);   // 8 in the R+=0 set
    CHECK(vanish_h1q(e6, 11).value == Verdict::Unconstrained);  // 11 in the R+=1 set
    CHECK_THROWS_AS(vanish_h1q(e6, 1), ParameterOutOfRange);

    SignatureProfile e7 = SignatureProfile::compute(PairDescriptor::evii());
    CHECK(vanish_h1q(e7, 19).value == Verdict::Zero);
    CHECK(vanish_h1q(e7, 18).value == Verdict::Unconstrained);
}

TEST_CASE("h11_structure") {
    CHECK(h11_structure(SignatureProfile::compute(PairDescriptor::ci(3))).value ==
          Verdict::IsomorphicToC);
    CHECK(h11_structure(SignatureProfile::compute(PairDescriptor::bdi_odd(2))).value ==
          Verdict::Unconstrained);
    CHECK(h11_structure(SignatureProfile::compute(PairDescriptor::evii())).value ==
          Verdict::IsomorphicToC);
    CHECK(h11_structure(SignatureProfile::compute(PairDescriptor::aiii(2, 2))).value ==
          Verdict::Unconstrained);
}

TEST_CASE("diamond JSON round trip and schema errors") {
    HodgeDiamond d(2);
    d.set(0, 0, 1);
    d.set(1, 1, 3);
    d.set(2, 1, 0);
    HodgeDiamond back = HodgeDiamond::from_json_text(d.to_json_text());
    CHECK(back == d);

    CHECK_THROWS_AS(HodgeDiamond::from_json_text("not json"), SchemaError);
    CHECK_THROWS_AS(HodgeDiamond::from_json_text(R"({"entries": []})"), SchemaError);
    CHECK_THROWS_AS(HodgeDiamond::from_json_text(R"({"dim": 1, "entries": [{"p":0}]})"),
                    SchemaError);
    CHECK_THROWS_AS(
        HodgeDiamond::from_json_text(R"({"dim": 1, "entries": [{"p":0,"q":0,"value":-2}]})"),
        SchemaError);
    CHECK_THROWS_AS(
        HodgeDiamond::from_json_text(R"({"dim": 1, "entries": [{"p":5,"q":0,"value":2}]})"),
        DimensionMismatch);
    // "unknown" strings are accepted and stay unknown
    HodgeDiamond u = HodgeDiamond::from_json_text(
        R"({"dim": 1, "entries": [{"p":0,"q":0,"value":"unknown"},{"p":1,"q":0,"value":4}]})");
    CHECK(!u.at(0, 0).has_value());
    CHECK(u.at(1, 0) == 4);
    CHECK(u.at(5, 7) == 0);  // outside the square
}

TEST_CASE("leray_hirsch identity and point fiber") {
    std::uint64_t state = 11;
    HodgeDiamond x = random_diamond(state, 3);
    CHECK(leray_hirsch(x, {1}) == x);

    // base a point, fiber P^2: out(r,r) = 1
    HodgeDiamond pt(0);
    pt.set(0, 0, 1);
    HodgeDiamond out = leray_hirsch(pt, {1, 1, 1});
    CHECK(out.dim() == 2);
    for (int r = 0; r <= 2; ++r) CHECK(out.at(r, r) == 1);
    CHECK(out.at(1, 0) == 0);
    CHECK(out.fully_known());
}

TEST_CASE("leray_hirsch Euler characteristic multiplicativity") {
    std::uint64_t state = 2026;
    for (int trial = 0; trial < 50; ++trial) {
        int dim = 1 + static_cast<int>(state % 4);
        HodgeDiamond x = random_diamond(state, dim);
        std::vector<long long> betti;
        int fdim = static_cast<int>((state >> 7) % 3);
        for (int r = 0; r <= fdim; ++r) betti.push_back(1 + static_cast<long long>((state >> (r + 3)) % 3));
        HodgeDiamond y = leray_hirsch(x, betti);
        long long bsum_signed = 0;  // sum (-1)^{2r} b_{2r} = plain sum
        for (long long b : betti) bsum_signed += b;
        CHECK(y.fully_known());
        CHECK(y.euler_char() == x.euler_char() * bsum_signed);

        // independent dense convolution
        for (int p = 0; p <= y.dim(); ++p)
            for (int q = 0; q <= y.dim(); ++q) {
                long long expect = 0;
                for (std::size_t r = 0; r < betti.size(); ++r) {
                    int pp = p - static_cast<int>(r), qq = q - static_cast<int>(r);
                    long long xv = 0;
                    if (pp >= 0 && qq >= 0 && pp <= x.dim() && qq <= x.dim()) xv = *x.at(pp, qq);
                    expect += betti[r] * xv;
                }
                CHECK(y.at(p, q) == expect);
            }
    }
}

TEST_CASE("leray_hirsch unknown propagation") {
    HodgeDiamond x(1);
    x.set(0, 0, 1);  // (0,1), (1,0), (1,1) unknown
    HodgeDiamond y = leray_hirsch(x, {1, 2});
    CHECK(y.at(0, 0) == 1);              // only the known corner contributes
    CHECK(!y.at(1, 1).has_value());      // 2*x(0,0) + x(1,1): unknown term
    CHECK(!y.at(1, 0).has_value());      // x(1,0) unknown
    CHECK(y.at(2, 0) == 0);              // x(1,-1) = 0 outside square: known zero
    // zero Betti weight silences unknown terms
    HodgeDiamond z = leray_hirsch(x, {1, 0, 1});
    CHECK(z.at(2, 2) == 1);  // 0*x(1,1) contributes nothing, 1*x(0,0) = 1
}

TEST_CASE("leray_hirsch preserves Hodge symmetry") {
    std::uint64_t state = 5;
    for (int trial = 0; trial < 20; ++trial) {
        int dim = 1 + static_cast<int>(state % 3);
        HodgeDiamond x(dim);
        for (int p = 0; p <= dim; ++p)
            for (int q = p; q <= dim; ++q) {
                state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                long long v = static_cast<long long>(state >> 60);
                x.set(p, q, v);
                x.set(q, p, v);
            }
        HodgeDiamond y = leray_hirsch(x, {1, 2, 1});
        for (int p = 0; p <= y.dim(); ++p)
            for (int q = 0; q <= y.dim(); ++q) CHECK(y.at(p, q) == y.at(q, p));
    }
}

TEST_CASE("picard reports") {
    PicardReport e7 = picard_reports(PairDescriptor::evii(), {}, false);
    CHECK(e7.y_extra_rank == 6);
    CHECK(e7.rank_free_part == 1);
    CHECK(e7.c1_isomorphism);
    CHECK(e7.pic_y_split);  // H^{0,2} vanishes: 2 is not attainable
    CHECK(e7.torsion == "Gamma/[Gamma,Gamma]");

    PicardReport ci3 = picard_reports(PairDescriptor::ci(3), {0, 1}, false);
    CHECK(ci3.y_extra_rank == 0);
    CHECK(ci3.rank_free_part == 1);
    CHECK(!ci3.c1_isomorphism);

    PicardReport a22 = picard_reports(PairDescriptor::aiii(2, 2), {}, false);
    CHECK(!a22.rank_free_part.has_value());

    PicardReport bdi = picard_reports(PairDescriptor::bdi_even(4), {}, true);
    CHECK(!bdi.rank_free_part.has_value());
    CHECK(bdi.pic_y_split);  // assumed
    CHECK(bdi.torsion == "unknown");

    CHECK_THROWS_AS(picard_reports(PairDescriptor::ci(3), {7}, false), InvalidParabolicSubset);

    // extra rank equals the number of depth-1 points of the fiber BFS
    RootDatum e6 = build_root_datum(PairDescriptor::eiii());
    for (std::vector<int> subset : {std::vector<int>{}, {1, 2}, {1, 2, 3, 4, 5}}) {
        auto b = flag_poincare(e6, subset);
        PicardReport rep = picard_reports(PairDescriptor::eiii(), subset, true);
        long long depth1 = b.size() > 1 ? b[1] : 0;
        CHECK(rep.y_extra_rank == depth1);
    }
}
