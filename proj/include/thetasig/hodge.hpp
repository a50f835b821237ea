#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thetasig/signatures.hpp"

namespace thetasig {

// The signature method only ever proves vanishing (or the specific
// H^{1,1} = C structure); everything else stays Unconstrained.
enum class Verdict { Zero, IsomorphicToC, Unconstrained };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Zero: return "zero";
        case Verdict::IsomorphicToC: return "isomorphic-to-C";
        case Verdict::Unconstrained: return "unconstrained";
    }
    return "?";
}

struct VanishingVerdict {
    Verdict value = Verdict::Unconstrained;
    std::string reason;
};

// Attainable r_minus values at r_plus = 0 and 1 for one pair; the exhaustive
// enumerator feeds every verdict below.
struct SignatureProfile {
    PairDescriptor desc;
    std::set<int> r0, r1;

    static SignatureProfile compute(const RootDatum& datum);
    static SignatureProfile compute(const PairDescriptor& desc);
};

// H^{0,q}(X_Gamma) = 0 for every torsion-free uniform lattice iff q is not an
// attainable r_minus at r_plus = 0. Requires q >= 1.
VanishingVerdict vanish_h0q(const SignatureProfile& prof, int q);
VanishingVerdict vanish_h0q(const PairDescriptor& desc, int q);

// H^{1,q}(X_Gamma) = 0 iff q-1 unattainable at r_plus = 0 and q unattainable
// at r_plus = 1. Requires q >= 2.
VanishingVerdict vanish_h1q(const SignatureProfile& prof, int q);
VanishingVerdict vanish_h1q(const PairDescriptor& desc, int q);

// H^{1,1}(X_Gamma) = C exactly when the signature (1,1) is unattainable.
VanishingVerdict h11_structure(const SignatureProfile& prof);
VanishingVerdict h11_structure(const PairDescriptor& desc);

// Partial Hodge table: (p,q) inside the square [0,dim]^2 is either a known
// nonnegative integer or unknown; everything outside the square is 0.
class HodgeDiamond {
public:
    HodgeDiamond() = default;
    explicit HodgeDiamond(int dim);

    int dim() const { return dim_; }
    void set(int p, int q, long long value);

    // known value (0 outside the square), or nullopt for unknown
    std::optional<long long> at(int p, int q) const;
    bool fully_known() const;
    long long euler_char() const;  // requires fully_known()

    const std::map<std::pair<int, int>, long long>& known() const { return known_; }

    // Schema: {"dim": int, "entries": [{"p": int, "q": int,
    // "value": int | "unknown"}]}. Unlisted entries default to unknown inside
    // the square; serialization lists known entries sorted by (p, q).
    static HodgeDiamond from_json_text(const std::string& text);
    std::string to_json_text() const;

    friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

private:
    int dim_ = 0;
    std::map<std::pair<int, int>, long long> known_;
};

// out(p,q) = sum_r fiber_betti[r] * x(p-r, q-r). A term with zero Betti
// weight contributes 0 even when the diamond entry is unknown; any unknown
// term with nonzero weight makes the output entry unknown.
HodgeDiamond leray_hirsch(const HodgeDiamond& x, const std::vector<long long>& fiber_betti);

struct PicardReport {
    std::optional<int> rank_free_part;         // nullopt = unknown
    bool c1_isomorphism = false;
    std::string torsion;                       // "Gamma/[Gamma,Gamma]" or "unknown"
    int y_extra_rank = 0;                      // rank Pic(F) added by the fiber
    bool pic_y_split = false;                  // Pic(Y) = Pic(X) + Z^r established
    std::string reason;
};

PicardReport picard_reports(const PairDescriptor& desc, const std::vector<int>& parabolic_subset,
                            bool assume_h02_zero);
PicardReport picard_reports(const SignatureProfile& prof,
                            const std::vector<int>& parabolic_subset, bool assume_h02_zero);

}  // namespace thetasig
