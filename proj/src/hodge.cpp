#include "thetasig/hodge.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace thetasig {

namespace {

std::string join(const std::set<int>& s) {
    std::ostringstream os;
    bool first = true;
    for (int v : s) {
        if (!first) os << " ";
        os << v;
        first = false;
    }
    return first ? "(empty)" : os.str();
}

}  // namespace

SignatureProfile SignatureProfile::compute(const RootDatum& datum) {
    SignatureProfile p;
    p.desc = datum.descriptor;
    SignatureSet set = attainable_signatures(datum, std::set<int>{0, 1});
    if (auto it = set.by_r_plus.find(0); it != set.by_r_plus.end())
        p.r0.insert(it->second.begin(), it->second.end());
    if (auto it = set.by_r_plus.find(1); it != set.by_r_plus.end())
        p.r1.insert(it->second.begin(), it->second.end());
    return p;
}

SignatureProfile SignatureProfile::compute(const PairDescriptor& desc) {
    return compute(build_root_datum(desc));
}

VanishingVerdict vanish_h0q(const SignatureProfile& prof, int q) {
    if (q < 1) throw ParameterOutOfRange("vanish_h0q requires q >= 1");
    if (!prof.r0.count(q))
        return {Verdict::Zero, "q=" + std::to_string(q) +
                                   " is not attainable as R- with R+=0 (attainable: " +
                                   join(prof.r0) + ")"};
    return {Verdict::Unconstrained,
            "q=" + std::to_string(q) + " is attainable as R- with R+=0"};
}

VanishingVerdict vanish_h0q(const PairDescriptor& desc, int q) {
    return vanish_h0q(SignatureProfile::compute(desc), q);
}

VanishingVerdict vanish_h1q(const SignatureProfile& prof, int q) {
    if (q < 2) throw ParameterOutOfRange("vanish_h1q requires q >= 2");
    const bool q1_r0 = prof.r0.count(q - 1) != 0;
    const bool q_r1 = prof.r1.count(q) != 0;
    if (!q1_r0 && !q_r1)
        return {Verdict::Zero, "neither (R+,R-)=(0," + std::to_string(q - 1) + ") nor (1," +
                                   std::to_string(q) + ") is attainable"};
    std::string why = q1_r0 ? "(R+,R-)=(0," + std::to_string(q - 1) + ") is attainable"
                            : "(R+,R-)=(1," + std::to_string(q) + ") is attainable";
    return {Verdict::Unconstrained, why};
}

VanishingVerdict vanish_h1q(const PairDescriptor& desc, int q) {
    return vanish_h1q(SignatureProfile::compute(desc), q);
}

VanishingVerdict h11_structure(const SignatureProfile& prof) {
    if (!prof.r1.count(1))
        return {Verdict::IsomorphicToC, "(R+,R-)=(1,1) is not attainable"};
    return {Verdict::Unconstrained, "(R+,R-)=(1,1) is attainable"};
}

VanishingVerdict h11_structure(const PairDescriptor& desc) {
    return h11_structure(SignatureProfile::compute(desc));
}

HodgeDiamond::HodgeDiamond(int dim) : dim_(dim) {
    if (dim < 0) throw DimensionMismatch("negative diamond dimension");
}

void HodgeDiamond::set(int p, int q, long long value) {
    if (p < 0 || q < 0 || p > dim_ || q > dim_)
        throw DimensionMismatch("entry (" + std::to_string(p) + "," + std::to_string(q) +
                                ") outside the [0," + std::to_string(dim_) + "]^2 square");
    if (value < 0) throw SchemaError("negative Hodge number");
    known_[{p, q}] = value;
}

std::optional<long long> HodgeDiamond::at(int p, int q) const {
    if (p < 0 || q < 0 || p > dim_ || q > dim_) return 0;
    auto it = known_.find({p, q});
    if (it == known_.end()) return std::nullopt;
    return it->second;
}

bool HodgeDiamond::fully_known() const {
    return known_.size() == static_cast<std::size_t>(dim_ + 1) * (dim_ + 1);
}

long long HodgeDiamond::euler_char() const {
    if (!fully_known()) throw Error("euler_char on a diamond with unknown entries");
    long long chi = 0;
    for (const auto& [pq, v] : known_) chi += ((pq.first + pq.second) % 2 ? -v : v);
    return chi;
}

HodgeDiamond HodgeDiamond::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw SchemaError("diamond JSON needs an integer \"dim\"");
    const long long dim = j["dim"].get<long long>();
    if (dim < 0) throw DimensionMismatch("negative diamond dimension");
    HodgeDiamond d(static_cast<int>(dim));
    if (j.contains("entries")) {
        if (!j["entries"].is_array()) throw SchemaError("\"entries\" must be an array");
        for (const auto& e : j["entries"]) {
            if (!e.is_object() || !e.contains("p") || !e.contains("q") || !e.contains("value") ||
                !e["p"].is_number_integer() || !e["q"].is_number_integer())
                throw SchemaError("entry needs integer p, q and a value");
            const int p = e["p"].get<int>(), q = e["q"].get<int>();
            if (e["value"].is_string()) {
                if (e["value"].get<std::string>() != "unknown")
                    throw SchemaError("entry value must be an integer or \"unknown\"");
                if (p < 0 || q < 0 || p > d.dim() || q > d.dim())
                    throw DimensionMismatch("entry outside the diamond square");
                continue;  // unknown is the default inside the square
            }
            if (!e["value"].is_number_integer())
                throw SchemaError("entry value must be an integer or \"unknown\"");
            const long long v = e["value"].get<long long>();
            if (v < 0) throw SchemaError("negative Hodge number");
            d.set(p, q, v);
        }
    }
    return d;
}

std::string HodgeDiamond::to_json_text() const {
    nlohmann::ordered_json j;
    j["dim"] = dim_;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [pq, v] : known_) {
        nlohmann::ordered_json e;
        e["p"] = pq.first;
        e["q"] = pq.second;
        e["value"] = v;
        j["entries"].push_back(std::move(e));
    }
    return j.dump(2);
}

HodgeDiamond leray_hirsch(const HodgeDiamond& x, const std::vector<long long>& fiber_betti) {
    if (fiber_betti.empty()) throw DimensionMismatch("empty fiber Betti list");
    for (long long b : fiber_betti)
        if (b < 0) throw DimensionMismatch("negative fiber Betti number");
    const int fdim = static_cast<int>(fiber_betti.size()) - 1;
    HodgeDiamond out(x.dim() + fdim);
    for (int p = 0; p <= out.dim(); ++p)
        for (int q = 0; q <= out.dim(); ++q) {
            long long sum = 0;
            bool unknown = false;
            for (int r = 0; r <= fdim; ++r) {
                if (fiber_betti[r] == 0) continue;
                auto term = x.at(p - r, q - r);
                if (!term) {
                    unknown = true;
                    break;
                }
                sum += fiber_betti[r] * *term;
            }
            if (!unknown) out.set(p, q, sum);
        }
    return out;
}

namespace {

// rank-1 and c1-isomorphism coverage of the Picard statement, by type
void picard_case_list(const PairDescriptor& d, std::optional<int>& rank, bool& c1) {
    rank = std::nullopt;
    c1 = false;
    switch (d.type) {
        case CartanType::AIII:
            if (d.m >= 2 && !(d.m == 2 && d.n == 2)) rank = 1;
            c1 = d.m >= 3;
            break;
        case CartanType::CI:
            if (d.n >= 3) rank = 1;
            c1 = d.n >= 4;
            break;
        case CartanType::DIII:
            if (d.n >= 5) rank = 1;
            c1 = d.n >= 4;
            break;
        case CartanType::EIII:
        case CartanType::EVII:
            rank = 1;
            c1 = true;
            break;
        case CartanType::BDI_even:
        case CartanType::BDI_odd:
            break;  // signatures (1,1) exist; nothing is claimed
    }
}

}  // namespace

PicardReport picard_reports(const SignatureProfile& prof,
                            const std::vector<int>& parabolic_subset, bool assume_h02_zero) {
    const PairDescriptor& desc = prof.desc;
    RootDatum datum = build_root_datum(desc);
    std::set<int> compact(datum.compact_simple_indices.begin(),
                          datum.compact_simple_indices.end());
    std::set<int> subset(parabolic_subset.begin(), parabolic_subset.end());
    if (subset.size() != parabolic_subset.size())
        throw InvalidParabolicSubset("duplicate index in parabolic subset");
    for (int i : subset)
        if (!compact.count(i))
            throw InvalidParabolicSubset("index " + std::to_string(i) +
                                         " is not a compact simple root");

    PicardReport rep;
    rep.y_extra_rank = static_cast<int>(compact.size() - subset.size());
    picard_case_list(desc, rep.rank_free_part, rep.c1_isomorphism);
    rep.torsion = desc.real_rank() >= 3 ? "Gamma/[Gamma,Gamma]" : "unknown";

    if (assume_h02_zero) {
        rep.pic_y_split = true;
        rep.reason = "H^{0,2}(X)=0 assumed";
    } else {
        VanishingVerdict v = vanish_h0q(prof, 2);
        rep.pic_y_split = v.value == Verdict::Zero;
        rep.reason = rep.pic_y_split ? "H^{0,2}(X)=0 derived: " + v.reason
                                     : "H^{0,2}(X)=0 not established: " + v.reason;
    }
    return rep;
}

PicardReport picard_reports(const PairDescriptor& desc, const std::vector<int>& parabolic_subset,
                            bool assume_h02_zero) {
    return picard_reports(SignatureProfile::compute(desc), parabolic_subset, assume_h02_zero);
}

}  // namespace thetasig
