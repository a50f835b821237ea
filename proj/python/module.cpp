// Python bindings for the main operations: signature enumeration, closed
// forms, flag Poincare polynomials, vanishing verdicts and the Hodge-diamond
// calculator. Pairs are addressed as (type string, m, n), e.g. ("AIII", 2, 3)
// or ("EVII", 0, 0); rationals cross the boundary as (numerator, denominator)
// tuples.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetasig/hodge.hpp"

namespace py = pybind11;
using namespace thetasig;

namespace {

RootDatum datum_of(const std::string& type, int m, int n) {
    return build_root_datum(PairDescriptor::parse(type, m, n));
}

RatVec to_ratvec(const std::vector<std::pair<long long, long long>>& coords) {
    RatVec x;
    x.reserve(coords.size());
    for (auto [num, den] : coords) x.emplace_back(num, den);
    return x;
}

std::map<int, std::vector<int>> attainable(const std::string& type, int m, int n,
                                           std::optional<std::set<int>> rplus, int threads) {
    return attainable_signatures(datum_of(type, m, n), rplus, threads).by_r_plus;
}

std::vector<int> closed_form(const std::string& type, int m, int n, int r_plus,
                             const std::string& aiii_variant) {
    Aiii1Form form;
    if (aiii_variant == "mn+r-s")
        form = Aiii1Form::plain;
    else if (aiii_variant == "mn+r-s+2")
        form = Aiii1Form::shifted;
    else
        throw ParameterOutOfRange("aiii_variant must be 'mn+r-s' or 'mn+r-s+2'");
    auto set = closed_form_rminus(PairDescriptor::parse(type, m, n), r_plus, form);
    return set.by_r_plus.at(r_plus);
}

py::dict diamond_to_dict(const HodgeDiamond& d) {
    py::dict out;
    out["dim"] = d.dim();
    py::list entries;
    for (const auto& [pq, v] : d.known()) {
        py::dict e;
        e["p"] = pq.first;
        e["q"] = pq.second;
        e["value"] = v;
        entries.append(e);
    }
    out["entries"] = entries;
    return out;
}

HodgeDiamond diamond_from_dict(const py::dict& in) {
    HodgeDiamond d(in["dim"].cast<int>());
    if (in.contains("entries"))
        for (auto item : in["entries"].cast<py::list>()) {
            py::dict e = item.cast<py::dict>();
            if (py::isinstance<py::str>(e["value"])) continue;  // "unknown"
            d.set(e["p"].cast<int>(), e["q"].cast<int>(), e["value"].cast<long long>());
        }
    return d;
}

}  // namespace

PYBIND11_MODULE(thetasig, mod) {
    mod.doc() =
        "exact signature tables for theta-stable parabolic subalgebras of the "
        "irreducible Hermitian symmetric pairs, and the Hodge/Picard verdicts "
        "derived from them";

    mod.def("pair_names", [] {
        return std::vector<std::string>{"AIII", "BDI-even", "BDI-odd", "CI", "DIII", "EIII",
                                        "EVII"};
    });

    mod.def(
        "dim_complex",
        [](const std::string& type, int m, int n) {
            return PairDescriptor::parse(type, m, n).dim_complex();
        },
        py::arg("type"), py::arg("m") = 0, py::arg("n") = 0);

    mod.def(
        "real_rank",
        [](const std::string& type, int m, int n) {
            return PairDescriptor::parse(type, m, n).real_rank();
        },
        py::arg("type"), py::arg("m") = 0, py::arg("n") = 0);

    mod.def("attainable_signatures", &attainable, py::arg("type"), py::arg("m") = 0,
            py::arg("n") = 0, py::arg("r_plus_filter") = std::nullopt, py::arg("threads") = 1,
            "attainable (R+ -> sorted R- values) over nonzero x, by exhaustive "
            "face enumeration modulo W_K");

    mod.def("closed_form_rminus", &closed_form, py::arg("type"), py::arg("m") = 0,
            py::arg("n") = 0, py::arg("r_plus") = 0, py::arg("aiii_variant") = "mn+r-s");

    mod.def(
        "r_signature",
        [](const std::string& type, int m, int n,
           const std::vector<std::pair<long long, long long>>& coords) {
            Signature s = r_signature(datum_of(type, m, n), to_ratvec(coords));
            return std::make_pair(s.r_plus, s.r_minus);
        },
        py::arg("type"), py::arg("m"), py::arg("n"), py::arg("coords"),
        "signature of one point of t_R; coordinates are (num, den) tuples");

    mod.def(
        "sample_signatures",
        [](const std::string& type, int m, int n, int count, std::uint64_t seed) {
            std::vector<std::pair<int, int>> out;
            for (const auto& s : sample_signatures(datum_of(type, m, n), count, seed))
                out.emplace_back(s.r_plus, s.r_minus);
            return out;
        },
        py::arg("type"), py::arg("m"), py::arg("n"), py::arg("count"), py::arg("seed"));

    mod.def(
        "flag_poincare",
        [](const std::string& type, int m, int n, const std::vector<int>& subset_labels) {
            RootDatum d = datum_of(type, m, n);
            std::vector<int> subset;
            for (int label : subset_labels) subset.push_back(label - 1);
            return flag_poincare(d, subset);
        },
        py::arg("type"), py::arg("m"), py::arg("n"), py::arg("parabolic"),
        "fiber Betti numbers (b_0, b_2, ...); the parabolic subset uses 1-based "
        "simple-root labels");

    mod.def(
        "coset_count",
        [](const std::string& type, int m, int n) {
            RootDatum d = datum_of(type, m, n);
            std::vector<int> gens(d.rank());
            for (int i = 0; i < d.rank(); ++i) gens[i] = i;
            return orbit_bfs(d, gens, d.fundamental_coweights[d.noncompact_simple]).size();
        },
        py::arg("type"), py::arg("m") = 0, py::arg("n") = 0, "|W / W_K|");

    auto verdict_str = [](const VanishingVerdict& v) { return std::string(to_string(v.value)); };
    mod.def(
        "vanish_h0q",
        [verdict_str](const std::string& type, int m, int n, int q) {
            return verdict_str(vanish_h0q(PairDescriptor::parse(type, m, n), q));
        },
        py::arg("type"), py::arg("m"), py::arg("n"), py::arg("q"));
    mod.def(
        "vanish_h1q",
        [verdict_str](const std::string& type, int m, int n, int q) {
            return verdict_str(vanish_h1q(PairDescriptor::parse(type, m, n), q));
        },
        py::arg("type"), py::arg("m"), py::arg("n"), py::arg("q"));
    mod.def(
        "h11_structure",
        [verdict_str](const std::string& type, int m, int n) {
            return verdict_str(h11_structure(PairDescriptor::parse(type, m, n)));
        },
        py::arg("type"), py::arg("m") = 0, py::arg("n") = 0);

    mod.def(
        "leray_hirsch",
        [](const py::dict& diamond, const std::vector<long long>& fiber_betti) {
            return diamond_to_dict(leray_hirsch(diamond_from_dict(diamond), fiber_betti));
        },
        py::arg("x_diamond"), py::arg("fiber_betti"),
        "convolve a base Hodge diamond {'dim': d, 'entries': [{'p','q','value'}]} "
        "with fiber Betti numbers");

    mod.def(
        "picard_report",
        [](const std::string& type, int m, int n, const std::vector<int>& subset_labels,
           bool assume_h02_zero) {
            std::vector<int> subset;
            for (int label : subset_labels) subset.push_back(label - 1);
            PicardReport r =
                picard_reports(PairDescriptor::parse(type, m, n), subset, assume_h02_zero);
            py::dict out;
            out["rank_free_part"] =
                r.rank_free_part ? py::cast(*r.rank_free_part) : py::cast("unknown");
            out["c1_isomorphism"] = r.c1_isomorphism;
            out["torsion"] = r.torsion;
            out["pic_y_extra_rank"] = r.y_extra_rank;
            out["pic_y_split"] = r.pic_y_split;
            out["hypothesis"] = r.reason;
            return out;
        },
        py::arg("type"), py::arg("m"), py::arg("n"), py::arg("parabolic"),
        py::arg("assume_h02_zero") = false);

    py::register_exception<ParameterOutOfRange>(mod, "ParameterOutOfRange", PyExc_ValueError);
    py::register_exception<NotTabulated>(mod, "NotTabulated", PyExc_ValueError);
    py::register_exception<InvalidParabolicSubset>(mod, "InvalidParabolicSubset",
                                                   PyExc_ValueError);
    py::register_exception<ConstraintViolation>(mod, "ConstraintViolation", PyExc_ValueError);
}
