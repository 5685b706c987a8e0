#include "skewcalc/oracle.hpp"
#include "skewcalc/pipeline.hpp"
#include "skewcalc/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace skewcalc;

namespace {

RationalCurve curve_from_lists(int ambient, const std::vector<std::vector<std::string>>& coords) {
    std::vector<QPoly> qs;
    for (const auto& cj : coords) {
        std::vector<Rat> cs;
        for (const auto& v : cj) cs.push_back(parse_rational(v));
        qs.emplace_back(std::move(cs));
    }
    return RationalCurve(ambient, std::move(qs));
}

GrassContext ctx_of(int n, int N) { return GrassContext(n, N); }

std::string json_str(const json& j) { return j.dump(2); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact intersection-theory engine for skew curves and line families";

    py::register_exception<precondition_error>(m, "PreconditionError");
    py::register_exception<consistency_error>(m, "ConsistencyError");

    // formulas and the symbolic pipeline
    m.def("nonskew_count", [](long d, long g) { return nonskew_count(d, g).str(); },
          py::arg("degree"), py::arg("genus"),
          "number of nonskew ordered tangent-line pairs of a smooth degree-d genus-g curve in P^4");
    m.def("nonskew_count_symbolic",
          [] { return nonskew_count(CurveInvariants::symbolic(4)).str(); });
    m.def("dagger_intersection",
          [] { return dagger_intersection(CurveInvariants::symbolic(4)).str(); });
    m.def("excess_term", [] { return excess_term(CurveInvariants::symbolic(4)).str(); });
    m.def("p3_intersection", [] {
        auto [a, b] = p3_intersection();
        return std::make_pair(a.str(), b.str());
    });
    m.def("p4_scroll_count", [] { return p4_scroll_count().str(); });
    m.def("scroll_degree", &scroll_degree, py::arg("d1"), py::arg("d2"));
    m.def("dim_Dr", &dim_Dr, py::arg("r"), py::arg("n"), py::arg("N"));
    m.def("msdim_bounds", &msdim_bounds, py::arg("n"));
    m.def("castelnuovo_bound", &castelnuovo_bound, py::arg("degree"), py::arg("ambient"));
    m.def("classify_p4", [] {
        Classification c = classify_p4();
        return py::make_tuple(c.candidates, c.final_list);
    });
    m.def("degree_ledger", [](long d, long g) {
        DegreeLedger L = p4_degree_ledger(CurveInvariants::numeric(4, d, g));
        py::dict out;
        out["c1_TD1tilde"] = L.c1_TD1tilde_restricted.constant_term().str();
        out["c1_TB"] = L.c1_TB_restricted.constant_term().str();
        out["c1_T_delta"] = L.c1_T_delta.constant_term().str();
        out["c1_T_gamma"] = L.c1_T_gamma_restricted.constant_term().str();
        out["c1_TBdagger"] = L.c1_TBdagger_restricted.constant_term().str();
        out["c1_TD1dagger"] = L.c1_TD1dagger_restricted.constant_term().str();
        return out;
    }, py::arg("degree"), py::arg("genus"));

    // Schubert calculus
    m.def("pieri", [](const std::vector<int>& lam, int i, int n, int N) {
        ChowClass c = pieri(Partition(lam), i, ctx_of(n, N));
        std::vector<std::pair<std::vector<int>, std::string>> out;
        for (const auto& [p, coeff] : c.terms()) out.emplace_back(p.parts(), coeff.str());
        return out;
    }, py::arg("partition"), py::arg("i"), py::arg("n"), py::arg("N"));
    m.def("schubert_product", [](const std::vector<int>& a, const std::vector<int>& b, int n, int N) {
        GrassContext ctx = ctx_of(n, N);
        ChowClass c = product(ChowClass::sigma(ctx, Partition(a)), ChowClass::sigma(ctx, Partition(b)));
        std::vector<std::pair<std::vector<int>, std::string>> out;
        for (const auto& [p, coeff] : c.terms()) out.emplace_back(p.parts(), coeff.str());
        return out;
    }, py::arg("a"), py::arg("b"), py::arg("n"), py::arg("N"));
    m.def("dual_partition", [](const std::vector<int>& a, int n, int N) {
        return Partition(a).dual(ctx_of(n, N)).parts();
    }, py::arg("partition"), py::arg("n"), py::arg("N"));

    // oracle
    m.def("count_nonskew_pairs", [](int ambient, const std::vector<std::vector<std::string>>& coords,
                                    unsigned long long seed) {
        PairCount pc = count_nonskew_pairs_p4(curve_from_lists(ambient, coords), seed);
        py::dict out;
        out["ordered_count"] = pc.ordered_count;
        out["saturation_exponents"] = pc.saturation_exponents;
        out["seeds_agree"] = pc.seeds_agree;
        out["json"] = json_str(to_json(pc));
        return out;
    }, py::arg("ambient"), py::arg("coords"), py::arg("seed") = kDefaultSeed);
    m.def("tangent_meet", [](int ambient, const std::vector<std::vector<std::string>>& coords,
                             const std::string& t, const std::string& s) {
        return tangent_meet(curve_from_lists(ambient, coords), parse_rational(t), parse_rational(s));
    }, py::arg("ambient"), py::arg("coords"), py::arg("t"), py::arg("s"));
    m.def("twisted_cubic_identity", [] {
        FamilyDeterminant d = twisted_cubic_identity();
        return py::make_tuple(d.constant.str(), d.exponent);
    });
    m.def("scroll_skew_test", [](int ambient, const std::vector<std::vector<std::string>>& c1,
                                 const std::vector<std::vector<std::string>>& c2,
                                 unsigned long long seed) {
        ScrollSpec spec{curve_from_lists(ambient, c1), curve_from_lists(ambient, c2)};
        ScrollTest st = scroll_skew_test(spec, seed);
        py::dict out;
        out["skew"] = st.skew;
        out["json"] = json_str(to_json(st));
        return out;
    }, py::arg("ambient"), py::arg("curve1"), py::arg("curve2"), py::arg("seed") = kDefaultSeed);
    m.def("veronese_sample_test", [](int samples, unsigned long long seed) {
        return veronese_sample_test(samples, seed);
    }, py::arg("samples") = 100, py::arg("seed") = kDefaultSeed);
    m.def("contact_order_test", [](int ambient, const std::vector<std::vector<std::string>>& coords,
                                   const std::string& t0) {
        ContactOrderReport r = contact_order_test(curve_from_lists(ambient, coords), parse_rational(t0));
        return py::make_tuple(r.matched_orders, r.third_order_obstructed);
    }, py::arg("ambient"), py::arg("coords"), py::arg("t0"));

    // reports
    m.def("count_report", [](int ambient, long d, long g, bool emit) {
        return json_str(count_report(ambient, d, g, emit));
    }, py::arg("ambient"), py::arg("degree"), py::arg("genus"), py::arg("emit_intermediates") = false);
    m.def("classify_report", [](bool show) { return json_str(classify_report(show)); },
          py::arg("show_candidates") = true);

    m.attr("DEFAULT_SEED") = py::int_(kDefaultSeed);
}
