#include "skewcalc/report.hpp"

#include <sstream>

namespace skewcalc {

namespace {

json partition_json(const Partition& p) {
    json a = json::array();
    for (int v : p.parts()) a.push_back(v);
    return a;
}

std::string qpoly_str(const QPoly& p, const std::string& var = "t") { return p.str(var); }

} // namespace

json to_json(const ChowClass& c) {
    json j;
    j["ctx"] = {c.ctx().n, c.ctx().N};
    json terms = json::array();
    for (const auto& [p, coeff] : c.terms()) {
        json t;
        t["partition"] = partition_json(p);
        t["coeff"] = coeff.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

json to_json(const TensorClass& t) {
    json terms = json::array();
    for (const auto& [k, coeff] : t.terms()) {
        json e;
        e["a"] = partition_json(k.first);
        e["b"] = partition_json(k.second);
        e["coeff"] = coeff.str();
        terms.push_back(std::move(e));
    }
    return terms;
}

json to_json(const EClass& e) {
    json terms = json::array();
    for (const auto& [k, coeff] : e.terms()) {
        json t;
        t["partition"] = partition_json(k.first);
        t["zeta"] = k.second;
        t["coeff"] = coeff.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

json to_json(const BlowupClass& b) {
    json j;
    j["pullback"] = to_json(b.pullback());
    j["exceptional"] = to_json(b.exceptional());
    return j;
}

json to_json(const PairCount& pc) {
    json j;
    j["ordered_count"] = pc.ordered_count;
    json clusters = json::array();
    for (const auto& cl : pc.clusters) {
        json c;
        c["t_factor"] = qpoly_str(cl.t_factor);
        c["s_numerator"] = qpoly_str(cl.s_num);
        c["s_denominator"] = qpoly_str(cl.s_den);
        c["multiplicity"] = cl.multiplicity;
        c["count"] = cl.count;
        clusters.push_back(std::move(c));
    }
    j["solutions"] = std::move(clusters);
    json diag;
    diag["saturation_exponents"] = pc.saturation_exponents;
    diag["resultant_degree"] = pc.resultant_degree;
    diag["seed"] = pc.seed;
    diag["seed_b"] = pc.seed_b;
    diag["seeds_agree"] = pc.seeds_agree;
    diag["positive_dimensional"] = pc.positive_dimensional;
    diag["uncertified_degree"] = pc.uncertified_degree;
    j["diagnostics"] = std::move(diag);
    return j;
}

json to_json(const ScrollTest& st) {
    json j;
    j["ambient"] = st.ambient;
    j["skew"] = st.skew;
    if (st.det) {
        json d;
        d["identically_zero"] = st.det->identically_zero;
        d["saturation_exponent"] = st.det->exponent;
        d["expected_exponent"] = st.det->expected_exponent;
        d["constant"] = st.det->is_constant ? st.det->constant.str() : std::string("-");
        j["determinant"] = std::move(d);
    }
    if (st.witness) {
        json w;
        w["t"] = to_string(st.witness->first);
        w["s_polynomial"] = qpoly_str(st.witness->second, "s");
        j["witness"] = std::move(w);
    }
    if (st.counts) j["pairs"] = to_json(*st.counts);
    return j;
}

RationalCurve curve_from_json(const json& j) {
    if (!j.contains("ambient") || !j.contains("coords"))
        throw std::invalid_argument("curve file: need 'ambient' and 'coords'");
    int ambient = j["ambient"].get<int>();
    std::vector<QPoly> coords;
    for (const auto& cj : j["coords"]) {
        std::vector<Rat> cs;
        for (const auto& v : cj) cs.push_back(parse_rational(v.get<std::string>()));
        coords.emplace_back(std::move(cs));
    }
    return RationalCurve(ambient, std::move(coords));
}

ScrollSpec scroll_from_json(const json& j) {
    if (!j.contains("ambient") || !j.contains("curve1") || !j.contains("curve2"))
        throw std::invalid_argument("scroll file: need 'ambient', 'curve1' and 'curve2'");
    json c1;
    c1["ambient"] = j["ambient"];
    c1["coords"] = j["curve1"];
    json c2;
    c2["ambient"] = j["ambient"];
    c2["coords"] = j["curve2"];
    return ScrollSpec{curve_from_json(c1), curve_from_json(c2)};
}

namespace {

json p3_count_report(long d, long g, bool emit) {
    json j;
    auto [A, B] = p3_intersection();
    P3Conclusion con = p3_conclusion();
    json anchors;
    anchors["Eq_tilinter"] = {{"sbar21_zeta3", A.str()}, {"sbar22_zeta2", B.str()}};
    anchors["multiplicity"] = con.multiplicity.str();
    anchors["genus_obstruction"] = con.residual.second.str();
    if (emit) {
        GrassContext ctx(2, 4);
        anchors["Lem_cDr_D1"] = to_json(class_D1(ctx));
        anchors["Lem_tilD1"] = to_json(class_D1_tilde(ctx).cls);
        anchors["Lem_tilgam"] = to_json(class_Gamma_tilde(ctx));
        anchors["Eq_gamgeo3"] = to_json(class_Gamma_tilde_cap_E(ctx, ParamPoly::dv(), ParamPoly::g()));
    }
    j["anchors"] = std::move(anchors);
    Int dv = 2 * Int(d) + 2 * Int(g) - 2;
    j["coefficients"] = {A.eval(d, g).str(), B.eval(d, g).str()};
    Int obstruction = con.residual.second.eval(d, g);
    j["genus_zero_consistent"] = (obstruction == 0);
    j["note"] = "a one-parameter family of class dv*sigma(2,1) with pairwise disjoint lines forces g = 0";
    j["dv"] = dv.str();
    return j;
}

json p4_count_report(long d, long g, bool emit) {
    json j;
    CurveInvariants X = CurveInvariants::numeric(4, d, g);
    CurveInvariants S = CurveInvariants::symbolic(4);
    ParamPoly count_sym = nonskew_count(S);
    Int count = nonskew_count(d, g);
    json anchors;
    DegreeLedger L = p4_degree_ledger(S);
    anchors["Eq_tantilD"] = L.c1_TD1tilde_restricted.str();
    anchors["Eq_chtanB"] = L.c1_TB_restricted.str();
    anchors["Eq_tancur"] = L.c1_T_delta.str();
    anchors["Eq_tangam"] = L.c1_T_gamma_restricted.str();
    anchors["Eq_tanB"] = L.c1_TBdagger_restricted.str();
    anchors["Eq_tanD"] = L.c1_TD1dagger_restricted.str();
    anchors["Eq_daggerint"] = dagger_intersection(S).str();
    anchors["Eq_excterm"] = excess_term(S).str();
    anchors["Lem_length"] = count_sym.str();
    if (emit) {
        GrassContext ctx(2, 5);
        anchors["Lem_cDr_D1"] = to_json(class_D1(ctx));
        anchors["Lem_tilD1"] = to_json(class_D1_tilde(ctx).cls);
        anchors["Lem_tilgam"] = to_json(class_Gamma_tilde(ctx));
        anchors["Eq_gamgeo4"] = to_json(class_Gamma_tilde_cap_E(ctx, ParamPoly::dv(), ParamPoly::g()));
        P4Rings R = build_p4_rings();
        anchors["Eq_Hch"] = hom_bundle_chern(R)[1].str();
        anchors["Eq_hatX"] = hat_gamma_class(R, X).str();
        anchors["Eq_tildeX"] = tilde_delta_gamma_class(R, X).str();
        anchors["Eq_TtilD"] = c1_T_D1_tilde(R).base.str() + " - jD*(2)";
        anchors["scroll_count"] = p4_scroll_count().str();
    }
    j["anchors"] = std::move(anchors);
    j["count_symbolic"] = count_sym.str();
    j["count"] = count.str();
    j["skew"] = (count == 0);
    return j;
}

} // namespace

json count_report(int ambient, long d, long g, bool emit_intermediates) {
    json j;
    j["schema"] = 1;
    j["command"] = "count";
    j["ambient"] = ambient;
    j["degree"] = d;
    j["genus"] = g;
    json body = ambient == 3 ? p3_count_report(d, g, emit_intermediates)
                             : p4_count_report(d, g, emit_intermediates);
    j.update(body);
    return j;
}

json classify_report(bool show_candidates) {
    Classification c = classify_p4();
    json j;
    j["schema"] = 1;
    j["command"] = "classify";
    auto pairs = [](const std::vector<std::pair<long, long>>& v) {
        json a = json::array();
        for (const auto& [g, d] : v) a.push_back({{"genus", g}, {"degree", d}});
        return a;
    };
    if (show_candidates) j["candidates"] = pairs(c.candidates);
    if (show_candidates) {
        json ex = json::array();
        for (const auto& [g, d] : c.excluded) {
            json e = {{"genus", g}, {"degree", d}};
            e["reason"] = "genus exceeds the Castelnuovo bound " +
                          std::to_string(castelnuovo_bound(d, 4)) + " for degree " +
                          std::to_string(d) + " in P^4";
            ex.push_back(std::move(e));
        }
        j["excluded"] = std::move(ex);
    }
    j["classification"] = pairs(c.final_list);
    return j;
}

} // namespace skewcalc
