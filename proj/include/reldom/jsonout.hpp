#pragma once

#include <json.hpp>
#include <string>

#include "reldom/approx.hpp"
#include "reldom/cover.hpp"
#include "reldom/tilting.hpp"

namespace reldom {

using Json = nlohmann::ordered_json;

inline Json dim_json(const DimValue& v) {
    if (v.is_finite()) return Json(v.n);
    return Json(v.str());  // "inf" or ">=cap"
}

template <class F>
Json module_brief(const ModPtr<F>& m) {
    Json j;
    j["name"] = m->name();
    j["dim"] = m->total_dim();
    j["dim_vector"] = m->dims();
    return j;
}

template <class F>
Json summand_list(const ModPtr<F>& m, std::uint64_t seed = 0) {
    Json arr = Json::array();
    for (const auto& fac : decompose(m, seed).factors) {
        Json j = module_brief<F>(fac.module);
        j["multiplicity"] = fac.multiplicity;
        arr.push_back(j);
    }
    return arr;
}

template <class F>
Json tilting_json(const TiltingReport<F>& r) {
    Json j;
    j["pd"] = dim_json(r.pd);
    j["id"] = dim_json(r.id);
    j["self_orthogonal"] = verdict_str(r.self_orthogonal);
    j["coresolution_of_A"] = verdict_str(r.coresolution);
    j["tilting"] = verdict_str(r.tilting);
    if (r.parameter) j["tilting_parameter"] = *r.parameter;
    j["cotilting"] = verdict_str(r.cotilting);
    if (r.co_parameter) j["cotilting_parameter"] = *r.co_parameter;
    return j;
}

template <class F>
Json pair_json(const PairReport<F>& r) {
    Json j;
    j["pd_Q"] = dim_json(r.pd_q);
    j["id_Q"] = dim_json(r.id_q);
    j["Q_self_orthogonal"] = verdict_str(r.q_self_orthogonal);
    j["faithful_dimension"] = dim_json(r.faithful);
    j["id_A"] = dim_json(r.id_regular);
    j["pd_DA"] = dim_json(r.pd_coregular);
    j["gorenstein"] = verdict_str(r.gorenstein);
    j["gldim"] = dim_json(r.gldim);
    if (r.n_lo) {
        j["n_min"] = *r.n_lo;
        j["n_max"] = dim_json(r.n_hi);
    }
    switch (r.cls) {
        case PairReport<F>::Cls::NotSelfOrthogonal: j["classification"] = "not self-orthogonal"; break;
        case PairReport<F>::Cls::NotGorenstein: j["classification"] = "not Gorenstein"; break;
        case PairReport<F>::Cls::EmptyRange: j["classification"] = "no valid n"; break;
        case PairReport<F>::Cls::GorensteinPair:
            j["classification"] = "relative Auslander-Gorenstein pair";
            break;
        case PairReport<F>::Cls::AuslanderPair: j["classification"] = "relative Auslander pair"; break;
        case PairReport<F>::Cls::Inconclusive: j["classification"] = "inconclusive at cap"; break;
    }
    return j;
}

template <class F>
Json approx_json(const ApproxSequence<F>& seq) {
    Json j;
    j["direction"] = seq.dominant ? "dominant" : "codominant";
    j["value"] = dim_json(seq.value);
    j["infinite_via_add"] = seq.infinite_via_add;
    Json steps = Json::array();
    for (const auto& s : seq.steps) {
        Json sj;
        sj["term_dim"] = s.term->total_dim();
        sj["term_dim_vector"] = s.term->dims();
        sj[seq.dominant ? "injective" : "surjective"] = seq.dominant ? s.injective : s.surjective;
        sj["next_dim_vector"] = s.next->dims();
        steps.push_back(sj);
    }
    j["steps"] = steps;
    return j;
}

}  // namespace reldom
