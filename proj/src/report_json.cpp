#include "lisom/report_json.hpp"

namespace lisom {

Json factors_json(const FactoredCharPoly& F) {
    Json arr = Json::array();
    for (const auto& f : F.factors()) {
        Json e;
        e["poly"] = f.poly.to_string();
        Json coeffs = Json::array();
        for (const auto& c : f.poly.coeffs()) coeffs.push_back(c.str());
        e["coeffs"] = std::move(coeffs);
        e["multiplicity"] = f.multiplicity;
        if (f.conductor)
            e["conductor"] = *f.conductor;
        else
            e["conductor"] = nullptr;
        e["irreducibility"] = f.irreducibility_verified ? "verified" : "asserted";
        arr.push_back(std::move(e));
    }
    return arr;
}

Json parity_json(const ParityVector& v) {
    Json arr = Json::array();
    for (size_t i = 0; i < v.size(); ++i) arr.push_back(v.get(i));
    return arr;
}

Json sh_json(const ShGroup& sh) {
    Json j;
    j["rank"] = sh.rank();
    Json classes = Json::array();
    for (const auto& cls : sh.classes) classes.push_back(cls);
    j["classes"] = std::move(classes);
    Json basis = Json::array();
    for (const auto& b : sh.basis) basis.push_back(parity_json(b));
    j["basis"] = std::move(basis);
    Json edges = Json::array();
    for (const auto& e : sh.edges) {
        Json je;
        je["i"] = e.i;
        je["j"] = e.j;
        Json primes = Json::array();
        Json factors = Json::array();
        for (const auto& w : e.witnesses) {
            primes.push_back(w.prime == 0 ? std::string("infinity") : w.prime.str());
            Json wf;
            wf["prime"] = w.prime == 0 ? std::string("infinity") : w.prime.str();
            wf["common_factors"] = w.common_factors;
            factors.push_back(std::move(wf));
        }
        je["primes"] = std::move(primes);
        je["witnesses"] = std::move(factors);
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    j["unresolved"] = sh.unresolved;
    j["upper_bound_only"] = sh.upper_bound_only;
    return j;
}

Json decision_json(const DecisionReport& rep) {
    Json j;
    j["verdict"] = verdict_name(rep.verdict);
    j["rule"] = rep.rule;
    j["trust"] = rep.trust == Trust::Verified ? "verified" : "asserted";
    Json c1;
    c1["pass"] = rep.c1.pass;
    c1["at_one"] = rep.c1.at_one.str();
    c1["at_minus_one"] = rep.c1.at_minus_one.str();
    c1["signed_product"] = rep.c1.signed_product.str();
    j["c1"] = std::move(c1);
    Json c2;
    c2["pass"] = rep.c2.pass;
    c2["m"] = rep.c2.m;
    c2["deg"] = rep.c2.deg;
    c2["sum_ok"] = rep.c2.sum_ok;
    c2["mod8_ok"] = rep.c2.mod8_ok;
    c2["r_bound_ok"] = rep.c2.r_bound_ok;
    c2["s_bound_ok"] = rep.c2.s_bound_ok;
    c2["parity_ok"] = rep.c2.parity_ok;
    j["c2"] = std::move(c2);
    j["sh"] = rep.sh ? sh_json(*rep.sh) : Json(nullptr);
    if (rep.epsilon) {
        Json eps;
        Json per = Json::array();
        for (const auto& [p, vec] : rep.epsilon->per_prime) {
            Json e;
            e["prime"] = p.str();
            e["vector"] = parity_json(vec);
            per.push_back(std::move(e));
        }
        eps["per_prime"] = std::move(per);
        eps["total"] = parity_json(rep.epsilon->total);
        eps["ramified_conductors"] = rep.epsilon->ramified_conductors;
        j["epsilon"] = std::move(eps);
    } else {
        j["epsilon"] = nullptr;
    }
    Json real = Json::array();
    for (const auto& a : rep.real_data) real.push_back(parity_json(a));
    j["real_data"] = std::move(real);
    j["witness"] = rep.witness ? parity_json(*rep.witness) : Json(nullptr);
    j["undetermined_reason"] =
        rep.undetermined_reason.empty() ? Json(nullptr) : Json(rep.undetermined_reason);
    return j;
}

Json knot_indices_json(const KnotIndexReport& rep) {
    Json j;
    j["deg"] = rep.deg;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["iota"] = e.iota;
        je["verdict"] = verdict_name(e.verdict);
        if (e.witness)
            je["witness_profile"] = e.witness->neg_pairs;
        else
            je["witness_profile"] = nullptr;
        je["reason"] = e.reason.empty() ? Json(nullptr) : Json(e.reason);
        entries.push_back(std::move(je));
    }
    j["indices"] = std::move(entries);
    j["realizable"] = rep.realizable;
    return j;
}

Json report_envelope(const std::string& command, Json input, Json payload, long timing_ms) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["input"] = std::move(input);
    j["report"] = std::move(payload);
    j["timing_ms"] = timing_ms;
    return j;
}

} // namespace lisom
