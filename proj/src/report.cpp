#include "aeq/report.hpp"

namespace aeq {

Json bigint_json(const BigInt& v) {
    if (auto i = to_int64(v)) return *i;
    return v.get_str();
}

Json rational_json(const Rational& q) {
    Json j;
    j["fraction"] = fraction_string(q);
    j["decimal"] = q.get_d();
    return j;
}

Json to_json(const IntPolynomial& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(bigint_json(c));
    Json j;
    j["text"] = render(f);
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json to_json(const NumberField& F) {
    Json excluded = Json::array();
    for (const auto& p : F.excluded_primes()) excluded.push_back(bigint_json(p));
    Json j;
    j["label"] = F.label();
    j["poly"] = to_json(F.poly());
    j["degree"] = F.degree();
    j["polyDisc"] = bigint_json(F.poly_disc());
    j["excludedPrimes"] = std::move(excluded);
    j["irreducibility"] = to_string(F.irreducibility());
    if (!F.surviving_factor_degrees().empty()) j["unexcludedFactorDegrees"] = F.surviving_factor_degrees();
    return j;
}

Json to_json(const ArithmeticType& t) { return t.parts; }

Json to_json(const ZetaCoefficients& z) {
    Json j = Json::object();
    for (const auto& [n, a] : z.values) j[std::to_string(n)] = a;
    return j;
}

Json to_json(const SweepTally& t) {
    Json ranges = Json::array();
    for (const auto& r : t.ranges) ranges.push_back({r.lo, r.hi});
    Json j;
    j["polyK"] = t.polyK;
    j["polyL"] = t.polyL;
    j["degree"] = t.degree;
    j["ranges"] = std::move(ranges);
    j["xmax"] = t.xmax();
    j["consideredPrimes"] = t.considered;
    j["excludedCount"] = t.excluded;
    j["agreeType"] = t.agreeType;
    j["agreeAp"] = t.agreeAp;
    j["agreeG"] = t.agreeG;
    j["splitBoth"] = t.splitBoth;
    j["histK"] = t.histK;
    j["histL"] = t.histL;
    j["firstMismatch"] = t.firstMismatch ? Json(*t.firstMismatch) : Json(nullptr);
    return j;
}

Json to_json(const DensityEstimate& e) {
    Json j;
    j["count"] = e.count;
    j["total"] = e.total;
    j["fraction"] = fraction_string(e.fraction());
    j["decimal"] = e.value();
    j["halfWidth"] = e.halfWidth();
    return j;
}

Json to_json(const DensityReport& r) {
    Json hk = Json::array(), hl = Json::array();
    for (const auto& e : r.histK) hk.push_back(to_json(e));
    for (const auto& e : r.histL) hl.push_back(to_json(e));
    Json j;
    j["A"] = to_json(r.agreeType);
    j["T"] = to_json(r.agreeAp);
    j["S"] = to_json(r.agreeG);
    j["splitBoth"] = to_json(r.splitBoth);
    j["S_K"] = std::move(hk);
    j["S_L"] = std::move(hl);
    j["densityNotion"] = "natural density over swept primes (equals Dirichlet density on Frobenius-class sets)";
    j["halfWidthKind"] = "heuristic 1/sqrt(consideredPrimes)";
    return j;
}

Json to_json(const ClosureEstimate& c) {
    Json j;
    j["labelK"] = c.labelK;
    j["labelL"] = c.labelL;
    j["estClosureDegK"] = c.estClosureDegK;
    j["estClosureDegL"] = c.estClosureDegL;
    j["estCompositumDeg"] = c.estCompositumDeg;
    j["rawInverses"] = {c.rawInverses[0], c.rawInverses[1], c.rawInverses[2]};
    j["consideredPrimes"] = c.considered;
    j["splitK"] = c.splitK;
    j["splitL"] = c.splitL;
    j["splitBoth"] = c.splitBoth;
    j["xmax"] = c.xmax;
    return j;
}

Json to_json(const DeltaReport& d) {
    Json j;
    j["delta"] = rational_json(d.deltaKL);
    j["degrees"] = {d.dK, d.dL, d.dKL};
    j["lowerBound"] = rational_json(d.lowerBound);
    if (d.checkTleDelta) {
        Json c;
        c["empiricalT"] = to_json(d.checkTleDelta->empiricalT);
        c["delta"] = fraction_string(d.checkTleDelta->delta);
        c["withinBound"] = d.checkTleDelta->withinBound;
        j["checkTleDelta"] = std::move(c);
    } else {
        j["checkTleDelta"] = nullptr;
    }
    return j;
}

Json to_json(const Thresholds& t) {
    Json j;
    j["n"] = t.n;
    j["main"] = rational_json(t.main);
    j["conjectural"] = rational_json(t.conjectural);
    j["galoisPrimeDegree"] = t.galoisPrimeDegree ? rational_json(*t.galoisPrimeDegree) : Json(nullptr);
    j["cubicConstant"] = t.cubicConstant ? rational_json(*t.cubicConstant) : Json(nullptr);
    j["serreB"] = t.serreB;
    return j;
}

Json to_json(const BoundsReport& b) {
    Json j;
    j["closureDegree"] = b.closureDegree;
    j["closureDiscLog10"] = b.closureDiscLog10;
    j["unconditionalLog10"] = b.unconditionalLog10;
    j["unconditionalBound"] = b.unconditionalBound ? Json(*b.unconditionalBound) : Json(nullptr);
    j["grhBound"] = b.grhBound;
    j["grhLogBase"] = b.logBase;
    j["zamanForm"] = b.zamanForm;
    j["zamanLog10WithoutC"] = b.zamanLog10WithoutC;
    j["provenance"] = b.provenance;
    return j;
}

Json to_json(const Verdict& v) {
    Json ev;
    if (v.evidence.witness) {
        const auto& w = *v.evidence.witness;
        ev["witness"] = {{"prime", w.prime}, {"typeK", to_json(w.typeK)}, {"typeL", to_json(w.typeL)}};
    } else {
        ev["witness"] = nullptr;
    }
    ev["sweptTo"] = v.evidence.sweptTo;
    ev["consideredPrimes"] = v.evidence.considered;
    ev["requiredBound"] = v.evidence.requiredBound ? Json(*v.evidence.requiredBound) : Json(nullptr);
    ev["requiredBoundKind"] = v.evidence.requiredBoundKind.empty() ? Json(nullptr) : Json(v.evidence.requiredBoundKind);

    Json j;
    j["status"] = to_string(v.status);
    j["evidence"] = std::move(ev);
    j["thresholds"] = to_json(v.thresholds);
    j["observedAgreement"] = v.observedAgreement ? rational_json(*v.observedAgreement) : Json(nullptr);
    j["bounds"] = v.bounds ? to_json(*v.bounds) : Json(nullptr);
    j["closureEstimate"] = v.closure ? to_json(*v.closure) : Json(nullptr);
    j["caveats"] = v.caveats;
    j["citations"] = v.citations;
    return j;
}

Json to_json(const Fingerprint& f) {
    Json types = Json::array();
    for (const auto& t : f.types) types.push_back(to_json(t));
    Json j;
    j["degree"] = f.degree;
    j["primes"] = f.primes;
    j["types"] = std::move(types);
    return j;
}

Json to_json(const CandidatePair& c) {
    Json j;
    j["pairLabels"] = {c.labelK, c.labelL};
    j["fingerprintPrimes"] = c.commonPrimes;
    j["verdict"] = to_json(c.verdict);
    return j;
}

}  // namespace aeq
