#include "specrad/serialize.hpp"

namespace specrad {

using nlohmann::json;

json matrix_to_json(const NonnegMatrix& m) {
    return json{{"n", m.dim()}, {"entries", m.to_rows()}};
}

NonnegMatrix matrix_from_json(const json& j) {
    int n = j.at("n").get<int>();
    auto rows = j.at("entries").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("entries row count does not match n");
    return NonnegMatrix::from_rows(rows);
}

json report_to_json(const StructureReport& r) {
    json j{
        {"n", r.n},
        {"nnz", r.nnz},
        {"irreducible", r.irreducible},
        {"period", r.irreducible ? json(r.period) : json(nullptr)},
        {"primitive", r.primitive},
        {"a2_irreducible", r.a2_irreducible},
        {"ata_irreducible", r.ata_irreducible},
        {"aat_irreducible", r.aat_irreducible},
        {"two_fold", r.two_fold},
        {"chainable", r.chainable},
        {"fully_indecomposable", r.fully_indecomposable},
        {"total_support", r.total_support},
        {"scrambling", r.scrambling},
        {"column_components", r.column_components},
        {"frobenius", {{"permutation", r.frobenius.permutation}, {"blocks", r.frobenius.blocks}}},
    };
    if (r.cyclic)
        j["cyclic"] = {{"period", r.cyclic->period}, {"classes", r.cyclic->classes}};
    else
        j["cyclic"] = nullptr;
    return j;
}

json witness_to_json(const EqualityWitness& w) {
    return json{
        {"cause", to_string(w.cause)},
        {"C", w.C.values()},
        {"D", w.D.values()},
        {"alpha", w.alpha},
        {"E", w.E},
        {"L", w.L},
    };
}

json certificate_to_json(const ConvexityCertificate& c) {
    json j{
        {"property1", c.strict},
        {"strict", c.strict},
        {"cause", c.strict ? json(nullptr) : json(to_string(c.cause))},
        {"witness", c.witness ? witness_to_json(*c.witness) : json(nullptr)},
    };
    return j;
}

json sweep_to_json(const SweepReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"check", v.check}, {"n", v.n}, {"pattern_bits", v.bits}});
    return json{{"n", r.n}, {"patterns", r.patterns}, {"violations", violations}};
}

}  // namespace specrad
