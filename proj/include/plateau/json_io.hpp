// json_io.hpp -- the function-spec JSON format and JSON report serialization.
//
// Function spec:
//   {"p":3,"m":3,"modulus":[1,2,0,1],"terms":[["z",2],["z^7",4],["z^7",3],["z",13]]}
// modulus coefficients are listed from the constant term upward; a term is
// [coefficient, exponent] with the coefficient written as "z^k" ("z" = z^1,
// "1" = z^0, "0" = zero).
#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "classifier.hpp"
#include "code.hpp"
#include "minimality.hpp"
#include "walsh.hpp"

namespace plateau {

using json = nlohmann::json;

inline json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(v);
    return v.str();
}

inline std::string coeff_to_string(uint32_t idx) {
    if (idx == 0) return "0";
    if (idx == 1) return "1";
    if (idx == 2) return "z";
    return "z^" + std::to_string(idx - 1);
}

inline uint32_t parse_coeff(const Field& F, const json& j) {
    if (j.is_number_integer()) {
        const long long v = j.get<long long>();
        if (v == 0) return 0;
        if (v == 1) return 1;
        fail(Errc::ParseError, "numeric coefficients other than 0/1 are ambiguous; use \"z^k\"");
    }
    if (!j.is_string()) fail(Errc::ParseError, "coefficient must be a string like \"z^k\"");
    const std::string s = j.get<std::string>();
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s == "z") return 2;
    if (s.rfind("z^", 0) == 0) {
        try {
            const unsigned long long k = std::stoull(s.substr(2));
            return 1 + static_cast<uint32_t>(k % F.order());
        } catch (const std::exception&) {
            fail(Errc::ParseError, "bad coefficient exponent in '" + s + "'");
        }
    }
    fail(Errc::ParseError, "bad coefficient '" + s + "'");
}

inline FunctionSpec parse_function_spec(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("m") || !j.contains("modulus"))
        fail(Errc::ParseError, "spec must contain p, m, modulus");
    const int p = j.at("p").get<int>();
    const int m = j.at("m").get<int>();
    std::vector<int> modulus;
    for (const auto& c : j.at("modulus")) modulus.push_back(c.get<int>());
    FunctionSpec spec;
    spec.field = make_field(p, m, std::move(modulus));
    if (j.contains("terms")) {
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 2) fail(Errc::ParseError, "each term must be [coefficient, exponent]");
            Term term;
            term.coeff_idx = parse_coeff(*spec.field, t[0]);
            const long long e = t[1].get<long long>();
            if (e < 1) fail(Errc::ParseError, "term exponents must be positive");
            term.exponent = static_cast<uint64_t>(e);
            if (term.coeff_idx != 0) spec.terms.push_back(term);
        }
    }
    return spec;
}

inline FunctionSpec load_function_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open spec file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("malformed JSON: ") + e.what());
    }
    return parse_function_spec(j);
}

inline json spec_to_json(const FunctionSpec& spec) {
    json j;
    j["p"] = spec.field->p();
    j["m"] = spec.field->m();
    j["modulus"] = spec.field->modulus();
    json terms = json::array();
    for (const Term& t : spec.terms) terms.push_back({coeff_to_string(t.coeff_idx), t.exponent});
    j["terms"] = std::move(terms);
    return j;
}

inline json cyc_to_json(const CycInt& v) {
    json coeffs = json::array();
    for (const BigInt& c : v.coeffs()) coeffs.push_back(big_to_json(c));
    return json{{"p", v.order()}, {"coeffs", std::move(coeffs)}};
}

inline json spectrum_to_json(const WalshSpectrum& s) {
    json arr = json::array();
    for (uint32_t b = 0; b < s.values.size(); ++b) {
        json coeffs = json::array();
        for (const BigInt& c : s.values[b].coeffs()) coeffs.push_back(big_to_json(c));
        arr.push_back({{"b", b}, {"coeffs", std::move(coeffs)}});
    }
    return arr;
}

inline json report_to_json(const PlateauedReport& rep) {
    json j;
    j["plateaued"] = rep.is_plateaued;
    j["r"] = rep.r;
    j["bent"] = rep.is_bent;
    j["regularity"] = to_string(rep.regularity);
    j["epsilon"] = rep.epsilon;
    j["u"] = to_string(rep.unit);
    j["epsilon_dual"] = rep.epsilon_dual;
    j["g_balanced"] = rep.g_balanced;
    j["ng_counts"] = rep.ng_counts;
    j["support_size"] = rep.support.size();
    if (rep.count_plus || rep.count_minus || rep.count_zero)
        j["binary_counts"] = {{"plus", rep.count_plus}, {"zero", rep.count_zero}, {"minus", rep.count_minus}};
    return j;
}

inline json code_report_to_json(const LinearCode& c, const WeightDistribution& wd) {
    json weights = json::array();
    for (const auto& [w, a] : wd.rows) weights.push_back({{"w", w}, {"A", a}});
    auto [lo, hi] = min_max_weights(wd);
    return json{{"p", c.p},           {"n", c.n},    {"k", c.k},    {"degenerate", c.degenerate},
                {"weights", weights}, {"w_min", lo}, {"w_max", hi}, {"enumerator", format_enumerator(wd)}};
}

inline json minimality_to_json(bool ab, bool range_ok, const MinimalityResult& mr) {
    json ex{{"all_minimal", mr.all_minimal}};
    if (mr.has_witness) {
        ex["witness"] = {{"coverer", {mr.coverer.first, mr.coverer.second}},
                         {"covered", {mr.covered.first, mr.covered.second}}};
    }
    return json{{"ashikhmin_barg", ab}, {"range_guarantee", range_ok}, {"exhaustive", std::move(ex)}};
}

}  // namespace plateau
