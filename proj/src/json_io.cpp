#include "charform/json_io.hpp"

#include <stdexcept>

namespace charform {

nlohmann::ordered_json poly_json(const Polynomial<Rat>& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(rat_str(c));
    return {{"mode", "exact"}, {"coeffs", std::move(coeffs)}};
}

nlohmann::ordered_json poly_json(const Polynomial<Cplx>& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Cplx& c : p.coeffs()) coeffs.push_back({c.real(), c.imag()});
    return {{"mode", "approx"}, {"coeffs", std::move(coeffs)}};
}

AnyPolynomial parse_poly_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("coeffs") || !j["coeffs"].is_array() ||
        j["coeffs"].empty())
        throw std::invalid_argument("polynomial JSON must be {\"mode\":...,\"coeffs\":[...]}");

    const std::string mode = j["mode"].get<std::string>();
    if (mode == "exact") {
        std::vector<Rat> c;
        c.reserve(j["coeffs"].size());
        for (const auto& e : j["coeffs"]) {
            if (!e.is_string()) throw std::invalid_argument("exact coefficients must be \"p/q\" strings");
            c.push_back(parse_rat(e.get<std::string>()));
        }
        return Polynomial<Rat>(std::move(c));
    }
    if (mode == "approx") {
        std::vector<Cplx> c;
        c.reserve(j["coeffs"].size());
        for (const auto& e : j["coeffs"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw std::invalid_argument("approx coefficients must be [re,im] pairs");
            c.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        return Polynomial<Cplx>(std::move(c));
    }
    throw std::invalid_argument("mode must be \"exact\" or \"approx\"");
}

}  // namespace charform
