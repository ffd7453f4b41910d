#include "borelkit/json_io.hpp"

namespace borelkit {

nlohmann::json to_json(const Monomial& u) {
    return nlohmann::json(u.exponents());
}

nlohmann::json to_json(const MonomialIdeal& ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Monomial& g : ideal.generators()) {
        gens.push_back(to_json(g));
    }
    return nlohmann::json{{"gens", std::move(gens)}, {"n", ideal.ring().nvars()}};
}

nlohmann::json to_json(const RegularityCertificate& cert) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& [e, stable] : cert.trace) {
        trace.push_back({{"e", e}, {"stable", stable}});
    }
    return nlohmann::json{
        {"bound_used", cert.bound_used}, {"reg", cert.reg}, {"trace", std::move(trace)}};
}

nlohmann::json to_json(const BorelStructure& s) {
    nlohmann::json stratum0 = nlohmann::json::array();
    for (const Monomial& v : s.stratum0) {
        stratum0.push_back(to_json(v));
    }
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& stratum : s.strata) {
        nlohmann::json entries = nlohmann::json::array();
        for (const StratumEntry& entry : stratum) {
            entries.push_back({{"a", entry.a}, {"v", to_json(entry.v)}});
        }
        strata.push_back(std::move(entries));
    }
    return nlohmann::json{{"pure", s.pure_exponents},
                          {"q", s.q},
                          {"strata", std::move(strata)},
                          {"stratum0", std::move(stratum0)}};
}

nlohmann::json to_json(const BettiTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : table.entries) {
        entries.push_back({{"beta", value}, {"i", key.first}, {"j", key.second}});
    }
    return nlohmann::json{{"characteristic", table.characteristic},
                          {"entries", std::move(entries)}};
}

nlohmann::json to_json(const AssociatedPrimes& primes) {
    nlohmann::json list = nlohmann::json::array();
    for (const std::vector<int>& support : primes) {
        list.push_back(support);
    }
    return nlohmann::json{{"primes", std::move(list)}};
}

Monomial monomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw Error("monomial JSON form must be an array of exponents");
    }
    return Monomial(j.get<std::vector<std::int64_t>>());
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("gens")) {
        throw Error("ideal JSON form must carry \"n\" and \"gens\"");
    }
    RingContext ctx(j.at("n").get<int>());
    std::vector<Monomial> gens;
    for (const nlohmann::json& g : j.at("gens")) {
        gens.push_back(monomial_from_json(g));
    }
    return MonomialIdeal(std::move(ctx), std::move(gens));
}

}  // namespace borelkit
