#pragma once

#include <nlohmann/json.hpp>

#include "borelkit/betti.hpp"
#include "borelkit/borel.hpp"
#include "borelkit/ideal.hpp"

namespace borelkit {

// JSON forms. nlohmann::json keeps keys sorted, which makes every rendering
// byte-stable for identical inputs.

nlohmann::json to_json(const Monomial& u);                       // [e1, ..., en]
nlohmann::json to_json(const MonomialIdeal& ideal);              // {"gens": [...], "n": n}
nlohmann::json to_json(const RegularityCertificate& cert);
nlohmann::json to_json(const BorelStructure& s);
nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const AssociatedPrimes& primes);

Monomial monomial_from_json(const nlohmann::json& j);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

}  // namespace borelkit
