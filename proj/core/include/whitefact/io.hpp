#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "whitefact/explorer.hpp"
#include "whitefact/factorization.hpp"
#include "whitefact/reduction.hpp"
#include "whitefact/tree.hpp"

namespace whitefact {

using json = nlohmann::ordered_json;

// Decoders throw ParseError on malformed or out-of-range input.

// Inline JSON when `arg` starts with '{' or '[', otherwise a file path.
json load_json(const std::string& arg);

SystemRef system_from_json(const json& j);
json system_to_json(const FactorSystem& system);

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

FactorElement element_from_json(const FactorSystem& system, const json& j);
json element_to_json(const FactorElement& x);

// [[factor, payload], ...]; reduced on ingest.
Word word_from_json(const SystemRef& system, const json& j);
json word_to_json(const Word& w);

// "U:<word>" or "C<i>:<word>"
TreeVertex vertex_from_string(const SystemRef& system, const std::string& name);

AlphaLabel alpha_from_json(const SystemRef& system, const json& j);
json alpha_to_json(const AlphaLabel& l);
ALabel a_from_json(const SystemRef& system, const json& j);
json a_to_json(const ALabel& l);

FactorAutoPart phi_from_json(const FactorGroup& g, const json& j);
json phi_to_json(const FactorGroup& g, const FactorAutoPart& phi);

PureSymmetricAuto auto_from_json(const SystemRef& system, const json& j);
json auto_to_json(const PureSymmetricAuto& psi);

WhiteheadAuto whitehead_from_json(const FactorSystem& system, const json& j);
json whitehead_to_json(const WhiteheadAuto& w);

Factorization factorization_from_json(const SystemRef& system, const json& j);
json factorization_to_json(const FactorSystem& system, const Factorization& f);

json moves_to_json(const std::vector<MoveRecord>& moves);

json ball_to_json(const Ball& ball);
std::string ball_to_dot(const Ball& ball);

json sn_ball_to_json(const SnBall& ball);
std::string sn_ball_to_dot(const SnBall& ball);

}  // namespace whitefact
