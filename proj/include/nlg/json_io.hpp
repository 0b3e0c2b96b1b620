#pragma once

#include <string>
#include <variant>

#include "nlg/behavior.hpp"
#include "nlg/quantum.hpp"

namespace nlg {

// Game spec files hold either a Svetlichny c-string or an explicit functional:
//   {"type":"svetlichny","n":3,"c":[0,0,0,0]}
//   {"type":"functional","n":3,"offset":"0",
//    "terms":[{"out":[0,0,0],"in":[0,0,0],"coeff":"1/4"}, ...]}
using GameSpec = std::variant<SvetlichnyGame, BellFunctional>;

GameSpec parse_game_spec(const std::string& json_text);
std::string game_spec_json(const SvetlichnyGame& game);
std::string functional_json(const BellFunctional& f);

BellFunctional functional_of(const GameSpec& spec);

// Behavior files: {"n":2,"table":["1/2","0",...]} in canonical index order
// (output index major, input index minor).
Behavior parse_behavior(const std::string& json_text);
std::string behavior_json(const Behavior& b);

// Model files: {"n":3,"state":[[re,im],...],"settings":[[[theta,phi],[theta,phi]],...]}
QuantumModel parse_model(const std::string& json_text);
std::string model_json(const QuantumModel& m);

}  // namespace nlg
