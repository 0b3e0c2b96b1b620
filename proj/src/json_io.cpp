#include "nlg/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace nlg {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Bits pack_tuple(const json& arr, int n, const char* what) {
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument(std::string(what) + ": tuple length mismatch");
    Bits w = 0;
    for (int i = 0; i < n; ++i) {
        int bit = arr[i].get<int>();
        if (bit != 0 && bit != 1) throw std::invalid_argument(std::string(what) + ": bits only");
        if (bit) w |= Bits{1} << i;
    }
    return w;
}

json tuple_json(Bits w, int n) {
    json arr = json::array();
    for (int i = 0; i < n; ++i) arr.push_back(static_cast<int>((w >> i) & 1u));
    return arr;
}

}  // namespace

GameSpec parse_game_spec(const std::string& json_text) {
    json j = json::parse(json_text);
    std::string type = j.at("type").get<std::string>();
    int n = j.at("n").get<int>();
    if (type == "svetlichny") {
        std::vector<int> c = j.at("c").get<std::vector<int>>();
        return SvetlichnyGame(n, std::move(c));
    }
    if (type == "functional") {
        BellFunctional f(n, j.value("label", ""));
        f.offset = parse_rational(j.value("offset", "0"));
        for (const json& term : j.at("terms")) {
            Bits out = pack_tuple(term.at("out"), n, "functional term");
            Bits in = pack_tuple(term.at("in"), n, "functional term");
            f.at(out, in) = parse_rational(term.at("coeff").get<std::string>());
        }
        return f;
    }
    throw std::invalid_argument("game spec: unknown type " + type);
}

std::string game_spec_json(const SvetlichnyGame& game) {
    ordered_json j;
    j["type"] = "svetlichny";
    j["n"] = game.n;
    j["c"] = game.c;
    return j.dump();
}

std::string functional_json(const BellFunctional& f) {
    ordered_json j;
    j["type"] = "functional";
    j["n"] = f.n;
    if (!f.label.empty()) j["label"] = f.label;
    j["offset"] = rat_str(f.offset);
    ordered_json terms = ordered_json::array();
    Bits lim = Bits{1} << f.n;
    for (Bits out = 0; out < lim; ++out)
        for (Bits in = 0; in < lim; ++in)
            if (f.at(out, in) != 0) {
                ordered_json t;
                t["out"] = tuple_json(out, f.n);
                t["in"] = tuple_json(in, f.n);
                t["coeff"] = rat_str(f.at(out, in));
                terms.push_back(std::move(t));
            }
    j["terms"] = std::move(terms);
    return j.dump();
}

BellFunctional functional_of(const GameSpec& spec) {
    if (const auto* game = std::get_if<SvetlichnyGame>(&spec)) return to_functional(*game);
    return std::get<BellFunctional>(spec);
}

Behavior parse_behavior(const std::string& json_text) {
    json j = json::parse(json_text);
    int n = j.at("n").get<int>();
    Behavior b(n);
    const json& table = j.at("table");
    if (!table.is_array() || table.size() != b.p.size())
        throw std::invalid_argument("behavior: table size mismatch");
    for (std::size_t i = 0; i < b.p.size(); ++i)
        b.p[i] = parse_rational(table[i].get<std::string>());
    return b;
}

std::string behavior_json(const Behavior& b) {
    ordered_json j;
    j["n"] = b.n;
    ordered_json table = ordered_json::array();
    for (const Rat& r : b.p) table.push_back(rat_str(r));
    j["table"] = std::move(table);
    return j.dump();
}

QuantumModel parse_model(const std::string& json_text) {
    json j = json::parse(json_text);
    int n = j.at("n").get<int>();
    std::vector<std::complex<double>> state;
    for (const json& amp : j.at("state")) {
        if (!amp.is_array() || amp.size() != 2)
            throw std::invalid_argument("model: amplitudes are [re, im] pairs");
        state.emplace_back(amp[0].get<double>(), amp[1].get<double>());
    }
    std::vector<std::array<MeasurementSetting, 2>> settings;
    for (const json& per_party : j.at("settings")) {
        if (!per_party.is_array() || per_party.size() != 2)
            throw std::invalid_argument("model: two settings per party");
        std::array<MeasurementSetting, 2> s;
        for (int x = 0; x < 2; ++x) {
            const json& ang = per_party[x];
            if (!ang.is_array() || ang.size() != 2)
                throw std::invalid_argument("model: settings are [theta, phi] pairs");
            s[x] = MeasurementSetting{ang[0].get<double>(), ang[1].get<double>()};
        }
        settings.push_back(s);
    }
    return make_model(n, std::move(state), std::move(settings));
}

std::string model_json(const QuantumModel& m) {
    ordered_json j;
    j["n"] = m.n;
    ordered_json state = ordered_json::array();
    for (const auto& amp : m.state) state.push_back({amp.real(), amp.imag()});
    j["state"] = std::move(state);
    ordered_json settings = ordered_json::array();
    for (const auto& per_party : m.settings) {
        ordered_json s = ordered_json::array();
        for (int x = 0; x < 2; ++x)
            s.push_back({per_party[x].theta, per_party[x].phi});
        settings.push_back(std::move(s));
    }
    j["settings"] = std::move(settings);
    return j.dump();
}

}  // namespace nlg
