#pragma once

#include <algorithm>
#include <string>

#include <json.hpp>

#include "cirlab/errors.hpp"
#include "cirlab/machine.hpp"

namespace cirlab {

// JSON machine format: {tapes, alphabet, states, start, halt,
// transitions:[[state, [reads], next, [writes], moves], ...]}.
// Transitions are sorted on save so save/load round-trips byte-exact.
inline nlohmann::ordered_json to_json(const TmSpec& spec) {
    TmSpec sorted = spec;
    std::sort(sorted.transitions.begin(), sorted.transitions.end(),
              [](const Transition& a, const Transition& b) {
                  return std::tie(a.state, a.read) < std::tie(b.state, b.read);
              });
    nlohmann::ordered_json j;
    j["tapes"] = sorted.tapes;
    j["alphabet"] = sorted.alphabet;
    j["states"] = sorted.states;
    j["start"] = sorted.start;
    j["halt"] = sorted.halt;
    auto& arr = j["transitions"] = nlohmann::ordered_json::array();
    for (const auto& t : sorted.transitions)
        arr.push_back({t.state, t.read, t.next, t.write, t.moves});
    return j;
}

inline std::string save_machine(const TmSpec& spec) { return to_json(spec).dump(2) + "\n"; }

inline TmSpec machine_from_json(const nlohmann::json& j) {
    try {
        TmSpec spec;
        spec.tapes = j.at("tapes").get<int>();
        spec.alphabet = j.at("alphabet").get<std::vector<std::string>>();
        spec.states = j.at("states").get<std::vector<std::string>>();
        spec.start = j.at("start").get<std::string>();
        spec.halt = j.at("halt").get<std::string>();
        for (const auto& t : j.at("transitions")) {
            if (!t.is_array() || t.size() != 5)
                throw InvalidSpec("transition must be a 5-tuple");
            spec.transitions.push_back({t[0].get<std::string>(),
                                        t[1].get<std::vector<std::string>>(),
                                        t[2].get<std::string>(),
                                        t[3].get<std::vector<std::string>>(),
                                        t[4].get<std::string>()});
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("bad machine file: ") + e.what());
    }
}

inline TmSpec load_machine(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("bad machine file: ") + e.what());
    }
    return machine_from_json(j);
}

}  // namespace cirlab
