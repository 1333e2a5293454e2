#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "painleq/invariants.hpp"

namespace painleq {

namespace {

int index_from_name(const std::string& name) {
    std::size_t i = name.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
    if (i == name.size()) throw Error("derivation name must end in its index: " + name);
    return std::stoi(name.substr(i));
}

}  // namespace

DerivationSet parse_derivations(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed derivation table: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("problem") || !doc.contains("coordinates") ||
        !doc.contains("derivations"))
        throw Error("derivation table must have fields problem, coordinates, derivations");

    std::string problem = doc["problem"].get<std::string>();
    ProblemClass cls;
    if (problem == "fiber")
        cls = ProblemClass::Fiber;
    else if (problem == "point")
        cls = ProblemClass::Point;
    else
        throw Error("derivation table: problem must be 'fiber' or 'point'");

    std::vector<std::string> coords;
    for (const auto& c : doc["coordinates"]) coords.push_back(c.get<std::string>());
    static const char* known[] = {"x", "y", "p", "a1", "a2", "a4", "a5", "b"};
    for (const auto& c : coords) {
        bool ok = false;
        for (const char* k : known) ok = ok || c == k;
        if (!ok) throw Error("derivation table: unknown coordinate name '" + c + "'");
    }

    DerivationSet set;
    for (const auto& d : doc["derivations"]) {
        DerivationSpec spec;
        spec.name = d.at("name").get<std::string>();
        spec.index = index_from_name(spec.name);
        spec.problem = cls;
        spec.coordinates = coords;
        for (const auto& [coord, text] : d.at("coefficients").items()) {
            if (std::find(coords.begin(), coords.end(), coord) == coords.end())
                throw Error("derivation '" + spec.name + "': coefficient for undeclared coordinate '" +
                            coord + "'");
            spec.coefficients[coord] = text.get<std::string>();
        }
        set.push_back(std::move(spec));
    }
    return set;
}

DerivationSet load_derivations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open derivation table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_derivations(buf.str());
}

std::string save_derivations(const DerivationSet& set) {
    nlohmann::json doc;
    if (set.empty()) throw Error("refusing to serialize an empty derivation set");
    doc["problem"] = set.front().problem == ProblemClass::Fiber ? "fiber" : "point";
    doc["coordinates"] = set.front().coordinates;
    doc["derivations"] = nlohmann::json::array();
    for (const auto& d : set) {
        nlohmann::json j;
        j["name"] = d.name;
        j["coefficients"] = nlohmann::json::object();
        for (const auto& [coord, text] : d.coefficients) j["coefficients"][coord] = text;
        doc["derivations"].push_back(std::move(j));
    }
    return doc.dump(2);
}

}  // namespace painleq
