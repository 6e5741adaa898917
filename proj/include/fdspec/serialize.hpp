#pragma once

// Stencil <-> JSON:
//   {"kind", "n", "derivative_order", "h_power", "prefactor": "p/q",
//    "nodes": [{"offset", "weight": "p/q"}], "weights": {"<offset>": "p/q"}}
// "weights" is a convenience view of "nodes" and is ignored on input.

#include <string>

#include "json.hpp"

#include "fdspec/errors.hpp"
#include "fdspec/rational.hpp"
#include "fdspec/weights.hpp"

namespace fdspec {

inline nlohmann::ordered_json stencil_to_json(const Stencil& stencil) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(stencil.kind()));
    j["n"] = stencil.n();
    j["derivative_order"] = stencil.derivative_order();
    j["h_power"] = stencil.h_power();
    j["prefactor"] = stencil.prefactor().str();
    auto nodes = nlohmann::ordered_json::array();
    auto weights = nlohmann::ordered_json::object();
    for (const auto& node : stencil.nodes()) {
        nodes.push_back({{"offset", node.offset}, {"weight", node.weight.str()}});
        weights[std::to_string(node.offset)] = node.weight.str();
    }
    j["nodes"] = std::move(nodes);
    j["weights"] = std::move(weights);
    return j;
}

inline Stencil stencil_from_json(const nlohmann::json& j) {
    try {
        const auto kind = parse_stencil_kind(j.at("kind").get<std::string>());
        if (!kind) throw ParseError("unknown stencil kind '" + j.at("kind").get<std::string>() + "'");
        std::vector<StencilNode> nodes;
        for (const auto& node : j.at("nodes"))
            nodes.push_back({node.at("offset").get<int>(), Rational::parse(node.at("weight").get<std::string>())});
        return Stencil(*kind, j.at("n").get<unsigned>(), j.at("derivative_order").get<unsigned>(),
                       j.at("h_power").get<unsigned>(), Rational::parse(j.at("prefactor").get<std::string>()),
                       std::move(nodes));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed stencil JSON: ") + e.what());
    } catch (const InvalidParameter& e) {
        throw ParseError(std::string("invalid stencil: ") + e.what());
    }
}

} // namespace fdspec
