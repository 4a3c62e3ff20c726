#include "causet/cli.hpp"
#include "causet/errors.hpp"

namespace causet::cli {

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  j["dim"] = dimension;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  j["digits"] = digits ? nlohmann::ordered_json(*digits) : nlohmann::ordered_json(nullptr);
  j["format"] = format;
  j["out"] = out;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = std::move(params);
  return j;
}

RunConfig RunConfig::from_json(const nlohmann::ordered_json& j) {
  try {
    RunConfig c;
    c.subcommand = j.at("subcommand").get<std::string>();
    c.dimension = j.at("dim").get<int>();
    if (!j.at("seed").is_null()) c.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("digits").is_null()) c.digits = j.at("digits").get<int>();
    c.format = j.at("format").get<std::string>();
    c.out = j.at("out").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items()) c.parameters[k] = v.get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad run config: ") + e.what());
  }
}

}  // namespace causet::cli
