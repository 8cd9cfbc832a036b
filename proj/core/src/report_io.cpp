#include <nlohmann/json.hpp>

#include "qkzlab/check_report.hpp"

namespace qkzlab {

using nlohmann::json;

std::string to_json(const CheckReport& report, int indent) {
  json j;
  j["identity"] = report.identity;
  j["mode"] = report.mode;
  j["order"] = report.order ? json(*report.order) : json(nullptr);
  j["params"] = report.params;
  j["pass"] = report.pass;
  if (report.residual) {
    const Residual& r = *report.residual;
    j["residual"] = {{"value", r.value},
                     {"row", r.row},
                     {"col", r.col},
                     {"hbar_power", r.hbar_power ? json(*r.hbar_power) : json(nullptr)}};
  } else {
    j["residual"] = nullptr;
  }
  j["notes"] = report.notes;
  j["flags"] = report.flags;
  return j.dump(indent);
}

CheckReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    CheckReport rep;
    rep.identity = j.at("identity").get<std::string>();
    rep.mode = j.at("mode").get<std::string>();
    if (!j.at("order").is_null()) rep.order = j.at("order").get<int>();
    rep.params = j.at("params").get<std::map<std::string, std::string>>();
    rep.pass = j.at("pass").get<bool>();
    if (!j.at("residual").is_null()) {
      const json& r = j.at("residual");
      Residual res;
      res.value = r.at("value").get<std::string>();
      res.row = r.at("row").get<std::size_t>();
      res.col = r.at("col").get<std::size_t>();
      if (!r.at("hbar_power").is_null()) res.hbar_power = r.at("hbar_power").get<int>();
      rep.residual = res;
    }
    rep.notes = j.value("notes", std::map<std::string, std::string>{});
    rep.flags = j.value("flags", std::map<std::string, bool>{});
    return rep;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace qkzlab
