#include "twistden/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "twistden/numeric.hpp"

namespace twistden {

using Json = nlohmann::ordered_json;

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string to_json(const Report& report) {
  Json j;
  j["command"] = report.command;
  Json params = Json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = params;
  j["status"] = report.pass() ? "pass" : "fail";
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["range"] = c.range;
    jc["pass"] = c.pass;
    if (c.first_discrepancy) {
      jc["first_discrepancy"] = {{"location", c.first_discrepancy->location},
                                 {"expected", c.first_discrepancy->expected},
                                 {"got", c.first_discrepancy->got}};
    } else {
      jc["first_discrepancy"] = nullptr;
    }
    checks.push_back(std::move(jc));
  }
  j["checks"] = checks;
  if (!report.summary.empty()) {
    Json summary = Json::object();
    for (const auto& [k, v] : report.summary) summary[k] = v;
    j["summary"] = summary;
  }
  j["wall_ms"] = std::to_string(report.wall_ms);
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
    for (const auto& jc : j.at("checks")) {
      Check c;
      c.name = jc.at("name").get<std::string>();
      c.range = jc.at("range").get<std::string>();
      c.pass = jc.at("pass").get<bool>();
      const auto& d = jc.at("first_discrepancy");
      if (!d.is_null())
        c.first_discrepancy = Discrepancy{d.at("location").get<std::string>(), d.at("expected").get<std::string>(),
                                          d.at("got").get<std::string>()};
      r.checks.push_back(std::move(c));
    }
    if (j.contains("summary"))
      for (const auto& [k, v] : j.at("summary").items()) r.summary.emplace_back(k, v.get<std::string>());
    r.wall_ms = std::stoll(j.at("wall_ms").get<std::string>());
    const bool status = j.at("status").get<std::string>() == "pass";
    if (status != r.pass()) throw Error("report status disagrees with its checks");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << report.command;
  for (const auto& [k, v] : report.params) out << " " << k << "=" << v;
  out << "\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "  PASS  " : "  FAIL  ") << c.name << "  [" << c.range << "]";
    if (c.first_discrepancy)
      out << "  at " << c.first_discrepancy->location << ": expected " << c.first_discrepancy->expected << ", got "
          << c.first_discrepancy->got;
    out << "\n";
  }
  for (const auto& [k, v] : report.summary) out << "  " << k << ": " << v << "\n";
  out << "status: " << (report.pass() ? "pass" : "fail") << " (" << report.wall_ms << " ms)\n";
  return out.str();
}

}  // namespace twistden
