#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twistden {

/// Where two exact objects first disagree. All values are exact decimal strings.
struct Discrepancy {
  std::string location;
  std::string expected;
  std::string got;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct Check {
  std::string name;
  std::string range;
  bool pass = true;
  std::optional<Discrepancy> first_discrepancy;
};

/// Machine-readable outcome of one CLI command.
///
/// Serialized as
///   { "command", "params": {...}, "status": "pass"|"fail",
///     "checks": [{ "name", "range", "pass", "first_discrepancy" }], "wall_ms" }
/// with every number written as an exact decimal string.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> summary;
  long long wall_ms = 0;

  bool pass() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const std::vector<Check>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }
};

/// Pretty-printed JSON (2-space indent, trailing newline).
std::string to_json(const Report& report);
/// Inverse of to_json. Throws twistden::Error on malformed input.
Report report_from_json(const std::string& text);
/// One line per check plus a status line.
std::string to_text(const Report& report);

}  // namespace twistden
