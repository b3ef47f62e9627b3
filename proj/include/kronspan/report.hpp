#pragma once

#include "json.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kronspan {

using Json = nlohmann::ordered_json;

inline constexpr int report_version = 1;

/// One verification: what was asked, what was expected, what came out.
struct CheckRecord {
  std::string name;
  Json inputs = Json::object();
  Json expected = nullptr;
  Json actual = nullptr;
  bool passed = false;
  /// Stopped by a resource budget; neither passed nor a mathematical failure.
  bool incomplete = false;
  double seconds = 0;
};

struct Report {
  std::string command;
  std::vector<CheckRecord> checks;

  bool any_failed() const;
  bool any_incomplete() const;
  /// 0 all passed, 1 some check failed, 3 incomplete under budget.
  int exit_status() const;
};

enum class Format { json, csv, text };

/// "json", "csv" or "text"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view text);

/// Runs `body` on a fresh record, timing it. A BudgetExceeded marks the
/// record incomplete; any other exception fails it with the message.
CheckRecord run_check(std::string name, Json inputs,
                      const std::function<void(CheckRecord &)> &body);

/// Deterministic rendering; wall times appear only in the "timing" field
/// (json) or column (csv, text) and only when `timing` is set.
std::string render_report(const Report &report, Format format, bool timing = true);
/// Writes to `path`, or to stdout for "" and "-". Throws std::runtime_error
/// naming the path on I/O failure.
void emit_report(const Report &report, Format format, const std::string &path,
                 bool timing = true);

} // namespace kronspan
