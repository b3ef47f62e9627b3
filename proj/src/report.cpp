#include "kronspan/report.hpp"
#include "kronspan/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace kronspan {

namespace {

std::string status_word(const CheckRecord &c) {
  return c.incomplete ? "INCOMPLETE" : c.passed ? "PASS" : "FAIL";
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

} // namespace

bool Report::any_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckRecord &c) { return !c.passed && !c.incomplete; });
}

bool Report::any_incomplete() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckRecord &c) { return c.incomplete; });
}

int Report::exit_status() const { return any_failed() ? 1 : any_incomplete() ? 3 : 0; }

Format parse_format(std::string_view text) {
  if (text == "json")
    return Format::json;
  if (text == "csv")
    return Format::csv;
  if (text == "text")
    return Format::text;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

CheckRecord run_check(std::string name, Json inputs,
                      const std::function<void(CheckRecord &)> &body) {
  CheckRecord record;
  record.name = std::move(name);
  record.inputs = std::move(inputs);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(record);
  } catch (const BudgetExceeded &e) {
    record.passed = false;
    record.incomplete = true;
    record.actual = Json{{"budget", e.what()}};
  } catch (const std::exception &e) {
    record.passed = false;
    record.actual = Json{{"error", e.what()}};
  }
  record.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

std::string render_report(const Report &report, Format format, bool timing) {
  std::ostringstream out;
  switch (format) {
  case Format::json: {
    Json j;
    j["version"] = report_version;
    if (!report.command.empty())
      j["command"] = report.command;
    j["checks"] = Json::array();
    for (const auto &c : report.checks) {
      Json rec;
      rec["name"] = c.name;
      rec["inputs"] = c.inputs;
      rec["expected"] = c.expected;
      rec["actual"] = c.actual;
      rec["passed"] = c.passed;
      if (c.incomplete)
        rec["incomplete"] = true;
      j["checks"].push_back(std::move(rec));
    }
    if (timing && !report.checks.empty()) {
      Json t = Json::object();
      for (const auto &c : report.checks)
        t[c.name] = c.seconds;
      j["timing"] = std::move(t);
    }
    out << j.dump(2) << '\n';
    break;
  }
  case Format::csv:
    out << "name,status,expected,actual,inputs" << (timing ? ",seconds" : "") << '\n';
    for (const auto &c : report.checks) {
      out << csv_field(c.name) << ',' << status_word(c) << ',' << csv_field(c.expected.dump())
          << ',' << csv_field(c.actual.dump()) << ',' << csv_field(c.inputs.dump());
      if (timing)
        out << ',' << seconds_text(c.seconds);
      out << '\n';
    }
    break;
  case Format::text:
    for (const auto &c : report.checks) {
      out << status_word(c) << "  " << c.name;
      if (timing)
        out << "  (" << seconds_text(c.seconds) << " s)";
      out << '\n';
      if (c.actual.is_object() && c.actual.contains("text") && c.actual["text"].is_string())
        out << c.actual["text"].get<std::string>();
      else if (!c.actual.is_null())
        out << "  actual:   " << c.actual.dump() << '\n';
      if (!c.expected.is_null())
        out << "  expected: " << c.expected.dump() << '\n';
    }
    break;
  }
  return out.str();
}

void emit_report(const Report &report, Format format, const std::string &path, bool timing) {
  const auto text = render_report(report, format, timing);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout)
      throw std::runtime_error("failed writing report to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot open report file '" + path + "'");
  file << text;
  file.close();
  if (!file)
    throw std::runtime_error("failed writing report file '" + path + "'");
}

} // namespace kronspan
