#include "agmb/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace agmb {

namespace {

std::string fmt(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("report: non-finite value");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void appendQuoted(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  out += '"';
}

void appendViolation(std::string& out, const ViolationPoint& v) {
  out += "{\"a\":" + fmt(v.a) + ",\"b\":" + fmt(v.b) + ",\"r\":" + fmt(v.r) +
         ",\"margin\":" + fmt(v.margin) + "}";
}

}  // namespace

SuiteResult mergeSuite(std::string suite, std::string grid, std::map<std::string, double> params,
                       const std::vector<VerificationReport>& reports, double runtime_ms) {
  SuiteResult out;
  out.suite = std::move(suite);
  out.grid = std::move(grid);
  out.params = std::move(params);
  out.min_margin = std::numeric_limits<double>::infinity();
  out.runtime_ms = runtime_ms;
  for (const VerificationReport& rep : reports) {
    out.min_margin = std::min(out.min_margin, rep.min_margin);
    out.n_points = std::max(out.n_points, rep.margins.size());
    out.violations.insert(out.violations.end(), rep.violations.begin(), rep.violations.end());
  }
  if (out.n_points == 0) throw std::invalid_argument("mergeSuite: no evaluated points");
  return out;
}

std::string toJson(const std::vector<SuiteResult>& results) {
  std::string out = "[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SuiteResult& s = results[i];
    if (i) out += ",";
    out += "\n  {\"suite\":";
    appendQuoted(out, s.suite);
    out += ",\"grid\":";
    appendQuoted(out, s.grid);
    out += ",\"params\":{";
    bool first = true;
    for (const auto& [key, value] : s.params) {
      if (!first) out += ",";
      first = false;
      appendQuoted(out, key);
      out += ":" + fmt(value);
    }
    out += "},\"min_margin\":" + fmt(s.min_margin);
    out += ",\"n_points\":" + std::to_string(s.n_points);
    out += ",\"violations\":[";
    for (std::size_t k = 0; k < s.violations.size(); ++k) {
      if (k) out += ",";
      appendViolation(out, s.violations[k]);
    }
    out += "],\"runtime_ms\":" + fmt(s.runtime_ms) + "}";
  }
  out += "\n]\n";
  return out;
}

std::vector<SuiteResult> fromJson(const std::string& text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<SuiteResult> out;
    out.reserve(doc.size());
    for (const nlohmann::json& e : doc) {
      SuiteResult s;
      s.suite = e.at("suite").get<std::string>();
      s.grid = e.at("grid").get<std::string>();
      for (const auto& [key, value] : e.at("params").items())
        s.params[key] = value.get<double>();
      s.min_margin = e.at("min_margin").get<double>();
      s.n_points = e.at("n_points").get<std::size_t>();
      for (const nlohmann::json& v : e.at("violations"))
        s.violations.push_back({v.at("a").get<double>(), v.at("b").get<double>(),
                                v.at("r").get<double>(), v.at("margin").get<double>()});
      s.runtime_ms = e.at("runtime_ms").get<double>();
      out.push_back(std::move(s));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report: bad JSON: ") + e.what());
  }
}

std::string toCsv(const std::vector<SuiteResult>& results) {
  std::string out = "suite,grid,min_margin,n_points,n_violations,runtime_ms\n";
  for (const SuiteResult& s : results) {
    out += s.suite + "," + s.grid + "," + fmt(s.min_margin) + "," + std::to_string(s.n_points) +
           "," + std::to_string(s.violations.size()) + "," + fmt(s.runtime_ms) + "\n";
  }
  return out;
}

std::string toPlain(const std::vector<SuiteResult>& results) {
  constexpr std::size_t kListedViolations = 20;
  std::string out;
  for (const SuiteResult& s : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%-11s %-14s min margin % -24.17g points %-7zu %8.1f ms\n",
                  s.suite.c_str(), s.violations.empty() ? "ok" : "VIOLATIONS",
                  s.min_margin, s.n_points, s.runtime_ms);
    out += line;
    for (std::size_t k = 0; k < s.violations.size() && k < kListedViolations; ++k) {
      const ViolationPoint& v = s.violations[k];
      std::snprintf(line, sizeof line, "    a=%.17g b=%.17g r=%.17g margin=%.17g\n", v.a, v.b,
                    v.r, v.margin);
      out += line;
    }
    if (s.violations.size() > kListedViolations) {
      std::snprintf(line, sizeof line, "    ... and %zu more\n",
                    s.violations.size() - kListedViolations);
      out += line;
    }
  }
  return out;
}

}  // namespace agmb
