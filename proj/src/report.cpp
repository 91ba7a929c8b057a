#include "heis/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace heis {

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("config: n must be >= 1");
  if (samples < 0) throw std::invalid_argument("config: samples must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("config: tol must be positive");
  if (format != "json" && format != "csv" && format != "text")
    throw std::invalid_argument("config: format must be json, csv or text");
}

CheckResult check_value(std::string name, double observed, double expected,
                        double tolerance, std::string note) {
  const bool ok = std::abs(observed - expected) <= tolerance;
  return CheckResult{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                     observed, expected, tolerance, std::move(note)};
}

CheckResult check_upper(std::string name, double observed, double bound,
                        std::string note) {
  if (note.empty()) note = "pass iff observed <= expected";
  return CheckResult{std::move(name),
                     observed <= bound ? CheckStatus::pass : CheckStatus::fail,
                     observed, bound, 0.0, std::move(note)};
}

CheckResult check_lower(std::string name, double observed, double bound,
                        std::string note) {
  if (note.empty()) note = "pass iff observed >= expected";
  return CheckResult{std::move(name),
                     observed >= bound ? CheckStatus::pass : CheckStatus::fail,
                     observed, bound, 0.0, std::move(note)};
}

CheckResult info_value(std::string name, double observed, std::string note) {
  return CheckResult{std::move(name), CheckStatus::info, observed, 0.0, 0.0,
                     std::move(note)};
}

bool Report::all_pass() const {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == CheckStatus::fail;
  });
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::info: return "info";
  }
  return "?";
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::vector<CheckResult> sorted_results(const Report& report) {
  std::vector<CheckResult> rs = report.results;
  std::stable_sort(rs.begin(), rs.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.name < b.name;
                   });
  return rs;
}

}  // namespace

std::string to_json(const Report& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"command\": \"" << json_escape(report.command) << "\",\n";
  out << "  \"config\": {\n";
  out << "    \"n\": " << report.config.n << ",\n";
  out << "    \"seed\": " << report.config.seed << ",\n";
  out << "    \"tol\": " << format_double(report.config.tol) << ",\n";
  out << "    \"samples\": " << report.config.samples << ",\n";
  out << "    \"map\": \"" << json_escape(report.config.map) << "\",\n";
  out << "    \"target\": \"" << json_escape(report.config.target) << "\"\n";
  out << "  },\n";
  out << "  \"results\": [\n";
  const auto rs = sorted_results(report);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const CheckResult& r = rs[i];
    out << "    {\"name\": \"" << json_escape(r.name) << "\", \"status\": \""
        << status_name(r.status) << "\", \"observed\": "
        << format_double(r.observed) << ", \"expected\": "
        << format_double(r.expected) << ", \"tolerance\": "
        << format_double(r.tolerance) << ", \"note\": \""
        << json_escape(r.note) << "\"}" << (i + 1 < rs.size() ? "," : "")
        << "\n";
  }
  out << "  ],\n";
  out << "  \"wall_time\": " << format_double(report.wall_time) << "\n";
  out << "}\n";
  return out.str();
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "  (n=" << report.config.n
      << " seed=" << report.config.seed << " tol=" << format_double(report.config.tol);
  if (!report.config.map.empty()) out << " map=" << report.config.map;
  out << ")\n";
  int fails = 0;
  for (const CheckResult& r : sorted_results(report)) {
    out << "  [" << status_name(r.status) << "] " << r.name
        << ": observed=" << format_double(r.observed);
    if (r.status != CheckStatus::info) {
      out << " expected=" << format_double(r.expected);
      if (r.tolerance > 0.0) out << " tol=" << format_double(r.tolerance);
    }
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
    if (r.status == CheckStatus::fail) ++fails;
  }
  out << (fails == 0 ? "all checks passed" : std::to_string(fails) + " check(s) failed")
      << "  [" << format_double(report.wall_time) << " s]\n";
  return out.str();
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "name,status,observed,expected,tolerance,note\n";
  for (const CheckResult& r : sorted_results(report)) {
    std::string note = r.note;
    std::replace(note.begin(), note.end(), ',', ';');
    out << r.name << "," << status_name(r.status) << ","
        << format_double(r.observed) << "," << format_double(r.expected) << ","
        << format_double(r.tolerance) << "," << note << "\n";
  }
  return out.str();
}

std::string pairs_to_csv(const std::vector<PairSample>& pairs, int n) {
  std::ostringstream out;
  out << "s1";
  for (int i = 1; i <= n; ++i) out << ",a1_" << i;
  for (int i = 1; i <= n; ++i) out << ",b1_" << i;
  out << ",s2";
  for (int i = 1; i <= n; ++i) out << ",a2_" << i;
  for (int i = 1; i <= n; ++i) out << ",b2_" << i;
  out << ",d_source,d_image,ratio\n";
  for (const PairSample& p : pairs) {
    out << format_double(p.a.s);
    for (int i = 0; i < n; ++i) out << "," << format_double(p.a.sphere.a[i]);
    for (int i = 0; i < n; ++i) out << "," << format_double(p.a.sphere.b[i]);
    out << "," << format_double(p.b.s);
    for (int i = 0; i < n; ++i) out << "," << format_double(p.b.sphere.a[i]);
    for (int i = 0; i < n; ++i) out << "," << format_double(p.b.sphere.b[i]);
    out << "," << format_double(p.d_source) << "," << format_double(p.d_image)
        << "," << format_double(p.ratio) << "\n";
  }
  return out.str();
}

int emit_report(const Report& report) {
  std::string rendered;
  if (report.config.format == "json")
    rendered = to_json(report);
  else if (report.config.format == "csv")
    rendered = to_csv(report);
  else
    rendered = to_text(report);

  if (report.config.out.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream file(report.config.out);
    if (!file)
      throw std::invalid_argument("cannot open output file " + report.config.out);
    file << rendered;
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace heis
