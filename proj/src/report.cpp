#include "climate_stress/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "climate_stress/error.hpp"
#include "csv.hpp"

namespace climate_stress {

using nlohmann::json;

std::string format_number(double x) {
  if (!std::isfinite(x)) {
    throw StressError(ErrorCode::DomainError, "cannot serialize a non-finite number");
  }
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

void write_string(std::string& out, const std::string& s) {
  out += json(s).dump();
}

void write_value(std::string& out, const json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {  // std::map: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_string(out, it.key());
        out += ": ";
        write_value(out, it.value(), depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write_value(out, v[i], depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_number(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

json optional_number(const std::optional<double>& x) {
  return x ? json(*x) : json(nullptr);
}

json group_map(const std::map<std::string, double>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

json to_json(const ScenarioOutcome& o, bool debug) {
  const StressResult& s = o.result;
  const ExposureReport& r = o.report;

  json rows = json::array();
  for (const auto& row : s.rows) {
    json j = {{"id", row.id},
              {"pd_s", row.pd_s},
              {"lgd_s", row.lgd_s},
              {"el_s", row.el_s},
              {"dv_s", row.dv_s}};
    if (debug) j["pd_unclamped"] = row.pd_unclamped;
    rows.push_back(std::move(j));
  }

  json top = json::array();
  for (const auto& c : r.top_contributors) {
    top.push_back({{"id", c.id}, {"el_s", c.el_s}, {"share", c.share}});
  }

  json exposure = {
      {"el_by_geo", group_map(r.el_by_geo)},
      {"el_by_sector", group_map(r.el_by_sector)},
      {"el_by_hazard_channel", group_map(r.el_by_hazard_channel)},
      {"hhi_geo", optional_number(r.hhi_geo)},
      {"hhi_sector", optional_number(r.hhi_sector)},
      {"hhi_channel", optional_number(r.hhi_channel)},
      {"hhi_ead_geo", optional_number(r.hhi_ead_geo)},
      {"hhi_ead_sector", optional_number(r.hhi_ead_sector)},
      {"hhi_ead_channel", optional_number(r.hhi_ead_channel)},
      {"collateral_uplift_el", r.collateral_uplift_el},
      {"top_contributors", top},
  };

  return {{"scenario_id", s.scenario_id},
          {"weights_source", std::string(to_string(r.weights_source))},
          {"rows", rows},
          {"total_el", s.total_el},
          {"total_ead", s.total_ead},
          {"climate_var", s.climate_var},
          {"exposure", exposure}};
}

std::string opt(const std::optional<double>& x) { return x ? format_number(*x) : ""; }

std::string to_csv(std::span<const ScenarioOutcome> results, bool debug) {
  std::ostringstream out;
  out << "scenario_id,id,pd_s,lgd_s,el_s,dv_s" << (debug ? ",pd_unclamped" : "") << '\n';
  for (const auto& o : results) {
    for (const auto& row : o.result.rows) {
      out << csv::escape(o.result.scenario_id) << ',' << csv::escape(row.id) << ','
          << format_number(row.pd_s) << ',' << format_number(row.lgd_s) << ','
          << format_number(row.el_s) << ',' << format_number(row.dv_s);
      if (debug) out << ',' << format_number(row.pd_unclamped);
      out << '\n';
    }
  }
  out << '\n';
  out << "scenario_id,total_ead,total_el,climate_var,collateral_uplift_el,hhi_geo,hhi_sector,"
         "hhi_channel,weights_source\n";
  for (const auto& o : results) {
    const auto& r = o.report;
    out << csv::escape(o.result.scenario_id) << ',' << format_number(o.result.total_ead) << ','
        << format_number(o.result.total_el) << ',' << format_number(o.result.climate_var) << ','
        << format_number(r.collateral_uplift_el) << ',' << opt(r.hhi_geo) << ','
        << opt(r.hhi_sector) << ',' << opt(r.hhi_channel) << ',' << to_string(r.weights_source)
        << '\n';
  }
  return out.str();
}

}  // namespace

std::string canonical_json(const json& doc) {
  std::string out;
  write_value(out, doc, 0);
  out += '\n';
  return out;
}

std::string emit_report(std::span<const ScenarioOutcome> results, const ReportOptions& options) {
  if (options.format == ReportFormat::csv) return to_csv(results, options.debug);
  json doc = json::array();
  for (const auto& o : results) doc.push_back(to_json(o, options.debug));
  return canonical_json(doc);
}

}  // namespace climate_stress
