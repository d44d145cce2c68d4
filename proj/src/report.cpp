#include "fermataudit/report.hpp"

#include <json.hpp>
#include <sstream>

#include "fermataudit/audit.hpp"
#include "fermataudit/errors.hpp"

namespace fermataudit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json interval_json(const Interval& iv) {
  return ordered_json::array({iv.lo().to_string(), iv.hi().to_string()});
}

ordered_json rationals_json(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) {
    arr.push_back(v.to_string());
  }
  return arr;
}

std::string interval_text(const Interval& iv) {
  return "[" + iv.lo().to_string() + ", " + iv.hi().to_string() + "]";
}

std::string rationals_text(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += values[i].to_string();
  }
  return out + "]";
}

ordered_json report_json(const AuditReport& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["params"] = {{"p", r.p}, {"u", r.u.to_string()}, {"epsilon", r.epsilon.to_string()}};
  j["polynomial"] = {{"degree", r.degree}, {"coefficients", rationals_json(r.coefficients)}};
  j["descartes"] = {{"variations", r.variations},
                    {"possible_positive_counts", r.possible_positive_counts},
                    {"negative_variations", r.negative_variations}};
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.newton.per_index) {
    rows.push_back({{"k", row.index},
                    {"lhs", row.lhs.to_string()},
                    {"rhs", row.rhs.to_string()},
                    {"holds", row.holds}});
  }
  j["newton"] = {{"per_index", std::move(rows)}, {"all_hold", r.newton.all_hold}};
  ordered_json isolating = ordered_json::array();
  for (const auto& iv : r.isolating_intervals) {
    isolating.push_back(interval_json(iv));
  }
  ordered_json refined = ordered_json::array();
  for (const auto& iv : r.refined_intervals) {
    refined.push_back(interval_json(iv));
  }
  j["real_roots"] = {{"distinct_count", r.distinct_count},
                     {"isolating_intervals", std::move(isolating)},
                     {"refined_intervals", std::move(refined)}};
  j["geometry"] = {{"alpha", interval_json(r.alpha)}, {"d_star", interval_json(r.d_star)}};
  j["vieta_product"] = r.vieta_product.to_string();
  j["square_free_degree"] = r.square_free_degree;
  ordered_json claims = ordered_json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"paper_anchor", c.paper_anchor},
                      {"verdict", c.holds ? "holds" : "fails"},
                      {"evidence", c.evidence}});
  }
  j["claims"] = std::move(claims);
  return j;
}

std::string report_text(const AuditReport& r) {
  std::ostringstream os;
  os << "slope-family audit report (schema " << r.schema_version << ")\n";
  os << "params: p=" << r.p << " u=" << r.u.to_string() << " epsilon=" << r.epsilon.to_string()
     << "\n";
  os << "polynomial: degree=" << r.degree << " coefficients=" << rationals_text(r.coefficients)
     << "\n";
  os << "descartes: variations=" << r.variations << " possible_positive_counts=[";
  for (std::size_t i = 0; i < r.possible_positive_counts.size(); ++i) {
    if (i > 0) {
      os << ", ";
    }
    os << r.possible_positive_counts[i];
  }
  os << "] negative_variations=" << r.negative_variations << "\n";
  for (const auto& row : r.newton.per_index) {
    os << "newton: k=" << row.index << " lhs=" << row.lhs.to_string()
       << " rhs=" << row.rhs.to_string() << " holds=" << (row.holds ? "true" : "false") << "\n";
  }
  os << "newton: all_hold=" << (r.newton.all_hold ? "true" : "false") << "\n";
  os << "real_roots: distinct_count=" << r.distinct_count << "\n";
  for (std::size_t i = 0; i < r.isolating_intervals.size(); ++i) {
    os << "real_roots: isolating[" << i << "]=" << interval_text(r.isolating_intervals[i]) << "\n";
  }
  for (std::size_t i = 0; i < r.refined_intervals.size(); ++i) {
    os << "real_roots: refined[" << i << "]=" << interval_text(r.refined_intervals[i]) << "\n";
  }
  os << "geometry: alpha=" << interval_text(r.alpha) << "\n";
  os << "geometry: d_star=" << interval_text(r.d_star) << " ("
     << GeometricSlope::sign_note << ")\n";
  os << "vieta_product: " << r.vieta_product.to_string() << "\n";
  os << "square_free_degree: " << r.square_free_degree << "\n";
  for (const auto& c : r.claims) {
    os << c.id << " " << (c.holds ? "holds" : "fails") << " — " << c.evidence << "\n";
  }
  return os.str();
}

Rational parse_rational_field(const ordered_json& j) {
  if (!j.is_string()) {
    throw parameter_error("parse_report: expected a rational string");
  }
  return Rational::parse(j.get<std::string>());
}

Interval parse_interval_field(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw parameter_error("parse_report: expected a two-element interval");
  }
  return Interval(parse_rational_field(j[0]), parse_rational_field(j[1]));
}

}  // namespace

std::string render_report(const AuditReport& report, ReportFormat format) {
  if (format == ReportFormat::text) {
    return report_text(report);
  }
  return report_json(report).dump(2) + "\n";
}

AuditReport parse_report(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw parameter_error(std::string("parse_report: invalid JSON: ") + e.what());
  }
  try {
    AuditReport r;
    r.schema_version = j.at("schema_version").get<int>();
    const auto& params = j.at("params");
    r.p = params.at("p").get<unsigned>();
    r.u = parse_rational_field(params.at("u"));
    r.epsilon = parse_rational_field(params.at("epsilon"));
    const auto& poly = j.at("polynomial");
    r.degree = poly.at("degree").get<std::size_t>();
    for (const auto& c : poly.at("coefficients")) {
      r.coefficients.push_back(parse_rational_field(c));
    }
    const auto& descartes = j.at("descartes");
    r.variations = descartes.at("variations").get<unsigned>();
    r.possible_positive_counts =
        descartes.at("possible_positive_counts").get<std::vector<unsigned>>();
    r.negative_variations = descartes.at("negative_variations").get<unsigned>();
    const auto& newton = j.at("newton");
    for (const auto& row : newton.at("per_index")) {
      NewtonCheckRow parsed;
      parsed.index = row.at("k").get<std::size_t>();
      parsed.lhs = parse_rational_field(row.at("lhs"));
      parsed.rhs = parse_rational_field(row.at("rhs"));
      parsed.holds = row.at("holds").get<bool>();
      r.newton.per_index.push_back(std::move(parsed));
    }
    r.newton.all_hold = newton.at("all_hold").get<bool>();
    const auto& roots = j.at("real_roots");
    r.distinct_count = roots.at("distinct_count").get<std::size_t>();
    for (const auto& iv : roots.at("isolating_intervals")) {
      r.isolating_intervals.push_back(parse_interval_field(iv));
    }
    for (const auto& iv : roots.at("refined_intervals")) {
      r.refined_intervals.push_back(parse_interval_field(iv));
    }
    const auto& geometry = j.at("geometry");
    r.alpha = parse_interval_field(geometry.at("alpha"));
    r.d_star = parse_interval_field(geometry.at("d_star"));
    r.vieta_product = parse_rational_field(j.at("vieta_product"));
    r.square_free_degree = j.at("square_free_degree").get<std::size_t>();
    for (const auto& c : j.at("claims")) {
      ClaimVerdict v;
      v.id = c.at("id").get<std::string>();
      v.statement = c.at("statement").get<std::string>();
      v.paper_anchor = c.at("paper_anchor").get<std::string>();
      const std::string verdict = c.at("verdict").get<std::string>();
      if (verdict != "holds" && verdict != "fails") {
        throw parameter_error("parse_report: verdict must be 'holds' or 'fails'");
      }
      v.holds = verdict == "holds";
      v.evidence = c.at("evidence").get<std::string>();
      r.claims.push_back(std::move(v));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw parameter_error(std::string("parse_report: malformed report: ") + e.what());
  }
}

std::string render_triple(const TripleReport& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["x"] = r.x.str();
    j["y"] = r.y.str();
    j["z"] = r.z.str();
    j["p"] = r.p;
    j["u"] = r.u.to_string();
    j["d"] = r.d.to_string();
    j["residual"] = r.residual.to_string();
    j["is_counterexample"] = r.is_counterexample;
    j["family_coefficients"] = rationals_json(r.family_coefficients);
    j["rational_roots"] = rationals_json(r.rational_roots);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "triple: x=" << r.x.str() << " y=" << r.y.str() << " z=" << r.z.str() << " p=" << r.p
     << "\n";
  os << "u: " << r.u.to_string() << "\n";
  os << "candidate slope d: " << r.d.to_string() << "\n";
  os << "residual: " << r.residual.to_string() << "\n";
  os << "counterexample: " << (r.is_counterexample ? "yes" : "no") << "\n";
  os << "integer family polynomial: " << rationals_text(r.family_coefficients) << "\n";
  os << "rational roots: " << rationals_text(r.rational_roots) << "\n";
  return os.str();
}

std::string render_search(const SearchResult& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["p"] = r.p;
    j["bound"] = r.bound.str();
    ordered_json sols = ordered_json::array();
    for (const auto& t : r.solutions) {
      sols.push_back({{"x", t.x.str()}, {"y", t.y.str()}, {"z", t.z.str()}});
    }
    j["solutions"] = std::move(sols);
    ordered_json misses = ordered_json::array();
    for (const auto& m : r.near_misses) {
      misses.push_back({{"x", m.x.str()},
                        {"y", m.y.str()},
                        {"z", m.z.str()},
                        {"residual", m.residual.str()}});
    }
    j["near_misses"] = std::move(misses);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "search: p=" << r.p << " bound=" << r.bound.str() << "\n";
  os << "solutions: " << r.solutions.size() << "\n";
  for (const auto& t : r.solutions) {
    os << "  solution: (" << t.x.str() << ", " << t.y.str() << ", " << t.z.str() << ")\n";
  }
  os << "near_misses: " << r.near_misses.size() << "\n";
  for (const auto& m : r.near_misses) {
    os << "  near_miss: (" << m.x.str() << ", " << m.y.str() << ", " << m.z.str()
       << ") residual=" << m.residual.str() << "\n";
  }
  return os.str();
}

std::string render_reduction(const ReductionResult& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["n"] = r.n.str();
    j["p"] = r.p.str();
    j["q"] = r.q.str();
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "reduce: n=" << r.n.str() << " p=" << r.p.str() << " q=" << r.q.str() << "\n";
  return os.str();
}

std::string render_diagonal(const DiagonalResult& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["n"] = r.n;
    j["xmax"] = r.xmax.str();
    ordered_json hits = ordered_json::array();
    for (const auto& h : r.hits) {
      hits.push_back({{"x", h.x.str()}, {"z", h.z.str()}});
    }
    j["hits"] = std::move(hits);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "diagonal: n=" << r.n << " xmax=" << r.xmax.str() << "\n";
  os << "hits: " << r.hits.size() << "\n";
  for (const auto& h : r.hits) {
    os << "  hit: x=" << h.x.str() << " z=" << h.z.str() << "\n";
  }
  return os.str();
}

std::string render_grid_entry(const GridEntry& entry, ReportFormat format) {
  if (entry.report) {
    return render_report(*entry.report, format);
  }
  if (format == ReportFormat::json) {
    ordered_json j;
    j["params"] = {{"p", entry.p}, {"u", entry.u.to_string()}};
    j["error"] = entry.error;
    return j.dump(2) + "\n";
  }
  return "p=" + std::to_string(entry.p) + " u=" + entry.u.to_string() + " error: " + entry.error +
         "\n";
}

std::string render_grid(const std::vector<GridEntry>& entries, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& entry : entries) {
      if (entry.report) {
        arr.push_back(report_json(*entry.report));
      } else {
        ordered_json j;
        j["params"] = {{"p", entry.p}, {"u", entry.u.to_string()}};
        j["error"] = entry.error;
        arr.push_back(std::move(j));
      }
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) {
      out += "\n";
    }
    out += render_grid_entry(entries[i], format);
  }
  return out;
}

}  // namespace fermataudit
