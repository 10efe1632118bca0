#include "spiralcover/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace spiralcover {

using nlohmann::json;

double round_sig12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) throw SchemaError(std::string(what) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw SchemaError(std::string(what) + " must be finite");
  return x;
}

}  // namespace

Instance parse_instance(const json& doc, std::optional<double> radius_override) {
  if (!doc.is_object()) throw SchemaError("instance document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "radius" && key != "region_side" && key != "points")
      throw SchemaError("unknown instance key '" + key + "'");
  }

  Instance inst;
  if (radius_override) {
    inst.radius = *radius_override;
  } else {
    if (!doc.contains("radius")) throw SchemaError("instance is missing 'radius'");
    inst.radius = finite_number(doc["radius"], "radius");
  }
  if (!(inst.radius > 0.0) || !std::isfinite(inst.radius)) throw SchemaError("radius must be positive");

  if (doc.contains("region_side") && !doc["region_side"].is_null()) {
    const double side = finite_number(doc["region_side"], "region_side");
    if (!(side > 0.0)) throw SchemaError("region_side must be positive");
    inst.region_side = side;
  }

  if (!doc.contains("points") || !doc["points"].is_array())
    throw SchemaError("instance needs a 'points' array");
  for (const auto& p : doc["points"]) {
    if (!p.is_array() || p.size() != 2) throw SchemaError("each point must be [x, y]");
    inst.points.push_back({finite_number(p[0], "x"), finite_number(p[1], "y")});
  }
  if (inst.points.empty()) throw SchemaError("instance has no points");
  return inst;
}

json instance_to_json(const Instance& inst) {
  json pts = json::array();
  for (const Point& p : inst.points) pts.push_back({round_sig12(p.x), round_sig12(p.y)});
  json doc{{"radius", round_sig12(inst.radius)}, {"points", pts}};
  if (inst.region_side) doc["region_side"] = round_sig12(*inst.region_side);
  return doc;
}

Instance read_instance_file(const std::filesystem::path& path, std::optional<double> radius_override) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_instance(doc, radius_override);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

json solution_to_json(const Instance& inst, const Solution& sol) {
  if (auto err = check_solution(inst, sol)) throw std::logic_error("refusing to emit solution: " + *err);
  json centers = json::array();
  for (const Point& c : sol.centers) centers.push_back({round_sig12(c.x), round_sig12(c.y)});
  return json{{"algorithm", sol.algorithm},
              {"seed", sol.seed},
              {"m", sol.size()},
              {"centers", centers},
              {"newly_covered", sol.newly_covered},
              {"runtime_ms", sol.runtime_ms()},
              {"feasible", true}};
}

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2",
                                    "#17becf", "#bcbd22", "#ff7f0e", "#7f7f7f", "#393b79"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const Solution& sol) {
  const double r = inst.radius;
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto grow = [&](double x0, double y0, double x1, double y1) {
    lo_x = std::min(lo_x, x0);
    lo_y = std::min(lo_y, y0);
    hi_x = std::max(hi_x, x1);
    hi_y = std::max(hi_y, y1);
  };
  for (const Point& p : inst.points) grow(p.x, p.y, p.x, p.y);
  for (const Point& c : sol.centers) grow(c.x - r, c.y - r, c.x + r, c.y + r);
  if (inst.region_side) grow(0.0, 0.0, *inst.region_side, *inst.region_side);

  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, r});
  const double margin = 0.05 * extent;
  const double vx = lo_x - margin;
  const double vw = hi_x - lo_x + 2 * margin;
  const double vh = hi_y - lo_y + 2 * margin;
  // SVG y grows downwards; flip so north is up.
  auto X = [&](double x) { return fmt(x); };
  auto Y = [&](double y) { return fmt(hi_y + lo_y - y); };

  const double mark = extent / 120.0;
  const double stroke = extent / 600.0;

  std::vector<std::size_t> owner(inst.size(), 0);
  for (std::size_t m = 0; m < sol.newly_covered.size(); ++m)
    for (std::size_t k : sol.newly_covered[m]) owner[k] = m;
  auto color = [](std::size_t m) { return kPalette[m % std::size(kPalette)]; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(vx) << ' '
     << fmt(lo_y - margin) << ' ' << fmt(vw) << ' ' << fmt(vh) << "\">\n"
     << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#d62728\"/></marker></defs>\n";

  for (std::size_t m = 0; m < sol.size(); ++m) {
    const Point& c = sol.centers[m];
    os << "<circle class=\"coverage\" cx=\"" << X(c.x) << "\" cy=\"" << Y(c.y) << "\" r=\"" << fmt(r)
       << "\" fill=\"none\" stroke=\"" << color(m) << "\" stroke-width=\"" << fmt(stroke)
       << "\" stroke-dasharray=\"" << fmt(4 * stroke) << ' ' << fmt(3 * stroke) << "\"/>\n";
  }

  for (std::size_t k = 0; k < inst.size(); ++k) {
    const Point& p = inst.points[k];
    os << "<polygon class=\"gt\" points=\"" << X(p.x) << ',' << Y(p.y + mark) << ' ' << X(p.x - mark)
       << ',' << Y(p.y - 0.6 * mark) << ' ' << X(p.x + mark) << ',' << Y(p.y - 0.6 * mark)
       << "\" fill=\"" << color(owner[k]) << "\"/>\n";
  }

  if (sol.size() >= 2) {
    os << "<polyline class=\"path\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << fmt(stroke)
       << "\" stroke-dasharray=\"" << fmt(6 * stroke) << ' ' << fmt(2 * stroke) << ' ' << fmt(stroke)
       << ' ' << fmt(2 * stroke) << "\" marker-mid=\"url(#arrow)\" marker-end=\"url(#arrow)\" points=\"";
    for (std::size_t m = 0; m < sol.size(); ++m) {
      if (m) os << ' ';
      os << X(sol.centers[m].x) << ',' << Y(sol.centers[m].y);
    }
    os << "\"/>\n";
  }

  for (std::size_t m = 0; m < sol.size(); ++m) {
    const Point& c = sol.centers[m];
    os << "<rect class=\"mbs\" x=\"" << X(c.x - mark) << "\" y=\"" << Y(c.y + mark) << "\" width=\""
       << fmt(2 * mark) << "\" height=\"" << fmt(2 * mark) << "\" fill=\"" << color(m)
       << "\" stroke=\"#000\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace spiralcover
