#include "spiv/io.hpp"

#include <algorithm>
#include <ostream>

namespace spiv {

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  os << "x,f1,f2,f3,chart\n";
  for (const Sample& s : t.samples) {
    os << format_double(s.x) << ',' << format_double(s.f[0]) << ',' << format_double(s.f[1])
       << ',' << format_double(s.f[2]) << ',' << to_string(s.chart) << '\n';
  }
}

Json events_json(const std::vector<Event>& events) {
  Json out = Json::array();
  for (const Event& e : events) {
    Json j;
    if (e.kind == EventKind::Pole) {
      j["kind"] = "pole";
      j["type"] = "A" + std::to_string(e.index);
    } else {
      j["kind"] = "zero";
      j["component"] = e.index;
    }
    j["x"] = e.x;
    j["direction"] = e.direction;
    out.push_back(std::move(j));
  }
  return out;
}

Json params_json(const Params& p) {
  return Json{{"alpha1", p[0]}, {"alpha2", p[1]}, {"alpha3", p[2]}};
}

Params params_from_json(const Json& j) {
  std::array<double, 3> a{};
  for (int i = 0; i < 3; ++i) {
    const std::string key = "alpha" + std::to_string(i + 1);
    if (!j.contains(key) || !j[key].is_number())
      throw Error(ErrorKind::ParseError, "missing numeric key " + key);
    a[i] = j[key].get<double>();
  }
  return make_params(a[0], a[1], a[2]);
}

void write_scan_csv(std::ostream& os, const ScanGrid& g) {
  os << "u,v,n_minus,n_plus,left_class,right_class,sequence\n";
  for (const ScanCell& c : g.cells) {
    os << format_double(c.u) << ',' << format_double(c.v) << ',' << c.n_minus << ','
       << c.n_plus << ',' << to_string(c.left_class) << ',' << to_string(c.right_class) << ',';
    if (c.failed) {
      os << "Failed:" << c.error;
    } else {
      os << to_string(c.sequence);
    }
    os << '\n';
  }
}

std::array<std::uint8_t, 3> scan_color(const ScanCell& c) {
  auto shade = [](int n) { return static_cast<std::uint8_t>(std::min(n, 10) * 20); };
  if (c.failed) return {0, 0, 0};
  if (!c.resolved()) return {128, 128, 128};
  if (c.left_capped && c.right_capped) return {255, 255, 255};
  if (c.left_capped) return {shade(c.n_plus), shade(c.n_plus), 255};
  if (c.right_capped) return {255, shade(c.n_minus), shade(c.n_minus)};
  if (c.pole_free()) return {128, 0, 128};
  return {0, static_cast<std::uint8_t>(220 - shade(c.n_minus + c.n_plus) / 2), 0};
}

void write_scan_ppm(std::ostream& os, const ScanGrid& g) {
  os << "P6\n" << g.nu << ' ' << g.nv << "\n255\n";
  for (int j = g.nv - 1; j >= 0; --j)
    for (int i = 0; i < g.nu; ++i) {
      const auto px = scan_color(g.at(i, j));
      os.write(reinterpret_cast<const char*>(px.data()), 3);
    }
}

void write_polyline_csv(std::ostream& os, const std::vector<Eigen::Vector2d>& pts) {
  os << "u,v\n";
  for (const auto& p : pts) os << format_double(p.x()) << ',' << format_double(p.y()) << '\n';
}

Json ratfunc_json(const RatFunc& r) {
  auto coeffs = [](const Poly& p) {
    Json a = Json::array();
    for (const Rational& c : p.coeffs()) a.push_back(c.get_str());
    return a;
  };
  return Json{{"text", r.to_string()}, {"num", coeffs(r.num())}, {"den", coeffs(r.den())}};
}

Json rational_triple_json(const RationalTriple& r) {
  Json params = Json::array();
  for (int i = 0; i < 3; ++i) params.push_back(r.params[i].get_str());
  Json f = Json::array();
  for (int i = 0; i < 3; ++i) f.push_back(ratfunc_json(r[i]));
  return Json{{"params", params}, {"f", f}};
}

}  // namespace spiv
