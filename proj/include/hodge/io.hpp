#pragma once

// JSON, TSV and SVG encodings for the CLI. Rationals are written as JSON
// integers when integral and as "num/den" strings otherwise; both forms are
// accepted on input.

#include "hodge/deligne.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace hodge::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) {
  if (is_integral(q)) {
    const Integer z = numerator(q);
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
      return Json(z.convert_to<std::int64_t>());
  }
  return Json(to_string(q));
}

inline Json to_json(const Integer& z) { return to_json(Rational(z)); }

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

inline Json to_json(const PlanarPolygon& poly) {
  Json a = Json::array();
  for (const auto& v : poly.vertices()) a.push_back(Json::array({to_json(v.x), to_json(v.y)}));
  return a;
}

/// Rational integers as numbers, other elements of Z[zeta_p] as {"zeta": coordinates}.
inline Json to_json(const CyclotomicInteger& c) {
  if (auto z = c.as_integer()) return to_json(*z);
  Json coords = Json::array();
  for (const auto& x : c.coords()) coords.push_back(to_json(x));
  return Json{{"zeta", coords}};
}

inline Json to_json(const ExtRational& q) { return q.is_infinite() ? Json("inf") : to_json(q.value()); }

// ---------------------------------------------------------------- parsing

inline Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": malformed JSON (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

inline Json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  require(j.is_object(), where + ": expected a JSON object");
  auto it = j.find(key);
  require(it != j.end(), where + ": missing \"" + key + "\"");
  return *it;
}

inline Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError(where + ": not a rational \"" + j.get<std::string>() + "\"");
    }
  }
  throw InputError(where + ": expected an integer or a \"num/den\" string");
}

inline std::int64_t int_from(const Json& j, const std::string& where) {
  require(j.is_number_integer(), where + ": expected an integer");
  return j.get<std::int64_t>();
}

inline IntVector int_vector_from(const Json& j, const std::string& where) {
  require(j.is_array(), where + ": expected an array of integers");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(Integer(int_from(j[i], where + "[" + std::to_string(i) + "]")));
  return v;
}

inline RationalVector rational_vector_from(const Json& j, const std::string& where) {
  require(j.is_array(), where + ": expected an array of rationals");
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline std::vector<IntVector> points_from(const Json& j, const std::string& where) {
  require(j.is_array() && !j.empty(), where + ": expected a nonempty array of points");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(int_vector_from(j[i], where + "[" + std::to_string(i) + "]"));
    require(out.back().size() == out.front().size(), where + ": points of different dimensions");
  }
  return out;
}

/// {"vertices": [[...], ...]}; the origin is implicit and must not be listed.
inline LatticePolytope polytope_from(const Json& j) {
  const auto verts = points_from(field(j, "vertices", "polytope"), "polytope.vertices");
  for (const auto& v : verts)
    require(std::any_of(v.begin(), v.end(), [](const Integer& c) { return c != 0; }),
            "polytope.vertices: the origin is implicit and must not be listed");
  return LatticePolytope::from_points(verts, true);
}

inline Json polytope_to_json(const LatticePolytope& P) {
  Json verts = Json::array();
  for (const auto& v : P.vertices())
    if (std::any_of(v.begin(), v.end(), [](const Integer& c) { return c != 0; })) verts.push_back(to_json(v));
  return Json{{"vertices", verts}};
}

/// {"p", "a", "n", "terms": [{"exp": [...], "coeff": [c0, c1, ...]}]}; "coeff" may be a plain integer.
inline LaurentPolynomial laurent_from(const Json& j) {
  const auto p = int_from(field(j, "p", "laurent"), "laurent.p");
  const auto a = j.contains("a") ? int_from(j["a"], "laurent.a") : 1;
  require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), "laurent.p: must be prime");
  require(a >= 1 && a <= 64, "laurent.a: must be a positive extension degree");
  const FiniteField F(p, static_cast<int>(a));
  const auto& terms = field(j, "terms", "laurent");
  require(terms.is_array() && !terms.empty(), "laurent.terms: expected a nonempty array");
  std::int64_t n = j.contains("n") ? int_from(j["n"], "laurent.n") : -1;
  std::vector<LaurentTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "laurent.terms[" + std::to_string(i) + "]";
    const auto e = int_vector_from(field(terms[i], "exp", where), where + ".exp");
    if (n < 0) n = static_cast<std::int64_t>(e.size());
    const auto& c = field(terms[i], "coeff", where);
    std::vector<std::int64_t> coords;
    if (c.is_array())
      for (std::size_t k = 0; k < c.size(); ++k) coords.push_back(int_from(c[k], where + ".coeff"));
    else
      coords.push_back(int_from(c, where + ".coeff"));
    out.push_back({e, F.from_coords(coords)});
  }
  return LaurentPolynomial(F, static_cast<std::size_t>(n), out);
}

inline Json laurent_to_json(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json c = Json::array();
    for (auto x : f.field().coords(t.coefficient)) c.push_back(x);
    terms.push_back(Json{{"exp", to_json(t.exponent)}, {"coeff", c}});
  }
  return Json{{"p", f.field().p()}, {"a", f.field().degree()}, {"n", f.variables()}, {"terms", terms}};
}

inline PlanarPolygon polygon_from(const Json& j) {
  require(j.is_array() && !j.empty(), "polygon: expected a nonempty array of [x, y] pairs");
  std::vector<PlanarPoint> pts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "polygon[" + std::to_string(i) + "]";
    require(j[i].is_array() && j[i].size() == 2, where + ": expected [x, y]");
    pts.push_back({rational_from(j[i][0], where), rational_from(j[i][1], where)});
  }
  return PlanarPolygon(std::move(pts));
}

/**
 * Decomposition input: "points" (required), optional "cells" (index lists),
 * "v0", "v1" (indices), "cuts" ([{"coeffs": [...], "level": r}] for the
 * hyperplane <coeffs, x> = r), "phi" (one value per point) and "polytope".
 */
struct DecompositionInput {
  PointConfiguration config;
  std::optional<std::vector<std::vector<std::size_t>>> cells;
  std::optional<std::size_t> v0, v1;
  std::vector<AffineFunctional> cuts;
  std::optional<HeightFunction> phi;
  std::optional<LatticePolytope> polytope;
};

inline std::size_t index_from(const Json& j, std::size_t size, const std::string& where) {
  const auto i = int_from(j, where);
  require(i >= 0 && static_cast<std::size_t>(i) < size, where + ": index out of range");
  return static_cast<std::size_t>(i);
}

inline DecompositionInput decomposition_from(const Json& j) {
  DecompositionInput in{PointConfiguration(points_from(field(j, "points", "decomposition"), "points")), {}, {}, {}, {},
                        {}, {}};
  const std::size_t N = in.config.size();
  if (j.contains("cells")) {
    const auto& cs = j["cells"];
    require(cs.is_array(), "cells: expected an array of index lists");
    std::vector<std::vector<std::size_t>> cells;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const std::string where = "cells[" + std::to_string(c) + "]";
      require(cs[c].is_array() && !cs[c].empty(), where + ": expected a nonempty index list");
      std::vector<std::size_t> cell;
      for (const auto& x : cs[c]) cell.push_back(index_from(x, N, where));
      cells.push_back(std::move(cell));
    }
    in.cells = std::move(cells);
  }
  if (j.contains("v0")) in.v0 = index_from(j["v0"], N, "v0");
  if (j.contains("v1")) in.v1 = index_from(j["v1"], N, "v1");
  if (j.contains("cuts")) {
    const auto& cs = j["cuts"];
    require(cs.is_array(), "cuts: expected an array");
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const std::string where = "cuts[" + std::to_string(c) + "]";
      auto coeffs = rational_vector_from(field(cs[c], "coeffs", where), where + ".coeffs");
      require(coeffs.size() == in.config.ambient_dimension(), where + ": coefficient count differs from point dimension");
      in.cuts.push_back(level_hyperplane(std::move(coeffs), rational_from(field(cs[c], "level", where), where + ".level")));
    }
  }
  if (j.contains("phi")) {
    auto phi = rational_vector_from(j["phi"], "phi");
    require(phi.size() == N, "phi: expected one value per point");
    in.phi = std::move(phi);
  }
  if (j.contains("polytope")) in.polytope = polytope_from(j["polytope"]);
  return in;
}

inline Json cells_to_json(const std::vector<std::vector<std::size_t>>& cells) {
  Json a = Json::array();
  for (const auto& c : cells) a.push_back(c);
  return a;
}

inline Json decomposition_to_json(const Decomposition& T) {
  Json pts = Json::array();
  for (const auto& p : T.config.points()) pts.push_back(to_json(p));
  return Json{{"points", pts}, {"cells", cells_to_json(T.canonical_cells())}};
}

/// Objects indented one key per line; arrays without nested objects on a single line.
inline void write_pretty(std::ostream& os, const Json& j, int indent = 0) {
  const auto has_object = [](const Json& a) {
    return std::any_of(a.begin(), a.end(), [](const Json& e) { return e.is_object(); });
  };
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      os << std::string(static_cast<std::size_t>(indent + 2), ' ') << Json(k).dump() << ": ";
      write_pretty(os, v, indent + 2);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << "}";
  } else if (j.is_array() && has_object(j)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << std::string(static_cast<std::size_t>(indent + 2), ' ');
      write_pretty(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << "]";
  } else {
    std::string flat = j.dump();
    std::string spaced;
    bool in_string = false;
    for (std::size_t i = 0; i < flat.size(); ++i) {
      const char ch = flat[i];
      if (ch == '"' && (i == 0 || flat[i - 1] != '\\')) in_string = !in_string;
      spaced += ch;
      if (!in_string && (ch == ',' || ch == ':')) spaced += ' ';
    }
    os << spaced;
  }
}

inline std::string pretty(const Json& j) {
  std::ostringstream os;
  write_pretty(os, j);
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------- polygon text formats

inline std::string to_tsv(const PlanarPolygon& poly) {
  std::string out;
  for (const auto& v : poly.vertices()) out += to_string(v.x) + "\t" + to_string(v.y) + "\n";
  return out;
}

/// Straight-line plot of one or more polygons in a fixed 640x480 frame.
inline std::string to_svg(const std::vector<std::pair<std::string, PlanarPolygon>>& polys) {
  require(!polys.empty(), "nothing to plot");
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& [name, poly] : polys)
    for (const auto& v : poly.vertices()) {
      const double x = v.x.convert_to<double>(), y = v.y.convert_to<double>();
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double W = 640, H = 480, margin = 40;
  auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (W - 2 * margin); };
  auto sy = [&](double y) { return H - margin - (y - ymin) / (ymax - ymin) * (H - 2 * margin); };
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
  os << "  <rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  os << "  <line x1=\"" << margin << "\" y1=\"" << H - margin << "\" x2=\"" << W - margin << "\" y2=\"" << H - margin
     << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << H - margin
     << "\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& [name, poly] = polys[i];
    const char* colour = colours[i % 4];
    os << "  <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < poly.vertices().size(); ++k) {
      const auto& v = poly.vertices()[k];
      os << (k ? " " : "") << sx(v.x.convert_to<double>()) << "," << sy(v.y.convert_to<double>());
    }
    os << "\"/>\n";
    for (const auto& v : poly.vertices())
      os << "  <circle cx=\"" << sx(v.x.convert_to<double>()) << "\" cy=\"" << sy(v.y.convert_to<double>())
         << "\" r=\"3\" fill=\"" << colour << "\"><title>(" << to_string(v.x) << ", " << to_string(v.y)
         << ")</title></circle>\n";
    os << "  <text x=\"" << W - margin - 100 << "\" y=\"" << margin + 16 * static_cast<double>(i) << "\" fill=\""
       << colour << "\" font-family=\"monospace\" font-size=\"12\">" << name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hodge::io
