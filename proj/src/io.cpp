#include "mcmf/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace mcmf {
namespace {

using Json = nlohmann::ordered_json;

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(BigInt(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw InputError("expected an integer or \"p/q\" string in " + where);
}

Json rat_to_json(const Rat& r) {
  static const BigInt kSafe = BigInt(1) << 53;
  if (denominator(r) == 1 && numerator(r) < kSafe && numerator(r) > -kSafe)
    return Json(static_cast<long long>(numerator(r)));
  return Json(rat_str(r));
}

Vec vec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError("expected a vector in " + where);
  Vec v;
  for (const auto& c : j) v.e.push_back(rat_from_json(c, where));
  return v;
}

Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (const auto& c : v.e) arr.push_back(rat_to_json(c));
  return arr;
}

Region region_from_json(const Json& j, std::size_t k, const std::string& where) {
  if (!j.is_object()) throw InputError("capacity must be an object in " + where);
  if (j.contains("points")) {
    std::vector<Vec> pts;
    for (const auto& p : j["points"]) {
      Vec v = vec_from_json(p, where);
      if (v.dim() != k) throw InputError("capacity dimension mismatch in " + where);
      pts.push_back(std::move(v));
    }
    return Region::point_set(k, std::move(pts));
  }
  if (j.contains("polygons")) {
    if (k != 2) throw InputError("polygonal capacities need k = 2 in " + where);
    std::vector<ConvexPolygon> pieces;
    for (const auto& poly : j["polygons"]) {
      if (!poly.is_object() || !poly.contains("halfspaces"))
        throw InputError("polygon needs a halfspaces list in " + where);
      std::vector<Halfspace> hs;
      for (const auto& h : poly["halfspaces"]) {
        if (!h.is_array() || h.size() != 2 || !h[0].is_array() || h[0].size() != 2)
          throw InputError("halfspace must be [[a1,a2],b] in " + where);
        hs.push_back({rat_from_json(h[0][0], where), rat_from_json(h[0][1], where),
                      rat_from_json(h[1], where)});
      }
      auto piece = ConvexPolygon::from_halfspaces(hs);  // throws when unbounded
      if (!piece) throw InputError("empty polygon piece in " + where);
      pieces.push_back(std::move(*piece));
    }
    return Region::polygonal(std::move(pieces));
  }
  throw InputError("capacity needs \"points\" or \"polygons\" in " + where);
}

Json capacity_to_json(const Region& r) {
  Json j = Json::object();
  if (r.is_point_set()) {
    Json pts = Json::array();
    for (const auto& p : r.points()) pts.push_back(vec_to_json(p));
    j["points"] = std::move(pts);
    return j;
  }
  Json polys = Json::array();
  for (const auto& piece : r.pieces()) {
    Json hs = Json::array();
    for (const auto& h : piece.halfspaces())
      hs.push_back(Json::array({Json::array({rat_to_json(h.ax), rat_to_json(h.ay)}),
                                rat_to_json(h.b)}));
    polys.push_back(Json{{"halfspaces", std::move(hs)}});
  }
  j["polygons"] = std::move(polys);
  return j;
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

NetworkDocument parse_network_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("syntax error at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("network document must be an object");
  NetworkDocument doc;
  doc.version = j.value("version", std::string("1"));
  if (!j.contains("k") || !j["k"].is_number_integer() || j["k"].get<long long>() < 1)
    throw InputError("field k must be a positive integer");
  doc.k = static_cast<std::size_t>(j["k"].get<long long>());
  if (!j.contains("nodes") || !j["nodes"].is_array())
    throw InputError("field nodes must be a string list");
  for (const auto& n : j["nodes"]) doc.nodes.push_back(n.get<std::string>());
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw InputError("field arcs must be a list");
  for (const auto& a : j["arcs"]) {
    NetworkDocument::ArcEntry entry;
    for (const char* field : {"id", "tail", "head"})
      if (!a.contains(field) || !a[field].is_string())
        throw InputError(std::string("arc missing string field '") + field + "'");
    entry.id = a["id"].get<std::string>();
    entry.tail = a["tail"].get<std::string>();
    entry.head = a["head"].get<std::string>();
    if (!a.contains("capacity")) throw InputError("arc '" + entry.id + "' missing capacity");
    entry.capacity = region_from_json(a["capacity"], doc.k, "arc '" + entry.id + "'");
    doc.arcs.push_back(std::move(entry));
  }
  if (!j.contains("source") || !j.contains("sink"))
    throw InputError("document needs source and sink");
  doc.source = j["source"].get<std::string>();
  doc.sink = j["sink"].get<std::string>();
  if (j.contains("flags") && j["flags"].is_object())
    doc.reducible_declared = j["flags"].value("reducible_declared", false);
  return doc;
}

EnhancedNetwork to_network(const NetworkDocument& doc) {
  std::vector<ArcDesc> arcs;
  arcs.reserve(doc.arcs.size());
  for (const auto& a : doc.arcs) arcs.push_back({a.id, a.tail, a.head, a.capacity});
  return EnhancedNetwork::build(doc.k, doc.nodes, arcs, doc.source, doc.sink);
}

EnhancedNetwork parse_network(const std::string& text) {
  return to_network(parse_network_document(text));
}

std::string serialize(const NetworkDocument& doc) {
  Json j = Json::object();
  j["version"] = doc.version;
  j["k"] = doc.k;
  j["nodes"] = doc.nodes;
  Json arcs = Json::array();
  for (const auto& a : doc.arcs) {
    Json e = Json::object();
    e["id"] = a.id;
    e["tail"] = a.tail;
    e["head"] = a.head;
    e["capacity"] = capacity_to_json(a.capacity);
    arcs.push_back(std::move(e));
  }
  j["arcs"] = std::move(arcs);
  j["source"] = doc.source;
  j["sink"] = doc.sink;
  j["flags"] = Json{{"reducible_declared", doc.reducible_declared}};
  return j.dump(2) + "\n";
}

std::string region_csv(const Region& r) {
  std::ostringstream out;
  if (r.is_point_set()) {
    out << "index";
    std::size_t k = r.dim();
    if (k == 2) {
      out << ",x,y\n";
    } else {
      for (std::size_t i = 0; i < k; ++i) out << ",c" << i;
      out << "\n";
    }
    for (std::size_t i = 0; i < r.points().size(); ++i) {
      out << i;
      for (const auto& c : r.points()[i].e) out << "," << rat_str(c);
      out << "\n";
    }
    return out.str();
  }
  out << "piece,vertex,x,y\n";
  for (std::size_t p = 0; p < r.pieces().size(); ++p) {
    const auto& verts = r.pieces()[p].vertices();
    for (std::size_t v = 0; v < verts.size(); ++v)
      out << p << "," << v << "," << rat_str(verts[v].x) << "," << rat_str(verts[v].y) << "\n";
  }
  return out.str();
}

std::string region_json(const Region& r) {
  Json j = Json::object();
  if (r.is_point_set()) {
    Json pts = Json::array();
    for (const auto& p : r.points()) pts.push_back(vec_to_json(p));
    j["points"] = std::move(pts);
  } else {
    Json polys = Json::array();
    for (const auto& piece : r.pieces()) {
      Json verts = Json::array();
      for (const auto& v : piece.vertices())
        verts.push_back(Json::array({rat_to_json(v.x), rat_to_json(v.y)}));
      polys.push_back(Json{{"vertices", std::move(verts)}});
    }
    j["polygons"] = std::move(polys);
  }
  return j.dump(2) + "\n";
}

std::string values_csv(const LocalFlowFamily& fam, std::size_t k) {
  std::ostringstream out;
  if (k == 2) {
    out << "x,y,realizations\n";
  } else {
    for (std::size_t i = 0; i < k; ++i) out << "c" << i << ",";
    out << "realizations\n";
  }
  for (const auto& [value, idx] : fam.by_value()) {
    for (const auto& c : value.e) out << rat_str(c) << ",";
    out << idx.size() << "\n";
  }
  out << "# semantic_comparisons," << fam.counters.semantic.str() << "\n";
  out << "# actual_operations," << fam.counters.actual.str() << "\n";
  return out.str();
}

std::string family_json(const EnhancedNetwork& net, const LocalFlowFamily& fam,
                        bool realizations) {
  Json j = Json::object();
  Json vals = Json::array();
  for (const auto& [value, idx] : fam.by_value()) {
    Json v = Json::object();
    v["value"] = vec_to_json(value);
    v["realizations"] = idx.size();
    if (realizations) {
      Json flows = Json::array();
      for (std::size_t i : idx) {
        Json assign = Json::object();
        for (const auto& [arc, vec] : fam.flows[i].assignment)
          assign[net.arc(arc).id] = vec_to_json(vec);
        flows.push_back(std::move(assign));
      }
      v["flows"] = std::move(flows);
    }
    vals.push_back(std::move(v));
  }
  j["values"] = std::move(vals);
  j["counters"] = Json{{"semantic_comparisons", fam.counters.semantic.str()},
                       {"actual_operations", fam.counters.actual.str()}};
  return j.dump(2) + "\n";
}

std::string assignment_json(const ArcAssignment& f) {
  Json j = Json::object();
  for (const auto& [id, v] : f) j[id] = vec_to_json(v);
  return j.dump(2) + "\n";
}

namespace {

// Exact fixed-point rendering keeps SVG output byte-deterministic.
std::string svg_num(const Rat& r) {
  BigInt scaled = floor_rat(r * 100 + Rat(1, 2));
  BigInt ip = scaled / 100, fp = scaled % 100;
  if (fp < 0) {
    fp += 100;
    ip -= 1;
  }
  std::string s = ip.str();
  if (fp != 0) {
    std::string frac = fp.str();
    if (frac.size() < 2) frac = "0" + frac;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    s += "." + frac;
  }
  return s;
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers) {
  // Integer bounds over everything drawn, padded one unit.
  BigInt xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  auto widen = [&](const Rat& x, const Rat& y) {
    BigInt fx = floor_rat(x), cx = ceil_rat(x), fy = floor_rat(y), cy = ceil_rat(y);
    if (first || fx < xmin) xmin = fx;
    if (first || cx > xmax) xmax = cx;
    if (first || fy < ymin) ymin = fy;
    if (first || cy > ymax) ymax = cy;
    first = false;
  };
  for (const auto& layer : layers) {
    if (layer.region.is_point_set()) {
      for (const auto& p : layer.region.points())
        if (p.dim() == 2) widen(p[0], p[1]);
    } else if (layer.region.is_polygonal()) {
      for (const auto& piece : layer.region.pieces())
        for (const auto& v : piece.vertices()) widen(v.x, v.y);
    }
  }
  xmin -= 1;
  ymin -= 1;
  xmax += 1;
  ymax += 1;

  const int scale = 40, pad = 24;
  auto px = [&](const Rat& x) { return svg_num((x - Rat(xmin)) * scale + pad); };
  auto py = [&](const Rat& y) { return svg_num((Rat(ymax) - y) * scale + pad); };
  BigInt wunits = xmax - xmin, hunits = ymax - ymin;
  std::string width = (Rat(wunits) * scale + 2 * pad).str();
  std::string height = (Rat(hunits) * scale + 2 * pad).str();

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (BigInt gx = xmin; gx <= xmax; ++gx) {
    out << "  <line x1=\"" << px(Rat(gx)) << "\" y1=\"" << py(Rat(ymin)) << "\" x2=\""
        << px(Rat(gx)) << "\" y2=\"" << py(Rat(ymax))
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << px(Rat(gx)) << "\" y=\"" << svg_num(Rat((hunits)*scale + 2 * pad) - 6)
        << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#555555\">" << gx.str()
        << "</text>\n";
  }
  for (BigInt gy = ymin; gy <= ymax; ++gy) {
    out << "  <line x1=\"" << px(Rat(xmin)) << "\" y1=\"" << py(Rat(gy)) << "\" x2=\""
        << px(Rat(xmax)) << "\" y2=\"" << py(Rat(gy))
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"6\" y=\"" << py(Rat(gy))
        << "\" font-size=\"10\" text-anchor=\"start\" fill=\"#555555\">" << gy.str()
        << "</text>\n";
  }
  for (const auto& layer : layers) {
    out << "  <g fill=\"" << layer.fill << "\" fill-opacity=\"0.45\" stroke=\"" << layer.fill
        << "\" stroke-width=\"1.5\">\n";
    if (layer.region.is_polygonal()) {
      for (const auto& piece : layer.region.pieces()) {
        const auto& verts = piece.vertices();
        if (verts.size() == 1) {
          out << "    <circle cx=\"" << px(verts[0].x) << "\" cy=\"" << py(verts[0].y)
              << "\" r=\"3\"/>\n";
        } else if (verts.size() == 2) {
          out << "    <line x1=\"" << px(verts[0].x) << "\" y1=\"" << py(verts[0].y)
              << "\" x2=\"" << px(verts[1].x) << "\" y2=\"" << py(verts[1].y)
              << "\" stroke-width=\"3\"/>\n";
        } else {
          out << "    <polygon points=\"";
          for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) out << " ";
            out << px(verts[i].x) << "," << py(verts[i].y);
          }
          out << "\"/>\n";
        }
      }
    } else if (layer.region.is_point_set()) {
      for (const auto& p : layer.region.points())
        if (p.dim() == 2)
          out << "    <circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1]) << "\" r=\"3\"/>\n";
    }
    out << "  </g>\n";
  }
  // Legend
  int ly = 16;
  for (const auto& layer : layers) {
    out << "  <rect x=\"" << pad << "\" y=\"" << ly - 10
        << "\" width=\"10\" height=\"10\" fill=\"" << layer.fill << "\"/>\n";
    out << "  <text x=\"" << pad + 14 << "\" y=\"" << ly - 1 << "\" font-size=\"11\">"
        << layer.label << "</text>\n";
    ly += 15;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace mcmf
