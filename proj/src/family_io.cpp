#include "shatter/family_io.hpp"

namespace shatter {

namespace {

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SyntaxError(e.what(), static_cast<long long>(e.byte));
  }
}

Rat rat_field(const Json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + " must be a rational string");
  auto r = try_parse_rat(j.get_ref<const std::string&>());
  if (!r) throw ValidationError(std::string(what) + ": invalid rational \"" +
                                j.get_ref<const std::string&>() + "\"");
  return *r;
}

const char* kind_name(BodyKind k) {
  switch (k) {
    case BodyKind::Point:
      return "point";
    case BodyKind::Segment:
      return "segment";
    case BodyKind::Polygon:
      return "polygon";
  }
  return "polygon";
}

}  // namespace

FamilyDocument parse_family_document(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_object()) throw ValidationError("family document must be a JSON object");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1)
    throw ValidationError("family document version must be 1");
  std::string ambient = j.value("ambient", std::string("planar"));
  bool lifted = ambient == "lifted-3d";
  if (!lifted && ambient != "planar")
    throw ValidationError("ambient must be \"planar\" or \"lifted-3d\"");
  if (!j.contains("bodies") || !j["bodies"].is_array())
    throw ValidationError("family document requires a bodies array");

  std::vector<ConvexBody> bodies;
  std::vector<long long> levels;
  for (const auto& jb : j["bodies"]) {
    if (!jb.is_object()) throw ValidationError("body entries must be objects");
    if (!jb.contains("id") || !jb["id"].is_number_integer())
      throw ValidationError("body requires an integer id");
    int id = jb["id"].get<int>();
    if (!jb.contains("vertices") || !jb["vertices"].is_array() || jb["vertices"].empty())
      throw ValidationError("body requires a nonempty vertices array");
    std::vector<Pt> verts;
    for (const auto& jv : jb["vertices"]) {
      if (!jv.is_array() || jv.size() != 2)
        throw ValidationError("vertices must be [x, y] string pairs");
      verts.push_back(Pt{rat_field(jv[0], "vertex x"), rat_field(jv[1], "vertex y")});
    }
    ConvexBody body = make_body(id, std::move(verts));
    if (jb.contains("kind")) {
      std::string kind = jb["kind"].get<std::string>();
      if (kind != kind_name(body.kind()))
        throw ValidationError("body kind \"" + kind + "\" does not match its vertex count");
    }
    if (lifted) {
      if (!jb.contains("level") || !jb["level"].is_number_integer())
        throw ValidationError("lifted bodies require an integer level");
      levels.push_back(jb["level"].get<long long>());
    } else if (jb.contains("level")) {
      throw ValidationError("planar bodies must not carry levels");
    }
    bodies.push_back(std::move(body));
  }

  FamilyDocument doc;
  doc.family = lifted ? make_lifted_family(std::move(bodies), std::move(levels))
                      : make_family(std::move(bodies));
  if (j.contains("certificate")) doc.certificate = j["certificate"];
  return doc;
}

Family parse_family(const std::string& text) { return parse_family_document(text).family; }

Json family_to_json(const Family& f, const std::optional<Json>& certificate) {
  Json j;
  j["version"] = 1;
  j["ambient"] = f.ambient == Ambient::Lifted3d ? "lifted-3d" : "planar";
  j["bodies"] = Json::array();
  for (const auto& b : f.bodies) {
    Json jb;
    jb["id"] = b.id;
    jb["kind"] = kind_name(b.kind());
    Json verts = Json::array();
    for (const auto& p : b.vertices)
      verts.push_back(Json::array({rat_to_string(p.x), rat_to_string(p.y)}));
    jb["vertices"] = std::move(verts);
    if (f.ambient == Ambient::Lifted3d) jb["level"] = f.levels[b.id];
    j["bodies"].push_back(std::move(jb));
  }
  if (certificate) j["certificate"] = *certificate;
  return j;
}

std::string serialize_family(const Family& f, const std::optional<Json>& certificate) {
  return family_to_json(f, certificate).dump(2) + "\n";
}

Json certificate_to_json(const ConstructionResult& r) {
  Json j;
  j["provenance"] = r.provenance;
  j["shattered_subset"] = r.shattered_subset.to_binary_string();
  j["edge_count"] = r.edge_count;
  j["intersecting_pairs"] = r.intersecting_pairs;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json jw;
    jw["subset"] = w.subset.to_binary_string();
    jw["halfplane"] = {{"a", rat_to_string(w.halfplane.a)},
                       {"b", rat_to_string(w.halfplane.b)},
                       {"c", rat_to_string(w.halfplane.c)}};
    ws.push_back(std::move(jw));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

std::vector<Witness> witnesses_from_certificate(const Json& certificate, int n) {
  std::vector<Witness> out;
  if (!certificate.is_object() || !certificate.contains("witnesses")) return out;
  for (const auto& jw : certificate["witnesses"]) {
    Witness w;
    std::string subset = jw.at("subset").get<std::string>();
    if (static_cast<int>(subset.size()) != n)
      throw ValidationError("certificate subset width does not match the family");
    w.subset = Bitmask::from_binary_string(subset);
    const auto& jh = jw.at("halfplane");
    w.halfplane = make_halfplane(rat_field(jh.at("a"), "halfplane a"),
                                 rat_field(jh.at("b"), "halfplane b"),
                                 rat_field(jh.at("c"), "halfplane c"));
    out.push_back(std::move(w));
  }
  return out;
}

HittingInstance parse_hitting_instance(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_object() || !j.contains("segments") || !j.contains("halfplanes"))
    throw ValidationError("hitting instance requires segments and halfplanes");
  std::vector<ConvexBody> segments;
  int id = 0;
  for (const auto& js : j["segments"]) {
    if (!js.is_array() || js.size() != 2)
      throw ValidationError("segments must be [[x,y],[x,y]] pairs");
    std::vector<Pt> verts;
    for (const auto& jv : js) {
      if (!jv.is_array() || jv.size() != 2)
        throw ValidationError("segment endpoints must be [x, y] string pairs");
      verts.push_back(Pt{rat_field(jv[0], "endpoint x"), rat_field(jv[1], "endpoint y")});
    }
    segments.push_back(make_body(id++, std::move(verts)));
  }
  std::vector<Halfplane> halfplanes;
  for (const auto& jh : j["halfplanes"]) {
    halfplanes.push_back(make_halfplane(rat_field(jh.at("a"), "halfplane a"),
                                        rat_field(jh.at("b"), "halfplane b"),
                                        rat_field(jh.at("c"), "halfplane c")));
  }
  return make_hitting_instance(make_family(std::move(segments)), std::move(halfplanes));
}

std::string serialize_hitting_instance(const HittingInstance& inst) {
  Json j;
  j["segments"] = Json::array();
  for (const auto& b : inst.segments.bodies) {
    Json seg = Json::array();
    for (const auto& p : b.vertices)
      seg.push_back(Json::array({rat_to_string(p.x), rat_to_string(p.y)}));
    j["segments"].push_back(std::move(seg));
  }
  j["halfplanes"] = Json::array();
  for (const auto& h : inst.halfplanes) {
    j["halfplanes"].push_back({{"a", rat_to_string(h.a)},
                               {"b", rat_to_string(h.b)},
                               {"c", rat_to_string(h.c)}});
  }
  return j.dump(2) + "\n";
}

}  // namespace shatter
