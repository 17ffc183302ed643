#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shatter/constructions.hpp"
#include "shatter/family_io.hpp"
#include "shatter/nets.hpp"
#include "shatter/solver.hpp"
#include "shatter/svg.hpp"
#include "shatter/version.hpp"

namespace py = pybind11;
using namespace shatter;

namespace {

Family family_from_json(const std::string& text) { return parse_family(text); }

std::string gen(const std::string& name, int n, int cap, uint64_t seed, bool lift) {
  ConstructionResult r;
  if (name == "five-segments")
    r = gen_five_segments();
  else if (name == "three-disjoint")
    r = gen_three_disjoint();
  else if (name == "four-one-intersection")
    r = gen_four_one_intersection();
  else if (name == "unbounded")
    r = gen_unbounded(n, cap);
  else
    throw ValidationError("unknown construction name: " + name);
  Json cert = certificate_to_json(r);
  if (lift) {
    LiftResult lifted = lift_to_3d(r);
    cert["lift_report"] = Json{{"pairwise_disjoint", lifted.report.pairwise_disjoint},
                               {"shattering_preserved", lifted.report.shattering_preserved},
                               {"witnesses_checked", lifted.report.witnesses_checked}};
    return serialize_family(lifted.family, cert);
  }
  return serialize_family(r.family, cert);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Halfplane containment hypergraphs over convex bodies: exact enumeration, "
            "shattering, VC-dimension, epsilon-nets and hitting-set approximation.";

  m.attr("__version__") = kToolVersion;

  py::register_exception<SyntaxError>(m, "FamilySyntaxError");
  py::register_exception<ValidationError>(m, "FamilyValidationError");
  py::register_exception<GeneralPositionViolation>(m, "GeneralPositionError");
  py::register_exception<InfeasibleInstance>(m, "InfeasibleInstanceError");

  m.def("roundtrip_family", [](const std::string& text) {
    FamilyDocument doc = parse_family_document(text);
    return serialize_family(doc.family, doc.certificate);
  },
        py::arg("family_json"), "Parse and re-serialize a family document canonically.");

  m.def("enumerate_edges", [](const std::string& text, bool perturb) {
    Family f = family_from_json(text);
    if (perturb) {
      try {
        EdgeSet es = enumerate_realized(f);
        std::vector<std::string> out;
        for (const auto& e : es.edges()) out.push_back(e.to_binary_string());
        return out;
      } catch (const GeneralPositionViolation&) {
        f = perturb_family(f);
      }
    }
    EdgeSet es = enumerate_realized(f);
    std::vector<std::string> out;
    for (const auto& e : es.edges()) out.push_back(e.to_binary_string());
    return out;
  },
        py::arg("family_json"), py::arg("perturb") = false,
        "All realized subsets as binary strings (body 0 = least significant bit).");

  m.def("vc_dimension", [](const std::string& text, int cap) {
    Family f = family_from_json(text);
    VcResult r = vc_dimension(f, cap < 0 ? f.size() : cap);
    return py::make_tuple(r.dim, r.witness.to_binary_string());
  },
        py::arg("family_json"), py::arg("cap") = -1,
        "(dim, witness_mask) for the input family.");

  m.def("is_shattered", [](const std::string& text, const std::string& subset) {
    Family f = family_from_json(text);
    Bitmask x = subset.empty() ? Bitmask::full(f.size()) : Bitmask::from_binary_string(subset);
    ShatterResult r = is_shattered(f, x);
    py::dict out;
    out["shattered"] = r.shattered;
    if (!r.shattered) out["missing"] = r.missing.to_binary_string();
    return out;
  },
        py::arg("family_json"), py::arg("subset") = std::string());

  m.def("count_intersecting_pairs", [](const std::string& text) {
    return count_intersecting_pairs(family_from_json(text));
  },
        py::arg("family_json"));

  m.def("gen", &gen, py::arg("name"), py::arg("n") = 3, py::arg("cap") = 5, py::arg("seed") = 0,
        py::arg("lift") = false,
        "Verified construction as a family document (certificate embedded).");

  m.def("epsilon_net", [](const std::string& text, const std::string& eps, int d, uint64_t seed) {
    Family f = family_from_json(text);
    NetResult r = epsilon_net(f, parse_rat(eps), uniform_weights(f.size()), d, seed);
    py::dict out;
    out["net"] = r.net.to_binary_string();
    out["net_size"] = r.net.count();
    out["m"] = r.sample_size;
    out["attempts"] = r.attempts;
    return out;
  },
        py::arg("family_json"), py::arg("eps"), py::arg("d"), py::arg("seed") = 0,
        "Verified uniform-weight epsilon-net.");

  m.def("epsilon_approximation",
        [](const std::string& text, const std::string& eps, uint64_t seed) {
          Family f = family_from_json(text);
          ApproxResult r = epsilon_approximation(f, parse_rat(eps), seed);
          py::dict out;
          out["sample"] = r.sample.to_binary_string();
          out["m"] = r.m;
          out["discrepancy"] = rat_to_string(r.discrepancy);
          out["attempts"] = r.attempts;
          return out;
        },
        py::arg("family_json"), py::arg("eps"), py::arg("seed") = 0);

  m.def("max_discrepancy", [](const std::string& text, const std::string& sample) {
    Family f = family_from_json(text);
    return rat_to_string(max_discrepancy(f, Bitmask::from_binary_string(sample)));
  },
        py::arg("family_json"), py::arg("sample"));

  m.def("hitting_set", [](const std::string& instance_json, uint64_t seed, int exact_cap) {
    HittingInstance inst = parse_hitting_instance(instance_json);
    SolverTrace trace = bg_hitting_set(inst, seed);
    py::dict out;
    out["k"] = trace.final_k;
    out["rounds_per_k"] = trace.rounds_per_k;
    out["doublings"] = trace.doublings;
    out["solution"] = trace.solution.to_binary_string();
    out["size"] = trace.solution.count();
    if (exact_cap >= 0) {
      auto exact = exact_min_hitting_set(inst, exact_cap);
      if (exact)
        out["optimum"] = exact->size;
      else
        out["optimum"] = py::none();
    }
    return out;
  },
        py::arg("instance_json"), py::arg("seed") = 0, py::arg("exact_cap") = -1);

  m.def("render_svg", [](const std::string& text) {
    FamilyDocument doc = parse_family_document(text);
    RenderSpec spec;
    spec.family = doc.family;
    if (doc.certificate)
      spec.witnesses = witnesses_from_certificate(*doc.certificate, doc.family.size());
    return render_svg(spec);
  },
        py::arg("family_json"));

  m.def("circle_point", [](const std::string& t) {
    Pt p = circle_point(parse_rat(t));
    return py::make_tuple(rat_to_string(p.x), rat_to_string(p.y));
  },
        py::arg("t"), "Exact rational point on the unit circle.");
}
