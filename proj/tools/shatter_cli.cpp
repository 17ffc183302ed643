// Command-line surface over the halfplane containment hypergraph library.
//
// Exit codes: 0 success, 2 validation error (bad input, general-position
// violation without --perturb), 3 infeasible instance or absent result.
// Errors are reported as JSON on stderr.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shatter/constructions.hpp"
#include "shatter/family_io.hpp"
#include "shatter/nets.hpp"
#include "shatter/random_families.hpp"
#include "shatter/solver.hpp"
#include "shatter/svg.hpp"
#include "shatter/version.hpp"

namespace {

using namespace shatter;

struct AbsentResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest(const std::string& content) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(content)));
  return std::string("fnv1a64:") + buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_payload(const std::string& output_path, const std::string& payload) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file: " + output_path);
  out << payload;
}

Json meta_json(const std::string& input_content) {
  return Json{{"tool_version", kToolVersion}, {"input_digest", digest(input_content)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Retry an enumeration-backed operation once on a perturbed copy.
template <class Fn>
auto with_perturb(const Family& f, bool perturb, Fn&& fn) {
  if (!perturb) return fn(f);
  try {
    return fn(f);
  } catch (const GeneralPositionViolation&) {
  }
  Family g = perturb_family(f);
  return fn(g);
}

struct CommonOpts {
  std::string input;
  std::string output;
  uint64_t seed = 0;
  std::string eps;
  bool perturb = false;
  int exact_cap = -1;
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool needs_input) {
  auto* in = cmd->add_option("--input", opts->input, "input file path");
  if (needs_input) in->required();
  cmd->add_option("--output", opts->output, "write the payload to a file instead of stdout");
  cmd->add_option("--seed", opts->seed, "PRNG seed")->default_val(0);
  cmd->add_option("--eps", opts->eps, "epsilon as a rational p/q");
  cmd->add_flag("--perturb", opts->perturb,
                "apply the deterministic rational perturbation on general-position violation");
  cmd->add_option("--exact-cap", opts->exact_cap, "cap for exhaustive searches");
}

int run(int argc, char** argv) {
  CLI::App app{"halfplane containment hypergraphs: enumeration, shattering, nets, hitting sets"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* cmd_enumerate = app.add_subcommand("enumerate", "list all realized subsets");
  add_common(cmd_enumerate, &opts, true);

  auto* cmd_vc = app.add_subcommand("vc", "VC-dimension of the input family");
  add_common(cmd_vc, &opts, true);
  int vc_cap = -1;
  cmd_vc->add_option("--cap", vc_cap, "largest subset size to test (default: family size)");

  auto* cmd_shatter = app.add_subcommand("shatter", "check whether a subset is shattered");
  add_common(cmd_shatter, &opts, true);
  std::string subset_str;
  cmd_shatter->add_option("--subset", subset_str, "binary mask (default: all bodies)");

  auto* cmd_gen = app.add_subcommand("gen", "emit a verified construction");
  add_common(cmd_gen, &opts, false);
  std::string gen_name;
  int gen_n = 3, gen_cap = 5, gen_symmetry = 0, gen_max_inter = -1;
  long long gen_budget = 10000;
  bool gen_lift = false;
  std::string gen_class = "segments";
  cmd_gen->add_option("--name", gen_name,
                      "five-segments | three-disjoint | four-one-intersection | unbounded | search")
      ->required();
  cmd_gen->add_option("--n", gen_n, "family size (unbounded, search)");
  cmd_gen->add_option("--cap", gen_cap, "size cap for unbounded")->default_val(5);
  cmd_gen->add_flag("--lift", gen_lift, "stack the construction into lifted 3-space");
  cmd_gen->add_option("--class", gen_class, "search class: segments | disjoint-convex | convex");
  cmd_gen->add_option("--budget", gen_budget, "search candidate budget")->default_val(10000);
  cmd_gen->add_option("--max-intersections", gen_max_inter, "search constraint");
  cmd_gen->add_option("--symmetry", gen_symmetry, "search symmetry template order");

  auto* cmd_net = app.add_subcommand("net", "Las Vegas epsilon-net with exact verification");
  add_common(cmd_net, &opts, true);
  int net_d = 0;
  std::string weights_path;
  cmd_net->add_option("--d", net_d, "VC-dimension bound (default: 5 segments, 3 disjoint, else n)");
  cmd_net->add_option("--weights", weights_path, "JSON array of rational weights");

  auto* cmd_approx = app.add_subcommand("approx", "epsilon-approximation with exact discrepancy");
  add_common(cmd_approx, &opts, true);

  auto* cmd_hitset = app.add_subcommand("hitset", "halfspace-segment hitting set approximation");
  add_common(cmd_hitset, &opts, true);

  auto* cmd_render = app.add_subcommand("render", "SVG rendering of a family document");
  add_common(cmd_render, &opts, true);
  std::string stroke = "1/10", viewport;
  cmd_render->add_option("--stroke-width", stroke, "stroke width as a rational");
  cmd_render->add_option("--viewport", viewport, "explicit viewport x0,y0,x1,y1");

  auto* cmd_bounds = app.add_subcommand("check-bounds", "run the invariant battery on a family");
  add_common(cmd_bounds, &opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string input_content;
  if (!opts.input.empty()) input_content = read_file(opts.input);

  if (cmd_enumerate->parsed()) {
    Family f = parse_family(input_content);
    EdgeSet es = with_perturb(f, opts.perturb, [](const Family& g) { return enumerate_realized(g); });
    std::ostringstream text;
    for (const auto& e : es.edges()) text << e.to_binary_string() << "\n";
    write_payload(opts.output, text.str());
    return 0;
  }

  if (cmd_vc->parsed()) {
    Family f = parse_family(input_content);
    int cap = vc_cap < 0 ? f.size() : vc_cap;
    VcResult r =
        with_perturb(f, opts.perturb, [&](const Family& g) { return vc_dimension(g, cap); });
    Json j{{"dim", r.dim}, {"witness", r.witness.to_binary_string()},
           {"meta", meta_json(input_content)}};
    write_payload(opts.output, dump(j));
    return 0;
  }

  if (cmd_shatter->parsed()) {
    Family f = parse_family(input_content);
    Bitmask x = subset_str.empty() ? Bitmask::full(f.size())
                                   : Bitmask::from_binary_string(subset_str);
    if (x.size() != f.size()) throw ValidationError("--subset width must match the family");
    ShatterResult r =
        with_perturb(f, opts.perturb, [&](const Family& g) { return is_shattered(g, x); });
    Json j{{"shattered", r.shattered}, {"meta", meta_json(input_content)}};
    if (!r.shattered) j["missing"] = r.missing.to_binary_string();
    write_payload(opts.output, dump(j));
    return 0;
  }

  if (cmd_gen->parsed()) {
    std::ostringstream params;
    params << "gen:" << gen_name << ":n=" << gen_n << ":cap=" << gen_cap
           << ":lift=" << gen_lift << ":class=" << gen_class << ":budget=" << gen_budget
           << ":max-intersections=" << gen_max_inter << ":symmetry=" << gen_symmetry
           << ":seed=" << opts.seed;
    ConstructionResult r;
    if (gen_name == "five-segments") {
      r = gen_five_segments();
    } else if (gen_name == "three-disjoint") {
      r = gen_three_disjoint();
    } else if (gen_name == "four-one-intersection") {
      r = gen_four_one_intersection();
    } else if (gen_name == "unbounded") {
      r = gen_unbounded(gen_n, gen_cap);
    } else if (gen_name == "search") {
      SearchClass cls;
      if (gen_class == "segments")
        cls = SearchClass::Segments;
      else if (gen_class == "disjoint-convex")
        cls = SearchClass::DisjointConvex;
      else if (gen_class == "convex")
        cls = SearchClass::Convex;
      else
        throw ValidationError("unknown search class: " + gen_class);
      SearchConstraints cons;
      if (gen_max_inter >= 0) cons.max_intersections = gen_max_inter;
      if (gen_symmetry > 0) cons.symmetry = gen_symmetry;
      auto found = search_shattered(gen_n, cls, cons, opts.seed, gen_budget);
      if (!found) throw AbsentResult("search exhausted its budget without a shattered family");
      r = std::move(*found);
    } else {
      throw ValidationError("unknown construction name: " + gen_name);
    }
    Json cert = certificate_to_json(r);
    Json doc;
    if (gen_lift) {
      LiftResult lifted = lift_to_3d(r);
      cert["lift_report"] = Json{{"pairwise_disjoint", lifted.report.pairwise_disjoint},
                                 {"shattering_preserved", lifted.report.shattering_preserved},
                                 {"witnesses_checked", lifted.report.witnesses_checked}};
      doc = family_to_json(lifted.family, cert);
    } else {
      doc = family_to_json(r.family, cert);
    }
    doc["meta"] = meta_json(params.str());
    write_payload(opts.output, dump(doc));
    return 0;
  }

  if (cmd_net->parsed()) {
    Family f = parse_family(input_content);
    if (opts.eps.empty()) throw ValidationError("net requires --eps");
    Rat eps = parse_rat(opts.eps);
    WeightVector w = uniform_weights(f.size());
    if (!weights_path.empty()) {
      Json jw = Json::parse(read_file(weights_path));
      std::vector<Rat> ws;
      for (const auto& x : jw) ws.push_back(parse_rat(x.get<std::string>()));
      w = make_weights(std::move(ws));
    }
    int d = net_d;
    if (d <= 0) {
      bool segments = !f.bodies.empty();
      for (const auto& b : f.bodies) segments = segments && b.kind() == BodyKind::Segment;
      bool disjoint = true;
      for (int i = 0; i < f.size() && disjoint; ++i)
        for (int j = i + 1; j < f.size() && disjoint; ++j)
          disjoint = !bodies_intersect(f.bodies[i], f.bodies[j]);
      d = segments ? 5 : (disjoint ? 3 : f.size());
    }
    NetResult r = epsilon_net(f, eps, w, d, opts.seed);
    Json j{{"net", r.net.to_binary_string()},
           {"net_size", r.net.count()},
           {"m", r.sample_size},
           {"attempts", r.attempts},
           {"eps", rat_to_string(r.eps)},
           {"d", r.d},
           {"meta", meta_json(input_content)}};
    write_payload(opts.output, dump(j));
    return 0;
  }

  if (cmd_approx->parsed()) {
    Family f = parse_family(input_content);
    if (opts.eps.empty()) throw ValidationError("approx requires --eps");
    Rat eps = parse_rat(opts.eps);
    ApproxResult r = epsilon_approximation(f, eps, opts.seed);
    Json j{{"sample", r.sample.to_binary_string()},
           {"m", r.m},
           {"discrepancy", rat_to_string(r.discrepancy)},
           {"attempts", r.attempts},
           {"eps", rat_to_string(eps)},
           {"meta", meta_json(input_content)}};
    write_payload(opts.output, dump(j));
    return 0;
  }

  if (cmd_hitset->parsed()) {
    HittingInstance inst = parse_hitting_instance(input_content);
    SolverTrace trace = bg_hitting_set(inst, opts.seed);
    Json j{{"k", trace.final_k},
           {"rounds_per_k", trace.rounds_per_k},
           {"doublings", trace.doublings},
           {"solution", trace.solution.to_binary_string()},
           {"size", trace.solution.count()},
           {"verified", true},
           {"meta", meta_json(input_content)}};
    if (opts.exact_cap >= 0) {
      auto exact = exact_min_hitting_set(inst, opts.exact_cap);
      if (exact) {
        j["optimum"] = Json{{"size", exact->size}, {"mask", exact->t.to_binary_string()}};
        if (exact->size > 0)
          j["ratio"] = rat_to_string(make_rat(trace.solution.count(), exact->size));
      } else {
        j["optimum"] = nullptr;
      }
    }
    write_payload(opts.output, dump(j));
    return 0;
  }

  if (cmd_render->parsed()) {
    FamilyDocument doc = parse_family_document(input_content);
    RenderSpec spec;
    spec.family = doc.family;
    if (doc.certificate)
      spec.witnesses = witnesses_from_certificate(*doc.certificate, doc.family.size());
    spec.stroke_width = parse_rat(stroke);
    if (!viewport.empty()) {
      std::array<Rat, 4> box;
      std::stringstream ss(viewport);
      std::string part;
      for (int i = 0; i < 4; ++i) {
        if (!std::getline(ss, part, ',')) throw ValidationError("viewport needs x0,y0,x1,y1");
        box[i] = parse_rat(part);
      }
      spec.viewport = box;
    }
    write_payload(opts.output, render_svg(spec));
    return 0;
  }

  if (cmd_bounds->parsed()) {
    Family f = parse_family(input_content);
    Json j;
    const int n = f.size();
    EdgeSet es = with_perturb(f, opts.perturb, [](const Family& g) { return enumerate_realized(g); });
    j["n"] = n;
    j["edge_count"] = es.size();
    bool segments = !f.bodies.empty();
    for (const auto& b : f.bodies) segments = segments && b.kind() == BodyKind::Segment;
    long long tangent = 2ll * n * (n - 1) + 2;
    j["tangent"] = Json{{"applicable", segments},
                        {"bound", tangent},
                        {"ok", !segments || static_cast<long long>(es.size()) <= tangent}};
    ShatterResult sh =
        with_perturb(f, opts.perturb, [&](const Family& g) { return is_shattered(g, Bitmask::full(n)); });
    int pairs = count_intersecting_pairs(f);
    Rat turan = turan_lower_bound(n);
    j["shattered"] = sh.shattered;
    j["intersecting_pairs"] = pairs;
    j["turan"] = Json{{"required", rat_to_string(turan)},
                      {"ok", !sh.shattered || Rat(pairs) >= turan}};
    HullLemmaResult hull = hull_lemma_check(f);
    j["hull_lemma"] = hull.ok ? Json{{"ok", true}}
                              : Json{{"ok", false}, {"offender", hull.offender}};
    j["consistent"] = !sh.shattered || (hull.ok && Rat(pairs) >= turan);
    j["meta"] = meta_json(input_content);
    write_payload(opts.output, dump(j));
    return 0;
  }

  return 0;
}

Json error_json(const std::string& type, const std::string& message) {
  return Json{{"error", Json{{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SyntaxError& e) {
    Json j = error_json("syntax", e.what());
    if (e.position >= 0) j["error"]["position"] = e.position;
    std::cerr << dump(j);
    return 2;
  } catch (const GeneralPositionViolation& e) {
    Json j = error_json("general-position", e.what());
    j["error"]["witness"] = e.report.describe();
    std::cerr << dump(j);
    return 2;
  } catch (const InfeasibleInstance& e) {
    std::cerr << dump(error_json("infeasible", e.what()));
    return 3;
  } catch (const AbsentResult& e) {
    std::cerr << dump(error_json("absent", e.what()));
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << dump(error_json("cap-exceeded", e.what()));
    return 2;
  } catch (const InvalidEps& e) {
    std::cerr << dump(error_json("invalid-eps", e.what()));
    return 2;
  } catch (const ZeroTotalWeight& e) {
    std::cerr << dump(error_json("zero-total-weight", e.what()));
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << dump(error_json("validation", e.what()));
    return 2;
  } catch (const EmptyFamily& e) {
    std::cerr << dump(error_json("empty-family", e.what()));
    return 2;
  } catch (const EmptySample& e) {
    std::cerr << dump(error_json("empty-sample", e.what()));
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << dump(error_json("validation", e.what()));
    return 2;
  } catch (const std::exception& e) {
    std::cerr << dump(error_json("internal", e.what()));
    return 1;
  }
}
