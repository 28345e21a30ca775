// emax: command-line front end.
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include <nlohmann/json.hpp>

#include "emax/emax.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace emax;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PseudoEmbedding load_scheme(const std::string& path) {
  std::istringstream in(read_file(path));
  try {
    return read_scheme(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Edge list plus the optional "# part_b: v v v" annotation.
std::pair<Graph, std::optional<VertexSet>> load_edge_list(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  Graph g;
  try {
    g = read_edge_list(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  std::optional<VertexSet> part_b;
  std::istringstream lines(text);
  std::string line;
  const std::string tag = "# part_b:";
  while (std::getline(lines, line)) {
    if (line.rfind(tag, 0) != 0) continue;
    std::istringstream ss(line.substr(tag.size()));
    VertexSet b;
    for (int v; ss >> v;) b.push_back(v);
    if (!ss.eof()) throw InputError(path + ": malformed part_b annotation");
    part_b = b;
  }
  return {std::move(g), std::move(part_b)};
}

void write_edge_list_with_parts(std::ostream& out, const Graph& g, const Bipartition& p) {
  out << "# part_b:";
  for (int v : p.part_b) out << ' ' << v;
  out << '\n';
  write_edge_list(out, g);
}

Bipartition complete_bipartition(const Graph& g, const VertexSet& part_b) {
  Bipartition p;
  p.part_b = part_b;
  std::vector<char> in_b(g.vertex_count(), 0);
  for (int v : part_b) {
    g.check_vertex(v);
    in_b[v] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_b[v]) p.part_a.push_back(v);
  validate_bipartition(g, p);
  return p;
}

json analysis_json(const PseudoEmbedding& e) {
  const FacialWalkSet faces = trace_faces(e);
  const SurfaceInfo info = surface_info(e, faces);
  json out;
  out["n"] = e.vertex_count();
  out["m"] = e.edge_count();
  out["faces"] = faces.face_vector();
  out["face_count"] = faces.face_count();
  out["genus"] = info.euler_genus;
  out["orientable"] = info.orientable;
  const bool simple = is_simple(e);
  out["simple"] = simple;
  out["maximal"] = simple ? json(static_cast<bool>(is_edge_maximal_embedding(e, faces))) : json(nullptr);
  out["triangulation"] = is_triangulation(faces);
  out["edges_short"] = e.vertex_count() + info.euler_genus >= 3 ? json(edges_short(e, info)) : json(nullptr);
  return out;
}

void print_pretty(const json& j, std::ostream& out) {
  for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
}

void emit(const json& j, const std::string& format) {
  if (format == "pretty") {
    print_pretty(j, std::cout);
  } else {
    std::cout << j.dump() << '\n';
  }
}

json report_json(const SurgeryReport& r) {
  json out;
  out["mode"] = to_string(r.mode);
  out["n"] = r.input.vertex_count();
  out["m"] = r.input.edge_count();
  out["genus"] = r.surface.euler_genus;
  out["orientable"] = r.surface.orientable;
  out["chords_added"] = r.chords_added;
  out["chorded_faces"] = trace_faces(r.chorded).face_vector();
  out["apex_count"] = r.apexes.size();
  out["apexes"] = r.apexes;
  out["extract_vertices"] = r.extract.graph.vertex_count();
  out["extract_edges"] = r.extract.graph.edge_count();
  out["edges_short"] = r.edges_short;
  out["edges_added_to_triangulate"] = r.edges_added_to_triangulate;
  out["bound"] = r.bound();
  out["violations"] = r.violations;
  return out;
}

std::string rational_json(const Rational& x) { return to_string(x); }

json row_json(const BoundsTableRow& r) {
  json out;
  out["g"] = r.g;
  out["surface"] = surface_name(r.g, r.surface);
  out["schedule"] = r.c_schedule;
  json f = json::array();
  for (const auto& v : r.f_values) f.push_back(rational_json(v));
  out["f_values"] = f;
  out["f_integral"] = r.f_integral;
  out["impurity"] = r.impurity;
  out["edge_bound_offset"] = r.edge_bound_offset;
  return out;
}

json context_json(const AnalyticContext& c) {
  const int bits = c.precision_bits;
  json out;
  out["g"] = c.g;
  out["precision_bits"] = bits;
  out["lambda"] = to_decimal(c.lambda, 12, bits);
  out["alpha7"] = to_decimal(c.alpha.at(7), 12, bits);
  out["k"] = c.k;
  out["k_bound"] = c.k_bound;
  json beta = json::object(), ell = json::object(), e = json::object();
  for (const auto& [i, b] : c.beta) beta[std::to_string(i)] = b;
  for (const auto& [i, l] : c.ell) ell[std::to_string(i)] = l;
  for (const auto& [i, v] : c.E) e[std::to_string(i)] = to_decimal(v, 9, bits);
  out["beta"] = beta;
  out["ell"] = ell;
  out["E"] = e;
  out["beta_k_is_two"] = c.beta_k_is_two();
  out["k_within_bound"] = c.k_within_bound();
  out["e7_within_bound"] = c.e7_within_bound();
  return out;
}

SurfaceKind parse_surface(const std::string& s) {
  return s == "orientable" ? SurfaceKind::orientable : SurfaceKind::nonorientable;
}

SurgeryMode parse_mode(const std::string& s) {
  return s == "orientable" ? SurgeryMode::orientable : SurgeryMode::nonorientable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-maximal embeddings: constructions, surgery and bounds"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "write a named graph or scheme");
  construct->require_subcommand(1);
  int prop2_genus = 1, prop2_base_faces = 0;
  bool prop2_orientable = false;
  auto* c_prop2 = construct->add_subcommand("prop2", "edge-maximal scheme 3g edges short of a triangulation");
  c_prop2->add_option("--genus", prop2_genus, "Euler genus")->required();
  c_prop2->add_flag("--orientable", prop2_orientable);
  c_prop2->add_option("--base-faces", prop2_base_faces, "minimum faces of the planar base");
  bool k8c5_embedded = false;
  auto* c_k8c5 = construct->add_subcommand("k8c5", "K8 minus a 5-cycle");
  c_k8c5->add_flag("--embedded", k8c5_embedded, "write the torus scheme instead of the edge list");
  auto* c_q = construct->add_subcommand("q", "the planar bipartite graph Q");
  int fam_g = 0, fam_s = 2;
  auto* c_family = construct->add_subcommand("family", "K_{3,2g+2} plus s-2 copies of Q");
  c_family->add_option("--g", fam_g)->required();
  c_family->add_option("--s", fam_s)->required();
  int kmn_m = 1, kmn_n = 1;
  auto* c_kmn = construct->add_subcommand("kmn", "complete bipartite graph");
  c_kmn->add_option("--m", kmn_m)->required();
  c_kmn->add_option("--n", kmn_n)->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "all embedding schemes of a small graph");
  std::string enum_file;
  bool enum_all = false, enum_census = false;
  double enum_cap = 1e7;
  enumerate->add_option("edgelist", enum_file)->required();
  enumerate->add_flag("--all-signatures", enum_all);
  enumerate->add_flag("--census", enum_census, "count schemes by (genus, orientable, faces)");
  enumerate->add_option("--cap", enum_cap, "maximum number of schemes");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "surface and face data of a scheme");
  std::string scheme_file, format = "json";
  analyze->add_option("scheme", scheme_file)->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

  // triangulate
  auto* triangulate = app.add_subcommand("triangulate", "add edges until every face is a triangle");
  triangulate->add_option("scheme", scheme_file)->required();

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "chords, apexes and bipartite extraction");
  std::string mode = "nonorientable";
  pipeline->add_option("scheme", scheme_file)->required();
  pipeline->add_option("--mode", mode)->check(CLI::IsMember({"nonorientable", "orientable"}));
  pipeline->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

  // ordered-seq
  auto* ordered = app.add_subcommand("ordered-seq", "find an ordered sequence in B");
  std::string seq_file;
  int seq_s = 2, seq_g = 0;
  std::vector<int> seq_part_b, seq_schedule;
  ordered->add_option("edgelist", seq_file)->required();
  ordered->add_option("--s", seq_s)->required();
  ordered->add_option("--part-b", seq_part_b, "vertices of B (default: '# part_b:' line)");
  auto* opt_g = ordered->add_option("--g", seq_g, "genus for the default c schedule");
  auto* opt_sched = ordered->add_option("--schedule", seq_schedule, "c_2 .. c_s");
  opt_g->excludes(opt_sched);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "f_g(s) bounds and tables");
  bounds->require_subcommand(1);
  std::string surface = "nonorientable";
  int gmin = 1, gmax = 20, bg = 1, bs = 2, jobs = 1, theorem = 84;
  auto* b_table = bounds->add_subcommand("table", "c schedules and impurity bounds");
  b_table->add_option("--surface", surface)->check(CLI::IsMember({"nonorientable", "orientable"}));
  b_table->add_option("--gmin", gmin);
  b_table->add_option("--gmax", gmax);
  b_table->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "pretty"}));
  auto* b_f = bounds->add_subcommand("f", "optimal schedule and f'(s)");
  b_f->add_option("--g", bg)->required();
  b_f->add_option("--s", bs)->required();
  auto* b_verify = bounds->add_subcommand("verify", "edges-short theorem check");
  auto* opt_vgmax = b_verify->add_option("--gmax", gmax);
  b_verify->add_option("--theorem", theorem)->check(CLI::IsMember({84, 67}))->required();
  b_verify->add_option("--jobs", jobs);
  auto* b_analytic = bounds->add_subcommand("analytic", "analytic schedule data");
  b_analytic->add_option("--g", bg)->required();
  auto* b_claim1 = bounds->add_subcommand("claim1", "claim-1 inequality under the analytic schedule");
  b_claim1->add_option("--g", bg)->required();
  auto* opt_cgmax = b_claim1->add_option("--gmax", gmax, "check every g in [g, gmax]");

  // regen-fixture
  auto* regen = app.add_subcommand("regen-fixture", "search for the K8 - C5 torus scheme");
  std::uint64_t seed = 0;
  std::string regen_out;
  regen->add_option("--seed", seed)->required();
  regen->add_option("--out", regen_out, "also write the scheme to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (construct->parsed()) {
      if (c_prop2->parsed()) {
        const auto e = construct_proposition2(prop2_genus, prop2_orientable, prop2_base_faces);
        write_scheme(std::cout, e);
      } else if (c_k8c5->parsed()) {
        if (k8c5_embedded) {
          write_scheme(std::cout, toroidal_embedding_k8_minus_c5());
        } else {
          write_edge_list(std::cout, k8_minus_c5());
        }
      } else if (c_q->parsed()) {
        const auto q = graph_q();
        write_edge_list_with_parts(std::cout, q.graph, q.parts);
      } else if (c_family->parsed()) {
        const auto f = lower_bound_family(fam_g, fam_s);
        write_edge_list_with_parts(std::cout, f.graph, f.bipartition);
      } else if (c_kmn->parsed()) {
        const auto k = complete_bipartite(kmn_m, kmn_n);
        write_edge_list_with_parts(std::cout, k.graph, k.parts);
      }
      return kOk;
    }

    if (enumerate->parsed()) {
      const auto [g, part_b] = load_edge_list(enum_file);
      SchemeEnumerator en(g, enum_all ? SignatureMode::all : SignatureMode::orientable_only, enum_cap);
      std::map<std::tuple<int, bool, std::vector<int>>, long> census;
      while (auto e = en.next()) {
        if (enum_census) {
          const FacialWalkSet faces = trace_faces(*e);
          const SurfaceInfo info = surface_info(*e, faces);
          ++census[{info.euler_genus, !info.orientable, faces.face_vector()}];
        } else {
          std::cout << scheme_to_json(*e).dump() << '\n';
        }
      }
      for (const auto& [key, count] : census) {
        const auto& [genus, nonorientable, faces] = key;
        json row;
        row["genus"] = genus;
        row["orientable"] = !nonorientable;
        row["faces"] = faces;
        row["count"] = count;
        std::cout << row.dump() << '\n';
      }
      return kOk;
    }

    if (analyze->parsed()) {
      emit(analysis_json(load_scheme(scheme_file)), format);
      return kOk;
    }

    if (triangulate->parsed()) {
      const auto [t, added] = complete_to_triangulation(load_scheme(scheme_file));
      json out;
      out["edges_added"] = added;
      out["scheme"] = scheme_to_json(t);
      std::cout << out.dump() << '\n';
      return kOk;
    }

    if (pipeline->parsed()) {
      const SurgeryReport r = run_lemma5_pipeline(load_scheme(scheme_file), parse_mode(mode));
      emit(report_json(r), format);
      for (const auto& v : r.violations) std::cerr << "violation: " << v << '\n';
      return r.ok() ? kOk : kVerificationFailed;
    }

    if (ordered->parsed()) {
      auto [g, annotated] = load_edge_list(seq_file);
      VertexSet b = seq_part_b;
      if (b.empty()) {
        if (!annotated) throw InputError("no B given: use --part-b or a '# part_b:' line");
        b = *annotated;
      }
      const Bipartition p = complete_bipartition(g, b);
      const OrderedSequenceResult r = seq_schedule.empty()
                                          ? find_ordered_sequence(g, p, seq_s, seq_g)
                                          : find_ordered_sequence(g, p, seq_s, seq_schedule);
      json out;
      out["s"] = seq_s;
      out["found"] = static_cast<bool>(r);
      out["route"] = to_string(r.route);
      out["sequence"] = r.sequence ? json(*r.sequence) : json(nullptr);
      out["certificate"] = r.sequence ? genus_certificate(g, *r.sequence) : 0;
      std::cout << out.dump() << '\n';
      return kOk;
    }

    if (bounds->parsed()) {
      if (b_table->parsed()) {
        const auto rows = generate_table(parse_surface(surface), gmin, gmax);
        if (format == "json") {
          json arr = json::array();
          for (const auto& r : rows) arr.push_back(row_json(r));
          std::cout << arr.dump() << '\n';
        } else if (format == "pretty") {
          for (const auto& r : rows) {
            std::cout << surface_name(r.g, r.surface) << "  g=" << r.g << "  c: " << join_schedule(r.c_schedule, ',')
                      << "  impurity <= " << r.impurity << "  |E| >= 3n-" << r.edge_bound_offset
                      << (r.f_integral ? "" : "  (f' not integral)") << '\n';
          }
        } else {
          write_table_csv(std::cout, rows);
        }
        return kOk;
      }
      if (b_f->parsed()) {
        const Schedule s = optimal_schedule(bg, bs);
        json out;
        out["g"] = bg;
        out["s"] = bs;
        out["schedule"] = s.c;
        out["f"] = rational_json(s.f.back());
        out["f_lower"] = f_lower(bg, bs);
        std::cout << out.dump() << '\n';
        return kOk;
      }
      if (b_verify->parsed()) {
        const Theorem which = theorem == 84 ? Theorem::nonorientable84 : Theorem::orientable67;
        const int limit = opt_vgmax->count() ? gmax : 2000;
        const TheoremReport r = verify_theorem(which, limit, jobs);
        const TheoremSpec spec = theorem_spec(which);
        json out;
        out["theorem"] = theorem;
        out["direct_range"] = {1, std::min(limit, spec.direct_max)};
        out["analytic_range"] = limit > spec.direct_max ? json({spec.direct_max + 1, limit}) : json(nullptr);
        out["passed"] = r.passed();
        out["violations"] = r.violations;
        out["min_direct_slack"] = rational_json(r.min_direct_slack);
        out["min_direct_slack_g"] = r.min_direct_slack_g;
        if (limit > spec.direct_max) {
          out["min_analytic_slack"] = to_decimal(r.min_analytic_slack, 6);
          out["min_analytic_slack_g"] = r.min_analytic_slack_g;
        }
        std::cout << out.dump() << '\n';
        return r.passed() ? kOk : kVerificationFailed;
      }
      if (b_analytic->parsed()) {
        std::cout << context_json(analytic_context(bg)).dump() << '\n';
        return kOk;
      }
      if (b_claim1->parsed()) {
        const int last = opt_cgmax->count() ? gmax : bg;
        bool all = true;
        for (int g = bg; g <= last; ++g) {
          const Claim1Report r = claim1_consistency(g);
          json out;
          out["g"] = g;
          out["passed"] = r.passed();
          json fails = json::array();
          for (const auto& f : r.failures) fails.push_back({{"s", f.s}, {"f", rational_json(f.f)}, {"rhs", to_decimal(f.rhs, 6)}});
          out["failures"] = fails;
          std::cout << out.dump() << '\n';
          all = all && r.passed();
        }
        return all ? kOk : kVerificationFailed;
      }
    }

    if (regen->parsed()) {
      auto found = search_min_genus_rotation(k8_minus_c5(), 2, seed);
      if (!found) throw Failure("no genus-2 scheme found with seed " + std::to_string(seed));
      const PseudoEmbedding& e = *found;
      const FacialWalkSet faces = trace_faces(e);
      const auto quads = std::count_if(faces.walks.begin(), faces.walks.end(),
                                       [](const FacialWalk& w) { return w.length() == 4; });
      if (surface_info(e, faces) != SurfaceInfo{2, true} || !is_edge_maximal_embedding(e, faces) || quads != 1) {
        throw Failure("search result fails the fixture postconditions");
      }
      json orders = json::array();
      for (int v = 0; v < e.vertex_count(); ++v) {
        json row = json::array();
        for (Dart d : e.rotation(v)) row.push_back(e.dart_vertex(d.opposite()));
        orders.push_back(row);
      }
      json out;
      out["seed"] = seed;
      out["neighbor_orders"] = orders;
      std::cout << out.dump() << '\n';
      if (!regen_out.empty()) {
        std::ofstream f(regen_out);
        if (!f) throw InputError("cannot write '" + regen_out + "'");
        write_scheme(f, e);
      }
      return kOk;
    }
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const HypothesisViolated& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}
