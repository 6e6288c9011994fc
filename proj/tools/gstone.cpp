#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gstone/constructions.hpp"
#include "gstone/duality.hpp"
#include "gstone/errors.hpp"
#include "gstone/grading.hpp"
#include "gstone/groupoid.hpp"
#include "gstone/invsemi.hpp"
#include "gstone/ring.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Guards {
  std::size_t max_slices = gstone::FiniteGradedGroupoid::kDefaultSliceGuard;
  std::size_t max_elements = gstone::GradedInverseSemigroup::kDefaultMaxElements;
};

json report_header(const std::string& command, const Guards& guards) {
  return {{"schema_version", kSchemaVersion},
          {"generator", "gstone"},
          {"command", command},
          {"guards",
           {{"max_slices", guards.max_slices},
            {"max_elements", guards.max_elements}}}};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gstone::InputError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw gstone::InputError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw gstone::InputError("cannot write '" + path + "'");
  out << text;
}

void write_report(const std::string& path, const json& j) {
  if (path.empty()) return;
  write_text(path, j.dump(2) + "\n");
}

std::shared_ptr<const gstone::GradedInverseSemigroup> load_semigroup(
    const std::string& path, const Guards& guards) {
  return gstone::GradedInverseSemigroup::from_json(load_json(path),
                                                   guards.max_elements);
}

std::shared_ptr<const gstone::FiniteGradedGroupoid> load_groupoid(
    const std::string& path) {
  return gstone::FiniteGradedGroupoid::from_json(load_json(path));
}

// "name:deg" with deg an integer vector like "1" or "1,-2"
gstone::GradedSet parse_points(const std::vector<std::string>& specs) {
  if (specs.empty()) throw gstone::InputError("no points given");
  int rank = -1;
  std::vector<std::pair<std::string, std::string>> raw;
  for (const std::string& spec : specs) {
    const auto colon = spec.rfind(':');
    if (colon == std::string::npos || colon == 0) {
      throw gstone::InputError("point '" + spec + "' is not name:degree");
    }
    const std::string deg = spec.substr(colon + 1);
    const int this_rank =
        1 + static_cast<int>(std::count(deg.begin(), deg.end(), ','));
    if (rank < 0) rank = this_rank;
    if (this_rank != rank) {
      throw gstone::InputError("point degrees have mixed ranks");
    }
    raw.emplace_back(spec.substr(0, colon), deg);
  }
  auto group = std::make_shared<gstone::IntVectorGroup>(rank);
  std::vector<std::pair<std::string, gstone::GroupElem>> pts;
  for (auto& [name, deg] : raw) {
    pts.emplace_back(name, group->parse(deg));
  }
  return gstone::GradedSet::make(group, std::move(pts));
}

int finish(const std::string& summary, bool pass) {
  std::cout << summary << "\n";
  return pass ? 0 : 1;
}

gstone::GradedSet random_graded_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> size_dist(1, 3);
  std::uniform_int_distribution<int> deg_dist(-1, 1);
  const int n = size_dist(rng);
  auto group = std::make_shared<gstone::IntVectorGroup>(1);
  std::vector<std::pair<std::string, gstone::GroupElem>> pts;
  for (int i = 0; i < n; ++i) {
    pts.emplace_back(std::string(1, static_cast<char>('a' + i)),
                     gstone::GroupElem::vec({deg_dist(rng)}));
  }
  return gstone::GradedSet::make(group, std::move(pts));
}

gstone::FiniteGraph random_acyclic_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv_dist(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  gstone::FiniteGraph g;
  const int nv = nv_dist(rng);
  for (int v = 0; v < nv; ++v) {
    g.vertices.push_back(std::string(1, static_cast<char>('u' + v)));
  }
  int edge = 0;
  for (int v = 0; v < nv; ++v) {
    for (int w = v + 1; w < nv; ++w) {
      if (coin(rng)) {
        g.edges.push_back({"e" + std::to_string(edge++), g.vertices[v],
                           g.vertices[w]});
      }
    }
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite graded inverse semigroups, graded groupoids, and the "
               "duality between them"};
  app.require_subcommand(1);
  Guards guards;
  app.add_option("--max-slices", guards.max_slices,
                 "slice enumeration guard");
  app.add_option("--max-elements", guards.max_elements,
                 "semigroup size guard");

  std::string in_semigroup, in_groupoid, in_graph, out_path, report_path;
  std::string field_name = "Q", relators = "orthogonal";
  std::vector<std::string> points, vertices, edge_specs;
  bool graded = true;
  int random_count = 0;
  unsigned seed = 1;

  auto* validate_sg = app.add_subcommand("validate-semigroup",
                                         "run the axiom scan on a semigroup");
  validate_sg->add_option("--semigroup", in_semigroup)->required();
  validate_sg->add_option("--report", report_path);

  auto* validate_gp = app.add_subcommand("validate-groupoid",
                                         "run the axiom scan on a groupoid");
  validate_gp->add_option("--groupoid", in_groupoid)->required();
  validate_gp->add_option("--report", report_path);

  auto* example = app.add_subcommand("example", "construct a named example");
  example->require_subcommand(1);
  auto* ex_igr = example->add_subcommand(
      "igr", "graded symmetric inverse monoid of a graded set");
  ex_igr->add_option("--points", points, "points as name:degree")->required();
  ex_igr->add_option("--out", out_path)->required();
  auto* ex_pair = example->add_subcommand("pair-groupoid",
                                          "pair groupoid of a graded set");
  ex_pair->add_option("--points", points, "points as name:degree")->required();
  ex_pair->add_option("--out", out_path)->required();
  auto* ex_graph = example->add_subcommand(
      "graph-is", "graph inverse semigroup of an acyclic graph");
  ex_graph->add_option("--graph", in_graph, "graph json file");
  ex_graph->add_option("--vertices", vertices);
  ex_graph->add_option("--edges", edge_specs, "edges as name:src:rng");
  ex_graph->add_option("--out", out_path)->required();
  auto* ex_compl = example->add_subcommand(
      "completion", "distributive completion of a semigroup");
  ex_compl->add_option("--semigroup", in_semigroup)->required();
  ex_compl->add_flag("--graded,!--no-graded", graded,
                     "homogeneous ideals only");
  ex_compl->add_option("--out", out_path)->required();

  auto* dualize = app.add_subcommand(
      "dualize", "ultrafilter groupoid of a semigroup, or slice semigroup "
                 "of a groupoid");
  dualize->add_option("--semigroup", in_semigroup);
  dualize->add_option("--groupoid", in_groupoid);
  dualize->add_flag("--graded,!--no-graded", graded,
                    "homogeneous slices only (gp->sg)");
  dualize->add_option("--out", out_path)->required();

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "verify the natural isomorphism on a roundtrip");
  roundtrip->add_option("--semigroup", in_semigroup);
  roundtrip->add_option("--groupoid", in_groupoid);
  roundtrip->add_option("--report", report_path);

  auto* lemma = app.add_subcommand("lemma-suite",
                                   "exhaustive lemma-level property checks");
  lemma->add_option("--semigroup", in_semigroup);
  lemma->add_option("--random", random_count,
                    "run on randomly generated instances instead");
  lemma->add_option("--seed", seed, "seed for the instance generator");
  lemma->add_option("--report", report_path);

  auto* ring = app.add_subcommand(
      "ring-check", "enveloping ring isomorphism over an exact field");
  ring->add_option("--groupoid", in_groupoid)->required();
  ring->add_option("--field", field_name, "Q or F<p>");
  ring->add_option("--relators", relators,
                   "orthogonal (the definition) or compatible (experiment)");
  ring->add_option("--report", report_path);

  auto* exdot = app.add_subcommand("export-dot", "groupoid to graphviz");
  exdot->add_option("--groupoid", in_groupoid)->required();
  exdot->add_option("--out", out_path)->required();

  // let the guard flags appear after the subcommand name
  for (CLI::App* sub : {validate_sg, validate_gp, example, ex_igr, ex_pair,
                        ex_graph, ex_compl, dualize, roundtrip, lemma, ring,
                        exdot}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_sg->parsed()) {
      auto s = load_semigroup(in_semigroup, guards);
      const gstone::ValidationReport rep = s->validate();
      json out = report_header("validate-semigroup", guards);
      out["validation"] = rep.to_json();
      if (rep.ok()) {
        const auto& gb = s->graded_boolean_report();
        out["graded_boolean"] = gb.graded;
        out["boolean"] = gb.nongraded;
        out["separative"] = s->is_separative();
      }
      write_report(report_path, out);
      return finish("semigroup '" + in_semigroup + "': " + rep.summary(),
                    rep.ok());
    }
    if (validate_gp->parsed()) {
      auto g = load_groupoid(in_groupoid);
      const gstone::ValidationReport rep = g->validate();
      json out = report_header("validate-groupoid", guards);
      out["validation"] = rep.to_json();
      write_report(report_path, out);
      return finish("groupoid '" + in_groupoid + "': " + rep.summary(),
                    rep.ok());
    }
    if (ex_igr->parsed()) {
      const auto sim =
          gstone::graded_symmetric_inverse_monoid(parse_points(points));
      if (sim.semigroup->size() >
          static_cast<int>(guards.max_elements)) {
        throw gstone::ResourceError(
            "igr: " + std::to_string(sim.semigroup->size()) +
            " elements exceed the guard of " +
            std::to_string(guards.max_elements));
      }
      write_text(out_path, sim.semigroup->to_json().dump(2) + "\n");
      return finish("wrote I^gr with " +
                        std::to_string(sim.semigroup->size()) +
                        " elements to '" + out_path + "'",
                    true);
    }
    if (ex_pair->parsed()) {
      const auto pg = gstone::pair_groupoid(parse_points(points));
      write_text(out_path, pg.groupoid->to_json().dump(2) + "\n");
      return finish("wrote pair groupoid with " +
                        std::to_string(pg.groupoid->size()) +
                        " morphisms to '" + out_path + "'",
                    true);
    }
    if (ex_graph->parsed()) {
      gstone::FiniteGraph graph;
      if (!in_graph.empty()) {
        graph = gstone::FiniteGraph::from_json(load_json(in_graph));
      } else {
        graph.vertices = vertices;
        for (const std::string& spec : edge_specs) {
          const auto c1 = spec.find(':');
          const auto c2 = spec.find(':', c1 + 1);
          if (c1 == std::string::npos || c2 == std::string::npos) {
            throw gstone::InputError("edge '" + spec + "' is not name:src:rng");
          }
          graph.edges.push_back({spec.substr(0, c1),
                                 spec.substr(c1 + 1, c2 - c1 - 1),
                                 spec.substr(c2 + 1)});
        }
      }
      auto s = gstone::graph_inverse_semigroup(graph, guards.max_elements);
      write_text(out_path, s->to_json().dump(2) + "\n");
      return finish("wrote graph inverse semigroup with " +
                        std::to_string(s->size()) + " elements to '" +
                        out_path + "'",
                    true);
    }
    if (ex_compl->parsed()) {
      auto s = load_semigroup(in_semigroup, guards);
      const auto res =
          gstone::distributive_completion(s, graded, guards.max_slices);
      write_text(out_path, res.completion->to_json().dump(2) + "\n");
      return finish("wrote " + std::string(graded ? "graded " : "") +
                        "distributive completion with " +
                        std::to_string(res.completion->size()) +
                        " elements to '" + out_path + "' (pre-Boolean: " +
                        (res.pre_boolean ? "yes" : "no") + ")",
                    true);
    }
    if (dualize->parsed()) {
      if (in_semigroup.empty() == in_groupoid.empty()) {
        throw gstone::InputError(
            "dualize: give exactly one of --semigroup, --groupoid");
      }
      if (!in_semigroup.empty()) {
        auto s = load_semigroup(in_semigroup, guards);
        const auto ug = gstone::ultrafilter_groupoid(s);
        write_text(out_path, ug.groupoid->to_json().dump(2) + "\n");
        for (const std::string& note : ug.report.notes()) {
          std::cout << "note: " << note << "\n";
        }
        return finish("wrote ultrafilter groupoid with " +
                          std::to_string(ug.groupoid->size()) +
                          " morphisms to '" + out_path + "'",
                      true);
      }
      auto g = load_groupoid(in_groupoid);
      const auto sg = gstone::slice_semigroup(g, graded, guards.max_slices);
      write_text(out_path, sg.semigroup->to_json().dump(2) + "\n");
      return finish("wrote slice semigroup with " +
                        std::to_string(sg.semigroup->size()) +
                        " elements to '" + out_path + "'",
                    true);
    }
    if (roundtrip->parsed()) {
      if (in_semigroup.empty() == in_groupoid.empty()) {
        throw gstone::InputError(
            "roundtrip: give exactly one of --semigroup, --groupoid");
      }
      gstone::RoundtripReport rep;
      std::string instance;
      if (!in_semigroup.empty()) {
        instance = in_semigroup;
        rep = gstone::check_roundtrip_sg(load_semigroup(in_semigroup, guards),
                                         guards.max_slices);
      } else {
        instance = in_groupoid;
        rep = gstone::check_roundtrip_gp(load_groupoid(in_groupoid),
                                         guards.max_slices);
      }
      json out = report_header("roundtrip", guards);
      out["roundtrip"] = rep.to_json(instance);
      write_report(report_path, out);
      return finish("roundtrip " + rep.direction + " on '" + instance +
                        "': " + (rep.iso ? "iso" : "NOT an iso"),
                    rep.iso);
    }
    if (lemma->parsed()) {
      json out = report_header("lemma-suite", guards);
      out["seed"] = seed;
      json results = json::array();
      bool all_ok = true;
      auto run_one = [&](const std::string& label,
                         std::shared_ptr<const gstone::GradedInverseSemigroup>
                             s) {
        const gstone::ValidationReport rep =
            gstone::run_lemma_suite(s, guards.max_slices);
        results.push_back({{"instance", label}, {"report", rep.to_json()}});
        all_ok = all_ok && rep.ok();
        std::cout << label << ": " << rep.summary() << "\n";
      };
      if (random_count > 0) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> kind(0, 1);
        for (int i = 0; i < random_count; ++i) {
          if (kind(rng) == 0) {
            const auto set = random_graded_set(rng);
            run_one("random-igr-" + std::to_string(i),
                    gstone::graded_symmetric_inverse_monoid(set).semigroup);
          } else {
            const auto graph = random_acyclic_graph(rng);
            run_one("random-graph-is-" + std::to_string(i),
                    gstone::graph_inverse_semigroup(graph));
          }
        }
      } else {
        if (in_semigroup.empty()) {
          throw gstone::InputError(
              "lemma-suite: give --semigroup or --random N");
        }
        run_one(in_semigroup, load_semigroup(in_semigroup, guards));
      }
      out["results"] = results;
      write_report(report_path, out);
      return all_ok ? 0 : 1;
    }
    if (ring->parsed()) {
      auto g = load_groupoid(in_groupoid);
      if (relators != "orthogonal" && relators != "compatible") {
        throw gstone::InputError(
            "ring-check: --relators must be orthogonal or compatible");
      }
      const gstone::PhiPsiReport rep = gstone::phi_psi_iso_check(
          gstone::Field::parse(field_name), g, guards.max_slices,
          relators == "compatible");
      json out = report_header("ring-check", guards);
      out["ring"] = rep.to_json();
      out["relators"] = relators;
      if (relators == "compatible") {
        out["note"] = "compatible-pair relators are an experiment; the "
                      "defining relators are the orthogonal ones";
      }
      write_report(report_path, out);
      return finish("ring check over " + rep.field + ": dim " +
                        std::to_string(rep.dim_graded) + " (graded) vs " +
                        std::to_string(rep.dim_nongraded) +
                        " (non-graded), iso: " + (rep.iso ? "yes" : "no"),
                    rep.iso);
    }
    if (exdot->parsed()) {
      auto g = load_groupoid(in_groupoid);
      write_text(out_path, g->to_dot());
      return finish("wrote dot graph to '" + out_path + "'", true);
    }
  } catch (const gstone::ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const gstone::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
