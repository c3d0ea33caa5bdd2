#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fintopo/closed_graph.hpp"
#include "fintopo/dot_export.hpp"
#include "fintopo/fin_space.hpp"
#include "fintopo/json_io.hpp"
#include "fintopo/khalimsky.hpp"
#include "fintopo/partition.hpp"
#include "fintopo/random_gen.hpp"

namespace fintopo {

namespace detail {

inline void emit(std::ostream& out, const nlohmann::json& j) {
  out << j.dump() << "\n";
}

inline nlohmann::json validation_error_to_json(const ValidationError& v) {
  nlohmann::json e;
  e["kind"] = to_string(v.kind);
  e["message"] = v.describe();
  e["x"] = v.x;
  if (!v.y.empty()) e["y"] = v.y;
  return e;
}

inline nlohmann::json error_to_json(const Error& e) {
  if (const auto* inv = dynamic_cast<const InvalidSpaceError*>(&e))
    return validation_error_to_json(inv->detail());
  nlohmann::json j;
  j["kind"] = e.kind();
  j["message"] = e.what();
  if (const auto* u = dynamic_cast<const UnknownPointError*>(&e))
    j["id"] = u->id();
  return j;
}

inline nlohmann::json classes_to_json(const FinSpace& space,
                                      const Partition& parts) {
  nlohmann::json classes = nlohmann::json::array();
  for (const PointSet& cls : parts.classes())
    classes.push_back(space.to_labels(cls));
  return classes;
}

inline nlohmann::json witness_to_json(const SpaceMap& f,
                                      const ClosedGraphViolation& v) {
  nlohmann::json j;
  if (const auto* nc = std::get_if<NotConstantOnComponent>(&v)) {
    j["kind"] = "NotConstantOnComponent";
    j["component"] = f.domain().to_labels(nc->component);
    j["x"] = f.domain().label(nc->x);
    j["y"] = f.domain().label(nc->y);
  } else {
    const auto& vc = std::get<ValueNotClosed>(v);
    j["kind"] = "ValueNotClosed";
    j["component"] = f.domain().to_labels(vc.component);
    j["value"] = f.codomain().label(vc.value);
    j["in_closure"] = f.codomain().label(vc.in_closure);
  }
  return j;
}

}  // namespace detail

// Dispatches one command line. JSON results go to `out` (DOT for
// export-dot), diagnostics to `err`. Returns 0 on success, 1 on domain
// errors (with {"error": ...} on out), 2 on usage errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"finite topological spaces: validation, components, closures, "
               "closed-graph maps"};
  app.name("fintopo");
  app.require_subcommand(1);

  std::string space_path, domain_path, codomain_path, map_path;
  bool use_oracle = false;
  std::size_t components_oracle_limit = kComponentsOracleDefaultLimit;
  std::size_t graph_oracle_limit = kClosedGraphOracleDefaultLimit;
  std::vector<std::string> subset_labels;
  std::size_t enum_limit = 1000;
  std::size_t gen_dim = 1;
  long gen_lo = 0, gen_hi = 0;
  std::size_t gen_max_points = kKhalimskyDefaultMaxPoints;
  GenConfig gen_cfg{0, 0, 0.5};

  int exit_code = 0;

  auto* validate_cmd =
      app.add_subcommand("validate", "check the two neighborhood axioms");
  validate_cmd->add_option("space", space_path, "space JSON file")->required();
  validate_cmd->callback([&] {
    const auto data = space_data_from_json(parse_json_file(space_path));
    if (auto v = FinSpace::validate(data)) {
      detail::emit(out, {{"error", detail::validation_error_to_json(*v)}});
      exit_code = 1;
    } else {
      detail::emit(out, {{"valid", true}});
    }
  });

  auto* components_cmd =
      app.add_subcommand("components", "connected components");
  components_cmd->add_option("space", space_path, "space JSON file")
      ->required();
  components_cmd->add_flag("--oracle", use_oracle,
                           "use the exhaustive separation search instead");
  components_cmd->add_option("--oracle-limit", components_oracle_limit,
                             "max points for --oracle");
  components_cmd->callback([&] {
    const FinSpace space = load_space(space_path);
    const Partition parts = use_oracle
                                ? components_oracle(space, components_oracle_limit)
                                : components(space);
    detail::emit(out, {{"classes", detail::classes_to_json(space, parts)}});
  });

  auto* closed_points_cmd =
      app.add_subcommand("closed-points", "points whose closure is themselves");
  closed_points_cmd->add_option("space", space_path, "space JSON file")
      ->required();
  closed_points_cmd->callback([&] {
    const FinSpace space = load_space(space_path);
    detail::emit(out, {{"closed_points",
                        space.to_labels(space.closed_points())}});
  });

  auto* closure_cmd = app.add_subcommand("closure", "closure of a point set");
  closure_cmd->add_option("space", space_path, "space JSON file")->required();
  closure_cmd->add_option("--set", subset_labels,
                          "point in the set (repeatable; use --set=ID for "
                          "identifiers starting with a dash)");
  closure_cmd->callback([&] {
    const FinSpace space = load_space(space_path);
    const PointSet cl = space.closure(space.to_point_set(subset_labels));
    detail::emit(out, {{"closure", space.to_labels(cl)}});
  });

  auto* check_map_cmd =
      app.add_subcommand("check-map", "continuity and closed-graph report");
  check_map_cmd->add_option("map", map_path, "map JSON file")->required();
  check_map_cmd->add_flag("--oracle", use_oracle,
                          "also run the product-closure check");
  check_map_cmd->add_option("--oracle-limit", graph_oracle_limit,
                            "max |X|*|Y| pairs for --oracle");
  check_map_cmd->callback([&] {
    const SpaceMap f = load_map(map_path);
    nlohmann::json report;
    report["continuous"] = is_continuous(f);
    report["closed_graph"] = has_closed_graph(f);
    if (use_oracle)
      report["closed_graph_oracle"] =
          has_closed_graph_oracle(f, graph_oracle_limit);
    if (auto v = closed_graph_witness(f))
      report["witness"] = detail::witness_to_json(f, *v);
    const CountReport counts =
        count_closed_graph_maps(f.domain(), f.codomain());
    report["alpha"] = counts.alpha;
    report["beta"] = counts.beta;
    report["count"] = counts.count.to_string();
    detail::emit(out, report);
  });

  auto* count_cmd =
      app.add_subcommand("count", "number of closed-graph maps X -> Y");
  count_cmd->add_option("domain", domain_path, "domain space JSON file")
      ->required();
  count_cmd->add_option("codomain", codomain_path, "codomain space JSON file")
      ->required();
  count_cmd->callback([&] {
    const CountReport r = count_closed_graph_maps(load_space(domain_path),
                                                  load_space(codomain_path));
    detail::emit(out, {{"alpha", r.alpha},
                       {"beta", r.beta},
                       {"count", r.count.to_string()}});
  });

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "list every closed-graph map X -> Y");
  enumerate_cmd->add_option("domain", domain_path, "domain space JSON file")
      ->required();
  enumerate_cmd->add_option("codomain", codomain_path,
                            "codomain space JSON file")
      ->required();
  enumerate_cmd->add_option("--limit", enum_limit,
                            "refuse to enumerate more maps than this");
  enumerate_cmd->callback([&] {
    const FinSpace domain = load_space(domain_path);
    const FinSpace codomain = load_space(codomain_path);
    const auto maps = enumerate_closed_graph_maps(domain, codomain, enum_limit);
    const CountReport r = count_closed_graph_maps(domain, codomain);
    nlohmann::json list = nlohmann::json::array();
    for (const SpaceMap& f : maps) list.push_back(map_values_to_json(f));
    detail::emit(out, {{"alpha", r.alpha},
                       {"beta", r.beta},
                       {"count", r.count.to_string()},
                       {"maps", list}});
  });

  auto* gen_cmd = app.add_subcommand("gen", "space generators");
  gen_cmd->require_subcommand(1);

  auto* gen_khalimsky = gen_cmd->add_subcommand(
      "khalimsky", "window of the n-dimensional digital line");
  gen_khalimsky->add_option("--dim", gen_dim, "dimension (>= 1)")->required();
  gen_khalimsky->add_option("--lo", gen_lo, "lower bound, inclusive")
      ->required();
  gen_khalimsky->add_option("--hi", gen_hi, "upper bound, inclusive")
      ->required();
  gen_khalimsky->add_option("--max-points", gen_max_points,
                            "refuse to build larger windows");
  gen_khalimsky->callback([&] {
    if (gen_lo % 2 == 0 || gen_hi % 2 == 0)
      err << "note: window clipped at an even endpoint; closed points are "
             "computed from the space, not the all-even rule\n";
    detail::emit(out, space_to_json(khalimsky_space(gen_dim, gen_lo, gen_hi,
                                                    gen_max_points)));
  });

  auto* gen_random =
      gen_cmd->add_subcommand("random", "seeded random preorder space");
  gen_random->add_option("--points", gen_cfg.n_points, "number of points")
      ->required();
  gen_random->add_option("--density", gen_cfg.density,
                         "edge probability in [0,1] (default 0.5)");
  gen_random->add_option("--seed", gen_cfg.seed, "64-bit seed (default 0)");
  gen_random->callback(
      [&] { detail::emit(out, space_to_json(random_space(gen_cfg))); });

  auto* export_dot_cmd = app.add_subcommand(
      "export-dot", "specialization structure as a DOT digraph");
  export_dot_cmd->add_option("space", space_path, "space JSON file")
      ->required();
  export_dot_cmd->callback([&] { out << export_dot(load_space(space_path)); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    detail::emit(out, {{"error", detail::error_to_json(e)}});
    return 1;
  } catch (const std::invalid_argument& e) {
    detail::emit(out, {{"error", {{"kind", "InvalidArgument"},
                                  {"message", e.what()}}}});
    return 1;
  }
  return exit_code;
}

}  // namespace fintopo
