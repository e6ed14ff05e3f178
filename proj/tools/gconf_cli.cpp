// Command line front end: builds models, prunes and multiplies them, and
// prints homology tables.  Every failure ends with a one-line JSON error
// object on stderr and a nonzero exit status.

#include <gconf/gconf.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace gconf;

struct Common {
  int n = 3;
  int subdivisions = -1;  // -1: default of the chosen rule
  std::string rule = "separated";
  std::optional<std::size_t> max_degree;
  std::string format = "table";
  std::size_t guard = kDefaultSimplexGuard;
  std::string output;
};

OutputFormat output_format(const Common& c) {
  if (c.format == "table") return OutputFormat::table;
  if (c.format == "json") return OutputFormat::json;
  throw InputError("--format must be 'table' or 'json'");
}

ModelOptions options_from(const Common& c) {
  ModelOptions o;
  o.rule = parse_cover_rule(c.rule);
  o.subdivisions = c.subdivisions >= 0 ? c.subdivisions : (o.rule == CoverRule::separated ? 2 : 0);
  o.simplex_guard = c.guard;
  return o;
}

PipelineConfig pipeline_from(const Common& c) {
  PipelineConfig cfg;
  auto o = options_from(c);
  cfg.n = c.n;
  cfg.rule = o.rule;
  cfg.subdivisions = o.subdivisions;
  cfg.max_degree = c.max_degree;
  cfg.format = output_format(c);
  cfg.simplex_guard = c.guard;
  return cfg;
}

void emit(const Common& c, const Json& j) {
  if (c.output.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(c.output, j);
}

SimplicialComplex space_from(const std::string& source) {
  if (is_letter(source)) return letter(source);
  return simplicial_complex_from_json(read_json_file(source));
}

std::string ranks_string(const std::vector<std::size_t>& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "]";
}

void print_rows(const std::vector<PipelineResult>& rows, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(to_json(r));
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::printf("%-8s %-44s %10s\n", "space", "homology of Conf(n, -)", "seconds");
  for (const auto& r : rows) {
    std::string name = r.x + " x " + r.y;
    std::printf("%-8s %-44s %10.2f\n", name.c_str(), format_homology(r.homology).c_str(), r.seconds);
  }
}

void print_error(const std::string& kind, const std::string& message) {
  Json err = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of graphical configuration spaces via presheaf models"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--n", c.n, "number of points");
  app.add_option("--subdivide", c.subdivisions, "barycentric subdivisions of the input space");
  app.add_option("--rule", c.rule, "cover rule: separated, barycentric, dual-cell, automatic");
  app.add_option("--max-degree", c.max_degree, "report homology up to this degree");
  app.add_option("--format", c.format, "table or json");
  app.add_option("--guard-simplices", c.guard, "cap on simplices or generators of raw models");
  app.add_option("-o,--output", c.output, "write JSON output to this file");

  std::string letter_name, input, left, right, x_source = "Z", y_source = "Z", graph_json, only;
  bool no_prune = false, smith = false, pointwise = false, direct = false;
  int rank = 1, m_coeff = 0, b = 0, p = 1;
  long long degree = 0;

  auto* model = app.add_subcommand("model", "build the presheaf model of Conf(-, X)");
  model->add_option("--letter", letter_name, "X, Y, Z or O");
  model->add_option("--input", input, "simplicial complex JSON file");
  model->add_flag("--no-prune", no_prune, "return the raw model");

  auto* prune_cmd = app.add_subcommand("prune", "prune a presheaf complex");
  prune_cmd->add_option("--input", input, "presheaf complex JSON file")->required();
  prune_cmd->add_flag("--smith", smith, "also eliminate label blocks with a unit Smith factor");

  auto* tensor = app.add_subcommand("tensor", "union-tensor product of two presheaf complexes");
  tensor->add_option("--left", left)->required();
  tensor->add_option("--right", right)->required();
  tensor->add_flag("--no-prune", no_prune, "skip pruning the product");

  auto* homology = app.add_subcommand("homology", "homology of a presheaf complex at a graph");
  homology->add_option("--input", input, "presheaf complex JSON file")->required();
  homology->add_option("--graph", graph_json, "graph as JSON, default the complete graph");
  homology->add_flag("--pointwise", pointwise, "homology at every graph");

  auto* pipeline = app.add_subcommand("pipeline", "homology of Conf(n, X x Y)");
  pipeline->add_option("--x", x_source, "letter or simplicial complex / model JSON file");
  pipeline->add_option("--y", y_source, "letter or simplicial complex / model JSON file");

  auto* table = app.add_subcommand("letters-table", "the nine products of two letters");
  table->add_option("--only", only, "a single row such as X*Y");

  auto* torus = app.add_subcommand("torus", "Betti numbers of Conf(3, T^r)/T^r");
  torus->add_option("--rank", rank, "r")->required();
  torus->add_flag("--direct", direct, "also compute the r-fold product directly (r <= 3)");

  auto* stable = app.add_subcommand("stable", "stable H_{mp+b} Conf(n, X x C^p)");
  stable->add_option("--letter", letter_name)->required();
  stable->add_option("--m", m_coeff)->required();
  stable->add_option("--b", b)->required();

  auto* cp = app.add_subcommand("cp", "H_degree Conf(n, X x C^p)");
  cp->add_option("--letter", letter_name)->required();
  cp->add_option("--p", p)->required();
  cp->add_option("--degree", degree)->required();

  auto* oracle = app.add_subcommand("oracle", "compare the direct product model with the tensor pipeline");
  oracle->add_option("--x", x_source);
  oracle->add_option("--y", y_source);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }

  try {
    const OutputFormat fmt = output_format(c);
    if (*model) {
      if (letter_name.empty() == input.empty()) throw InputError("give exactly one of --letter, --input");
      ModelOptions o = options_from(c);
      o.prune = !no_prune;
      emit(c, to_json(star_model(letter_name.empty() ? space_from(input) : letter(letter_name), c.n, o)));
    } else if (*prune_cmd) {
      auto complex = presheaf_complex_from_json(read_json_file(input));
      emit(c, to_json(smith ? prune_smith(complex) : prune(complex)));
    } else if (*tensor) {
      auto product = odot(presheaf_complex_from_json(read_json_file(left)),
                          presheaf_complex_from_json(read_json_file(right)));
      emit(c, to_json(no_prune ? product : prune(product)));
    } else if (*homology) {
      auto complex = presheaf_complex_from_json(read_json_file(input));
      std::vector<Graph> graphs;
      if (pointwise)
        graphs = enumerate_graphs(complex.vertex_count());
      else if (!graph_json.empty())
        graphs = {graph_from_json(Json::parse(graph_json))};
      else
        graphs = {complete(complex.vertex_count())};
      Json out = Json::array();
      for (const auto& g : graphs) {
        auto ev = evaluate(complex, g);
        if (c.max_degree) ev = truncate(ev, *c.max_degree + 1);
        auto hs = chain_homology(ev);
        if (c.max_degree && hs.size() > *c.max_degree + 1) hs.resize(*c.max_degree + 1);
        if (fmt == OutputFormat::table)
          std::cout << to_string(g) << "  " << format_homology(hs) << "\n";
        else
          out.push_back({{"graph", to_json(g)}, {"homology", to_json(hs)}});
      }
      if (fmt == OutputFormat::json) std::cout << out.dump(2) << "\n";
    } else if (*pipeline) {
      PipelineConfig cfg = pipeline_from(c);
      cfg.x = x_source;
      cfg.y = y_source;
      print_rows({run_pipeline(cfg)}, fmt);
    } else if (*table) {
      PipelineConfig cfg = pipeline_from(c);
      if (!only.empty()) {
        auto star = only.find('*');
        if (star == std::string::npos) throw InputError("--only expects a row such as X*Y");
        cfg.x = only.substr(0, star);
        cfg.y = only.substr(star + 1);
        if (!is_letter(cfg.x) || !is_letter(cfg.y)) throw InputError("unknown letter in '" + only + "'");
        print_rows({run_pipeline(cfg)}, fmt);
      } else {
        print_rows(letters_table(cfg), fmt);
      }
    } else if (*torus) {
      auto betti = torus_betti(rank);
      auto formula = closed_formula_betti(rank);
      std::optional<std::vector<HomologySummary>> direct_h;
      if (direct) direct_h = direct_torus_homology(rank);
      if (fmt == OutputFormat::json) {
        Json j = {{"rank", rank}, {"betti", Json::array()}, {"closed_formula", Json::array()}};
        for (const auto& v : betti) j["betti"].push_back(integer_to_json(v));
        for (const auto& v : formula) j["closed_formula"].push_back(integer_to_json(v));
        if (direct_h) j["direct"] = to_json(*direct_h);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "p     beta_p\n";
        for (std::size_t k = 0; k < betti.size(); ++k) std::cout << k << "     " << betti[k] << "\n";
        std::cout << "closed formula " << (betti == formula ? "agrees" : "DISAGREES") << "\n";
        if (direct_h) std::cout << "direct product at K3: " << format_homology(*direct_h) << "\n";
      }
    } else if (*stable || *cp) {
      if (!is_letter(letter_name)) throw InputError("unknown letter '" + letter_name + "'");
      PipelineConfig cfg = pipeline_from(c);
      SimplicialComplex x = letter(letter_name);
      PresheafComplex mx = star_model(x, c.n, model_options(cfg));
      StablePresheafModel planes = formality_split(plane_model(c.n));
      if (*stable) {
        auto s = stable_homology(mx, planes, m_coeff, b, x.dimension());
        if (fmt == OutputFormat::json)
          std::cout << Json{{"group", to_json(s.group)}, {"bound", s.bound}}.dump(2) << "\n";
        else
          std::cout << "H_{" << m_coeff << "p+" << b << "} Conf(" << c.n << ", " << letter_name
                    << " x C^p) = " << format_group(s.group) << "  for p >= " << s.bound << "\n";
      } else {
        auto h = cp_homology(mx, planes, p, degree);
        if (fmt == OutputFormat::json)
          std::cout << to_json(h).dump(2) << "\n";
        else
          std::cout << "H_" << degree << " Conf(" << c.n << ", " << letter_name << " x C^" << p
                    << ") = " << format_group(h) << "\n";
      }
    } else if (*oracle) {
      PipelineConfig cfg = pipeline_from(c);
      cfg.x = x_source;
      cfg.y = y_source;
      ModelOptions direct_opts = product_model_defaults();
      direct_opts.simplex_guard = c.guard;
      auto direct_model = direct_product_model(space_from(x_source), space_from(y_source), c.n, direct_opts);
      auto tensor_model = prune(odot(resolve_model(x_source, cfg), resolve_model(y_source, cfg)));
      auto report = qis_report(direct_model, tensor_model);
      auto tensor_h = chain_homology(evaluate(tensor_model, complete(c.n)));
      auto direct_h = chain_homology(evaluate(direct_model, complete(c.n)));
      if (fmt == OutputFormat::json) {
        std::cout << Json{{"tensor", to_json(tensor_h)},
                          {"direct", to_json(direct_h)},
                          {"pointwise_agree", report.equal},
                          {"detail", report.describe()}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "tensor pipeline: " << format_homology(tensor_h) << "\n"
                  << "direct model:    " << format_homology(direct_h) << "  ranks "
                  << ranks_string(direct_model.ranks()) << "\n"
                  << "pointwise: " << report.describe() << "\n";
      }
      if (!report.equal) return 1;
    }
  } catch (const Error& e) {
    print_error(e.kind(), e.what());
    return 1;
  } catch (const Json::exception& e) {
    print_error("parse", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
  return 0;
}
