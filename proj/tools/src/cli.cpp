#include "stasheff_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "stasheff/canonical_basis.hpp"
#include "stasheff/cluster_atlas.hpp"
#include "stasheff/error.hpp"
#include "stasheff/json_io.hpp"
#include "stasheff/polytope.hpp"

namespace stasheff::cli {

namespace {

using json_io::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
      return kBudgetExceeded;
    case ErrorCode::SchemaViolation:
    case ErrorCode::InvalidVertex:
    case ErrorCode::InvalidPolygon:
    case ErrorCode::NotADiagonal:
    case ErrorCode::InvariantViolation:
    case ErrorCode::NotALamination:
    case ErrorCode::EmptyInput:
    case ErrorCode::SizeMismatch:
    case ErrorCode::FrozenDirection:
    case ErrorCode::IncompleteTriangulation:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NonIntegral:
      return kInputError;
    default:
      return kMathFailure;
  }
}

std::string csv_header(const Triangulation& t) {
  std::string out;
  for (const auto& d : t.diagonals()) out += "a_" + std::to_string(d.i) + "_" + std::to_string(d.j) + ",";
  return out + "vertex";
}

std::vector<std::size_t> parse_word(const std::string& text) {
  std::vector<std::size_t> word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw InputError("mutation word entries are positive integers");
    }
    if (used != item.size() || v < 1) throw InputError("mutation word entries are positive integers");
    word.push_back(static_cast<std::size_t>(v - 1));
  }
  return word;
}

std::vector<Lamination> vertex_points(const StasheffSpec& spec) {
  std::set<Lamination> out;
  for (const auto& t : triangulations(spec.n_gon())) out.insert(phi_inverse(vertex(spec, t)));
  return {out.begin(), out.end()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical and cluster combinatorics of type A_n", "stasheff"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("-o,--out", out_path, "Write results to this file instead of stdout");

  std::string in_path;
  std::string chart_text;
  std::string seed_path;
  std::string word_text;
  std::string format = "csv";
  int rank = 0;
  bool coeffs = false;
  bool strict = false;
  std::size_t budget = ExpandOptions{}.node_budget;

  auto* tri = app.add_subcommand("triangulations", "List the triangulations of the (K+3)-gon");
  tri->add_option("--n", rank, "Rank K")->required()->check(CLI::Range(1, 12));

  auto* sup = app.add_subcommand("support", "Support of a product of basis elements");
  sup->add_option("--in", in_path, "Points JSON")->required();
  sup->add_flag("--coeffs", coeffs, "Include structure coefficients");
  sup->add_option("--budget", budget, "Maximum number of graphs to expand");

  auto* mink = app.add_subcommand("minkowski", "Bounds c of the Minkowski sum of points");
  mink->add_option("--in", in_path, "Points JSON")->required();

  auto* check = app.add_subcommand("check-stasheff", "Test the quadruple inequalities");
  check->add_option("--in", in_path, "Spec JSON")->required();
  check->add_flag("--strict", strict, "Fail (exit 2) unless the spec is Stasheff and nondegenerate");

  auto* lat = app.add_subcommand("lattice-points", "Integer points of a spec");
  lat->add_option("--in", in_path, "Spec JSON")->required();
  lat->add_option("--chart", chart_text, "Chart such as 1-3,1-4 (default: snake)");

  auto* verts = app.add_subcommand("vertices", "Vertex of the spec in every chart");
  verts->add_option("--in", in_path, "Spec JSON")->required();

  auto* exp = app.add_subcommand("export-chart", "Coordinates of lattice points and vertices in one chart");
  exp->add_option("--in", in_path, "Spec JSON")->required();
  exp->add_option("--chart", chart_text, "Chart such as 1-3,1-4 (default: snake)");
  exp->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));

  auto* ver = app.add_subcommand("verify-mthm", "Compare the support with the lattice points of the Minkowski sum");
  ver->add_option("--in", in_path, "Points JSON")->required();
  ver->add_option("--budget", budget, "Maximum number of graphs to expand");

  auto* mut = app.add_subcommand("mutate", "Apply a mutation word to a seed");
  mut->add_option("--seed", seed_path, "Seed JSON")->required();
  mut->add_option("--word", word_text, "Comma-separated 1-based indices")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kInputError;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;
  auto emit = [&](const json& j) { sink << j.dump(2) << "\n"; };
  auto chart_for = [&](int n_gon) {
    return chart_text.empty() ? snake_triangulation(n_gon) : json_io::parse_chart(chart_text, n_gon);
  };

  try {
    if (*tri) {
      json list = json::array();
      for (const auto& t : triangulations(rank + 3)) list.push_back(json_io::to_json(t));
      json doc = json_io::document("triangulations", list);
      doc["n_gon"] = rank + 3;
      emit(doc);
    } else if (*sup) {
      const auto points = json_io::laminations_from_json(read_json(in_path));
      const Expansion e = product_expand(points, {CrossingPolicy::SmallestFirst, budget});
      if (coeffs) {
        emit(json_io::document("expansion", json_io::to_json(e)));
      } else {
        json list = json::array();
        for (const auto& [l, c] : e.coeffs) list.push_back(json_io::to_json(l));
        emit(json_io::document("points", list));
      }
    } else if (*mink) {
      const auto points = json_io::laminations_from_json(read_json(in_path));
      emit(json_io::document("spec", json_io::to_json(minkowski_c(points))));
    } else if (*check) {
      const StasheffSpec spec = json_io::spec_from_json(read_json(in_path));
      const bool st = is_stasheff(spec);
      const bool nd = is_nondegenerate(spec);
      sink << "stasheff: " << (st ? "true" : "false") << "\n";
      sink << "nondegenerate: " << (nd ? "true" : "false") << "\n";
      if (strict && !(st && nd)) return kMathFailure;
    } else if (*lat) {
      const StasheffSpec spec = json_io::spec_from_json(read_json(in_path));
      const Triangulation chart = chart_for(spec.n_gon());
      json points = json::array();
      json coords = json::array();
      for (const auto& l : lattice_points(spec, chart)) {
        points.push_back(json_io::to_json(l));
        coords.push_back(phi(l, chart).values);
      }
      json doc = json_io::document("points", points);
      doc["chart"] = json_io::to_json(chart);
      doc["coords"] = coords;
      emit(doc);
    } else if (*verts) {
      const StasheffSpec spec = json_io::spec_from_json(read_json(in_path));
      json list = json::array();
      for (const auto& t : triangulations(spec.n_gon())) {
        const TropicalCoords v = vertex(spec, t);
        list.push_back({{"coords", json_io::to_json(v)}, {"lamination", json_io::to_json(phi_inverse(v))}});
      }
      emit(json_io::document("vertices", list));
    } else if (*exp) {
      const StasheffSpec spec = json_io::spec_from_json(read_json(in_path));
      const Triangulation chart = chart_for(spec.n_gon());
      const auto verts_list = vertex_points(spec);
      std::set<Lamination> rows;
      for (const auto& l : lattice_points(spec, chart)) rows.insert(l);
      rows.insert(verts_list.begin(), verts_list.end());
      sink << csv_header(chart) << "\n";
      for (const auto& l : rows) {
        for (auto v : phi(l, chart).values) sink << v << ",";
        const bool is_vertex = std::binary_search(verts_list.begin(), verts_list.end(), l);
        sink << (is_vertex ? "true" : "false") << "\n";
      }
    } else if (*ver) {
      const auto points = json_io::laminations_from_json(read_json(in_path));
      const auto s = support(points, {CrossingPolicy::SmallestFirst, budget});
      const auto lp = lattice_points(minkowski_c(points));
      if (s != lp) {
        std::vector<Lamination> only_support;
        std::vector<Lamination> only_lattice;
        std::set_difference(s.begin(), s.end(), lp.begin(), lp.end(), std::back_inserter(only_support));
        std::set_difference(lp.begin(), lp.end(), s.begin(), s.end(), std::back_inserter(only_lattice));
        sink << "mismatch: support has " << s.size() << " elements, lattice points " << lp.size() << "\n";
        for (const auto& l : only_support) sink << "support only: " << json_io::to_json(l).dump() << "\n";
        for (const auto& l : only_lattice) sink << "lattice only: " << json_io::to_json(l).dump() << "\n";
        return kMathFailure;
      }
      sink << "support = lattice points, " << s.size() << " elements\n";
    } else if (*mut) {
      Seed seed = json_io::seed_from_json(read_json(seed_path));
      for (std::size_t k : parse_word(word_text)) seed = mutate_seed(seed, k);
      emit(json_io::document("seed", json_io::to_json(seed)));
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace stasheff::cli
