#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "statfan/conditions.hpp"
#include "statfan/design.hpp"
#include "statfan/errors.hpp"
#include "statfan/fan.hpp"
#include "statfan/groebner.hpp"
#include "statfan/report.hpp"
#include "statfan/search.hpp"

namespace {

using namespace statfan;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::vector<std::size_t> parse_levels(const std::string& text) {
  std::vector<std::size_t> levels;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    int value = std::stoi(piece);
    if (value < 1) throw ParseError("level counts must be positive");
    levels.push_back(static_cast<std::size_t>(value));
  }
  if (levels.empty()) throw ParseError("empty level list");
  return levels;
}

std::vector<std::size_t> parse_permutation(const std::string& text, std::size_t arity) {
  std::vector<std::size_t> perm;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    int value = std::stoi(piece);
    if (value < 1 || static_cast<std::size_t>(value) > arity)
      throw ParseError("permutation entry out of range: " + piece);
    perm.push_back(static_cast<std::size_t>(value - 1));
  }
  if (perm.size() != arity)
    throw ParseError("permutation must list all " + std::to_string(arity) + " indeterminates");
  return perm;
}

std::vector<std::vector<Rational>> parse_level_values(const std::string& text) {
  std::vector<std::vector<Rational>> values;
  std::stringstream factors(text);
  std::string factor;
  while (std::getline(factors, factor, ';')) {
    std::vector<Rational> row;
    std::stringstream in(factor);
    std::string piece;
    while (std::getline(in, piece, ',')) row.push_back(parse_rational(piece));
    if (row.empty()) throw ParseError("empty level value list");
    values.push_back(std::move(row));
  }
  return values;
}

LoadedDesign load_design_checked(const std::string& path, bool header) {
  LoadedDesign loaded = load_design_file(path, header);
  if (loaded.dropped_duplicates > 0)
    std::cerr << "warning: dropped " << loaded.dropped_duplicates << " duplicate point(s)\n";
  for (std::size_t j : loaded.design.single_level_columns())
    std::cerr << "warning: indeterminate x" << (j + 1) << " takes a single value\n";
  return loaded;
}

Model load_model_checked(const std::string& path, std::size_t arity) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file: " + path);
  return load_model(in, arity);
}

struct FanOptions {
  std::string design_path;
  bool header = false;
  std::string mode = "greedy";
  std::size_t cap = 1'000'000;
  std::size_t box_cap = 4096;
  std::size_t n_cap = 16;
  std::size_t jobs = 1;
  std::string format = "text";
  std::string write_models_dir;
};

int run_fan(const FanOptions& opt) {
  OutputFormat format = parse_output_format(opt.format);
  Design design = load_design_checked(opt.design_path, opt.header).design;
  FanCaps caps{opt.cap, opt.box_cap, opt.n_cap};

  std::vector<FanResult> parts;
  std::vector<SubsetFanDetail> subset_detail;
  if (opt.mode == "greedy" || opt.mode == "all")
    parts.push_back(enumerate_greedy_fan(design, caps));
  if (opt.mode == "subset" || opt.mode == "all")
    parts.push_back(subset_fan(design, caps, &subset_detail));
  if (opt.mode == "exhaustive" || opt.mode == "all")
    parts.push_back(enumerate_statistical_fan(design, caps));
  if (parts.empty()) throw ParseError("unknown fan mode: '" + opt.mode + "'");
  FanResult fan = merge_fans(parts);

  std::ostream& summary = format == OutputFormat::text ? std::cout : std::cerr;
  summary << "# design: n=" << design.n() << " r=" << design.arity() << '\n';
  for (const auto& [provenance, count] : fan.counts)
    summary << "# " << to_string(provenance) << " leaves: " << count << '\n';
  for (const SubsetFanDetail& detail : subset_detail) {
    summary << "# subset {";
    for (std::size_t k = 0; k < detail.indices.size(); ++k)
      summary << (k ? "," : "") << 'x' << detail.indices[k] + 1;
    summary << "}: " << detail.leaf_count << " leaves\n";
  }
  summary << "# distinct leaves: " << fan.size() << '\n';
  if (fan.capped) summary << "# CAP EXCEEDED: partial result\n";

  for (const std::string& line : leaf_lines(fan, format)) std::cout << line << '\n';

  if (!opt.write_models_dir.empty()) {
    std::filesystem::create_directories(opt.write_models_dir);
    std::size_t index = 0;
    for (const FanLeaf& leaf : fan.leaves) {
      std::ofstream out(opt.write_models_dir + "/leaf-" + std::to_string(index++) + ".txt");
      out << model_file_text(leaf.model);
    }
  }
  return fan.capped ? kExitCap : kExitOk;
}

struct ConditionsOptions {
  std::string design_path;
  bool header = false;
  std::string levels_text;
  std::string monomial_text;
  std::size_t n = 0;
  std::string format = "text";
};

int run_conditions(const ConditionsOptions& opt) {
  OutputFormat format = parse_output_format(opt.format);
  std::optional<Design> design;
  std::vector<std::size_t> levels;
  if (!opt.design_path.empty()) {
    design = load_design_checked(opt.design_path, opt.header).design;
    levels = design->level_counts();
  } else if (!opt.levels_text.empty()) {
    levels = parse_levels(opt.levels_text);
  } else {
    throw ParseError("conditions needs --levels or --design");
  }
  std::size_t n = opt.n != 0 ? opt.n : (design ? design->n() : 0);

  if (opt.monomial_text.empty()) {
    auto table = g_table(levels);
    if (format == OutputFormat::text) {
      std::cout << "# levels:";
      for (std::size_t l : levels) std::cout << ' ' << l;
      std::cout << "\n# entries: " << table.size() << '\n';
    }
    for (const std::string& line : g_table_lines(table, format)) std::cout << line << '\n';
    if (n > 0) {
      auto guaranteed = guaranteed_monomials(levels, n);
      if (format == OutputFormat::text) {
        std::cout << "# guaranteed in every leaf for n=" << n << " (" << guaranteed.size()
                  << "):";
        for (const Monomial& m : guaranteed) std::cout << ' ' << to_string(m);
        std::cout << '\n';
      } else {
        std::cout << "{\"n\":" << n << ",\"guaranteed\":[";
        for (std::size_t k = 0; k < guaranteed.size(); ++k)
          std::cout << (k ? "," : "") << '"' << tuple_string(guaranteed[k]) << '"';
        std::cout << "]}\n";
      }
    }
    return kExitOk;
  }

  Monomial m = parse_monomial(opt.monomial_text, levels.size());
  bool box_ok = necessary_box(m, levels);
  std::optional<bool> total_ok;
  if (n > 0) total_ok = necessary_total(m, n);
  std::optional<SubsetVerdict> subsets;
  if (design) subsets = necessary_subsets(*design, m);
  std::optional<long long> g;
  if (box_ok) g = g_value(levels, m);

  if (format == OutputFormat::text) {
    std::cout << "monomial: " << to_string(m) << ' ' << tuple_string(m) << '\n';
    if (total_ok) std::cout << "total-degree condition (n=" << n << "): "
                            << (*total_ok ? "ok" : "FAIL") << '\n';
    std::cout << "box condition: " << (box_ok ? "ok" : "FAIL") << '\n';
    if (subsets) {
      std::cout << "subset condition: " << (subsets->ok ? "ok" : "FAIL");
      if (!subsets->ok) {
        std::cout << " witness {";
        for (std::size_t k = 0; k < subsets->witness.size(); ++k)
          std::cout << (k ? "," : "") << 'x' << subsets->witness[k] + 1;
        std::cout << '}';
      }
      std::cout << '\n';
    }
    if (g) std::cout << "G: " << *g << '\n';
    else std::cout << "G: undefined (outside the level box)\n";
  } else {
    std::ostringstream out;
    out << "{\"monomial\":\"" << tuple_string(m) << "\",\"box\":" << (box_ok ? "true" : "false");
    if (total_ok) out << ",\"total\":" << (*total_ok ? "true" : "false");
    if (subsets) {
      out << ",\"subsets\":" << (subsets->ok ? "true" : "false");
      if (!subsets->ok) {
        out << ",\"witness\":[";
        for (std::size_t k = 0; k < subsets->witness.size(); ++k)
          out << (k ? "," : "") << subsets->witness[k] + 1;
        out << ']';
      }
    }
    if (g) out << ",\"G\":" << *g;
    out << '}';
    std::cout << out.str() << '\n';
  }
  return kExitOk;
}

struct GroebnerOptions {
  std::string design_path;
  bool header = false;
  std::string order = "grevlex";
  std::string perm_text;
  bool sweep = false;
  bool subsets = false;
  std::string kinds_text = "lex,grlex,grevlex";
  std::size_t runs_cap = 100000;
  std::string format = "text";
};

int run_groebner(const GroebnerOptions& opt) {
  OutputFormat format = parse_output_format(opt.format);
  Design design = load_design_checked(opt.design_path, opt.header).design;

  if (opt.sweep) {
    std::vector<OrderKind> kinds;
    std::stringstream in(opt.kinds_text);
    std::string piece;
    while (std::getline(in, piece, ',')) kinds.push_back(parse_order_kind(piece));
    FanResult fan = algebraic_fan_sweep(design, kinds, opt.subsets, opt.runs_cap);
    std::ostream& summary = format == OutputFormat::text ? std::cout : std::cerr;
    summary << "# algebraic fan leaves: " << fan.size() << '\n';
    for (const std::string& line : leaf_lines(fan, format)) std::cout << line << '\n';
    return kExitOk;
  }

  OrderKind kind = parse_order_kind(opt.order);
  MonomialOrder order = opt.perm_text.empty()
                            ? MonomialOrder(kind, design.arity())
                            : MonomialOrder(kind, parse_permutation(opt.perm_text, design.arity()));
  PointIdeal ideal = vanishing_ideal_gb(design, order);

  // Self-check before printing: every generator vanishes on every point.
  for (const Polynomial& g : ideal.basis.generators) {
    for (std::size_t i = 0; i < design.n(); ++i) {
      if (evaluate(g, design.points().row(i)) != 0) {
        std::cerr << "internal error: generator does not vanish on the design\n";
        return 1;
      }
    }
  }
  std::cout << format_groebner(ideal, format) << '\n';
  return kExitOk;
}

struct SearchOptions {
  std::string levels_text;
  std::size_t n = 0;
  std::string required_path;
  std::string values_text;
  std::size_t jobs = 1;
  std::size_t cap = 1'000'000;
  std::string format = "text";
};

int run_search(const SearchOptions& opt) {
  OutputFormat format = parse_output_format(opt.format);
  SearchConfig config;
  config.levels = parse_levels(opt.levels_text);
  config.n = opt.n;
  config.jobs = opt.jobs;
  config.max_designs = opt.cap;
  if (!opt.values_text.empty()) config.values = parse_level_values(opt.values_text);
  if (!opt.required_path.empty()) {
    std::ifstream in(opt.required_path);
    if (!in) throw ParseError("cannot open leaf set file: " + opt.required_path);
    config.required = load_model_set(in, config.levels.size());
  }

  SearchResult result = search_designs(config);
  auto guaranteed = guaranteed_monomials(config.levels, config.n);

  if (format == OutputFormat::text) {
    std::cout << "designs evaluated: " << result.total_designs << '\n'
              << "staircases of size " << config.n << ": " << result.staircase_count << '\n';
    for (std::size_t k = 0; k < result.per_leaf_support.size(); ++k)
      std::cout << "required leaf " << (k + 1) << " (" << to_string(config.required[k])
                << "): supported by " << result.per_leaf_support[k] << '\n';
    std::cout << "designs supporting all required leaves: " << result.supporting_all << '\n';
    std::cout << "guaranteed in every leaf (" << guaranteed.size() << "):";
    for (const Monomial& m : guaranteed) std::cout << ' ' << to_string(m);
    std::cout << '\n';
  } else {
    std::ostringstream out;
    out << "{\"designs\":" << result.total_designs
        << ",\"staircases\":" << result.staircase_count << ",\"per_leaf\":[";
    for (std::size_t k = 0; k < result.per_leaf_support.size(); ++k)
      out << (k ? "," : "") << result.per_leaf_support[k];
    out << "],\"supporting_all\":" << result.supporting_all << ",\"guaranteed\":[";
    for (std::size_t k = 0; k < guaranteed.size(); ++k)
      out << (k ? "," : "") << '"' << tuple_string(guaranteed[k]) << '"';
    out << "]}";
    std::cout << out.str() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"identifiability, statistical fans and Groebner bases of experimental designs"};
  app.require_subcommand(1);

  std::string seed_order = "grevlex";

  // check
  auto* check = app.add_subcommand("check", "identifiability report for a design and a model");
  std::string check_design, check_model, check_format = "text";
  bool check_header = false;
  check->add_option("--design", check_design, "design CSV/TSV file")->required();
  check->add_option("--model", check_model, "model file, one monomial per line")->required();
  check->add_flag("--header", check_header, "design file has a header row");
  check->add_option("--format", check_format, "text|json-lines");
  check->add_option("--seed-order", seed_order, "fallback monomial order");

  // fan
  auto* fan = app.add_subcommand("fan", "enumerate HIS models (the statistical fan)");
  FanOptions fan_opt;
  fan->add_option("--design", fan_opt.design_path, "design CSV/TSV file")->required();
  fan->add_flag("--header", fan_opt.header, "design file has a header row");
  fan->add_option("--mode", fan_opt.mode, "greedy|subset|exhaustive|all");
  fan->add_option("--cap", fan_opt.cap, "leaf cap");
  fan->add_option("--box-cap", fan_opt.box_cap, "exhaustive mode: level box cap");
  fan->add_option("--n-cap", fan_opt.n_cap, "exhaustive mode: design size cap");
  fan->add_option("--format", fan_opt.format, "text|json-lines");
  fan->add_option("--write-models", fan_opt.write_models_dir, "write each leaf as a model file");
  fan->add_option("--seed-order", seed_order, "fallback monomial order");
  fan->add_option("--jobs", fan_opt.jobs, "worker bound");

  // conditions
  auto* conditions = app.add_subcommand("conditions", "necessary conditions and G(alpha) tables");
  ConditionsOptions cond_opt;
  conditions->add_option("--design", cond_opt.design_path, "design CSV/TSV file");
  conditions->add_flag("--header", cond_opt.header, "design file has a header row");
  conditions->add_option("--levels", cond_opt.levels_text, "level counts, e.g. 2,2,3,3");
  conditions->add_option("--monomial", cond_opt.monomial_text, "monomial to check");
  conditions->add_option("--n", cond_opt.n, "design size for the total/guarantee conditions");
  conditions->add_option("--format", cond_opt.format, "text|json-lines");
  conditions->add_option("--seed-order", seed_order, "fallback monomial order");

  // groebner
  auto* groebner = app.add_subcommand("groebner", "vanishing-ideal Groebner basis and quotient");
  GroebnerOptions gb_opt;
  groebner->add_option("--design", gb_opt.design_path, "design CSV/TSV file")->required();
  groebner->add_flag("--header", gb_opt.header, "design file has a header row");
  groebner->add_option("--order", gb_opt.order, "lex|grlex|grevlex");
  groebner->add_option("--perm", gb_opt.perm_text, "indeterminate permutation, e.g. 2,3,4,1");
  groebner->add_flag("--sweep", gb_opt.sweep, "sweep kinds x permutations, collect quotients");
  groebner->add_flag("--subsets", gb_opt.subsets, "sweep projections with n_U = n too");
  groebner->add_option("--kinds", gb_opt.kinds_text, "kinds for --sweep");
  groebner->add_option("--runs-cap", gb_opt.runs_cap, "sweep run cap");
  groebner->add_option("--format", gb_opt.format, "text|json-lines");
  groebner->add_option("--seed-order", seed_order, "fallback monomial order");

  // search
  auto* search = app.add_subcommand("search", "full-factorial subset search for required leaves");
  SearchOptions search_opt;
  search->add_option("--levels", search_opt.levels_text, "level counts, e.g. 4,3")->required();
  search->add_option("--n", search_opt.n, "design size")->required();
  search->add_option("--required", search_opt.required_path,
                     "leaf set file (models separated by blank lines)");
  search->add_option("--values", search_opt.values_text,
                     "level values per factor, e.g. -1,-1/3,1/3,1;-1,0,1");
  search->add_option("--jobs", search_opt.jobs, "worker threads");
  search->add_option("--cap", search_opt.cap, "candidate design cap");
  search->add_option("--format", search_opt.format, "text|json-lines");
  search->add_option("--seed-order", seed_order, "fallback monomial order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*check) {
      OutputFormat format = parse_output_format(check_format);
      Design design = load_design_checked(check_design, check_header).design;
      Model model = load_model_checked(check_model, design.arity());
      std::cout << format_check(run_check(design, model), format) << '\n';
      return kExitOk;
    }
    if (*fan) return run_fan(fan_opt);
    if (*conditions) return run_conditions(cond_opt);
    if (*groebner) return run_groebner(gb_opt);
    if (*search) return run_search(search_opt);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
