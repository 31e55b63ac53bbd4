#include "statfan/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "statfan/errors.hpp"

namespace statfan {

using nlohmann::json;

namespace {

json monomial_json(const Monomial& m) {
  json out = json::array();
  for (std::size_t j = 0; j < m.arity(); ++j) out.push_back(m[j]);
  return out;
}

json model_json(const Model& model) {
  json out = json::array();
  for (const Monomial& m : model.terms()) out.push_back(monomial_json(m));
  return out;
}

std::string terms_text(const Model& model) {
  std::ostringstream out;
  for (std::size_t k = 0; k < model.terms().size(); ++k) {
    if (k) out << ',';
    out << to_string(model.terms()[k]);
  }
  return out.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json-lines") return OutputFormat::json_lines;
  throw ParseError("unknown output format: '" + std::string(text) + "'");
}

CheckReport run_check(const Design& d, const Model& model) {
  CheckReport report;
  report.n = d.n();
  report.r = d.arity();
  report.levels = d.level_counts();
  report.p = model.size();
  report.rank = rank(model_matrix(d, model));
  report.identifiable = report.rank == report.p;
  report.hierarchical = model.is_staircase();
  report.saturated = report.identifiable && report.p == report.n;
  return report;
}

std::string format_check(const CheckReport& report, OutputFormat format) {
  if (format == OutputFormat::json_lines) {
    json out{{"n", report.n},
             {"r", report.r},
             {"levels", report.levels},
             {"p", report.p},
             {"rank", report.rank},
             {"identifiable", report.identifiable},
             {"hierarchical", report.hierarchical},
             {"saturated", report.saturated}};
    return out.dump();
  }
  std::ostringstream out;
  out << "n: " << report.n << "\nr: " << report.r << "\nlevels:";
  for (std::size_t l : report.levels) out << ' ' << l;
  out << "\np: " << report.p << "\nrank: " << report.rank
      << "\nidentifiable: " << (report.identifiable ? "yes" : "no")
      << "\nhierarchical: " << (report.hierarchical ? "yes" : "no")
      << "\nsaturated: " << (report.saturated ? "yes" : "no");
  return out.str();
}

std::vector<std::string> leaf_lines(const FanResult& fan, OutputFormat format) {
  std::vector<std::string> lines;
  lines.reserve(fan.leaves.size());
  for (const FanLeaf& leaf : fan.leaves) {
    if (format == OutputFormat::json_lines) {
      json out{{"terms", model_json(leaf.model)},
               {"provenance", to_string(leaf.provenance)},
               {"p", leaf.model.size()}};
      lines.push_back(out.dump());
    } else {
      std::ostringstream out;
      out << "leaf provenance=" << to_string(leaf.provenance) << " p=" << leaf.model.size()
          << " terms=" << terms_text(leaf.model);
      lines.push_back(out.str());
    }
  }
  return lines;
}

std::string model_file_text(const Model& model) {
  std::ostringstream out;
  for (const Monomial& m : model.terms())
    out << tuple_string(m) << "  # " << to_string(m) << '\n';
  return out.str();
}

std::vector<std::string> g_table_lines(const std::vector<GEntry>& table, OutputFormat format) {
  std::vector<std::string> lines;
  lines.reserve(table.size());
  for (const GEntry& entry : table) {
    if (format == OutputFormat::json_lines) {
      json out{{"monomial", monomial_json(entry.monomial)},
               {"degree", entry.degree},
               {"G", entry.g}};
      lines.push_back(out.dump());
    } else {
      std::ostringstream out;
      out << tuple_string(entry.monomial) << " d=" << entry.degree << " G=" << entry.g;
      lines.push_back(out.str());
    }
  }
  return lines;
}

std::string format_groebner(const PointIdeal& ideal, OutputFormat format) {
  if (format == OutputFormat::json_lines) {
    json gens = json::array();
    for (const Polynomial& g : ideal.basis.generators) {
      json terms = json::array();
      for (const Term& t : g.terms())
        terms.push_back(json{{"coeff", to_string(t.coeff)}, {"monomial", monomial_json(t.monomial)}});
      gens.push_back(json{{"pretty", to_string(g)},
                          {"leading", monomial_json(g.leading_monomial())},
                          {"terms", terms}});
    }
    json perm = json::array();
    for (std::size_t p : ideal.basis.order.permutation()) perm.push_back(p + 1);
    json out{{"order", to_string(ideal.basis.order.kind())},
             {"permutation", perm},
             {"generators", gens},
             {"standard_monomials", model_json(ideal.quotient_basis)}};
    return out.dump();
  }
  std::ostringstream out;
  out << "order: " << to_string(ideal.basis.order.kind()) << " perm=";
  for (std::size_t i = 0; i < ideal.basis.order.permutation().size(); ++i) {
    if (i) out << ',';
    out << ideal.basis.order.permutation()[i] + 1;
  }
  out << "\ngenerators: " << ideal.basis.generators.size() << '\n';
  for (std::size_t i = 0; i < ideal.basis.generators.size(); ++i) {
    const Polynomial& g = ideal.basis.generators[i];
    out << "g" << (i + 1) << " = " << to_string(g) << "   [LT " << to_string(g.leading_monomial())
        << "]\n";
  }
  out << "standard monomials (" << ideal.quotient_basis.size()
      << "): " << terms_text(ideal.quotient_basis);
  return out.str();
}

}  // namespace statfan
