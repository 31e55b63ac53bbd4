#ifndef STATFAN_REPORT_HPP
#define STATFAN_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "statfan/conditions.hpp"
#include "statfan/design.hpp"
#include "statfan/fan.hpp"
#include "statfan/groebner.hpp"

namespace statfan {

enum class OutputFormat { text, json_lines };

OutputFormat parse_output_format(std::string_view text);

struct CheckReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::size_t> levels;
  std::size_t p = 0;
  std::size_t rank = 0;
  bool identifiable = false;
  bool hierarchical = false;
  bool saturated = false;
};

CheckReport run_check(const Design& d, const Model& model);
std::string format_check(const CheckReport& report, OutputFormat format);

/// One line per leaf: terms, provenance and the rank certificate p.
std::vector<std::string> leaf_lines(const FanResult& fan, OutputFormat format);

/// Tuple form, one monomial per line; readable back as a model file.
std::string model_file_text(const Model& model);

std::vector<std::string> g_table_lines(const std::vector<GEntry>& table, OutputFormat format);

std::string format_groebner(const PointIdeal& ideal, OutputFormat format);

}  // namespace statfan

#endif
