#include "statfan/design.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "statfan/errors.hpp"

namespace statfan {

namespace {

std::vector<std::size_t> compute_level_counts(const Matrix& points) {
  std::vector<std::size_t> counts(points.cols());
  for (std::size_t j = 0; j < points.cols(); ++j) {
    std::set<Rational> values;
    for (std::size_t i = 0; i < points.rows(); ++i) values.insert(points(i, j));
    counts[j] = values.size();
  }
  return counts;
}

}  // namespace

Design::Design(Matrix points) : points_(std::move(points)) {
  if (points_.rows() < 2) throw std::invalid_argument("a design needs n > 1 distinct points");
  if (points_.cols() == 0) throw std::invalid_argument("a design needs at least one indeterminate");
  std::set<std::vector<Rational>> seen;
  for (std::size_t i = 0; i < points_.rows(); ++i) {
    if (!seen.insert(points_.row(i)).second)
      throw std::invalid_argument("design rows must be pairwise distinct");
  }
  level_counts_ = compute_level_counts(points_);
}

Design::DedupResult Design::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<Rational>> distinct;
  std::set<std::vector<Rational>> seen;
  for (const auto& row : rows) {
    if (seen.insert(row).second) distinct.push_back(row);
  }
  std::size_t dropped = rows.size() - distinct.size();
  return DedupResult{Design(Matrix::from_rows(distinct)), dropped};
}

std::vector<std::size_t> Design::single_level_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < level_counts_.size(); ++j)
    if (level_counts_[j] == 1) out.push_back(j);
  return out;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  if (line.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
  } else {
    std::istringstream in(line);
    std::string field;
    while (in >> field) fields.push_back(field);
  }
  return fields;
}

std::string strip_comment(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) s.resize(hash);
  while (!s.empty() && (std::isspace(static_cast<unsigned char>(s.back())))) s.pop_back();
  return s;
}

}  // namespace

LoadedDesign load_design(std::istream& in, bool header) {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::string> names;
  std::string line;
  std::size_t width = 0;
  bool want_header = header;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::vector<std::string> fields = split_fields(s);
    if (fields.empty()) continue;
    if (want_header) {
      for (std::string& f : fields) {
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front()))) f.erase(0, 1);
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
      }
      names = fields;
      width = fields.size();
      want_header = false;
      continue;
    }
    if (width == 0) width = fields.size();
    if (fields.size() != width)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                       " fields, found " + std::to_string(fields.size()));
    std::vector<Rational> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) {
      try {
        row.push_back(parse_rational(f));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  std::set<std::vector<Rational>> distinct(rows.begin(), rows.end());
  if (distinct.size() < 2) throw ParseError("design needs at least two distinct points");
  auto dedup = Design::from_rows(rows);
  return LoadedDesign{std::move(dedup.design), dedup.dropped_duplicates, std::move(names)};
}

LoadedDesign load_design_file(const std::string& path, bool header) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open design file: " + path);
  return load_design(in, header);
}

Design project(const Design& d, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw std::invalid_argument("projection index set must be nonempty");
  for (std::size_t j : indices)
    if (j >= d.arity()) throw std::invalid_argument("projection index out of range");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) {
    std::vector<Rational> row;
    row.reserve(indices.size());
    for (std::size_t j : indices) row.push_back(d.at(i, j));
    rows.push_back(std::move(row));
  }
  return Design::from_rows(rows).design;
}

std::vector<Rational> monomial_vector(const Design& d, const Monomial& m) {
  if (m.arity() != d.arity())
    throw std::invalid_argument("monomial arity does not match design");
  std::vector<Rational> v(d.n(), Rational(1));
  for (std::size_t i = 0; i < d.n(); ++i) {
    for (std::size_t j = 0; j < d.arity(); ++j) {
      for (int e = 0; e < m[j]; ++e) v[i] *= d.at(i, j);
    }
  }
  return v;
}

Matrix model_matrix(const Design& d, const Model& model) {
  if (model.empty()) throw std::invalid_argument("model matrix of an empty model");
  if (model.arity() != d.arity())
    throw std::invalid_argument("model arity does not match design");
  std::vector<std::vector<Rational>> cols;
  cols.reserve(model.size());
  for (const Monomial& m : model.terms()) cols.push_back(monomial_vector(d, m));
  return Matrix::from_columns(cols);
}

bool is_identifiable(const Design& d, const Model& model) {
  return rank(model_matrix(d, model)) == model.size();
}

bool is_his(const Design& d, const Model& model) {
  return model.size() == d.n() && model.is_staircase() && is_identifiable(d, model);
}

}  // namespace statfan
