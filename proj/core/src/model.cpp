#include "statfan/model.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "statfan/errors.hpp"

namespace statfan {

Model::Model(std::size_t arity, std::vector<Monomial> terms)
    : arity_(arity), terms_(std::move(terms)) {
  for (const Monomial& m : terms_)
    if (m.arity() != arity_) throw std::invalid_argument("model term arity mismatch");
  std::sort(terms_.begin(), terms_.end(), canonical_less);
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

bool Model::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, canonical_less);
}

bool Model::is_staircase() const {
  return statfan::is_staircase(terms_);
}

Model Model::lifted(std::size_t new_arity, const std::vector<std::size_t>& positions) const {
  if (positions.size() != arity_) throw std::invalid_argument("lift position count mismatch");
  for (std::size_t p : positions)
    if (p >= new_arity) throw std::invalid_argument("lift position out of range");
  std::vector<Monomial> lifted_terms;
  lifted_terms.reserve(terms_.size());
  for (const Monomial& m : terms_) {
    std::vector<int> e(new_arity, 0);
    for (std::size_t j = 0; j < arity_; ++j) e[positions[j]] = m[j];
    lifted_terms.emplace_back(std::move(e));
  }
  return Model(new_arity, std::move(lifted_terms));
}

bool Model::operator<(const Model& other) const {
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
      [](const Monomial& a, const Monomial& b) { return canonical_less(a, b); });
}

std::string to_string(const Model& model) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < model.terms().size(); ++k) {
    if (k) out << ", ";
    out << to_string(model.terms()[k]);
  }
  out << '}';
  return out.str();
}

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) s.resize(hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  return s.substr(start);
}

}  // namespace

Model load_model(std::istream& in, std::size_t arity) {
  std::vector<Monomial> terms;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty()) continue;
    terms.push_back(parse_monomial(s, arity));
  }
  if (terms.empty()) throw ParseError("model file contains no monomials");
  return Model(arity, std::move(terms));
}

std::vector<Model> load_model_set(std::istream& in, std::size_t arity) {
  std::vector<Model> models;
  std::vector<Monomial> current;
  std::string line;
  auto flush = [&] {
    if (!current.empty()) {
      models.emplace_back(arity, std::move(current));
      current.clear();
    }
  };
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty()) {
      flush();
      continue;
    }
    current.push_back(parse_monomial(s, arity));
  }
  flush();
  return models;
}

}  // namespace statfan
