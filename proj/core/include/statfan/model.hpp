#ifndef STATFAN_MODEL_HPP
#define STATFAN_MODEL_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "statfan/monomial.hpp"

namespace statfan {

/// A finite set of monomials with canonical storage order (ascending grevlex,
/// identity permutation). Duplicates are merged on construction.
class Model {
 public:
  Model() = default;
  explicit Model(std::size_t arity) : arity_(arity) {}
  Model(std::size_t arity, std::vector<Monomial> terms);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<Monomial>& terms() const { return terms_; }

  bool contains(const Monomial& m) const;
  bool is_staircase() const;

  /// Embeds an r'-ary model into `new_arity` indeterminates, placing exponent
  /// j at `positions[j]` and zero elsewhere.
  Model lifted(std::size_t new_arity, const std::vector<std::size_t>& positions) const;

  bool operator==(const Model& other) const = default;
  bool operator<(const Model& other) const;  // canonical set order

 private:
  std::size_t arity_ = 0;
  std::vector<Monomial> terms_;
};

std::string to_string(const Model& model);

/// One monomial per line (tuple or product form); '#' starts a comment.
Model load_model(std::istream& in, std::size_t arity);

/// Several models in one stream, separated by blank lines.
std::vector<Model> load_model_set(std::istream& in, std::size_t arity);

}  // namespace statfan

#endif
