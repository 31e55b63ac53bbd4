#include "statfan/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "statfan/errors.hpp"

namespace statfan {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::constant(std::size_t arity) {
  return Monomial(std::vector<int>(arity, 0));
}

Monomial Monomial::unit(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::invalid_argument("unit monomial index out of range");
  std::vector<int> e(arity, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::is_constant() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (arity() != other.arity()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<int> e(arity());
  for (std::size_t j = 0; j < arity(); ++j) e[j] = exponents_[j] + other.exponents_[j];
  return Monomial(std::move(e));
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
  if (arity() != other.arity()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<int> e(arity());
  for (std::size_t j = 0; j < arity(); ++j) {
    e[j] = exponents_[j] - other.exponents_[j];
    if (e[j] < 0) return std::nullopt;
  }
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (arity() != other.arity()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<int> e(arity());
  for (std::size_t j = 0; j < arity(); ++j) e[j] = std::max(exponents_[j], other.exponents_[j]);
  return Monomial(std::move(e));
}

bool is_constituent(const Monomial& b, const Monomial& a) {
  if (b.arity() != a.arity()) throw std::invalid_argument("monomial arity mismatch");
  for (std::size_t j = 0; j < a.arity(); ++j)
    if (b[j] > a[j]) return false;
  return true;
}

std::vector<Monomial> constituents(const Monomial& a) {
  std::vector<Monomial> out;
  std::vector<int> current(a.arity(), 0);
  while (true) {
    out.emplace_back(current);
    std::size_t j = 0;
    while (j < a.arity() && current[j] == a[j]) {
      current[j] = 0;
      ++j;
    }
    if (j == a.arity()) break;
    ++current[j];
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t r, int d) {
  if (r == 0) throw std::invalid_argument("monomials_of_degree requires r >= 1");
  std::vector<Monomial> out;
  std::vector<int> current(r, 0);
  // Enumerate compositions of d into r parts.
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == r) {
      current[pos] = remaining;
      out.emplace_back(current);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  recurse(recurse, 0, d);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

struct ExponentsHash {
  std::size_t operator()(const std::vector<int>& e) const {
    std::size_t h = e.size();
    for (int v : e) h = h * 1000003u + static_cast<std::size_t>(v) + 0x9e3779b9u;
    return h;
  }
};

}  // namespace

bool is_staircase(std::span<const Monomial> monomials) {
  if (monomials.empty()) return true;
  const std::size_t r = monomials.front().arity();
  std::unordered_set<std::vector<int>, ExponentsHash> present;
  for (const Monomial& m : monomials) {
    if (m.arity() != r) throw std::invalid_argument("mixed monomial arities in staircase test");
    present.insert(m.exponents());
  }
  // Closure under constituency is equivalent to closure under dividing by a
  // single indeterminate.
  for (const Monomial& m : monomials) {
    for (std::size_t j = 0; j < r; ++j) {
      if (m[j] == 0) continue;
      std::vector<int> e = m.exponents();
      --e[j];
      if (!present.contains(e)) return false;
    }
  }
  return true;
}

const char* to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::grevlex: return "grevlex";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "lex") return OrderKind::lex;
  if (text == "grlex") return OrderKind::grlex;
  if (text == "grevlex") return OrderKind::grevlex;
  throw ParseError("unknown monomial order kind: '" + std::string(text) + "'");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t arity) : kind_(kind) {
  permutation_.resize(arity);
  std::iota(permutation_.begin(), permutation_.end(), 0);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation)
    : kind_(kind), permutation_(std::move(permutation)) {
  std::vector<bool> seen(permutation_.size(), false);
  for (std::size_t p : permutation_) {
    if (p >= permutation_.size() || seen[p])
      throw std::invalid_argument("order permutation is not a bijection");
    seen[p] = true;
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t r = permutation_.size();
  if (a.arity() != r || b.arity() != r)
    throw std::invalid_argument("monomial arity does not match order arity");

  if (kind_ != OrderKind::lex) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da <=> db;
  }
  switch (kind_) {
    case OrderKind::lex:
    case OrderKind::grlex:
      for (std::size_t i = 0; i < r; ++i) {
        const int ea = a[permutation_[i]];
        const int eb = b[permutation_[i]];
        if (ea != eb) return ea <=> eb;
      }
      return std::strong_ordering::equal;
    case OrderKind::grevlex:
      for (std::size_t i = r; i-- > 0;) {
        const int ea = a[permutation_[i]];
        const int eb = b[permutation_[i]];
        if (ea != eb) return eb <=> ea;  // larger trailing exponent sorts lower
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

std::string to_string(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < m.arity(); ++j) {
    if (m[j] == 0) continue;
    if (!first) out << '*';
    out << 'x' << (j + 1);
    if (m[j] > 1) out << '^' << m[j];
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

std::string tuple_string(const Monomial& m) {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < m.arity(); ++j) {
    if (j) out << ',';
    out << m[j];
  }
  out << ')';
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_uint(std::string_view s, const char* what) {
  s = trim(s);
  if (s.empty()) throw ParseError(std::string("empty ") + what);
  int value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw ParseError(std::string("unreasonably large ") + what);
  }
  return value;
}

Monomial parse_tuple_monomial(std::string_view body, std::size_t arity) {
  std::vector<int> exps;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
    exps.push_back(parse_uint(piece, "exponent"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (exps.size() != arity)
    throw ParseError("monomial tuple has " + std::to_string(exps.size()) + " entries, expected " +
                     std::to_string(arity));
  return Monomial(std::move(exps));
}

Monomial parse_product_monomial(std::string_view text, std::size_t arity) {
  std::vector<int> exps(arity, 0);
  if (trim(text) == "1") return Monomial(std::move(exps));
  std::size_t start = 0;
  std::string s(text);
  while (start <= s.size()) {
    std::size_t star = s.find('*', start);
    std::string_view factor = trim(
        star == std::string::npos ? std::string_view(s).substr(start)
                                  : std::string_view(s).substr(start, star - start));
    if (factor.empty() || (factor.front() != 'x' && factor.front() != 'X'))
      throw ParseError("malformed monomial factor: '" + std::string(factor) + "'");
    factor.remove_prefix(1);
    std::size_t caret = factor.find('^');
    std::string_view index_part =
        caret == std::string_view::npos ? factor : factor.substr(0, caret);
    int index = parse_uint(index_part, "indeterminate index");
    if (index < 1 || static_cast<std::size_t>(index) > arity)
      throw ParseError("indeterminate x" + std::to_string(index) + " out of range for r=" +
                       std::to_string(arity));
    int exponent = 1;
    if (caret != std::string_view::npos)
      exponent = parse_uint(factor.substr(caret + 1), "exponent");
    exps[static_cast<std::size_t>(index - 1)] += exponent;
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return Monomial(std::move(exps));
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t arity) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty monomial");
  if (s.front() == '(') {
    if (s.back() != ')') throw ParseError("unterminated monomial tuple: '" + std::string(text) + "'");
    return parse_tuple_monomial(s.substr(1, s.size() - 2), arity);
  }
  return parse_product_monomial(s, arity);
}

}  // namespace statfan
