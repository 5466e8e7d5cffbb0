#pragma once

#include <cctype>
#include <iosfwd>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "centra/centralizer.hpp"
#include "centra/fields.hpp"
#include "centra/matrix.hpp"
#include "centra/poly.hpp"

namespace centra {

namespace detail {

/// Recursive-descent reader for polynomial expressions in x whose
/// coefficients are field expressions (integers, fractions and, over GF(p)(t),
/// rational functions in t).  Grammar:
///
///   expr  := unary (('+' | '-') unary)*          -- leading sign allowed
///   term  := unary (('*' | '/' | <implicit>) unary)*
///   unary := ('+' | '-') unary | power
///   power := atom ('^' integer)?
///   atom  := integer | x | t | '(' expr ')'
///
/// Division is only by nonzero constants.
template <ExactField F>
class ExpressionParser {
 public:
  ExpressionParser(const F& field, std::string_view text, char var) : field_(field), text_(text), var_(var) {}

  Poly<F> parse() {
    auto value = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  Poly<F> expr() {
    Poly<F> acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly<F> term() {
    Poly<F> acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const auto d = unary();
        if (d.degree() > 0) error("division by a non-constant");
        if (d.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in '" + std::string(text_) + "'");
        acc = acc.scaled(inverse(d.leading()));
      } else if (starts_atom()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Poly<F> unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly<F> power() {
    Poly<F> base = atom();
    skip_space();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      std::size_t e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + std::size_t(text_[pos_] - '0');
        if (e > 100000) error("exponent too large");
        ++pos_;
      }
      if (pos_ == start) error("missing exponent");
      return pow(base, e);
    }
    return base;
  }

  Poly<F> atom() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      auto value = field_.zero();
      const auto ten = field_.from_int(10);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * ten + field_.from_int(text_[pos_] - '0');
        ++pos_;
      }
      return Poly<F>::constant(field_, value);
    }
    if (ch == '(') {
      ++pos_;
      auto inner = expr();
      skip_space();
      if (!accept(')')) error("missing ')'");
      return inner;
    }
    if (var_ != '\0' && ch == var_) {
      ++pos_;
      return Poly<F>::x(field_);
    }
    if constexpr (std::is_same_v<F, RationalFunctionField>) {
      if (ch == 't') {
        ++pos_;
        return Poly<F>::constant(field_, field_.t());
      }
    }
    error("unexpected '" + std::string(1, ch) + "'");
  }

  bool starts_atom() {
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '(') return true;
    if (var_ != '\0' && ch == var_) return true;
    return std::is_same_v<F, RationalFunctionField> && ch == 't';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  const F& field_;
  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses e.g. `x^3+2*x+1`, `x^2+t`, `(t^2+1)/(t+1)*x+2/7`.
template <ExactField F>
Poly<F> parse_poly(const F& field, std::string_view text, char var = 'x') {
  return detail::ExpressionParser<F>(field, text, var).parse();
}

/// Parses one field element, e.g. `3`, `-2/7`, `(t^2+1)/(t+1)`.
template <ExactField F>
ElementOf<F> parse_scalar(const F& field, std::string_view text) {
  const auto p = detail::ExpressionParser<F>(field, text, '\0').parse();
  return p.is_zero() ? field.zero() : p.coeff(0);
}

// ---------------------------------------------------------------------------
// Matrix text format:
//   rows cols field
//   a11 a12 ...
//   ...

template <ExactField F>
void write_matrix_text(std::ostream& os, const Matrix<F>& m) {
  const F& f = m.field();
  os << m.rows() << ' ' << m.cols() << ' ' << f.selector() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << f.format(m(r, c));
    }
    os << '\n';
  }
}

template <ExactField F>
std::string matrix_to_text(const Matrix<F>& m) {
  std::ostringstream os;
  write_matrix_text(os, m);
  return os.str();
}

using AnyMatrix = std::variant<Matrix<PrimeField>, Matrix<RationalField>, Matrix<RationalFunctionField>>;

/// Reads one matrix in the text format; the field comes from its header line.
AnyMatrix read_matrix_text(std::istream& is);
AnyMatrix matrix_from_text(const std::string& text);

template <ExactField F>
Matrix<F> read_matrix_text_as(std::istream& is, const F& field) {
  auto any = read_matrix_text(is);
  if (auto* m = std::get_if<Matrix<F>>(&any); m != nullptr && m->field() == field) return std::move(*m);
  fail(ErrorCode::FieldMismatch, "matrix is not over " + field.selector());
}

// ---------------------------------------------------------------------------
// JSON: {"rows":r,"cols":c,"field":"gf:3","entries":[[...],...]}
// GF(p) entries are numbers; Q and GF(p)(t) entries are strings.

template <ExactField F>
nlohmann::json matrix_to_json(const Matrix<F>& m) {
  const F& f = m.field();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<F, PrimeField>)
        row.push_back(m(r, c).value());
      else
        row.push_back(f.format(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"field", f.selector()}, {"entries", std::move(rows)}};
}

AnyMatrix matrix_from_json(const nlohmann::json& j);

template <ExactField F>
Matrix<F> matrix_from_json_as(const nlohmann::json& j, const F& field) {
  auto any = matrix_from_json(j);
  if (auto* m = std::get_if<Matrix<F>>(&any); m != nullptr && m->field() == field) return std::move(*m);
  fail(ErrorCode::FieldMismatch, "matrix is not over " + field.selector());
}

// ---------------------------------------------------------------------------
// Centralizer basis export:
//   dim=<d> layout=<i.j.d.k>,<i.j.d.k>,...
//   <matrix text> (one per basis element, in layout order)

std::string encode_layout(const std::vector<ParameterLabel>& layout);
std::vector<ParameterLabel> decode_layout(std::string_view text);

template <ExactField F>
void write_basis_text(std::ostream& os, const CentralizerBasis<F>& basis) {
  os << "dim=" << basis.dim() << " layout=" << encode_layout(basis.layout) << '\n';
  for (const auto& b : basis.basis) write_matrix_text(os, b);
}

template <ExactField F>
nlohmann::json basis_to_json(const CentralizerBasis<F>& basis) {
  nlohmann::json layout = nlohmann::json::array();
  for (const auto& l : basis.layout)
    layout.push_back({{"row_chain", l.row_chain}, {"col_chain", l.col_chain}, {"diagonal", l.diagonal},
                      {"zc_index", l.zc_index}});
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& b : basis.basis) mats.push_back(matrix_to_json(b));
  return {{"dim", basis.dim()},
          {"generator", matrix_to_json(basis.generator)},
          {"layout", std::move(layout)},
          {"basis", std::move(mats)}};
}

/// Reads the text stream back; the generator is not part of the stream.
template <ExactField F>
CentralizerBasis<F> read_basis_text(std::istream& is, const F& field) {
  std::string header;
  if (!std::getline(is, header)) fail(ErrorCode::ParseError, "missing basis header");
  std::istringstream hs(header);
  std::string dim_tok, layout_tok;
  hs >> dim_tok >> layout_tok;
  if (!dim_tok.starts_with("dim=") || !layout_tok.starts_with("layout="))
    fail(ErrorCode::ParseError, "bad basis header '" + header + "'");
  const std::size_t dim = std::stoul(dim_tok.substr(4));
  CentralizerBasis<F> out;
  out.layout = decode_layout(std::string_view(layout_tok).substr(7));
  if (out.layout.size() != dim) fail(ErrorCode::ParseError, "layout length does not match dim");
  for (std::size_t i = 0; i < dim; ++i) out.basis.push_back(read_matrix_text_as(is, field));
  return out;
}

template <ExactField F>
CentralizerBasis<F> basis_from_json(const nlohmann::json& j, const F& field) {
  CentralizerBasis<F> out;
  out.generator = matrix_from_json_as(j.at("generator"), field);
  for (const auto& l : j.at("layout"))
    out.layout.push_back({l.at("row_chain").get<std::size_t>(), l.at("col_chain").get<std::size_t>(),
                          l.at("diagonal").get<std::size_t>(), l.at("zc_index").get<std::size_t>()});
  for (const auto& m : j.at("basis")) out.basis.push_back(matrix_from_json_as(m, field));
  if (out.basis.size() != j.at("dim").get<std::size_t>()) fail(ErrorCode::ParseError, "dim does not match basis");
  return out;
}

}  // namespace centra
