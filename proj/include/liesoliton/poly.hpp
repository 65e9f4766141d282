#pragma once

#include "liesoliton/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liesoliton {

class ParamTable;
using TablePtr = std::shared_ptr<const ParamTable>;

/// Immutable ordered parameter universe shared by every Poly of one model.
///
/// The order is fixed once and for all so that printed polynomials are
/// canonical: alpha, beta, gamma, delta, eta, c, then any further parameters
/// alphabetically. "c" (the soliton constant) is always present and may not be
/// declared by models; "eta" may only appear together with the involution
/// eta^2 = 1.
class ParamTable {
public:
  /// Build a table from declared parameter names (c is added automatically).
  /// Throws std::invalid_argument on malformed or duplicate names, on a
  /// declared "c", or when "eta" and eta_involutive disagree.
  static TablePtr make(std::vector<std::string> names, bool eta_involutive = false);

  const std::vector<std::string>& names() const { return names_; }
  int size() const { return static_cast<int>(names_.size()); }
  std::optional<int> index_of(std::string_view name) const;
  bool eta_involutive() const { return eta_involutive_; }
  int eta_index() const { return eta_index_; }  // -1 when eta is absent
  int c_index() const { return c_index_; }

  /// Structural equality (same names in the same order, same involution flag).
  bool same(const ParamTable& other) const;

private:
  ParamTable() = default;

  std::vector<std::string> names_;
  bool eta_involutive_ = false;
  int eta_index_ = -1;
  int c_index_ = -1;
};

/// Exponent vector, one entry per table parameter.
using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, biggest term first: higher total degree wins,
/// ties go to the earlier parameter (table order) with the higher exponent.
struct MonoOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial with exact rational coefficients over a ParamTable.
///
/// The representation *is* the canonical form: a term map ordered by MonoOrder
/// with no zero coefficients, and eta-exponents reduced mod 2 whenever the
/// table declares eta involutive. Plain constants (including the default-built
/// zero) carry no table and unify with any operand.
class Poly {
public:
  Poly() = default;              // zero
  Poly(int value);               // implicit: lets Eigen and tests write Poly(0), p - 1
  Poly(const Rational& value);
  Poly(TablePtr table, const Rational& value);

  static Poly variable(const TablePtr& table, int index);
  static Poly variable(const TablePtr& table, std::string_view name);

  const TablePtr& table() const { return table_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value when the polynomial has total degree 0 (zero included).
  std::optional<Rational> constant_value() const;
  unsigned total_degree() const;
  unsigned degree_in(int param_index) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

  Poly pow(unsigned exponent) const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  /// Simultaneous substitution name -> polynomial; names absent from the
  /// table are ignored, replacement polynomials must live over the same table
  /// (or be plain constants).
  Poly substitute(const std::map<std::string, Poly>& replacements) const;

  /// Full-point evaluation. Every parameter actually occurring in the
  /// polynomial must be assigned; throws std::invalid_argument otherwise.
  Rational eval(const std::map<std::string, Rational>& point) const;

  const std::map<Exponents, Rational, MonoOrder>& terms() const { return terms_; }

private:
  void add_term(Exponents exponents, Rational coeff);
  friend std::optional<Poly> try_divide_exact(const Poly& dividend, const Poly& divisor);

  TablePtr table_;  // null for plain constants
  std::map<Exponents, Rational, MonoOrder> terms_;
};

/// Exact quotient dividend/divisor, or nullopt when dividend is not a
/// polynomial multiple of divisor. Refuses operands with eta-dependence in an
/// involutive table (divisibility is only used on eta-free data).
std::optional<Poly> try_divide_exact(const Poly& dividend, const Poly& divisor);

/// The positive-rational rescaling of p with integer coefficients, content 1
/// and a positive leading coefficient; zero stays zero. Used to put system
/// equations into a scale-independent canonical form.
Poly primitive_part(const Poly& p);

/// Canonical printed form: graded-lex descending terms, "1/2*alpha*beta^2"
/// style factors, " + " / " - " joiners, "0" for the zero polynomial.
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Parse failure, with the byte offset of the offending token.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t at);
  std::size_t offset;
};

/// Recursive-descent parser for the expression grammar used by model files,
/// fixture tables and the CLI:
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | identifier | '(' expr ')'
///   rational := uint ('/' uint)?
///
/// Division exists only inside rational literals, so "alpha/2" is rejected —
/// write "1/2*alpha". Unknown identifiers are errors. Throws ParseError.
Poly parse_poly(std::string_view text, const TablePtr& table);

}  // namespace liesoliton
