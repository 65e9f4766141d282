#include "liesoliton/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace liesoliton {

namespace {

// Canonical parameter rank: the six standing names first, extras alphabetical.
int fixed_rank(const std::string& name) {
  static const std::vector<std::string> fixed = {"alpha", "beta", "gamma",
                                                 "delta", "eta",  "c"};
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (fixed[i] == name) return static_cast<int>(i);
  return static_cast<int>(fixed.size());
}

bool valid_param_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char ch : name)
    if (!((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_'))
      return false;
  return true;
}

}  // namespace

TablePtr ParamTable::make(std::vector<std::string> names, bool eta_involutive) {
  bool saw_eta = false;
  for (const auto& name : names) {
    if (!valid_param_name(name))
      throw std::invalid_argument("bad parameter name '" + name + "'");
    if (name == "c")
      throw std::invalid_argument("'c' is reserved for the soliton constant");
    if (name == "eta") saw_eta = true;
  }
  if (saw_eta && !eta_involutive)
    throw std::invalid_argument("'eta' requires eta_involutive");
  if (eta_involutive && !saw_eta)
    throw std::invalid_argument("eta_involutive without an 'eta' parameter");

  names.push_back("c");
  std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    int ra = fixed_rank(a), rb = fixed_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw std::invalid_argument("duplicate parameter name");

  auto table = std::shared_ptr<ParamTable>(new ParamTable());
  table->names_ = std::move(names);
  table->eta_involutive_ = eta_involutive;
  for (int i = 0; i < table->size(); ++i) {
    if (table->names_[i] == "eta") table->eta_index_ = i;
    if (table->names_[i] == "c") table->c_index_ = i;
  }
  return table;
}

std::optional<int> ParamTable::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool ParamTable::same(const ParamTable& other) const {
  return names_ == other.names_ && eta_involutive_ == other.eta_involutive_;
}

bool MonoOrder::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  // Same table, same length; lexicographic with the earlier parameter winning.
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(int value) : Poly(Rational(value)) {}

Poly::Poly(const Rational& value) {
  if (value != 0) terms_.emplace(Exponents{}, value);
}

Poly::Poly(TablePtr table, const Rational& value) : table_(std::move(table)) {
  if (value != 0)
    terms_.emplace(Exponents(table_ ? table_->size() : 0, 0u), value);
}

Poly Poly::variable(const TablePtr& table, int index) {
  if (!table || index < 0 || index >= table->size())
    throw std::invalid_argument("variable index out of range");
  Poly p;
  p.table_ = table;
  Exponents e(table->size(), 0u);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Poly Poly::variable(const TablePtr& table, std::string_view name) {
  if (!table) throw std::invalid_argument("variable without a table");
  auto idx = table->index_of(name);
  if (!idx) throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  return variable(table, *idx);
}

bool Poly::is_constant() const { return total_degree() == 0; }

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (total_degree() > 0) return std::nullopt;
  return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
  if (terms_.empty()) return 0;
  // Leading term of the graded order has maximal degree.
  const Exponents& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

unsigned Poly::degree_in(int param_index) const {
  unsigned d = 0;
  for (const auto& [e, coeff] : terms_) {
    (void)coeff;
    if (param_index >= 0 && param_index < static_cast<int>(e.size()))
      d = std::max(d, e[param_index]);
  }
  return d;
}

void Poly::add_term(Exponents exponents, Rational coeff) {
  if (coeff == 0) return;
  if (table_ && table_->eta_involutive()) {
    int k = table_->eta_index();
    if (k >= 0 && exponents[k] > 1) exponents[k] %= 2;  // eta^2 = 1
  }
  auto [it, inserted] = terms_.emplace(std::move(exponents), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

// Table unification: plain constants adopt the other side's table; two real
// tables must agree structurally.
const TablePtr& unified_table(const Poly& a, const Poly& b) {
  if (!a.table()) return b.table();
  if (!b.table()) return a.table();
  if (a.table() != b.table() && !a.table()->same(*b.table()))
    throw std::logic_error("parameter table mismatch");
  return a.table();
}

Exponents lifted(const Exponents& e, int size) {
  if (static_cast<int>(e.size()) == size) return e;
  return Exponents(static_cast<std::size_t>(size), 0u);  // only constants need lifting
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  if (this == &other) {
    Poly copy(other);
    return *this += copy;
  }
  const TablePtr table = unified_table(*this, other);
  if (table != table_) {
    // Re-key our constant terms (if any) to the unified width.
    Poly lifted_self(table, Rational(0));
    for (const auto& [e, coeff] : terms_)
      lifted_self.add_term(lifted(e, table->size()), coeff);
    *this = std::move(lifted_self);
  }
  int width = table_ ? table_->size() : 0;
  for (const auto& [e, coeff] : other.terms_) add_term(lifted(e, width), coeff);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, coeff] : r.terms_) {
    (void)e;
    coeff = -coeff;
  }
  return r;
}

Poly& Poly::operator*=(const Poly& other) {
  const TablePtr table = unified_table(*this, other);
  Poly result(table, Rational(0));
  int width = table ? table->size() : 0;
  for (const auto& [ea, ca] : terms_) {
    Exponents la = lifted(ea, width);
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e = la;
      const Exponents lb = lifted(eb, width);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += lb[k];
      result.add_term(std::move(e), ca * cb);
    }
  }
  *this = std::move(result);
  return *this;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(table_, Rational(1));
  for (unsigned k = 0; k < exponent; ++k) result *= *this;
  return result;
}

bool Poly::operator==(const Poly& other) const {
  unified_table(*this, other);  // throws on genuine mismatch
  if (terms_.size() != other.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    // Constant keys may differ in width across tables; compare content.
    unsigned da = std::accumulate(it->first.begin(), it->first.end(), 0u);
    unsigned db = std::accumulate(jt->first.begin(), jt->first.end(), 0u);
    if (da != db || it->second != jt->second) return false;
    if (da != 0 && it->first != jt->first) return false;
  }
  return true;
}

Poly Poly::substitute(const std::map<std::string, Poly>& replacements) const {
  if (!table_) return *this;
  std::map<int, Poly> by_index;
  for (const auto& [name, poly] : replacements) {
    auto idx = table_->index_of(name);
    if (!idx) continue;  // absent targets are ignored
    unified_table(*this, poly);
    by_index.emplace(*idx, poly);
  }
  if (by_index.empty()) return *this;

  Poly result(table_, Rational(0));
  for (const auto& [e, coeff] : terms_) {
    Poly term(table_, coeff);
    for (int k = 0; k < static_cast<int>(e.size()); ++k) {
      if (e[k] == 0) continue;
      auto it = by_index.find(k);
      Poly base = it != by_index.end() ? it->second : variable(table_, k);
      term *= base.pow(e[k]);
    }
    result += term;
  }
  return result;
}

Rational Poly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<std::optional<Rational>> values(table_ ? table_->size() : 0);
  if (table_)
    for (const auto& [name, value] : point) {
      auto idx = table_->index_of(name);
      if (idx) values[*idx] = value;
    }
  Rational sum = 0;
  for (const auto& [e, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!values[k])
        throw std::invalid_argument("eval point misses parameter '" +
                                    table_->names()[static_cast<int>(k)] + "'");
      for (unsigned r = 0; r < e[k]; ++r) term *= *values[k];
    }
    sum += term;
  }
  return sum;
}

std::optional<Poly> try_divide_exact(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const TablePtr table = unified_table(dividend, divisor);
  if (table && table->eta_involutive()) {
    int k = table->eta_index();
    if (dividend.degree_in(k) > 0 || divisor.degree_in(k) > 0)
      throw std::logic_error("exact division is not defined on eta-dependent data");
  }
  if (dividend.is_zero()) return Poly(table, Rational(0));

  int width = table ? table->size() : 0;
  auto lift_poly = [&](const Poly& p) {
    Poly out(table, Rational(0));
    for (const auto& [e, c] : p.terms())
      out.add_term(e.size() == static_cast<std::size_t>(width)
                       ? e
                       : Exponents(static_cast<std::size_t>(width), 0u),
                   c);
    return out;
  };

  Poly rem = lift_poly(dividend);
  const Poly div = lift_poly(divisor);
  const auto& [de, dc] = *div.terms().begin();
  Poly quotient(table, Rational(0));
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().begin();
    Exponents qe(re.size(), 0u);
    bool divisible = true;
    for (std::size_t k = 0; k < re.size(); ++k) {
      if (re[k] < de[k]) {
        divisible = false;
        break;
      }
      qe[k] = re[k] - de[k];
    }
    // An exact multiple keeps its leading term divisible at every step, so
    // getting stuck proves dividend is no multiple of divisor.
    if (!divisible) return std::nullopt;
    Poly t(table, Rational(0));
    t.add_term(std::move(qe), rc / dc);
    quotient += t;
    rem -= t * div;
  }
  return quotient;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, coeff] : p.terms()) {
    (void)e;
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(coeff));
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(coeff));
  }
  Rational scale(den_lcm, num_gcd);
  if (scale < 0) scale = -scale;
  if (p.terms().begin()->second < 0) scale = -scale;
  return p * Poly(scale);
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : p.terms()) {
    Rational magnitude = coeff;
    if (first) {
      if (coeff < 0) {
        os << '-';
        magnitude = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) magnitude = -coeff;
    }
    first = false;

    std::string monomial;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += p.table()->names()[static_cast<int>(k)];
      if (e[k] > 1) monomial += '^' + std::to_string(e[k]);
    }
    if (monomial.empty()) {
      os << magnitude;
    } else if (magnitude == 1) {
      os << monomial;
    } else {
      os << magnitude << '*' << monomial;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

ParseError::ParseError(const std::string& message, std::size_t at)
    : std::runtime_error(message + " at offset " + std::to_string(at)), offset(at) {}

namespace {

// Hand-rolled recursive descent over the raw text; offsets are byte positions.
class Parser {
public:
  Parser(std::string_view text, const TablePtr& table) : text_(text), table_(table) {}

  Poly parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", 0);
    Poly value = expr();
    skip_space();
    if (pos_ != text_.size()) {
      if (peek() == '/')
        throw ParseError(
            "'/' is only allowed inside rational literals (write 1/2*x, not x/2)", pos_);
      throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
    }
    return value;
  }

private:
  char peek() const { return text_[pos_]; }
  bool at_end() const { return pos_ == text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool consume(char ch) {
    skip_space();
    if (!at_end() && peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip_space();
    bool negate = consume('-');
    Poly value = term();
    if (negate) value = -value;
    for (;;) {
      skip_space();
      if (consume('+')) {
        value += term();
      } else if (consume('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Poly term() {
    Poly value = factor();
    while (consume('*')) value *= factor();
    skip_space();
    if (!at_end() && peek() == '/')
      throw ParseError(
          "'/' is only allowed inside rational literals (write 1/2*x, not x/2)", pos_);
    return value;
  }

  Poly factor() {
    Poly base_value = base();
    skip_space();
    if (consume('^')) {
      skip_space();
      std::size_t at = pos_;
      Integer exponent = integer_literal("exponent");
      if (exponent > 64) throw ParseError("exponent too large", at);
      return base_value.pow(static_cast<unsigned>(exponent));
    }
    return base_value;
  }

  Poly base() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      Poly inner = expr();
      skip_space();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (ch >= '0' && ch <= '9') return rational_literal();
    if (ch >= 'a' && ch <= 'z') return identifier();
    throw ParseError("unexpected character '" + std::string(1, ch) + "'", pos_);
  }

  Integer integer_literal(const char* what) {
    if (at_end() || peek() < '0' || peek() > '9')
      throw ParseError(std::string("expected ") + what, pos_);
    std::size_t start = pos_;
    while (!at_end() && peek() >= '0' && peek() <= '9') ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly rational_literal() {
    Integer num = integer_literal("digit");
    Integer den = 1;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      den = integer_literal("denominator");
      if (den == 0) throw ParseError("zero denominator", at);
    }
    return Poly(table_, Rational(num, den));
  }

  Poly identifier() {
    std::size_t start = pos_;
    while (!at_end() && ((peek() >= 'a' && peek() <= 'z') ||
                         (peek() >= '0' && peek() <= '9') || peek() == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto idx = table_ ? table_->index_of(name) : std::nullopt;
    if (!idx) throw ParseError("unknown parameter '" + name + "'", start);
    return Poly::variable(table_, *idx);
  }

  std::string_view text_;
  const TablePtr& table_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const TablePtr& table) {
  return Parser(text, table).parse();
}

}  // namespace liesoliton
