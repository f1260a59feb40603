#include "toric/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace toric {

bool GrLexDescending::operator()(const Exponent &a, const Exponent &b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db)
    return da > db;
  return a > b;
}

// ---------------------------------------------------------------------------
// BasicPolynomial

template <bool L>
BasicPolynomial<L> BasicPolynomial<L>::constant(std::size_t num_vars,
                                                const Rational &c) {
  BasicPolynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

template <bool L>
BasicPolynomial<L> BasicPolynomial<L>::variable(std::size_t num_vars,
                                                std::size_t i) {
  Exponent e(num_vars, 0);
  e.at(i) = 1;
  return monomial(num_vars, std::move(e));
}

template <bool L>
BasicPolynomial<L> BasicPolynomial<L>::monomial(std::size_t num_vars,
                                                Exponent e, const Rational &c) {
  BasicPolynomial p(num_vars);
  p.add_term(e, c);
  return p;
}

template <bool L>
Rational BasicPolynomial<L>::coefficient(const Exponent &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

template <bool L>
void BasicPolynomial<L>::add_term(const Exponent &e, const Rational &c) {
  if (e.size() != num_vars_)
    throw VarCountMismatch("monomial has " + std::to_string(e.size()) +
                           " exponents, polynomial has " +
                           std::to_string(num_vars_) + " variables");
  if constexpr (!L) {
    if (std::any_of(e.begin(), e.end(), [](long x) { return x < 0; }))
      throw NegativeExponentError("negative exponent in an ordinary polynomial");
  }
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

template <bool L> long BasicPolynomial<L>::degree() const {
  long d = -1;
  for (const auto &[e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
  return d;
}

template <bool L> bool BasicPolynomial<L>::is_homogeneous(long d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto &t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0L) == d;
  });
}

template <bool L> bool BasicPolynomial<L>::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto &t) { return t.second.get_den() == 1; });
}

template <bool L> void BasicPolynomial<L>::check_vars(const BasicPolynomial &o) const {
  if (o.num_vars_ != num_vars_)
    throw VarCountMismatch("operands have " + std::to_string(num_vars_) +
                           " and " + std::to_string(o.num_vars_) +
                           " variables");
}

template <bool L> BasicPolynomial<L> BasicPolynomial<L>::operator-() const {
  BasicPolynomial p = *this;
  for (auto &[e, c] : p.terms_)
    c = -c;
  return p;
}

template <bool L>
BasicPolynomial<L> &BasicPolynomial<L>::operator+=(const BasicPolynomial &o) {
  check_vars(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

template <bool L>
BasicPolynomial<L> &BasicPolynomial<L>::operator-=(const BasicPolynomial &o) {
  check_vars(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, Rational(-c));
  return *this;
}

template <bool L>
BasicPolynomial<L> &BasicPolynomial<L>::operator*=(const Rational &c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, x] : terms_)
    x *= c;
  return *this;
}

template <bool L>
BasicPolynomial<L> BasicPolynomial<L>::times(const BasicPolynomial &o) const {
  check_vars(o);
  BasicPolynomial p(num_vars_);
  Exponent e(num_vars_);
  for (const auto &[ea, ca] : terms_)
    for (const auto &[eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < num_vars_; ++i)
        e[i] = ea[i] + eb[i];
      p.add_term(e, Rational(ca * cb));
    }
  return p;
}

template <bool L>
std::string
BasicPolynomial<L>::to_string(const std::vector<std::string> &variables) const {
  if (variables.size() != num_vars_)
    throw VarCountMismatch("wrong number of variable names");
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += variables[i];
      if (e[i] != 1)
        mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + '*' + mono;
  }
  return out;
}

template class BasicPolynomial<false>;
template class BasicPolynomial<true>;

std::vector<std::string> default_variables(std::string_view prefix,
                                           std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i)
    v.push_back(std::string(prefix) + std::to_string(i));
  return v;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

template <bool L> class Parser {
public:
  using Poly = BasicPolynomial<L>;

  Parser(std::string_view text, const std::vector<std::string> &variables)
      : text_(text), vars_(variables) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw SyntaxError(what, pos_);
  }

  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }

  Poly expr() {
    Poly sum(vars_.size());
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    for (;;) {
      Poly t = term();
      if (negative)
        sum -= t;
      else
        sum += t;
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        return sum;
    }
  }

  Poly term() {
    Poly p = Poly::constant(vars_.size(), 1);
    if (std::isdigit(static_cast<unsigned char>(peek())))
      p *= coefficient();
    else
      p = p * factor();
    while (accept('*'))
      p = p * factor();
    return p;
  }

  Rational coefficient() {
    Integer num = digits();
    Integer den = 1;
    if (accept('/')) {
      const std::size_t at = pos_;
      den = digits();
      if (sgn(den) == 0) {
        pos_ = at;
        fail("zero denominator");
      }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Integer digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly factor() {
    if (accept('(')) {
      Poly p = expr();
      if (!accept(')'))
        fail("expected ')'");
      return p;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::size_t letters = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (letters == start || letters == pos_) {
      pos_ = start;
      fail("expected a variable or '('");
    }
    const std::string name(text_.substr(start, pos_ - start));
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    long power = 1;
    if (accept('^')) {
      const std::size_t at = pos_;
      const bool negative = accept('-');
      Integer z = digits();
      if (!z.fits_slong_p())
        fail("exponent too large");
      power = negative ? -z.get_si() : z.get_si();
      if (!L && power < 0) {
        pos_ = at;
        throw NegativeExponentError("negative exponent at position " +
                                    std::to_string(at));
      }
    }
    Exponent e(vars_.size(), 0);
    e[it - vars_.begin()] = power;
    return Poly::monomial(vars_.size(), std::move(e));
  }

  std::string_view text_;
  const std::vector<std::string> &vars_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string> &variables) {
  return Parser<false>(text, variables).parse();
}

LaurentPolynomial parse_laurent(std::string_view text,
                                const std::vector<std::string> &variables) {
  return Parser<true>(text, variables).parse();
}

Polynomial substitute(const Polynomial &f,
                      const std::vector<Polynomial> &images) {
  if (images.size() != f.num_vars())
    throw VarCountMismatch("substitution needs one image per variable");
  const std::size_t m = images.empty() ? 0 : images.front().num_vars();
  // powers[i][k] = images[i]^k, grown on demand
  std::vector<std::vector<Polynomial>> powers(
      images.size(), std::vector<Polynomial>{Polynomial::constant(m, 1)});
  auto power = [&](std::size_t i, long k) -> const Polynomial & {
    while (static_cast<long>(powers[i].size()) <= k)
      powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };
  Polynomial out(m);
  for (const auto &[e, c] : f.terms()) {
    Polynomial t = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0)
        t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Divisibility

LinearForm::LinearForm(IntVector coeffs) {
  multiple_ = content(coeffs);
  primitive_ = toric::primitive(coeffs);
}

IntVector LinearForm::coefficients() const {
  IntVector c = primitive_;
  for (auto &x : c)
    x *= multiple_;
  return c;
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p(num_vars());
  const IntVector c = coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Exponent e(num_vars(), 0);
    e[i] = 1;
    p.add_term(e, Rational(c[i]));
  }
  return p;
}

std::optional<Polynomial> divides_linear(const LinearForm &lambda,
                                         const Polynomial &g,
                                         CoefficientRing ring) {
  const std::size_t n = lambda.num_vars();
  if (g.num_vars() != n)
    throw VarCountMismatch("linear form and polynomial differ in variables");
  const IntVector c = lambda.coefficients();
  std::size_t pivot = 0;
  while (sgn(c[pivot]) == 0)
    ++pivot;
  Polynomial form(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    form.add_term(e, Rational(c[i]));
  }

  // long division along the pivot variable, highest power first
  Polynomial rem = g;
  Polynomial quotient(n);
  for (;;) {
    auto lead = std::max_element(
        rem.terms().begin(), rem.terms().end(),
        [&](const auto &a, const auto &b) {
          return a.first[pivot] < b.first[pivot];
        });
    if (lead == rem.terms().end() || lead->first[pivot] == 0)
      break;
    Exponent e = lead->first;
    --e[pivot];
    Polynomial t = Polynomial::monomial(n, e, lead->second / Rational(c[pivot]));
    quotient += t;
    rem -= t * form;
  }
  if (!rem.is_zero())
    return std::nullopt;
  if (ring == CoefficientRing::Z && !quotient.has_integer_coefficients())
    return std::nullopt;
  return quotient;
}

std::optional<LaurentPolynomial> divides_binomial(const IntVector &a,
                                                  const LaurentPolynomial &g) {
  const std::size_t n = a.size();
  if (g.num_vars() != n)
    throw VarCountMismatch("exponent and polynomial differ in variables");
  const Integer c = content(a);
  if (sgn(c) == 0)
    throw ZeroVectorError("binomial exponent is zero");
  if (!c.fits_slong_p())
    throw DimensionMismatch("binomial exponent too large");
  const long period = c.get_si();
  const IntVector dir = primitive(a);

  // W unimodular with W * dir = e_1; exponents transform as e -> W e
  SNFDecomposition d = snf(IntMatrix::from_columns({dir}, n));
  IntMatrix w = d.U;
  if (d.V(0, 0) < 0)
    for (std::size_t i = 0; i < n; ++i)
      w.negate_row(i);
  const IntMatrix w_inv = unimodular_inverse(w);

  auto transform = [n](const IntMatrix &m, const Exponent &e) {
    Exponent out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j)
        s += m(i, j) * e[j];
      out[i] = s.get_si();
    }
    return out;
  };

  // Group terms by (rest of exponent, first exponent mod period). Along each
  // chain r, r + p, r + 2p, ... the quotient coefficients are prefix sums,
  // and divisibility means every chain sums to zero.
  std::map<std::pair<Exponent, long>, std::map<long, Rational>> chains;
  for (const auto &[e, coef] : g.terms()) {
    Exponent t = transform(w, e);
    long first = t[0];
    long r = ((first % period) + period) % period;
    t[0] = 0;
    chains[{t, r}][(first - r) / period] += coef;
  }

  LaurentPolynomial quotient(n);
  for (const auto &[key, chain] : chains) {
    Rational running = 0;
    const long lo = chain.begin()->first, hi = chain.rbegin()->first;
    for (long q = lo; q <= hi; ++q) {
      auto it = chain.find(q);
      if (it != chain.end())
        running += it->second;
      if (q < hi && sgn(running) != 0) {
        Exponent t = key.first;
        t[0] = key.second + q * period;
        quotient.add_term(transform(w_inv, t), running);
      }
    }
    if (sgn(running) != 0)
      return std::nullopt;
  }
  return quotient;
}

} // namespace toric
