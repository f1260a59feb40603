#include "toric/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace toric {

// ---------------------------------------------------------------------------
// Matrix

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw DimensionMismatch("ragged matrix literal");
    for (long x : r)
      data_.emplace_back(x);
  }
}

template <class T> Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>> &rows,
                               std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionMismatch("row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>> &columns,
                                  std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw DimensionMismatch("column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = columns[j][i];
  }
  return m;
}

template <class T> std::vector<T> Matrix<T>::row(std::size_t i) const {
  return std::vector<T>(data_.begin() + i * cols_,
                        data_.begin() + (i + 1) * cols_);
}

template <class T> std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = (*this)(i, j);
  return c;
}

template <class T> Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

template <class T> bool Matrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const T &x) { return sgn(x) == 0; });
}

template <class T> void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

template <class T> void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

template <class T>
void Matrix<T>::add_row_multiple(std::size_t dst, std::size_t src,
                                 const T &factor) {
  if (sgn(factor) == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) += factor * (*this)(src, j);
}

template <class T>
void Matrix<T>::add_col_multiple(std::size_t dst, std::size_t src,
                                 const T &factor) {
  if (sgn(factor) == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) += factor * (*this)(i, src);
}

template <class T> void Matrix<T>::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(i, j) = -(*this)(i, j);
}

template <class T> void Matrix<T>::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, j) = -(*this)(i, j);
}

template <class T> Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T> &a, const std::vector<T> &x) {
  if (a.cols() != x.size())
    throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] += a(i, j) * x[j];
  return y;
}

template class Matrix<Integer>;
template class Matrix<Rational>;
template IntMatrix operator*(const IntMatrix &, const IntMatrix &);
template RatMatrix operator*(const RatMatrix &, const RatMatrix &);
template IntVector operator*(const IntMatrix &, const IntVector &);
template RatVector operator*(const RatMatrix &, const RatVector &);

std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
  return os;
}

RatMatrix to_rational(const IntMatrix &m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector &v) {
  return RatVector(v.begin(), v.end());
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SmithState {
  IntMatrix D, U, V, Vinv;
};

// Column operations are mirrored on V and, inversely, on V^{-1} so that
// saturate() can read a completed basis off V^{-1} directly.
void col_add(SmithState &s, std::size_t dst, std::size_t src,
             const Integer &q) {
  s.D.add_col_multiple(dst, src, q);
  s.V.add_col_multiple(dst, src, q);
  s.Vinv.add_row_multiple(src, dst, -q);
}

void col_swap(SmithState &s, std::size_t a, std::size_t b) {
  s.D.swap_cols(a, b);
  s.V.swap_cols(a, b);
  s.Vinv.swap_rows(a, b);
}

void row_add(SmithState &s, std::size_t dst, std::size_t src,
             const Integer &q) {
  s.D.add_row_multiple(dst, src, q);
  s.U.add_row_multiple(dst, src, q);
}

void row_swap(SmithState &s, std::size_t a, std::size_t b) {
  s.D.swap_rows(a, b);
  s.U.swap_rows(a, b);
}

SmithState smith(const IntMatrix &a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithState s{a, IntMatrix::identity(m), IntMatrix::identity(n),
               IntMatrix::identity(n)};
  IntMatrix &D = s.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(D(i, j)) != 0 && (!found || abs(D(i, j)) < best)) {
          found = true;
          best = abs(D(i, j));
          pi = i;
          pj = j;
        }
    if (!found)
      break;
    row_swap(s, t, pi);
    col_swap(s, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(D(i, t)) == 0)
          continue;
        Integer q = D(i, t) / D(t, t);
        row_add(s, i, t, -q);
        if (sgn(D(i, t)) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(D(t, j)) == 0)
          continue;
        Integer q = D(t, j) / D(t, t);
        col_add(s, j, t, -q);
        if (sgn(D(t, j)) != 0)
          clean = false;
      }
      if (!clean) {
        // a nonzero remainder is smaller than the pivot; move it in
        std::size_t bi = t, bj = t;
        Integer small = abs(D(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(D(i, t)) != 0 && abs(D(i, t)) < small) {
            small = abs(D(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(D(t, j)) != 0 && abs(D(t, j)) < small) {
            small = abs(D(t, j));
            bi = t;
            bj = j;
          }
        row_swap(s, t, bi);
        col_swap(s, t, bj);
        continue;
      }
      // divisibility: pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            row_add(s, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (sgn(D(t, t)) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

} // namespace

IntVector SNFDecomposition::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (sgn(D(i, i)) != 0)
      d.push_back(D(i, i));
  return d;
}

std::size_t SNFDecomposition::rank() const { return diagonal().size(); }

SNFDecomposition snf(const IntMatrix &a) {
  SmithState s = smith(a);
  return {std::move(s.U), std::move(s.D), std::move(s.V)};
}

// ---------------------------------------------------------------------------
// Hermite normal form

HNFDecomposition hnf(const IntMatrix &a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix H = a;
  IntMatrix U = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (sgn(H(i, c)) != 0 && (best == m || abs(H(i, c)) < abs(H(best, c))))
          best = i;
      if (best == m)
        break;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(H(i, c)) == 0)
          continue;
        Integer q = H(i, c) / H(r, c);
        H.add_row_multiple(i, r, -q);
        U.add_row_multiple(i, r, -q);
        if (sgn(H(i, c)) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (sgn(H(r, c)) == 0)
      continue;
    if (sgn(H(r, c)) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      H.add_row_multiple(i, r, -q);
      U.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(H), std::move(U)};
}

// ---------------------------------------------------------------------------
// Determinant, rank, echelon forms

Integer determinant(const IntMatrix &a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  // Bareiss fraction-free elimination
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RowEchelon rref(const RatMatrix &a) {
  RowEchelon out{a, {}};
  RatMatrix &R = out.R;
  std::size_t r = 0;
  for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
    std::size_t p = r;
    while (p < R.rows() && sgn(R(p, c)) == 0)
      ++p;
    if (p == R.rows())
      continue;
    R.swap_rows(r, p);
    Rational inv = 1 / R(r, c);
    for (std::size_t j = 0; j < R.cols(); ++j)
      R(r, j) *= inv;
    for (std::size_t i = 0; i < R.rows(); ++i)
      if (i != r && sgn(R(i, c)) != 0)
        R.add_row_multiple(i, r, Rational(-R(i, c)));
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const RatMatrix &a) { return rref(a).pivots.size(); }
std::size_t rank(const IntMatrix &a) { return rank(to_rational(a)); }

std::vector<RatVector> kernel_basis(const RatMatrix &a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots)
    is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RatVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = -e.R(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix unimodular_inverse(const IntMatrix &a) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw DimensionMismatch("inverse of a non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw DimensionMismatch("matrix is singular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational &x = e.R(i, n + j);
      if (x.get_den() != 1)
        throw DimensionMismatch("matrix is not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

bool solve_square(const RatMatrix &a, const RatVector &b, RatVector &x) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw DimensionMismatch("solve_square expects a square system");
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() != n || (n > 0 && e.pivots.back() != n - 1))
    return false;
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    x[i] = e.R(i, n);
  return true;
}

// ---------------------------------------------------------------------------
// Lattices

std::vector<IntVector> saturate(const std::vector<IntVector> &vs,
                                std::size_t ambient_dim) {
  if (vs.empty())
    return {};
  IntMatrix a = IntMatrix::from_rows(vs, ambient_dim);
  SmithState s = smith(a);
  // A = U^{-1} D V^{-1}: the rows of A span the same rational space as the
  // first r rows of V^{-1}, and those rows extend to a basis of Z^n.
  std::size_t r = 0;
  while (r < std::min(a.rows(), a.cols()) && sgn(s.D(r, r)) != 0)
    ++r;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < r; ++i)
    rows.push_back(s.Vinv.row(i));
  IntMatrix h = hnf(IntMatrix::from_rows(rows, ambient_dim)).H;
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < r; ++i)
    basis.push_back(h.row(i));
  return basis;
}

IntMatrix quotient_projection(const std::vector<IntVector> &basis,
                              std::size_t ambient_dim) {
  const std::size_t r = basis.size();
  if (r == 0)
    return IntMatrix::identity(ambient_dim);
  IntMatrix a = IntMatrix::from_rows(basis, ambient_dim);
  SmithState s = smith(a);
  for (std::size_t i = 0; i < r; ++i)
    if (i >= ambient_dim || s.D(i, i) != 1)
      throw NotSaturatedError(
          "sublattice basis is dependent or not saturated");
  // rows r.. of V^T annihilate the lattice and complete it to Z^n
  IntMatrix proj(ambient_dim - r, ambient_dim);
  for (std::size_t i = r; i < ambient_dim; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j)
      proj(i - r, j) = s.V(j, i);
  return proj;
}

FiniteAbelianGroup::FiniteAbelianGroup(IntVector factors) {
  for (auto &f : factors) {
    if (f < 1)
      throw NotFiniteError("invariant factors must be positive");
    if (f > 1)
      factors_.push_back(std::move(f));
  }
  for (std::size_t i = 0; i + 1 < factors_.size(); ++i)
    if (!mpz_divisible_p(factors_[i + 1].get_mpz_t(), factors_[i].get_mpz_t()))
      throw NotFiniteError("invariant factors must form a divisibility chain");
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto &f : factors_)
    o *= f;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < factors_.size(); ++i)
    s += (i ? "," : "") + factors_[i].get_str();
  return s + "]";
}

FiniteAbelianGroup abelian_quotient(const std::vector<IntVector> &mus,
                                    std::size_t k) {
  if (k == 0)
    return FiniteAbelianGroup{};
  IntMatrix a = IntMatrix::from_columns(mus, k);
  SNFDecomposition d = snf(a);
  IntVector diag = d.diagonal();
  if (diag.size() != k)
    throw NotFiniteError("vectors do not span: quotient has a free part");
  return FiniteAbelianGroup(std::move(diag));
}

// ---------------------------------------------------------------------------
// Vectors

Integer content(const IntVector &v) {
  Integer g = 0;
  for (const auto &x : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(const IntVector &v) {
  Integer g = content(v);
  if (sgn(g) == 0)
    throw ZeroVectorError("primitive() of the zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector primitive(const RatVector &v) {
  Integer l = 1;
  for (const auto &x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    scaled[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(scaled);
}

Integer dot(const IntVector &a, const IntVector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector &a, const RatVector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += Rational(a[i]) * b[i];
  return s;
}

Rational dot(const RatVector &a, const RatVector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Text

namespace {

bool parse_integer(std::string_view text, bool allow_sign, Integer &out) {
  std::size_t i = 0;
  if (allow_sign && !text.empty() && text[0] == '-')
    i = 1;
  if (i == text.size())
    return false;
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      return false;
  out.set_str(std::string(text), 10);
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Integer num, den = 1;
  if (!parse_integer(text.substr(0, slash), true, num) ||
      (slash != std::string_view::npos &&
       !parse_integer(text.substr(slash + 1), false, den)))
    throw FormatError("malformed rational '" + std::string(text) + "'");
  if (sgn(den) == 0)
    throw FormatError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  if (q.get_den() != den)
    throw FormatError("rational '" + std::string(text) +
                      "' is not in lowest terms");
  return q;
}

std::string to_string(const Rational &q) { return q.get_str(); }
std::string to_string(const Integer &z) { return z.get_str(); }

std::string to_string(const IntVector &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string to_string(const RatVector &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

} // namespace toric
