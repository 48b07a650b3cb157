#include "lienorm/linalg.hpp"

#include "lienorm/error.hpp"

#include <algorithm>
#include <map>

namespace lienorm {

QMatrix identity_matrix(std::size_t n) {
  QMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimension mismatch");
  QMatrix c(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  QMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  QMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  QVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

Rational trace(const QMatrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

bool is_zero(const QMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols, Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size(), Rational(0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

QVector flatten(const QMatrix& a) {
  QVector v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

QMatrix unflatten(const QVector& v, std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

// ---------------------------------------------------------------------------
// Gauss-Jordan over a field

namespace {

bool field_is_zero(const Rational& x) { return x == 0; }
bool field_is_zero(const RationalFunction& f) { return f.is_zero(); }

bool pivot_less(const Rational& a, const Rational& b) { return canonical_less(a, b); }

bool pivot_less(const RationalFunction& a, const RationalFunction& b) {
  auto size = [](const RationalFunction& f) {
    return std::make_pair(f.numerator().total_degree() + f.denominator().total_degree(),
                          f.numerator().size() + f.denominator().size());
  };
  return size(a) < size(b);
}

Rational field_one(const Rational&) { return 1; }
RationalFunction field_one(const RationalFunction& like) { return RationalFunction(like.nvars(), Rational(1)); }

template <typename T>
std::vector<std::size_t> gauss_jordan(Matrix<T>& m, std::size_t ncols_eliminate) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols_eliminate && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (field_is_zero(m(r, col))) continue;
      if (best == m.rows() || pivot_less(m(r, col), m(best, col))) best = r;
    }
    if (best == m.rows()) continue;
    m.swap_rows(row, best);
    const T inv = field_one(m(row, col)) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!field_is_zero(m(row, c))) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || field_is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!field_is_zero(m(row, c))) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Echelon rref(QMatrix m) {
  auto pivots = gauss_jordan(m, m.cols());
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      m.swap_rows(p, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  QMatrix aug(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = gauss_jordan(aug, n);
  if (pivots.size() != n) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

LinearSolution solve_linear(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side has wrong length");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = gauss_jordan(aug, a.cols());
  LinearSolution sol;
  sol.nullspace = nullspace(a);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, a.cols()) != 0) return sol;
  QVector x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  sol.particular = std::move(x);
  return sol;
}

// ---------------------------------------------------------------------------
// Rational-function matrices

std::size_t rank(const FMatrix& m) {
  // Clear denominators row by row, then fraction-free elimination.
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  const std::size_t nv = m(0, 0).nvars();
  Matrix<Polynomial> p(rows, cols, Polynomial(nv));
  for (std::size_t r = 0; r < rows; ++r) {
    Polynomial l = Polynomial::constant(nv, 1);
    for (std::size_t c = 0; c < cols; ++c) l = lcm(l, m(r, c).denominator());
    for (std::size_t c = 0; c < cols; ++c) {
      auto q = divide_exact(l, m(r, c).denominator());
      p(r, c) = m(r, c).numerator() * *q;
    }
  }
  Polynomial prev = Polynomial::constant(nv, 1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t best = rows;
    for (std::size_t r = row; r < rows; ++r) {
      if (p(r, col).is_zero()) continue;
      if (best == rows || p(r, col).size() < p(best, col).size()) best = r;
    }
    if (best == rows) continue;
    p.swap_rows(row, best);
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        Polynomial v = p(row, col) * p(r, c) - p(r, col) * p(row, c);
        auto q = divide_exact(v, prev);
        if (!q) throw IdentityViolation("Bareiss step is not exact");
        p(r, c) = *std::move(q);
      }
      p(r, col) = Polynomial(nv);
    }
    prev = p(row, col);
    ++row;
  }
  return row;
}

FLinearSolution solve_linear(const FMatrix& a, const FVector& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side has wrong length");
  const std::size_t nv = a.rows() ? a(0, 0).nvars() : 0;
  FMatrix aug(a.rows(), a.cols() + 1, RationalFunction(nv));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = gauss_jordan(aug, a.cols());
  FLinearSolution sol;
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    FVector v(a.cols(), RationalFunction(nv));
    v[f] = RationalFunction(nv, Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, f);
    sol.nullspace.push_back(std::move(v));
  }
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!aug(r, a.cols()).is_zero()) return sol;
  FVector x(a.cols(), RationalFunction(nv));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  sol.particular = std::move(x);
  return sol;
}

RationalFunction determinant(const FMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t nv = n ? m(0, 0).nvars() : 0;
  if (n == 0) return RationalFunction(nv, Rational(1));
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n > 3) {
    FMatrix a = m;
    RationalFunction det(nv, Rational(1));
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t p = col;
      while (p < n && a(p, col).is_zero()) ++p;
      if (p == n) return RationalFunction(nv);
      if (p != col) {
        a.swap_rows(p, col);
        det = -det;
      }
      det *= a(col, col);
      for (std::size_t r = col + 1; r < n; ++r) {
        if (a(r, col).is_zero()) continue;
        RationalFunction f = a(r, col) / a(col, col);
        for (std::size_t c = col; c < n; ++c)
          if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
      }
    }
    return det;
  }
  RationalFunction det(nv);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    FMatrix minor(n - 1, n - 1, RationalFunction(nv));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    RationalFunction term = m(0, j) * determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Echelon e = rref(from_rows(vectors, ambient));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<QVector> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(ambient, i));
  return span(ambient, vs);
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

QVector Subspace::reduce(const QVector& v) const {
  QVector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational f = r[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_[k][j] != 0) r[j] -= f * basis_[k][j];
  }
  return r;
}

bool Subspace::contains(const QVector& v) const { return lienorm::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

QVector Subspace::coordinates(const QVector& v) const {
  QVector c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<QVector> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x = sum a_i u_i = sum b_j w_j  <=>  [U | -W] (a, b) = 0
  const std::size_t k = basis_.size(), l = other.basis_.size();
  if (k == 0 || l == 0) return Subspace(ambient_);
  QMatrix m(ambient_, k + l, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, k + j) = -other.basis_[j][r];
  std::vector<QVector> vs;
  for (const auto& n : nullspace(m)) {
    QVector x(ambient_, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
      if (n[i] != 0)
        for (std::size_t r = 0; r < ambient_; ++r) x[r] += n[i] * basis_[i][r];
    vs.push_back(std::move(x));
  }
  return span(ambient_, vs);
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return whole(ambient_);
  return span(ambient_, nullspace(from_rows(basis_, ambient_)));
}

std::vector<Rational> characteristic_polynomial(const QMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw DomainError("characteristic polynomial of non-square matrix");
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix mk(n, n, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -trace(a * mk) / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<Integer> divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  if (c.front() == 0) {
    roots.push_back(0);
    std::size_t k = 0;
    while (c[k] == 0) ++k;
    c.erase(c.begin(), c.begin() + static_cast<long>(k));
  }
  if (c.size() > 1) {
    Integer l = 1;
    for (const auto& x : c) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> z;
    for (const auto& x : c) z.push_back(Integer(x * l));
    for (const auto& p : divisors(z.front()))
      for (const auto& q : divisors(z.back())) {
        Rational r(p, q);
        r.canonicalize();
        for (const Rational& cand : {r, Rational(-r)})
          if (horner(c, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
      }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_eigenvalues(const QMatrix& a) { return rational_roots(characteristic_polynomial(a)); }

std::vector<QMatrix> commutant(std::span<const QMatrix> matrices, std::size_t d) {
  // unknown X(r, c) at column r * d + c; (X M - M X)(i, j) = 0
  std::vector<QVector> rows;
  for (const auto& m : matrices)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        QVector row(d * d, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
          row[i * d + k] += m(k, j);
          row[k * d + j] -= m(i, k);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<QMatrix> out;
  if (rows.empty()) {
    for (std::size_t p = 0; p < d * d; ++p) out.push_back(unflatten(unit_vector(d * d, p), d, d));
    return out;
  }
  for (const auto& v : nullspace(from_rows(rows, d * d))) out.push_back(unflatten(v, d, d));
  return out;
}

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

std::string to_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Constant-coefficient relations among rational-function vectors

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant()) return make_monic(b);
  if (b.is_constant()) return make_monic(a);
  if (a == b) return make_monic(a);
  Polynomial g = gcd(a, b);
  auto q = divide_exact(a, g);
  return make_monic(*q * b);
}

QMatrix constant_coefficient_matrix(std::span<const FVector> family) {
  if (family.empty()) return QMatrix();
  const std::size_t comps = family[0].size();
  const std::size_t nv = comps ? family[0][0].nvars() : 0;
  Polynomial common = Polynomial::constant(nv, 1);
  for (const auto& vec : family) {
    if (vec.size() != comps) throw DomainError("family members have different lengths");
    for (const auto& f : vec) common = lcm(common, f.denominator());
  }
  // (component, monomial) -> row
  struct Key {
    std::size_t comp;
    Monomial mono;
  };
  auto key_less = [](const Key& a, const Key& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    return grlex_less(a.mono, b.mono);
  };
  std::map<Key, std::size_t, decltype(key_less)> rows(key_less);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(family.size());
  std::vector<std::vector<std::pair<Key, Rational>>> entries(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t c = 0; c < comps; ++c) {
      const auto& f = family[i][c];
      if (f.is_zero()) continue;
      Polynomial scale = *divide_exact(common, f.denominator());
      Polynomial num = f.numerator() * scale;
      for (const auto& t : num.terms()) {
        Key k{c, t.mono};
        rows.emplace(k, 0);
        entries[i].push_back({k, t.coeff});
      }
    }
  }
  std::size_t idx = 0;
  for (auto& [k, r] : rows) r = idx++;
  QMatrix m(rows.size(), family.size(), Rational(0));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (const auto& [k, c] : entries[i]) m(rows.at(k), i) = c;
  return m;
}

std::vector<QVector> constant_relations(std::span<const FVector> family) {
  if (family.empty()) return {};
  QMatrix m = constant_coefficient_matrix(family);
  if (m.rows() == 0) {
    std::vector<QVector> all;
    for (std::size_t i = 0; i < family.size(); ++i) all.push_back(unit_vector(family.size(), i));
    return all;
  }
  return nullspace(m);
}

std::size_t constant_rank(std::span<const FVector> family) {
  if (family.empty()) return 0;
  QMatrix m = constant_coefficient_matrix(family);
  return m.rows() == 0 ? 0 : rank(m);
}

std::optional<QVector> express_in_constant_span(std::span<const FVector> family, const FVector& target) {
  std::vector<FVector> aug(family.begin(), family.end());
  aug.push_back(target);
  QMatrix m = constant_coefficient_matrix(aug);
  const std::size_t k = family.size();
  if (m.rows() == 0) return QVector(k, Rational(0));
  QMatrix a(m.rows(), k);
  QVector b(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < k; ++j) a(r, j) = m(r, j);
    b[r] = m(r, k);
  }
  auto sol = solve_linear(a, b);
  return sol.particular;
}

}  // namespace lienorm
