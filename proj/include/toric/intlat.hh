#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, integer
// kernels, lattice saturation and the finest-grading construction for
// pure difference binomial ideals.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toric/exponents.hh"

namespace toric {

using Rat = boost::rational<Int>;

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows_in,
                             std::size_t cols) {
    IntMatrix m(rows_in.size(), cols);
    for (std::size_t r = 0; r < rows_in.size(); ++r) {
      if (rows_in[r].size() != cols)
        throw std::invalid_argument("from_rows: ragged input");
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows_in[r][c];
    }
    return m;
  }

  std::vector<Int> row(std::size_t r) const {
    return std::vector<Int>(a.begin() + r * cols, a.begin() + (r + 1) * cols);
  }

  IntMatrix transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape");
    IntMatrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k) {
        if (x.at(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols; ++j)
          z.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return z;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols) throw std::invalid_argument("apply: shape");
    std::vector<Int> out(rows, Int(0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out[r] += at(r, c) * v[c];
    return out;
  }
};

// Fraction-free (Bareiss) determinant of a square matrix.
inline Int determinant(IntMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
};

// Row-style Hermite normal form via integer row operations: pivots are
// positive, entries below a pivot vanish, entries above are reduced to
// lie in [0, pivot).
inline HnfResult hermite_normal_form(const IntMatrix& m_in) {
  IntMatrix h = m_in;
  IntMatrix u = IntMatrix::identity(h.rows);
  auto row_swap = [&](std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < h.cols; ++c) std::swap(h.at(r1, c), h.at(r2, c));
    for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(r1, c), u.at(r2, c));
  };
  auto row_addmul = [&](std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < h.cols; ++c) h.at(dst, c) += f * h.at(src, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
  };
  auto row_negate = [&](std::size_t r) {
    for (std::size_t c = 0; c < h.cols; ++c) h.at(r, c) = -h.at(r, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(r, c) = -u.at(r, c);
  };

  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < h.cols && pr < h.rows; ++pc) {
    // Euclidean elimination in column pc below row pr.
    while (true) {
      std::size_t best = h.rows;
      for (std::size_t r = pr; r < h.rows; ++r) {
        if (h.at(r, pc) == 0) continue;
        if (best == h.rows || abs(h.at(r, pc)) < abs(h.at(best, pc))) best = r;
      }
      if (best == h.rows) break;  // column clear
      if (best != pr) row_swap(pr, best);
      if (h.at(pr, pc) < 0) row_negate(pr);
      bool any = false;
      for (std::size_t r = pr + 1; r < h.rows; ++r) {
        if (h.at(r, pc) == 0) continue;
        Int q = h.at(r, pc) / h.at(pr, pc);
        if (h.at(r, pc) - q * h.at(pr, pc) < 0) q -= 1;  // floor
        row_addmul(r, pr, -q);
        if (h.at(r, pc) != 0) any = true;
      }
      if (!any) break;
    }
    if (h.at(pr, pc) != 0) {
      // Reduce the entries above the pivot.
      for (std::size_t r = 0; r < pr; ++r) {
        Int q = h.at(r, pc) / h.at(pr, pc);
        if (h.at(r, pc) - q * h.at(pr, pc) < 0) q -= 1;
        row_addmul(r, pr, -q);
      }
      ++pr;
    }
  }
  return {std::move(h), std::move(u)};
}

inline std::size_t hnf_rank(const IntMatrix& h) {
  std::size_t rank = 0;
  for (std::size_t r = 0; r < h.rows; ++r) {
    bool nonzero = false;
    for (std::size_t c = 0; c < h.cols; ++c)
      if (h.at(r, c) != 0) { nonzero = true; break; }
    if (nonzero) ++rank;
  }
  return rank;
}

inline std::size_t rank(const IntMatrix& m) {
  return hnf_rank(hermite_normal_form(m).h);
}

struct SnfResult {
  IntMatrix d;  // diagonal, d1 | d2 | ...
  IntMatrix p;  // unimodular, p * m * q == d
  IntMatrix q;  // unimodular
};

inline SnfResult smith_normal_form(const IntMatrix& m_in) {
  IntMatrix d = m_in;
  IntMatrix p = IntMatrix::identity(d.rows);
  IntMatrix q = IntMatrix::identity(d.cols);

  auto row_swap = [&](std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < d.cols; ++c) std::swap(d.at(r1, c), d.at(r2, c));
    for (std::size_t c = 0; c < p.cols; ++c) std::swap(p.at(r1, c), p.at(r2, c));
  };
  auto col_swap = [&](std::size_t c1, std::size_t c2) {
    for (std::size_t r = 0; r < d.rows; ++r) std::swap(d.at(r, c1), d.at(r, c2));
    for (std::size_t r = 0; r < q.rows; ++r) std::swap(q.at(r, c1), q.at(r, c2));
  };
  auto row_addmul = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < d.cols; ++c) d.at(dst, c) += f * d.at(src, c);
    for (std::size_t c = 0; c < p.cols; ++c) p.at(dst, c) += f * p.at(src, c);
  };
  auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < d.rows; ++r) d.at(r, dst) += f * d.at(r, src);
    for (std::size_t r = 0; r < q.rows; ++r) q.at(r, dst) += f * q.at(r, src);
  };

  std::size_t t = std::min(d.rows, d.cols);
  for (std::size_t k = 0; k < t; ++k) {
    while (true) {
      // Locate a nonzero entry of least magnitude in the trailing block.
      std::size_t br = d.rows, bc = d.cols;
      for (std::size_t r = k; r < d.rows; ++r)
        for (std::size_t c = k; c < d.cols; ++c)
          if (d.at(r, c) != 0 &&
              (br == d.rows || abs(d.at(r, c)) < abs(d.at(br, bc)))) {
            br = r;
            bc = c;
          }
      if (br == d.rows) { br = k; break; }  // block is zero
      if (br != k) row_swap(k, br);
      if (bc != k) col_swap(k, bc);
      bool dirty = false;
      for (std::size_t r = k + 1; r < d.rows; ++r)
        if (d.at(r, k) != 0) {
          row_addmul(r, k, -(d.at(r, k) / d.at(k, k)));
          if (d.at(r, k) != 0) dirty = true;
        }
      for (std::size_t c = k + 1; c < d.cols; ++c)
        if (d.at(k, c) != 0) {
          col_addmul(c, k, -(d.at(k, c) / d.at(k, k)));
          if (d.at(k, c) != 0) dirty = true;
        }
      if (dirty) continue;
      // Divisibility fix: fold a non-divisible entry into column k.
      bool fixed = true;
      for (std::size_t r = k + 1; r < d.rows && fixed; ++r)
        for (std::size_t c = k + 1; c < d.cols && fixed; ++c)
          if (d.at(r, c) % d.at(k, k) != 0) {
            row_addmul(k, r, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (d.at(k, k) < 0) {
      for (std::size_t c = 0; c < d.cols; ++c) d.at(k, c) = -d.at(k, c);
      for (std::size_t c = 0; c < p.cols; ++c) p.at(k, c) = -p.at(k, c);
    }
  }
  return {std::move(d), std::move(p), std::move(q)};
}

// Basis (as rows) of { u in Z^n : A u = 0 }, where A acts on column
// vectors. The row count is n - rank(A); the kernel is saturated.
namespace detail {

inline Int rat_round(const Rat& r) {
  // Nearest integer, exact: floor(r + 1/2).
  Rat s = r + Rat(1, 2);
  Int a = s.numerator(), b = s.denominator();  // b > 0
  if (a >= 0) return a / b;
  return -((-a + b - 1) / b);
}

}  // namespace detail

// Lenstra-Lenstra-Lovasz reduction with delta = 3/4 in exact rational
// arithmetic. Rows must be linearly independent; the result spans the
// same row lattice with much shorter vectors, which keeps the binomial
// bases built from kernel lattices small.
inline IntMatrix lll_reduce(IntMatrix b) {
  std::size_t n = b.rows, m = b.cols;
  if (n <= 1) return b;
  std::vector<std::vector<Rat>> bstar(n, std::vector<Rat>(m));
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> norm(n, Rat(0));
  auto gram_schmidt = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < m; ++c) bstar[i][c] = Rat(b.at(i, c));
      for (std::size_t j = 0; j < i; ++j) {
        Rat d(0);
        for (std::size_t c = 0; c < m; ++c) d += Rat(b.at(i, c)) * bstar[j][c];
        mu[i][j] = norm[j] == Rat(0) ? Rat(0) : d / norm[j];
        for (std::size_t c = 0; c < m; ++c) bstar[i][c] -= mu[i][j] * bstar[j][c];
      }
      norm[i] = Rat(0);
      for (std::size_t c = 0; c < m; ++c) norm[i] += bstar[i][c] * bstar[i][c];
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Int q = detail::rat_round(mu[k][j]);
      if (q != 0) {
        for (std::size_t c = 0; c < m; ++c) b.at(k, c) -= q * b.at(j, c);
        gram_schmidt();
      }
    }
    if (norm[k] >= (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      for (std::size_t c = 0; c < m; ++c) std::swap(b.at(k, c), b.at(k - 1, c));
      gram_schmidt();
      k = k > 1 ? k - 1 : 1;
    }
  }
  return b;
}

inline IntMatrix kernel_lattice(const IntMatrix& a) {
  std::size_t n = a.cols;
  HnfResult hu = hermite_normal_form(a.transpose());  // (n x d) input
  std::vector<std::vector<Int>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < hu.h.cols; ++c)
      if (hu.h.at(r, c) != 0) { zero = false; break; }
    if (zero) rows.push_back(hu.u.row(r));
  }
  return lll_reduce(IntMatrix::from_rows(rows, n));
}

// Basis of Sat(L) = { u in Z^n : z u in L for some nonzero z }, computed
// as the double integer kernel of the row span.
inline IntMatrix saturate_lattice(const IntMatrix& l, std::size_t n) {
  if (l.rows == 0) return IntMatrix(0, n);
  if (l.cols != n) throw std::invalid_argument("saturate_lattice: shape");
  IntMatrix orth = kernel_lattice(l);  // { w : L w = 0 }
  if (orth.rows == 0) return IntMatrix::identity(n);
  IntMatrix sat = kernel_lattice(orth);
  return hermite_normal_form(sat).h;  // canonical rows, full (no zero rows)
}

// Canonical HNF of a lattice basis with zero rows stripped.
inline IntMatrix lattice_canonical(const IntMatrix& l) {
  IntMatrix h = hermite_normal_form(l).h;
  std::vector<std::vector<Int>> rows;
  for (std::size_t r = 0; r < h.rows; ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < h.cols; ++c)
      if (h.at(r, c) != 0) { zero = false; break; }
    if (!zero) rows.push_back(h.row(r));
  }
  return IntMatrix::from_rows(rows, h.cols);
}

inline bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v) {
  // Solve x * basis = v over Z by forward substitution on the HNF rows.
  IntMatrix h = lattice_canonical(basis);
  std::vector<Int> w = v;
  for (std::size_t r = 0; r < h.rows; ++r) {
    std::size_t pc = 0;
    while (pc < h.cols && h.at(r, pc) == 0) ++pc;
    if (pc == h.cols) continue;
    if (w[pc] % h.at(r, pc) != 0) return false;
    Int f = w[pc] / h.at(r, pc);
    for (std::size_t c = 0; c < h.cols; ++c) w[c] -= f * h.at(r, c);
  }
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Gradings
// ---------------------------------------------------------------------------

namespace detail {

// Fourier-Motzkin: find rational c with (c^T A)_i >= 1 for every column i.
// Returns nullopt when no such c exists.
inline std::optional<std::vector<Rat>> positive_combination(const IntMatrix& a) {
  std::size_t d = a.rows, n = a.cols;
  if (d == 0) return std::nullopt;
  // Inequalities sum_j coef[j] c_j >= rhs.
  struct Ineq {
    std::vector<Rat> coef;
    Rat rhs;
  };
  std::vector<Ineq> sys;
  for (std::size_t i = 0; i < n; ++i) {
    Ineq q{std::vector<Rat>(d), Rat(1)};
    for (std::size_t j = 0; j < d; ++j) q.coef[j] = Rat(a.at(j, i));
    sys.push_back(std::move(q));
  }
  std::vector<std::vector<Ineq>> stages;  // system before eliminating var j
  for (std::size_t j = 0; j < d; ++j) {
    stages.push_back(sys);
    std::vector<Ineq> next;
    std::vector<const Ineq*> pos, neg, zer;
    for (const Ineq& q : sys)
      (q.coef[j] > 0 ? pos : q.coef[j] < 0 ? neg : zer).push_back(&q);
    for (const Ineq* q : zer) next.push_back(*q);
    for (const Ineq* qp : pos)
      for (const Ineq* qn : neg) {
        Ineq q{std::vector<Rat>(d), Rat(0)};
        Rat fp = -qn->coef[j], fn = qp->coef[j];
        for (std::size_t k = 0; k < d; ++k)
          q.coef[k] = fp * qp->coef[k] + fn * qn->coef[k];
        q.rhs = fp * qp->rhs + fn * qn->rhs;
        next.push_back(std::move(q));
      }
    sys = std::move(next);
  }
  for (const Ineq& q : sys)
    if (q.rhs > 0) return std::nullopt;  // 0 >= rhs fails
  // Back substitution, last variable first.
  std::vector<Rat> c(d, Rat(0));
  for (std::size_t j = d; j-- > 0;) {
    bool have_lo = false, have_hi = false;
    Rat lo(0), hi(0);
    for (const Ineq& q : stages[j]) {
      // Only variables >= j remain in stage j; those > j are known.
      Rat rest = q.rhs;
      for (std::size_t k = j + 1; k < d; ++k) rest -= q.coef[k] * c[k];
      if (q.coef[j] > 0) {
        Rat bound = rest / q.coef[j];
        if (!have_lo || bound > lo) { lo = bound; have_lo = true; }
      } else if (q.coef[j] < 0) {
        Rat bound = rest / q.coef[j];
        if (!have_hi || bound < hi) { hi = bound; have_hi = true; }
      } else if (rest > 0) {
        return std::nullopt;
      }
    }
    if (have_lo && have_hi && lo > hi) return std::nullopt;
    if (have_lo) c[j] = lo;
    else if (have_hi) c[j] = hi;
    else c[j] = Rat(0);
  }
  return c;
}

}  // namespace detail

// A d x n grading matrix. `positive` records whether some rational
// combination of the rows is strictly positive on every variable; when it
// is, `weight` holds an integer witness usable as a global order weight.
struct Grading {
  IntMatrix matrix;
  bool positive = false;
  std::vector<Int> weight;  // strictly positive iff positive == true

  std::size_t nvars() const { return matrix.cols; }
  std::size_t dim() const { return matrix.rows; }

  std::vector<Int> degree(const Expo& u) const {
    std::vector<Int> uu(u.begin(), u.end());
    return matrix.apply(uu);
  }
};

inline Grading make_grading(IntMatrix m) {
  Grading g;
  g.matrix = std::move(m);
  // Fast path: a single all-positive row.
  for (std::size_t r = 0; r < g.matrix.rows; ++r) {
    bool all_pos = g.matrix.cols > 0;
    for (std::size_t c = 0; c < g.matrix.cols; ++c)
      if (g.matrix.at(r, c) <= 0) { all_pos = false; break; }
    if (all_pos) {
      g.positive = true;
      g.weight = g.matrix.row(r);
      return g;
    }
  }
  // Fast path: the sum of all rows.
  if (g.matrix.cols > 0) {
    std::vector<Int> sum(g.matrix.cols, Int(0));
    for (std::size_t r = 0; r < g.matrix.rows; ++r)
      for (std::size_t c = 0; c < g.matrix.cols; ++c) sum[c] += g.matrix.at(r, c);
    if (std::all_of(sum.begin(), sum.end(), [](const Int& x) { return x > 0; })) {
      g.positive = true;
      g.weight = std::move(sum);
      return g;
    }
  }
  auto cert = detail::positive_combination(g.matrix);
  if (cert) {
    g.positive = true;
    // Clear denominators.
    Int lcm_den = 1;
    for (const Rat& r : *cert)
      lcm_den = lcm_den / gcd(lcm_den, r.denominator()) * r.denominator();
    std::vector<Int> c(cert->size());
    for (std::size_t j = 0; j < c.size(); ++j)
      c[j] = (*cert)[j].numerator() * (lcm_den / (*cert)[j].denominator());
    g.weight.assign(g.matrix.cols, Int(0));
    for (std::size_t i = 0; i < g.matrix.cols; ++i)
      for (std::size_t j = 0; j < g.matrix.rows; ++j)
        g.weight[i] += c[j] * g.matrix.at(j, i);
  }
  return g;
}

// The one-row grading of a monomial curve t -> (t^{a_1}, ..., t^{a_n}).
inline Grading curve_grading(const std::vector<Int>& a) {
  IntMatrix m(1, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw std::invalid_argument("curve generators must be positive");
    m.at(0, i) = a[i];
  }
  return make_grading(std::move(m));
}

// The finest grading making every generator homogeneous: the quotient
// presentation of Z^n / Sat(L) with L spanned by the exponent differences.
inline Grading finest_grading(const std::vector<Binomial>& gens, std::size_t n) {
  if (gens.empty()) throw std::invalid_argument("finest_grading: no generators");
  std::vector<std::vector<Int>> diffs;
  for (const Binomial& f : gens) {
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = f.lhs[i] - f.rhs[i];
    diffs.push_back(std::move(d));
  }
  IntMatrix l = IntMatrix::from_rows(diffs, n);
  IntMatrix sat = saturate_lattice(l, n);
  IntMatrix a = sat.rows == 0 ? IntMatrix::identity(n) : kernel_lattice(sat);
  return make_grading(lattice_canonical(a));
}

}  // namespace toric
