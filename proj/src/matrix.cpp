#include "twistden/matrix.hpp"

#include <algorithm>
#include <utility>

namespace twistden {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw Error("matrix entry " + to_string(m(i, j)) + " is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

bool is_integral(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

namespace {

// Gaussian elimination to row echelon form; returns rank and the sign/scale of the determinant.
std::size_t eliminate(RationalMatrix& m, Rational* det) {
  std::size_t r = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (p != r) {
      m.swap_rows(p, r);
      if (det) *det = -*det;
    }
    if (det) *det *= m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  RationalMatrix work = m;
  Rational det;
  std::size_t r = eliminate(work, &det);
  return r < m.rows() ? Rational(0) : det;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return eliminate(work, nullptr);
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw SingularMatrix("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw SingularMatrix("matrix is singular");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  return inverse(m) * b;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw Error("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    RationalMatrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

HermiteForm hermite_form(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(a.rows());
  auto row_axpy = [](IntegerMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
  };
  auto row_negate = [](IntegerMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(best, r);
      u.swap_rows(best, r);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      row_negate(h, r);
      row_negate(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q != 0) {
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  // Rows of U with U a^T = H that land on zero rows of H span the kernel.
  HermiteForm hf = hermite_form(a.transpose());
  const std::size_t n = a.cols();
  IntegerMatrix k(n - hf.rank, n);
  for (std::size_t i = hf.rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - hf.rank, j) = hf.transform(i, j);
  return k;
}

std::vector<BigInt> smith_invariants(const IntegerMatrix& a) {
  IntegerMatrix m = a;
  // Alternate row and column Hermite reductions until diagonal.
  for (int iter = 0; iter < 64; ++iter) {
    m = hermite_form(m).form;
    m = hermite_form(m.transpose()).form;
    bool diagonal = true;
    for (std::size_t i = 0; i < m.rows() && diagonal; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (i != j && m(i, j) != 0) {
          diagonal = false;
          break;
        }
    if (diagonal) break;
  }
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (m(i, i) != 0) d.push_back(abs(m(i, i)));
  // Enforce the divisibility chain.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      BigInt l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

IntegerMatrix clear_row_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt d = common_denominator(m.row(i));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational x = m(i, j) * Rational(d);
      out(i, j) = x.get_num();
    }
  }
  return out;
}

}  // namespace twistden
