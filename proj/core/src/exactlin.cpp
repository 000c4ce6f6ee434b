#include "fundseq/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace fundseq {

// ---------------------------------------------------------------- IntMat

IntMat IntMat::identity(std::size_t n) { return scalar(n, 1); }

IntMat IntMat::scalar(std::size_t n, const Int& c) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  IntMat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols_if_empty) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : cols_if_empty;
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::column(const std::vector<Int>& entries) {
  IntMat m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

IntMat IntMat::unit_column(std::size_t n, std::size_t i) {
  IntMat m(n, 1);
  m(i, 0) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::col(std::size_t j) const { return col_range(j, j + 1); }
IntMat IntMat::row(std::size_t i) const { return row_range(i, i + 1); }

IntMat IntMat::col_range(std::size_t begin, std::size_t end) const {
  IntMat m(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

IntMat IntMat::row_range(std::size_t begin, std::size_t end) const {
  IntMat m(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
  return m;
}

IntMat IntMat::select_cols(const std::vector<std::size_t>& idx) const {
  IntMat m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

IntMat IntMat::select_rows(const std::vector<std::size_t>& idx) const {
  IntMat m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
  return m;
}

void IntMat::set_col(std::size_t j, const IntMat& c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
}

void IntMat::set_block(std::size_t r0, std::size_t c0, const IntMat& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool IntMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

bool IntMat::col_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, j) != 0) return false;
  return true;
}

IntMat IntMat::nonzero_cols() const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!col_is_zero(j)) keep.push_back(j);
  return select_cols(keep);
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0) (*this)(dst, j) += q * (*this)(src, j);
}

void IntMat::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0) (*this)(i, dst) += q * (*this)(i, src);
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMat::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMat IntMat::mod(const Int& n) const {
  if (n == 0) return *this;
  IntMat m = *this;
  for (auto& v : m.data_) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  }
  return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::DimensionMismatch,
                "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  IntMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "sum");
  IntMat c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "difference");
  IntMat c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntMat operator-(const IntMat& a) {
  IntMat c = a;
  for (auto& v : c.data_) v = -v;
  return c;
}

IntMat operator*(const Int& s, const IntMat& a) {
  IntMat c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

bool operator==(const IntMat& a, const IntMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMat IntMat::hconcat(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "hconcat");
  IntMat m(a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

IntMat IntMat::vconcat(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "vconcat");
  IntMat m(a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

IntMat IntMat::block_diag(const IntMat& a, const IntMat& b) {
  IntMat m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

IntMat IntMat::kron(const IntMat& a, const IntMat& b) {
  IntMat m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) m(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    }
  return m;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- RingDesc

RingDesc RingDesc::mod(const Int& n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "Z/n requires n >= 2");
  RingDesc r;
  r.kind_ = Kind::IntegersModN;
  r.n_ = n;
  return r;
}

std::string RingDesc::name() const { return is_integers() ? "Z" : "Z/" + n_.get_str(); }

Int RingDesc::reduce(const Int& a) const {
  if (is_integers()) return a;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n_.get_mpz_t());
  return r;
}

IntMat RingDesc::padding(std::size_t gens) const {
  if (is_integers()) return IntMat(gens, 0);
  return IntMat::scalar(gens, n_);
}

// ---------------------------------------------------------------- helpers

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

Int abs_of(const Int& a) { return a < 0 ? Int(-a) : a; }

// Quotient rounded to the nearest integer, so remainders are at most |b|/2.
Int nearest_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs_of(r) > abs_of(b)) q += (b > 0) == (r > 0) ? 1 : -1;
  return q;
}

}  // namespace

std::vector<Int> SNFResult::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

// ---------------------------------------------------------------- Echelon

Echelon::Echelon(const IntMat& A) : H_(A), V_(IntMat::identity(A.cols())) {
  const std::size_t m = H_.rows(), n = H_.cols();
  std::size_t piv = 0;
  for (std::size_t r = 0; r < m && piv < n; ++r) {
    for (;;) {
      // smallest nonzero entry of row r among the free columns becomes the pivot
      std::size_t best = n;
      for (std::size_t j = piv; j < n; ++j)
        if (H_(r, j) != 0 && (best == n || abs_of(H_(r, j)) < abs_of(H_(r, best)))) best = j;
      if (best == n) break;
      H_.swap_cols(piv, best);
      V_.swap_cols(piv, best);
      bool clean = true;
      for (std::size_t j = piv + 1; j < n; ++j) {
        if (H_(r, j) == 0) continue;
        Int q = nearest_quotient(H_(r, j), H_(r, piv));
        H_.add_col_multiple(j, piv, -q);
        V_.add_col_multiple(j, piv, -q);
        if (H_(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H_(r, piv) == 0) continue;
    if (H_(r, piv) < 0) {
      H_.negate_col(piv);
      V_.negate_col(piv);
    }
    // keep earlier pivot columns reduced on this row
    for (std::size_t j = 0; j < piv; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H_(r, j).get_mpz_t(), H_(r, piv).get_mpz_t());
      H_.add_col_multiple(j, piv, -q);
      V_.add_col_multiple(j, piv, -q);
    }
    pivots_.push_back(r);
    ++piv;
  }
  rank_ = piv;
}

IntMat Echelon::lattice_basis() const { return H_.col_range(0, rank_); }

IntMat Echelon::kernel_basis() const { return V_.col_range(rank_, V_.cols()); }

std::optional<IntMat> Echelon::solve(const IntMat& b) const {
  if (b.rows() != H_.rows() || b.cols() != 1) throw Error(ErrorKind::DimensionMismatch, "solve rhs");
  IntMat res = b;
  IntMat y(rank_, 1);
  for (std::size_t j = 0; j < rank_; ++j) {
    std::size_t p = pivots_[j];
    const Int& h = H_(p, j);
    if (!mpz_divisible_p(res(p, 0).get_mpz_t(), h.get_mpz_t())) return std::nullopt;
    Int q = res(p, 0) / h;
    y(j, 0) = q;
    if (q != 0)
      for (std::size_t i = p; i < H_.rows(); ++i)
        if (H_(i, j) != 0) res(i, 0) -= q * H_(i, j);
  }
  if (!res.is_zero()) return std::nullopt;
  return V_.col_range(0, rank_) * y;
}

std::optional<IntMat> Echelon::solve_all(const IntMat& B) const {
  IntMat X(V_.rows(), B.cols());
  for (std::size_t j = 0; j < B.cols(); ++j) {
    auto x = solve(B.col(j));
    if (!x) return std::nullopt;
    X.set_col(j, *x);
  }
  return X;
}

IntMat Echelon::reduce(const IntMat& b) const {
  IntMat res = b;
  for (std::size_t j = 0; j < rank_; ++j) {
    std::size_t p = pivots_[j];
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), res(p, 0).get_mpz_t(), H_(p, j).get_mpz_t());
    if (q != 0)
      for (std::size_t i = p; i < H_.rows(); ++i)
        if (H_(i, j) != 0) res(i, 0) -= q * H_(i, j);
  }
  return res;
}

// ---------------------------------------------------------------- SNF

SNFResult snf_integer(const IntMat& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SNFResult r{IntMat::identity(m), A, IntMat::identity(n), IntMat::identity(m)};
  IntMat& S = r.S;

  auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    S.add_row_multiple(dst, src, q);
    r.U.add_row_multiple(dst, src, q);
    r.Uinv.add_col_multiple(src, dst, -q);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    r.U.swap_rows(a, b);
    r.Uinv.swap_cols(a, b);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    S.add_col_multiple(dst, src, q);
    r.V.add_col_multiple(dst, src, q);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    r.V.swap_cols(a, b);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // minimal absolute value pivot in the trailing block
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (S(i, j) != 0 && (pi == m || abs_of(S(i, j)) < abs_of(S(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        row_add(i, t, -nearest_quotient(S(i, t), S(t, t)));
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        col_add(j, t, -nearest_quotient(S(t, j), S(t, t)));
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (S(i, t) != 0 && abs_of(S(i, t)) < abs_of(S(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(t, j) != 0 && abs_of(S(t, j)) < abs_of(S(bi, bj))) {
            bi = t;
            bj = j;
          }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_add(t, bad, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      r.U.negate_row(t);
      r.Uinv.negate_col(t);
    }
  }
  return r;
}

SNFResult snf(const IntMat& A, const RingDesc& ring) {
  if (ring.is_integers()) return snf_integer(A);
  const Int& n = ring.modulus();
  SNFResult r = snf_integer(A.mod(n));
  // Over Z/n each d is associate to gcd(d, n); rescale rows by units.
  for (std::size_t t = 0; t < std::min(A.rows(), A.cols()); ++t) {
    Int d = r.S(t, t);
    Int g = gcd(d, n);
    if (g == n) {
      r.S(t, t) = 0;
      continue;
    }
    Int dp = d / g, np = n / g, u = dp;
    while (gcd(u, n) != 1) u += np;
    Int uinv;
    mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
    for (std::size_t j = 0; j < r.U.cols(); ++j) r.U(t, j) *= uinv;
    for (std::size_t i = 0; i < r.Uinv.rows(); ++i) r.Uinv(i, t) *= u;
    r.S(t, t) = g;
  }
  r.U = r.U.mod(n);
  r.Uinv = r.Uinv.mod(n);
  r.V = r.V.mod(n);
  r.S = r.S.mod(n);
  return r;
}

IntMat kernel_basis(const IntMat& A, const RingDesc& ring) {
  if (ring.is_integers()) return Echelon(A).kernel_basis();
  IntMat lifted = IntMat::hconcat(A.mod(ring.modulus()), ring.padding(A.rows()));
  IntMat K = Echelon(lifted).kernel_basis().row_range(0, A.cols()).mod(ring.modulus());
  return Echelon(IntMat::hconcat(K, ring.padding(A.cols()))).lattice_basis().mod(ring.modulus()).nonzero_cols();
}

std::optional<IntMat> solve(const IntMat& A, const IntMat& b, const RingDesc& ring) {
  if (A.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: row counts differ");
  if (ring.is_integers()) return Echelon(A).solve_all(b);
  Echelon e(IntMat::hconcat(A.mod(ring.modulus()), ring.padding(A.rows())));
  auto x = e.solve_all(b.mod(ring.modulus()));
  if (!x) return std::nullopt;
  return x->row_range(0, A.cols()).mod(ring.modulus());
}

InvariantDivisors invariant_divisors(const IntMat& A, const RingDesc& ring) {
  InvariantDivisors out;
  const std::size_t g = A.rows();
  if (ring.is_integers()) {
    auto d = snf_integer(A).diagonal();
    for (const Int& x : d) {
      if (x == 0)
        ++out.free_rank;
      else if (x != 1)
        out.divisors.push_back(x);
    }
    out.free_rank += g - d.size();
    return out;
  }
  const Int& n = ring.modulus();
  auto d = snf_integer(IntMat::hconcat(A.mod(n), ring.padding(g))).diagonal();
  for (const Int& x : d) {
    if (x == n)
      ++out.free_rank;
    else if (x != 1)
      out.divisors.push_back(x);
  }
  return out;
}

std::string InvariantDivisors::to_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const Int& d : divisors) {
    os << (first ? "" : ", ") << d.get_str();
    first = false;
  }
  for (std::size_t i = 0; i < free_rank; ++i) {
    os << (first ? "" : ", ") << "free";
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace fundseq
