#pragma once

// Exact integer linear algebra: Smith form, echelon solving and kernels over
// Z and Z/n. Matrices act on column vectors.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fundseq/errors.hpp"

namespace fundseq {

using Int = mpz_class;

class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMat identity(std::size_t n);
  static IntMat scalar(std::size_t n, const Int& c);
  static IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols_if_empty = 0);
  static IntMat column(const std::vector<Int>& entries);
  static IntMat unit_column(std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMat transpose() const;
  IntMat col(std::size_t j) const;
  IntMat row(std::size_t i) const;
  IntMat col_range(std::size_t begin, std::size_t end) const;
  IntMat row_range(std::size_t begin, std::size_t end) const;
  IntMat select_cols(const std::vector<std::size_t>& idx) const;
  IntMat select_rows(const std::vector<std::size_t>& idx) const;
  void set_col(std::size_t j, const IntMat& c);
  void set_block(std::size_t r0, std::size_t c0, const IntMat& b);

  bool is_zero() const;
  bool col_is_zero(std::size_t j) const;
  IntMat nonzero_cols() const;

  // In-place elementary operations.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);  // row dst += q row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);  // col dst += q col src
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  IntMat mod(const Int& n) const;  // entries reduced into [0, n); identity when n == 0

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntMat operator+(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a);
  friend IntMat operator*(const Int& c, const IntMat& a);
  friend bool operator==(const IntMat& a, const IntMat& b);

  static IntMat hconcat(const IntMat& a, const IntMat& b);
  static IntMat vconcat(const IntMat& a, const IntMat& b);
  static IntMat block_diag(const IntMat& a, const IntMat& b);
  static IntMat kron(const IntMat& a, const IntMat& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Z or Z/n with n >= 2.
class RingDesc {
 public:
  enum class Kind { Integers, IntegersModN };

  RingDesc() = default;
  static RingDesc integers() { return RingDesc(); }
  static RingDesc mod(const Int& n);

  Kind kind() const { return kind_; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  const Int& modulus() const { return n_; }  // 0 for Z
  bool hereditary() const { return is_integers(); }
  bool quasi_frobenius() const { return !is_integers(); }
  std::string name() const;

  Int reduce(const Int& a) const;
  IntMat reduce(const IntMat& a) const { return a.mod(n_); }
  // Columns n*e_i that realise a Z/n-module as a Z-module; empty for Z.
  IntMat padding(std::size_t gens) const;

  friend bool operator==(const RingDesc& a, const RingDesc& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_;
  }

 private:
  Kind kind_ = Kind::Integers;
  Int n_ = 0;
};

struct SNFResult {
  IntMat U;     // rows x rows, unimodular
  IntMat S;     // rows x cols, diagonal with d_1 | d_2 | ...
  IntMat V;     // cols x cols, unimodular
  IntMat Uinv;  // inverse of U
  std::vector<Int> diagonal() const;
};

// Column echelon form A*V = H: the first `rank` columns of H are nonzero with
// strictly increasing pivot rows, the remaining columns vanish.
class Echelon {
 public:
  explicit Echelon(const IntMat& A);

  std::size_t rank() const { return rank_; }
  const IntMat& H() const { return H_; }
  const IntMat& V() const { return V_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  IntMat lattice_basis() const;   // columns spanning the same Z-lattice as A
  IntMat kernel_basis() const;    // Z-basis of {x : A x = 0}
  std::optional<IntMat> solve(const IntMat& b) const;   // one column
  std::optional<IntMat> solve_all(const IntMat& B) const;  // column-wise
  bool contains(const IntMat& b) const { return solve(b).has_value(); }
  // Canonical representative of b modulo the column lattice.
  IntMat reduce(const IntMat& b) const;

 private:
  IntMat H_;
  IntMat V_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> pivots_;
};

struct InvariantDivisors {
  std::vector<Int> divisors;  // non-unit torsion invariant factors, d_1 | d_2 | ...
  std::size_t free_rank = 0;  // copies of R
  bool operator==(const InvariantDivisors&) const = default;
  std::string to_string() const;
};

SNFResult snf(const IntMat& A, const RingDesc& ring = RingDesc::integers());
IntMat kernel_basis(const IntMat& A, const RingDesc& ring = RingDesc::integers());
std::optional<IntMat> solve(const IntMat& A, const IntMat& b, const RingDesc& ring = RingDesc::integers());
InvariantDivisors invariant_divisors(const IntMat& A, const RingDesc& ring = RingDesc::integers());

// Smith form over Z without ring reduction.
SNFResult snf_integer(const IntMat& A);

Int gcd(const Int& a, const Int& b);
std::vector<std::pair<Int, unsigned>> factorize(Int n);

}  // namespace fundseq
