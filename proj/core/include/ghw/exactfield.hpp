// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHW_EXACTFIELD_HPP_
#define GHW_EXACTFIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghw {

enum class ErrorKind {
  kInvalidArgument,
  kRankDeficient,
  kNoDual,
  kTooLarge,
  kNoCircuits,
  kMalformedDependency,
  kDegenerateDual,
  kInhomogeneous,
  kTruncated,
  kNotCohenMacaulay,
  kInput,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

bool is_prime(std::uint64_t n);

// The prime field F_p with 2 <= p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t reduce(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // Throws kInvalidArgument on zero.
  std::uint32_t inv(std::uint32_t a) const;
  // Signed representative in (-p/2, p/2].
  std::int64_t centered(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class Scalar {
 public:
  Scalar(const PrimeField& field, std::int64_t v)
      : field_(field), value_(field.reduce(v)) {}

  std::uint32_t value() const { return value_; }
  const PrimeField& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }
  Scalar inverse() const { return raw(field_.inv(value_)); }

  friend Scalar operator+(Scalar a, Scalar b) {
    check_same(a, b);
    return a.raw(a.field_.add(a.value_, b.value_));
  }
  friend Scalar operator-(Scalar a, Scalar b) {
    check_same(a, b);
    return a.raw(a.field_.sub(a.value_, b.value_));
  }
  friend Scalar operator*(Scalar a, Scalar b) {
    check_same(a, b);
    return a.raw(a.field_.mul(a.value_, b.value_));
  }
  friend Scalar operator/(Scalar a, Scalar b) { return a * b.inverse(); }
  Scalar operator-() const { return raw(field_.neg(value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

 private:
  Scalar raw(std::uint32_t v) const {
    Scalar s = *this;
    s.value_ = v;
    return s;
  }
  static void check_same(const Scalar& a, const Scalar& b);

  PrimeField field_;
  std::uint32_t value_;
};

// Row-major dense matrix over one prime field.
class DenseMatrix {
 public:
  DenseMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);
  static DenseMatrix from_rows(const PrimeField& field,
                               const std::vector<std::vector<std::int64_t>>& rows);
  static DenseMatrix identity(const PrimeField& field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::int64_t v);
  void set_raw(std::size_t r, std::size_t c, std::uint32_t v) {
    data_[r * cols_ + c] = v;
  }

  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<std::uint32_t> column(std::size_t c) const;
  bool column_is_zero(std::size_t c) const;

  DenseMatrix transpose() const;
  DenseMatrix select_columns(std::span<const std::size_t> columns) const;
  DenseMatrix select_rows(std::span<const std::size_t> rows) const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  // Entries printed as signed residues, one row per line.
  std::string to_string() const;
  std::vector<std::vector<std::int64_t>> to_signed_rows() const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  DenseMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank;
};

RrefResult rref(const DenseMatrix& m);

std::size_t rank(const DenseMatrix& m);

// Right null space. One vector per free column, in increasing free-column
// order, with that free variable set to 1 and the other free variables to 0.
std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m);

// Rank of the submatrix on the given columns. Throws kInvalidArgument on an
// out-of-range index.
std::size_t rank_of_columns(const DenseMatrix& m, std::span<const std::size_t> columns);

// Same, with the column set given as a bitmask (bit c selects column c).
std::size_t rank_of_column_mask(const DenseMatrix& m, std::uint64_t mask);

// Rank of a row-major scratch buffer, destroyed in the process.
std::size_t rank_in_place(std::span<std::uint32_t> data, std::size_t rows,
                          std::size_t cols, const PrimeField& field);

bool same_row_space(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace ghw

#endif  // GHW_EXACTFIELD_HPP_
