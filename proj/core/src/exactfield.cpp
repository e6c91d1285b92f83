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

#include "ghw/exactfield.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ghw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kNoDual: return "NoDual";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kNoCircuits: return "NoCircuits";
    case ErrorKind::kMalformedDependency: return "MalformedDependency";
    case ErrorKind::kDegenerateDual: return "DegenerateDual";
    case ErrorKind::kInhomogeneous: return "Inhomogeneous";
    case ErrorKind::kTruncated: return "Truncated";
    case ErrorKind::kNotCohenMacaulay: return "NotCM";
    case ErrorKind::kInput: return "InputError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorKind::kInvalidArgument,
                "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorKind::kInvalidArgument, "inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e != 0) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) {
    throw Error(ErrorKind::kInvalidArgument, "scalars from different fields");
  }
}

DenseMatrix::DenseMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

DenseMatrix DenseMatrix::from_rows(const PrimeField& field,
                                   const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::kInvalidArgument, "matrix rows have different lengths");
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

DenseMatrix DenseMatrix::identity(const PrimeField& field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
  return m;
}

Scalar DenseMatrix::at(std::size_t r, std::size_t c) const {
  return Scalar(field_, (*this)(r, c));
}

void DenseMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  data_[r * cols_ + c] = field_.reduce(v);
}

std::vector<std::uint32_t> DenseMatrix::column(std::size_t c) const {
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool DenseMatrix::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, c) != 0) return false;
  }
  return true;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set_raw(c, r, (*this)(r, c));
  }
  return t;
}

DenseMatrix DenseMatrix::select_columns(std::span<const std::size_t> columns) const {
  DenseMatrix s(field_, rows_, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= cols_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "column index " + std::to_string(columns[j]) + " out of range");
    }
    for (std::size_t r = 0; r < rows_; ++r) s.set_raw(r, j, (*this)(r, columns[j]));
  }
  return s;
}

DenseMatrix DenseMatrix::select_rows(std::span<const std::size_t> rows) const {
  DenseMatrix s(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw Error(ErrorKind::kInvalidArgument, "row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) s.set_raw(i, c, (*this)(rows[i], c));
  }
  return s;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field_ == b.field_) || a.cols_ != b.rows_) {
    throw Error(ErrorKind::kInvalidArgument, "matrix product shape or field mismatch");
  }
  const PrimeField& f = a.field_;
  DenseMatrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const std::uint32_t x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out.data_[i * b.cols_ + j] = f.add(out.data_[i * b.cols_ + j], f.mul(x, b(l, j)));
      }
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> DenseMatrix::to_signed_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = field_.centered((*this)(r, c));
  }
  return out;
}

std::string DenseMatrix::to_string() const {
  std::ostringstream os;
  for (const auto& row : to_signed_rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) os << ' ';
      os << (row[c] >= 0 ? " " : "") << row[c];
    }
    os << '\n';
  }
  return os.str();
}

namespace {

// Reduces data to RREF in place and returns the pivot columns.
std::vector<std::size_t> rref_in_place(std::span<std::uint32_t> data, std::size_t rows,
                                       std::size_t cols, const PrimeField& f,
                                       bool full_reduce) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && data[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t k = c; k < cols; ++k) {
        std::swap(data[sel * cols + k], data[pivot_row * cols + k]);
      }
    }
    std::uint32_t* prow = data.data() + pivot_row * cols;
    const std::uint32_t inv = f.inv(prow[c]);
    for (std::size_t k = c; k < cols; ++k) prow[k] = f.mul(prow[k], inv);
    const std::size_t start = full_reduce ? 0 : pivot_row + 1;
    for (std::size_t r = start; r < rows; ++r) {
      if (r == pivot_row) continue;
      std::uint32_t* row = data.data() + r * cols;
      const std::uint32_t factor = row[c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        if (prow[k] != 0) row[k] = f.sub(row[k], f.mul(factor, prow[k]));
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

std::size_t rank_in_place(std::span<std::uint32_t> data, std::size_t rows, std::size_t cols,
                          const PrimeField& field) {
  return rref_in_place(data, rows, cols, field, false).size();
}

RrefResult rref(const DenseMatrix& m) {
  DenseMatrix r = m;
  std::vector<std::uint32_t> buf(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::ranges::copy(m.row(i), buf.begin() + static_cast<std::ptrdiff_t>(i * m.cols()));
  }
  auto pivots = rref_in_place(buf, m.rows(), m.cols(), m.field(), true);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) r.set_raw(i, c, buf[i * m.cols() + c]);
  }
  const std::size_t rk = pivots.size();
  return {std::move(r), std::move(pivots), rk};
}

std::size_t rank(const DenseMatrix& m) {
  std::vector<std::uint32_t> buf(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::ranges::copy(m.row(i), buf.begin() + static_cast<std::ptrdiff_t>(i * m.cols()));
  }
  return rank_in_place(buf, m.rows(), m.cols(), m.field());
}

std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m) {
  const auto [reduced, pivots, rk] = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(f, 0));
    v[free] = Scalar(f, 1);
    for (std::size_t r = 0; r < rk; ++r) {
      v[pivots[r]] = Scalar(f, f.neg(reduced(r, free)));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of_columns(const DenseMatrix& m, std::span<const std::size_t> columns) {
  if (columns.empty()) return 0;
  return rank(m.select_columns(columns));
}

std::size_t rank_of_column_mask(const DenseMatrix& m, std::uint64_t mask) {
  if (mask == 0) return 0;
  if (m.cols() < 64 && (mask >> m.cols()) != 0) {
    throw Error(ErrorKind::kInvalidArgument, "column mask out of range");
  }
  // Columns become rows so the scratch buffer is filled contiguously.
  const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
  std::vector<std::uint32_t> buf(k * m.rows());
  std::size_t i = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (((mask >> c) & 1u) == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) buf[i * m.rows() + r] = m(r, c);
    ++i;
  }
  return rank_in_place(buf, k, m.rows(), m.field());
}

bool same_row_space(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field() == b.field()) || a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  if (ra != rank(b)) return false;
  DenseMatrix stacked(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) stacked.set_raw(r, c, a(r, c));
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) stacked.set_raw(a.rows() + r, c, b(r, c));
  }
  return rank(stacked) == ra;
}

}  // namespace ghw
