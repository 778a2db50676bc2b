// Copyright 2026 The Stairnet Authors
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

#include "stairnet/linear.h"

#include <algorithm>
#include <utility>

#include "stairnet/combinatorics.h"
#include "stairnet/errors.h"

namespace stairnet {
namespace {

// Forward elimination of an r x (k+1) augmented integer matrix. Returns false
// if the k coefficient columns are dependent or the system is inconsistent.
bool Eliminate(std::vector<std::vector<BigInt>>& m, int k) {
  const int r = static_cast<int>(m.size());
  BigInt prev = 1;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (piv < r && m[piv][col] == 0) ++piv;
    if (piv == r) return false;
    if (piv != col) std::swap(m[piv], m[col]);
    for (int i = col + 1; i < r; ++i) {
      for (int j = col + 1; j <= k; ++j) {
        m[i][j] = m[col][col] * m[i][j] - m[i][col] * m[col][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[col][col];
  }
  for (int i = k; i < r; ++i) {
    if (m[i][k] != 0) return false;
  }
  return true;
}

}  // namespace

Rational Determinant(const RationalMatrix& square) {
  const int n = static_cast<int>(square.size());
  for (const auto& row : square) {
    if (static_cast<int>(row.size()) != n) {
      throw DimensionMismatch("determinant of a non-square matrix");
    }
  }
  if (n == 0) return 1;
  // Scale each row to integers; the determinant scales by the product.
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  Rational scale = 1;
  for (int i = 0; i < n; ++i) {
    BigInt lcm = 1;
    for (const Rational& v : square[i]) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    for (int j = 0; j < n; ++j) {
      m[i][j] = square[i][j].get_num() * (lcm / square[i][j].get_den());
    }
    scale *= lcm;
  }
  int sign = 1;
  BigInt prev = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    for (int i = col + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        m[i][j] = m[col][col] * m[i][j] - m[i][col] * m[col][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[col][col];
  }
  Rational det(m[n - 1][n - 1] * sign);
  det /= scale;
  return det;
}

ExactSystem::ExactSystem(const std::vector<std::vector<Rational>>& columns,
                         std::span<const Rational> rhs)
    : rows_(static_cast<int>(rhs.size())),
      cols_(static_cast<int>(columns.size())) {
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != rows_) {
      throw DimensionMismatch("column length differs from right-hand side");
    }
  }
  a_.assign(rows_, std::vector<BigInt>(cols_));
  b_.resize(rows_);
  for (int i = 0; i < rows_; ++i) {
    BigInt lcm = rhs[i].get_den();
    for (int j = 0; j < cols_; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              columns[j][i].get_den_mpz_t());
    }
    for (int j = 0; j < cols_; ++j) {
      a_[i][j] = columns[j][i].get_num() * (lcm / columns[j][i].get_den());
    }
    b_[i] = rhs[i].get_num() * (lcm / rhs[i].get_den());
  }
}

std::optional<std::vector<Rational>> ExactSystem::SolveColumns(
    std::span<const int> cols) const {
  const int k = static_cast<int>(cols.size());
  if (k > rows_) return std::nullopt;
  std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(k + 1));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = a_[i][cols[j]];
    m[i][k] = b_[i];
  }
  if (!Eliminate(m, k)) return std::nullopt;
  std::vector<Rational> x(k);
  for (int i = k - 1; i >= 0; --i) {
    Rational acc(m[i][k]);
    for (int j = i + 1; j < k; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

std::optional<std::vector<Rational>> ExactSystem::FindNonnegative(
    int max_support) const {
  max_support = std::min({max_support, cols_, rows_});
  std::optional<std::vector<Rational>> found;
  for (int size = max_support; size >= 1 && !found; --size) {
    ForEachCombination(cols_, size, [&](std::span<const int> cols) {
      auto x = SolveColumns(cols);
      if (!x) return false;
      for (const Rational& v : *x) {
        if (sgn(v) < 0) return false;
      }
      std::vector<Rational> full(cols_);
      for (int j = 0; j < size; ++j) full[cols[j]] = (*x)[j];
      found = std::move(full);
      return true;
    });
  }
  // The zero vector solves b == 0.
  if (!found && std::all_of(b_.begin(), b_.end(),
                            [](const BigInt& v) { return v == 0; })) {
    found = std::vector<Rational>(cols_);
  }
  return found;
}

}  // namespace stairnet
