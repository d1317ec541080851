#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "raag/errors.hpp"

namespace raag {

// Bytes the memory guard allows an elimination to hold. Reads
// RAAG_MEMORY_LIMIT (plain bytes or with a K/M/G suffix); 2 GiB otherwise.
std::size_t default_memory_limit();

struct ComputeOptions {
  // Rank computations modulo two random large primes, falling back to exact
  // arithmetic when they disagree.
  bool fast = false;
  std::size_t memory_limit = default_memory_limit();
};

struct RationalField {
  using value = mpq_class;
  static constexpr std::size_t bytes_per_entry = 64;

  value zero() const { return 0; }
  value from_int(long long x) const { return value(static_cast<long>(x)); }
  value from_rational(const mpq_class& q) const { return q; }
  bool is_zero(const value& x) const { return sgn(x) == 0; }
  value inv(const value& x) const { return 1 / x; }
  void add_in(value& a, const value& b) const { a += b; }
  // a -= c * b
  void sub_mul(value& a, const value& c, const value& b) const { a -= c * b; }
  void mul_in(value& a, const value& c) const { a *= c; }
  value neg(const value& x) const { return -x; }
};

class ModPrimeField {
 public:
  using value = std::uint64_t;
  static constexpr std::size_t bytes_per_entry = 16;

  explicit ModPrimeField(std::uint64_t p) : p_(p) {}
  std::uint64_t prime() const { return p_; }

  value zero() const { return 0; }
  value from_int(long long x) const {
    long long r = x % static_cast<long long>(p_);
    return r < 0 ? static_cast<value>(r + static_cast<long long>(p_))
                 : static_cast<value>(r);
  }
  value from_rational(const mpq_class& q) const;
  bool is_zero(value x) const { return x == 0; }
  value inv(value x) const { return pow(x, p_ - 2); }
  void add_in(value& a, value b) const {
    a = a >= p_ - b ? a - (p_ - b) : a + b;
  }
  void sub_mul(value& a, value c, value b) const {
    const value prod = mul(c, b);
    a = a >= prod ? a - prod : a + (p_ - prod);
  }
  void mul_in(value& a, value c) const { a = mul(a, c); }
  value neg(value x) const { return x == 0 ? 0 : p_ - x; }

  value mul(value a, value b) const {
    return static_cast<value>(static_cast<unsigned __int128>(a) * b % p_);
  }
  value pow(value b, std::uint64_t e) const {
    value r = 1;
    while (e) {
      if (e & 1U) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

 private:
  std::uint64_t p_;
};

// Two distinct random primes just below 2^62.
std::pair<std::uint64_t, std::uint64_t> random_prime_pair();

template <class Field>
using SparseVec = std::vector<std::pair<std::uint32_t, typename Field::value>>;

// Incremental row echelon form over a field. Pivots are leading (smallest)
// columns; rows are normalized to a leading 1.
template <class Field>
class Echelon {
 public:
  using value = typename Field::value;
  using Row = SparseVec<Field>;

  Echelon(Field f, std::uint32_t ncols, std::size_t memory_limit,
          std::string context)
      : f_(std::move(f)),
        ncols_(ncols),
        limit_(memory_limit),
        context_(std::move(context)),
        acc_(ncols, f_.zero()),
        pivot_of_(ncols, -1) {}

  std::uint32_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return f_; }

  // Reduces `row` against the current pivots; returns the remainder.
  Row reduce(const Row& row) {
    load(row);
    return drain(true);
  }

  // Adds a row; returns true when it increased the rank.
  bool add(const Row& row) {
    load(row);
    Row rest = drain(true);
    if (rest.empty()) return false;
    const value lead_inv = f_.inv(rest.front().second);
    for (auto& [c, x] : rest) f_.mul_in(x, lead_inv);
    pivot_of_[rest.front().first] = static_cast<std::int64_t>(rows_.size());
    nnz_ += rest.size();
    if (nnz_ * Field::bytes_per_entry > limit_)
      throw ResourceError("memory guard exceeded (" +
                          std::to_string(nnz_ * Field::bytes_per_entry) +
                          " bytes estimated) while " + context_);
    rows_.push_back(std::move(rest));
    return true;
  }

  bool is_pivot(std::uint32_t col) const { return pivot_of_[col] >= 0; }

  // Rows of the reduced row echelon form, sorted by pivot column.
  std::vector<Row> rref() {
    std::vector<std::pair<std::uint32_t, std::size_t>> order;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      order.emplace_back(rows_[i].front().first, i);
    std::sort(order.begin(), order.end());
    // Back-substitute from the last pivot, so rows used for reduction are
    // already fully reduced.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Row& r = rows_[it->second];
      load(r);
      r = drain(false);
    }
    std::vector<Row> out;
    out.reserve(order.size());
    for (auto [c, i] : order) out.push_back(rows_[i]);
    return out;
  }

  const std::vector<Row>& rows() const { return rows_; }

 private:
  void load(const Row& row) {
    for (const auto& [c, x] : row) {
      if (f_.is_zero(acc_[c])) heap_.push(c);
      f_.add_in(acc_[c], x);
    }
  }

  // Pops columns in increasing order. With `reduce_lead` false the first
  // column (the row's own pivot) is kept as is.
  Row drain(bool reduce_lead) {
    Row out;
    std::uint32_t last = UINT32_MAX;
    bool first = true;
    while (!heap_.empty()) {
      const std::uint32_t c = heap_.top();
      heap_.pop();
      if (c == last) continue;
      last = c;
      value x = std::move(acc_[c]);
      acc_[c] = f_.zero();
      if (f_.is_zero(x)) continue;
      const std::int64_t p = pivot_of_[c];
      if (p >= 0 && (reduce_lead || !first)) {
        for (const auto& [col, y] : rows_[static_cast<std::size_t>(p)]) {
          if (col == c) continue;
          if (f_.is_zero(acc_[col])) heap_.push(col);
          f_.sub_mul(acc_[col], x, y);
        }
      } else {
        out.emplace_back(c, std::move(x));
      }
      first = false;
    }
    return out;
  }

  Field f_;
  std::uint32_t ncols_;
  std::size_t limit_;
  std::string context_;
  std::vector<value> acc_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>,
                      std::greater<>>
      heap_;
  std::vector<std::int64_t> pivot_of_;
  std::vector<Row> rows_;
  std::size_t nnz_ = 0;
};

// Basis of the null space {x : R x = 0} of the matrix whose rows are given
// in reduced row echelon form, one vector per non-pivot column.
template <class Field>
std::vector<SparseVec<Field>> null_space_from_rref(
    const Field& f, const std::vector<SparseVec<Field>>& rref,
    std::uint32_t ncols) {
  std::vector<std::int64_t> pivot_row(ncols, -1);
  for (std::size_t i = 0; i < rref.size(); ++i)
    pivot_row[rref[i].front().first] = static_cast<std::int64_t>(i);
  // column j -> list of (pivot column, coefficient of j in that row)
  std::vector<std::vector<std::pair<std::uint32_t, typename Field::value>>>
      by_col(ncols);
  for (const auto& r : rref)
    for (std::size_t k = 1; k < r.size(); ++k)
      by_col[r[k].first].emplace_back(r.front().first, r[k].second);
  std::vector<SparseVec<Field>> out;
  for (std::uint32_t j = 0; j < ncols; ++j) {
    if (pivot_row[j] >= 0) continue;
    SparseVec<Field> v;
    for (const auto& [p, c] : by_col[j]) v.emplace_back(p, f.neg(c));
    v.emplace_back(j, f.from_int(1));
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace raag
