#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "bordercert/coeffring.hpp"

namespace bordercert {

struct ModpField {
  using T = std::uint64_t;
  std::uint64_t p;

  bool is_zero(T a) const { return a == 0; }
  T mul(T a, T b) const { return mul_mod(a, b, p); }
  T inv(T a) const { return pow_mod(a, p - 2, p); }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  // a - f * b
  T sub_mul(T a, T f, T b) const {
    T fb = mul(f, b);
    return a >= fb ? a - fb : a + (p - fb);
  }
};

struct RationalField {
  using T = Rational;

  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub_mul(const T& a, const T& f, const T& b) const { return a - f * b; }
};

template <class Field>
using SparseRow = std::vector<std::pair<int, typename Field::T>>;

// Row echelon form built one row at a time. Each pivot row is stored with
// its largest column as the leading entry, scaled to 1. Incoming rows are
// reduced in a dense accumulator, visiting columns from the largest down.
template <class Field>
class SparseEchelon {
 public:
  using T = typename Field::T;

  SparseEchelon(int cols, Field f)
      : field_(std::move(f)), acc_(cols), queued_(cols, 0), pivots_(cols) {}

  int cols() const { return static_cast<int>(acc_.size()); }
  int rank() const { return rank_; }

  // Returns true when the row is independent of the rows added so far.
  bool add_row(const SparseRow<Field>& row) {
    std::priority_queue<int> heap;
    for (const auto& [c, v] : row) {
      if (c < 0 || c >= cols()) throw ArgumentError("row entry outside the matrix");
      if (field_.is_zero(v)) continue;
      acc_[c] = field_.add(acc_[c], v);
      if (!queued_[c]) queued_[c] = 1, heap.push(c);
    }
    while (!heap.empty()) {
      const int c = heap.top();
      heap.pop();
      queued_[c] = 0;
      if (field_.is_zero(acc_[c])) continue;
      auto& piv = pivots_[c];
      if (piv.empty()) {
        // New pivot: collect what is left.
        SparseRow<Field> out;
        const T inv = field_.inv(acc_[c]);
        out.emplace_back(c, T(1));
        acc_[c] = T(0);
        while (!heap.empty()) {
          const int d = heap.top();
          heap.pop();
          queued_[d] = 0;
          if (!field_.is_zero(acc_[d])) out.emplace_back(d, field_.mul(acc_[d], inv));
          acc_[d] = T(0);
        }
        piv = std::move(out);
        ++rank_;
        return true;
      }
      const T f = acc_[c];
      for (const auto& [d, v] : piv) {
        acc_[d] = field_.sub_mul(acc_[d], f, v);
        if (d != c && !queued_[d]) queued_[d] = 1, heap.push(d);
      }
      acc_[c] = T(0);
    }
    return false;
  }

 private:
  Field field_;
  std::vector<T> acc_;
  std::vector<char> queued_;
  std::vector<SparseRow<Field>> pivots_;
  int rank_ = 0;
};

}  // namespace bordercert
