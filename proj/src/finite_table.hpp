#pragma once

// Operation tables for a finite commutative ring, elements numbered
// 0..n-1. Backs the exhaustive property checks.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "edr/ring.hpp"

namespace edr {

class FiniteTable {
 public:
  static constexpr int kMaxSize = 1024;

  using BinOp = std::function<int(int, int)>;
  FiniteTable(int n, int zero, int one, const BinOp& add, const BinOp& mul);

  /// Tables for a finite ring in enumeration order.
  static FiniteTable from_ring(const Ring& ring);
  /// F_p[x]/(m), elements numbered by base-p digits of their coefficients.
  static FiniteTable polynomial_quotient(std::uint64_t p, const std::vector<std::uint64_t>& m);

  int size() const { return n_; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  bool is_unit(int a) const { return unit_[a]; }
  bool is_idempotent(int a) const { return mul(a, a) == a; }

  /// Id of the principal ideal aS; equal ids mean equal ideals.
  int ideal_id(int a) const { return ideal_of_[a]; }
  const std::vector<char>& ideal(int id) const { return ideals_[id]; }
  int ideal_count() const { return static_cast<int>(ideals_.size()); }
  bool comaximal(int a, int b) const;

  /// S / aS. `reps`, if given, receives the smallest representative of
  /// each coset.
  FiniteTable quotient(int a, std::vector<int>* reps = nullptr) const;

  std::optional<std::pair<int, int>> stable_range_counterexample() const;
  std::optional<int> clean_counterexample() const;
  /// Nonzero c and some a for which no adequate factorization exists.
  std::optional<std::pair<int, int>> adequate_counterexample() const;
  /// Comaximal (a, b) such that no S/(a + by)S satisfies `pred`.
  std::optional<std::pair<int, int>> local_counterexample(
      const std::function<bool(const FiniteTable&)>& pred) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  int n_, zero_, one_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<int> neg_;
  std::vector<char> unit_;
  std::vector<int> ideal_of_;
  std::vector<std::vector<char>> ideals_;
  mutable std::map<std::pair<int, int>, bool> comax_;
};

}  // namespace edr
