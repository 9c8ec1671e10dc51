#pragma once

#include <cstdint>
#include <vector>

#include "permcount/cell_index.hpp"
#include "permcount/exact.hpp"

namespace permcount {

/// Dense vector of exact rationals over the cell index space.
class ExactVector {
 public:
  ExactVector() = default;
  explicit ExactVector(Ordinal dim) : entries_(dim) {}

  Ordinal dim() const { return entries_.size(); }
  ExactRational& operator[](Ordinal i) { return entries_[i]; }
  const ExactRational& operator[](Ordinal i) const { return entries_[i]; }

  bool is_zero() const;
  std::size_t nonzero_count() const;

  friend bool operator==(const ExactVector& a, const ExactVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<ExactRational> entries_;
};

ExactRational inner_product(const ExactVector& a, const ExactVector& b);

}  // namespace permcount
