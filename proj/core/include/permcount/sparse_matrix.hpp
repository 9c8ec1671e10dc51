#pragma once

#include <cstdint>
#include <vector>

#include "permcount/cell_index.hpp"
#include "permcount/exact.hpp"
#include "permcount/exact_vector.hpp"

namespace permcount {

/// One stored upper-triangle entry, row <= col.
struct TripletEntry {
  Ordinal row = 0;
  Ordinal col = 0;
  ExactInt value;
  friend bool operator==(const TripletEntry&, const TripletEntry&) = default;
};

/// Exact-integer symmetric sparse matrix over the cell index space.
/// Only the upper triangle is stored; each stored entry defines both
/// mirror positions. Immutable once built; safe for concurrent reads.
///
/// Construction validates the type invariants: entries sorted by
/// (row, col) with row <= col, all values nonzero and drawn from
/// {(n-4)!, (n-3)!, (n-2)!, (n-1)!}.
class SymSparseMatrix {
 public:
  SymSparseMatrix(int n, std::vector<TripletEntry> upper);

  int n() const { return n_; }
  Ordinal dim() const { return dim_; }
  std::size_t nnz() const { return upper_.size(); }
  const std::vector<TripletEntry>& entries() const { return upper_; }

  /// Mirrored lookup; zero when the pair is not stored.
  ExactInt entry(Ordinal r, Ordinal c) const;

  /// Count of rows holding at least one nonzero (in either triangle).
  std::size_t nonzero_row_count() const;

  ExactInt trace() const;
  /// Sum of squares over the full (mirrored) matrix; equals tr(B^T B).
  ExactInt frobenius_sum() const;

  /// Row r as (col, value) pairs over the full matrix, cols increasing.
  std::vector<std::pair<Ordinal, const ExactInt*>> full_row(Ordinal r) const;

  friend bool operator==(const SymSparseMatrix& a, const SymSparseMatrix& b) {
    return a.n_ == b.n_ && a.upper_ == b.upper_;
  }

 private:
  int n_;
  Ordinal dim_;
  std::vector<TripletEntry> upper_;
  // CSR over the mirrored matrix: adj_[start_[r]..start_[r+1]) lists
  // (col, index into upper_) for row r, cols increasing.
  std::vector<std::pair<Ordinal, std::uint32_t>> adj_;
  std::vector<std::uint64_t> start_;
};

/// Exact product using the symmetric storage.
ExactVector matvec(const SymSparseMatrix& m, const ExactVector& v);

ExactInt row_sum(const SymSparseMatrix& m, const IndexSpace& space,
                 const CellIndex& row);

/// All row sums in one pass over the stored entries.
std::vector<ExactInt> row_sums(const SymSparseMatrix& m);

}  // namespace permcount
