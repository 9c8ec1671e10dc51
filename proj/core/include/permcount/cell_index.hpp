#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "permcount/errors.hpp"

namespace permcount {

using Ordinal = std::uint64_t;
using Vertex = int;  // 1-based, matching the usual convention for [n]

/// Unordered pair of domain points, stored with i <= j (i == j allowed).
struct DomainPair {
  Vertex i = 1;
  Vertex j = 1;
  friend bool operator==(const DomainPair&, const DomainPair&) = default;
};

/// Image pair. Ordered when the owning cell's domain has i != j,
/// unordered (k <= l) when i == j.
struct ImagePair {
  Vertex k = 1;
  Vertex l = 1;
  friend bool operator==(const ImagePair&, const ImagePair&) = default;
};

/// One coordinate of the matrix index space: min(i,j) maps to k and
/// max(i,j) maps to l.
struct CellIndex {
  DomainPair domain;
  ImagePair image;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

std::ostream& operator<<(std::ostream&, const CellIndex&);

/// Builds the cell for the constraint pair {i -> k, j -> l}, swapping
/// both sides if i > j so the stored domain is canonical.
CellIndex make_cell(Vertex i, Vertex j, Vertex k, Vertex l);

/// (n^4 + n^2) / 2. Throws UnsupportedSizeError for n < 4.
Ordinal index_count(int n);

/// True iff the row/column of this cell can hold nonzero entries:
/// singleton domain with equal images, or distinct domain with distinct
/// images.
bool structural_support(const CellIndex& cell);

/// Canonical bijection between valid cells and ordinals 0..total-1.
/// Layout: all i == j cells first in lexicographic (i, k, l) order with
/// k <= l, then all i < j cells in lexicographic (i, j, k, l) order with
/// (k, l) running over ordered pairs.
class IndexSpace {
 public:
  explicit IndexSpace(int n);

  int n() const { return n_; }
  Ordinal total() const { return total_; }

  /// n^2 singleton cells plus n^2 (n-1)^2 / 2 ordered-image cells.
  Ordinal supported_count() const;

  /// Throws InvalidCellError unless the cell is valid for this n.
  void validate(const CellIndex& cell) const;

  Ordinal encode(const CellIndex& cell) const;
  CellIndex decode(Ordinal ordinal) const;

  /// All cells in canonical ordinal order.
  std::vector<CellIndex> all_cells() const;

  /// Ordinals of structurally supported cells, increasing.
  std::vector<Ordinal> supported_ordinals() const;

 private:
  int n_;
  Ordinal singleton_block_;  // count of i == j cells: n * n(n+1)/2
  Ordinal total_;
};

}  // namespace permcount
