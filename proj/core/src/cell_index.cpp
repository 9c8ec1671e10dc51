#include "permcount/cell_index.hpp"

#include <ostream>
#include <string>

namespace permcount {

std::ostream& operator<<(std::ostream& os, const CellIndex& c) {
  return os << "((" << c.domain.i << "," << c.domain.j << "),(" << c.image.k
            << "," << c.image.l << "))";
}

CellIndex make_cell(Vertex i, Vertex j, Vertex k, Vertex l) {
  if (i > j) {
    std::swap(i, j);
    std::swap(k, l);
  }
  if (i == j && k > l) std::swap(k, l);
  return CellIndex{{i, j}, {k, l}};
}

Ordinal index_count(int n) {
  if (n < 4)
    throw UnsupportedSizeError("index_count: n must be at least 4, got " +
                               std::to_string(n));
  const Ordinal n2 = static_cast<Ordinal>(n) * static_cast<Ordinal>(n);
  return n2 * (n2 + 1) / 2;
}

bool structural_support(const CellIndex& cell) {
  const bool dom_eq = cell.domain.i == cell.domain.j;
  const bool img_eq = cell.image.k == cell.image.l;
  return dom_eq == img_eq;
}

IndexSpace::IndexSpace(int n) : n_(n) {
  total_ = index_count(n);  // throws for n < 4
  const Ordinal un = static_cast<Ordinal>(n);
  singleton_block_ = un * (un * (un + 1) / 2);
}

Ordinal IndexSpace::supported_count() const {
  const Ordinal un = static_cast<Ordinal>(n_);
  return un * un + un * un * (un - 1) * (un - 1) / 2;
}

void IndexSpace::validate(const CellIndex& cell) const {
  const auto [i, j] = cell.domain;
  const auto [k, l] = cell.image;
  const auto in_range = [this](Vertex v) { return v >= 1 && v <= n_; };
  if (!in_range(i) || !in_range(j) || !in_range(k) || !in_range(l))
    throw InvalidCellError("cell vertex out of [1, n]");
  if (i > j) throw InvalidCellError("domain pair must satisfy i <= j");
  if (i == j && k > l)
    throw InvalidCellError("image pair must satisfy k <= l when i == j");
}

namespace {

// Rank of (k, l), k <= l, in the lexicographic list of unordered pairs.
Ordinal tri_rank(int n, Vertex k, Vertex l) {
  const Ordinal km1 = static_cast<Ordinal>(k - 1);
  return km1 * static_cast<Ordinal>(n) - km1 * (km1 - 1) / 2 +
         static_cast<Ordinal>(l - k);
}

// Rank of (i, j), i < j, in the lexicographic list of strict pairs.
Ordinal pair_rank(int n, Vertex i, Vertex j) {
  const Ordinal im1 = static_cast<Ordinal>(i - 1);
  return im1 * static_cast<Ordinal>(n) - static_cast<Ordinal>(i) * im1 / 2 +
         static_cast<Ordinal>(j - i - 1);
}

}  // namespace

Ordinal IndexSpace::encode(const CellIndex& cell) const {
  validate(cell);
  const auto [i, j] = cell.domain;
  const auto [k, l] = cell.image;
  const Ordinal un = static_cast<Ordinal>(n_);
  if (i == j) {
    const Ordinal per_vertex = un * (un + 1) / 2;
    return static_cast<Ordinal>(i - 1) * per_vertex + tri_rank(n_, k, l);
  }
  const Ordinal image_rank =
      static_cast<Ordinal>(k - 1) * un + static_cast<Ordinal>(l - 1);
  return singleton_block_ + pair_rank(n_, i, j) * (un * un) + image_rank;
}

CellIndex IndexSpace::decode(Ordinal ordinal) const {
  if (ordinal >= total_) throw InvalidCellError("ordinal out of range");
  const Ordinal un = static_cast<Ordinal>(n_);
  if (ordinal < singleton_block_) {
    const Ordinal per_vertex = un * (un + 1) / 2;
    const Vertex i = static_cast<Vertex>(ordinal / per_vertex) + 1;
    Ordinal r = ordinal % per_vertex;
    Vertex k = 1;
    while (r >= un - static_cast<Ordinal>(k - 1)) {
      r -= un - static_cast<Ordinal>(k - 1);
      ++k;
    }
    const Vertex l = k + static_cast<Vertex>(r);
    return CellIndex{{i, i}, {k, l}};
  }
  Ordinal t = ordinal - singleton_block_;
  Ordinal p = t / (un * un);
  const Ordinal image_rank = t % (un * un);
  Vertex i = 1;
  while (p >= un - static_cast<Ordinal>(i)) {
    p -= un - static_cast<Ordinal>(i);
    ++i;
  }
  const Vertex j = i + 1 + static_cast<Vertex>(p);
  const Vertex k = static_cast<Vertex>(image_rank / un) + 1;
  const Vertex l = static_cast<Vertex>(image_rank % un) + 1;
  return CellIndex{{i, j}, {k, l}};
}

std::vector<CellIndex> IndexSpace::all_cells() const {
  std::vector<CellIndex> cells;
  cells.reserve(total_);
  for (Vertex i = 1; i <= n_; ++i)
    for (Vertex k = 1; k <= n_; ++k)
      for (Vertex l = k; l <= n_; ++l)
        cells.push_back(CellIndex{{i, i}, {k, l}});
  for (Vertex i = 1; i <= n_; ++i)
    for (Vertex j = i + 1; j <= n_; ++j)
      for (Vertex k = 1; k <= n_; ++k)
        for (Vertex l = 1; l <= n_; ++l)
          cells.push_back(CellIndex{{i, j}, {k, l}});
  return cells;
}

std::vector<Ordinal> IndexSpace::supported_ordinals() const {
  std::vector<Ordinal> out;
  out.reserve(supported_count());
  Ordinal ord = 0;
  for (Vertex i = 1; i <= n_; ++i)
    for (Vertex k = 1; k <= n_; ++k)
      for (Vertex l = k; l <= n_; ++l, ++ord)
        if (k == l) out.push_back(ord);
  for (Vertex i = 1; i <= n_; ++i)
    for (Vertex j = i + 1; j <= n_; ++j)
      for (Vertex k = 1; k <= n_; ++k)
        for (Vertex l = 1; l <= n_; ++l, ++ord)
          if (k != l) out.push_back(ord);
  return out;
}

}  // namespace permcount
