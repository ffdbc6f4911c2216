#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace regkt {

using Integer = mpz_class;
using DenseRow = std::vector<Integer>;
using DenseMatrix = std::vector<DenseRow>;

/// Sparse integer vector: (column, value) pairs, sorted by column, no zeros.
struct SparseRow {
  std::vector<std::pair<std::uint32_t, Integer>> entries;

  bool empty() const noexcept { return entries.empty(); }
  std::size_t nnz() const noexcept { return entries.size(); }
  Integer at(std::uint32_t col) const;
  void add(std::uint32_t col, const Integer& v);  ///< for building; call normalize() after
  void normalize();                               ///< sort, merge duplicates, drop zeros
  DenseRow dense(std::size_t cols) const;
  static SparseRow from_dense(const DenseRow& row);
  static SparseRow unit(std::uint32_t col, long v = 1);

  friend bool operator==(const SparseRow& a, const SparseRow& b) { return a.entries == b.entries; }
};

/// a + k * b
SparseRow axpy(const SparseRow& a, const Integer& k, const SparseRow& b);
SparseRow operator+(const SparseRow& a, const SparseRow& b);
SparseRow operator-(const SparseRow& a, const SparseRow& b);
SparseRow scaled(const SparseRow& a, const Integer& k);

/// Row-sparse integer matrix with a fixed column count.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t cols) : cols_(cols) {}
  static IntMatrix from_dense(const DenseMatrix& m, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const SparseRow& row(std::size_t i) const { return rows_[i]; }
  const std::vector<SparseRow>& row_list() const noexcept { return rows_; }
  void add_row(SparseRow r);
  void add_row(const DenseRow& r) { add_row(SparseRow::from_dense(r)); }
  void append(const IntMatrix& other);
  Integer at(std::size_t r, std::size_t c) const { return rows_[r].at(std::uint32_t(c)); }
  DenseMatrix dense() const;
  std::size_t nnz() const;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

/// Z^free_rank x Z/t1 x ... x Z/tk with t1 | t2 | ... and every ti >= 2.
struct AbelianGroupStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const noexcept { return free_rank == 0; }
  /// Order of the torsion part.
  Integer torsion_order() const;
  /// "0", "Z", "Z^2 x Z/2 x Z/4", ...
  std::string to_string() const;
  /// Builds the canonical form from any list of cyclic orders (0 = infinite).
  static AbelianGroupStructure from_cyclic_orders(const std::vector<Integer>& orders);

  friend bool operator==(const AbelianGroupStructure& a, const AbelianGroupStructure& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

struct SmithForm {
  DenseMatrix S, U, V;  ///< U * M * V = S
  std::vector<Integer> diagonal;
};

DenseMatrix identity_matrix(std::size_t n);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, std::size_t inner);
Integer determinant(const DenseMatrix& m);
bool is_unimodular(const DenseMatrix& m);

/// Smith normal form with transforms. Pivot is the entry of least absolute
/// value, ties broken by position.
SmithForm smith_normal_form(const DenseMatrix& m, std::size_t cols);
/// Invariant factors only (no transforms), including zeros up to min(rows, cols).
std::vector<Integer> smith_diagonal(DenseMatrix m, std::size_t cols);

/// Row Hermite normal form: nonzero rows only, pivots positive, entries above
/// a pivot reduced into [0, pivot).
DenseMatrix hermite_normal_form(const DenseMatrix& m, std::size_t cols);

/// Echelon basis of a lattice, built by inserting generators one at a time.
class EchelonLattice {
 public:
  explicit EchelonLattice(std::size_t cols) : cols_(cols) {}
  /// Adds v to the generating set. Returns true if the lattice grew.
  bool insert(DenseRow v);
  bool contains(DenseRow v) const;
  /// Coefficients of v in rows(); nullopt if v is not in the lattice.
  std::optional<DenseRow> express(DenseRow v) const;
  const DenseMatrix& rows() const noexcept { return rows_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  /// Reduced (Hermite) form of the current basis.
  DenseMatrix hermite() const;

 private:
  std::size_t cols_;
  DenseMatrix rows_;  // rows_[i] has pivot column pivots_[i], strictly increasing
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : x * M = 0}.
DenseMatrix left_kernel(const DenseMatrix& m, std::size_t cols);

/// Z^cols / rowspace(M).
AbelianGroupStructure cokernel_structure(const IntMatrix& m);

/// Subgroup of Z^cols / rowspace(relations) generated by the rows of subgens.
AbelianGroupStructure subgroup_in_quotient(const IntMatrix& relations, const IntMatrix& subgens);

/**
 * (<S> + <R>) / <R> for R = relations, S = generators, with explicit
 * coordinates. Components are numbered torsion first (increasing order), then
 * free. Large sparse relation systems are first shrunk by eliminating unit
 * pivots (Markowitz order); the remaining columns are handled densely.
 */
class Subquotient {
 public:
  Subquotient(const IntMatrix& relations, const IntMatrix& generators);

  const AbelianGroupStructure& structure() const noexcept { return structure_; }
  std::size_t components() const noexcept { return moduli_.size(); }
  /// Order of each component; 0 for a free component.
  const std::vector<Integer>& moduli() const noexcept { return moduli_; }

  bool in_numerator(const SparseRow& v) const;
  bool is_zero(const SparseRow& v) const;
  /// Coordinates of v (reduced mod the component orders). Throws NotMember if
  /// v is not in <S> + <R>.
  std::vector<Integer> coords(const SparseRow& v) const;
  /// A vector of Z^cols representing component i.
  const SparseRow& lift(std::size_t i) const { return lifts_.at(i); }
  std::size_t eliminated_columns() const noexcept { return rules_.size(); }
  std::size_t cols() const noexcept { return cols_; }

 private:
  std::size_t cols_ = 0;
  // Substitutions applied in order: v -= v[col] * sign * row.
  struct Rule {
    std::uint32_t col;
    int sign;
    SparseRow row;
  };
  std::vector<Rule> rules_;
  std::vector<std::uint32_t> survivors_;   // survivor column -> original column
  std::vector<std::int64_t> survivor_pos_;  // original column -> survivor index or -1
  EchelonLattice numerator_{0};            // basis of L1 in survivor coordinates
  DenseMatrix v_;                          // SNF column transform on L1 coordinates
  std::vector<Integer> diag_;              // SNF diagonal, one per L1 coordinate
  std::vector<std::size_t> component_of_;  // L1 coordinate -> component or npos
  std::vector<Integer> moduli_;
  std::vector<SparseRow> lifts_;
  AbelianGroupStructure structure_;

  DenseRow reduce_to_survivors(const SparseRow& v) const;
};

/// Result of shrinking Z^cols / rowspace(M) by unit-pivot elimination.
struct EliminationResult {
  std::vector<std::uint32_t> survivors;
  DenseMatrix remainder;  ///< relations restricted to survivors
  std::size_t pivots = 0;
};
EliminationResult eliminate_unit_pivots(const IntMatrix& m);

/// True iff the homomorphism Z^k/D -> Z^k'/D' given on generators by the
/// rows of phi is injective. D, D' are diagonal, given as component orders
/// (0 for free components).
bool is_injective_map(const std::vector<Integer>& source_orders, const DenseMatrix& phi,
                      const std::vector<Integer>& target_orders);

}  // namespace regkt
