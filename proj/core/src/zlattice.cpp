#include "regkt/zlattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "regkt/error.hpp"

namespace regkt {

// ---------------------------------------------------------------------------
// SparseRow

Integer SparseRow::at(std::uint32_t col) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it == entries.end() || it->first != col) return 0;
  return it->second;
}

void SparseRow::add(std::uint32_t col, const Integer& v) { entries.emplace_back(col, v); }

void SparseRow::normalize() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::uint32_t, Integer>> out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  entries = std::move(out);
}

DenseRow SparseRow::dense(std::size_t cols) const {
  DenseRow r(cols);
  for (const auto& [c, v] : entries) r.at(c) = v;
  return r;
}

SparseRow SparseRow::from_dense(const DenseRow& row) {
  SparseRow r;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) r.entries.emplace_back(std::uint32_t(c), row[c]);
  return r;
}

SparseRow SparseRow::unit(std::uint32_t col, long v) {
  SparseRow r;
  if (v != 0) r.entries.emplace_back(col, Integer(v));
  return r;
}

SparseRow axpy(const SparseRow& a, const Integer& k, const SparseRow& b) {
  if (k == 0) return a;
  SparseRow r;
  r.entries.reserve(a.nnz() + b.nnz());
  std::size_t i = 0, j = 0;
  while (i < a.nnz() || j < b.nnz()) {
    if (j == b.nnz() || (i < a.nnz() && a.entries[i].first < b.entries[j].first)) {
      r.entries.push_back(a.entries[i++]);
    } else if (i == a.nnz() || b.entries[j].first < a.entries[i].first) {
      r.entries.emplace_back(b.entries[j].first, k * b.entries[j].second);
      ++j;
    } else {
      Integer v = a.entries[i].second + k * b.entries[j].second;
      if (v != 0) r.entries.emplace_back(a.entries[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

SparseRow operator+(const SparseRow& a, const SparseRow& b) { return axpy(a, 1, b); }
SparseRow operator-(const SparseRow& a, const SparseRow& b) { return axpy(a, -1, b); }
SparseRow scaled(const SparseRow& a, const Integer& k) { return axpy(SparseRow{}, k, a); }

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::from_dense(const DenseMatrix& m, std::size_t cols) {
  IntMatrix r(cols);
  for (const auto& row : m) r.add_row(row);
  return r;
}

void IntMatrix::add_row(SparseRow r) {
  for (const auto& e : r.entries)
    if (e.first >= cols_) throw Error(ErrorKind::InvalidGroup, "matrix row exceeds column count");
  rows_.push_back(std::move(r));
}

void IntMatrix::append(const IntMatrix& other) {
  for (const auto& r : other.rows_) add_row(r);
}

DenseMatrix IntMatrix::dense() const {
  DenseMatrix m;
  for (const auto& r : rows_) m.push_back(r.dense(cols_));
  return m;
}

std::size_t IntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.nnz();
  return n;
}

// ---------------------------------------------------------------------------
// AbelianGroupStructure

Integer AbelianGroupStructure::torsion_order() const {
  Integer o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianGroupStructure::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " x ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

AbelianGroupStructure AbelianGroupStructure::from_cyclic_orders(const std::vector<Integer>& orders) {
  const std::size_t n = orders.size();
  DenseMatrix d(n, DenseRow(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = orders[i];
  AbelianGroupStructure s;
  for (const auto& x : smith_diagonal(d, n)) {
    if (x == 0) {
      ++s.free_rank;
    } else if (x != 1) {
      s.torsion.push_back(x);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Dense helpers

DenseMatrix identity_matrix(std::size_t n) {
  DenseMatrix m(n, DenseRow(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, std::size_t inner) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  DenseMatrix r(a.size(), DenseRow(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Integer determinant(const DenseMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  DenseMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  // Bareiss fraction-free elimination.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_unimodular(const DenseMatrix& m) {
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct SmithWork {
  DenseMatrix a, u, v, vinv;
  std::size_t rows, cols;
  bool track;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (track) std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : a) std::swap(r[i], r[j]);
    if (track) {
      for (auto& r : v) std::swap(r[i], r[j]);
      std::swap(vinv[i], vinv[j]);
    }
  }
  // row i -= q * row t
  void row_sub(std::size_t i, const Integer& q, std::size_t t) {
    for (std::size_t c = 0; c < cols; ++c)
      if (a[t][c] != 0) a[i][c] -= q * a[t][c];
    if (track)
      for (std::size_t c = 0; c < rows; ++c)
        if (u[t][c] != 0) u[i][c] -= q * u[t][c];
  }
  // col j -= q * col t
  void col_sub(std::size_t j, const Integer& q, std::size_t t) {
    for (std::size_t r = 0; r < rows; ++r)
      if (a[r][t] != 0) a[r][j] -= q * a[r][t];
    if (track) {
      for (std::size_t r = 0; r < cols; ++r)
        if (v[r][t] != 0) v[r][j] -= q * v[r][t];
      for (std::size_t c = 0; c < cols; ++c)
        if (vinv[j][c] != 0) vinv[t][c] += q * vinv[j][c];
    }
  }
  void negate_row(std::size_t t) {
    for (auto& x : a[t]) x = -x;
    if (track)
      for (auto& x : u[t]) x = -x;
  }

  void run() {
    const std::size_t lim = std::min(rows, cols);
    for (std::size_t t = 0; t < lim; ++t) {
      // Pivot: least absolute value in the trailing block, first by position.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || cmpabs(a[i][j], a[pi][pj]) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] == 0) continue;
          Integer q = a[i][t] / a[t][t];
          if (q != 0) row_sub(i, q, t);
          if (a[i][t] != 0) clean = false;
        }
        if (!clean) {
          std::size_t best = t;
          for (std::size_t i = t + 1; i < rows; ++i)
            if (a[i][t] != 0 && cmpabs(a[i][t], a[best][t]) < 0) best = i;
          swap_rows(t, best);
          continue;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] == 0) continue;
          Integer q = a[t][j] / a[t][t];
          if (q != 0) col_sub(j, q, t);
          if (a[t][j] != 0) clean = false;
        }
        if (!clean) {
          std::size_t best = t;
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[t][j] != 0 && cmpabs(a[t][j], a[t][best]) < 0) best = j;
          swap_cols(t, best);
          continue;
        }
        // Divisibility: fold a row holding a non-multiple into the pivot row.
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
              bad = i;
              break;
            }
        if (bad == rows) break;
        row_sub(t, -1, bad);
      }
      if (a[t][t] < 0) negate_row(t);
    }
  }
};

SmithWork make_work(const DenseMatrix& m, std::size_t cols, bool track) {
  SmithWork w;
  w.rows = m.size();
  w.cols = cols;
  w.track = track;
  w.a = m;
  for (auto& r : w.a) r.resize(cols);
  if (track) {
    w.u = identity_matrix(w.rows);
    w.v = identity_matrix(cols);
    w.vinv = identity_matrix(cols);
  }
  return w;
}

}  // namespace

SmithForm smith_normal_form(const DenseMatrix& m, std::size_t cols) {
  SmithWork w = make_work(m, cols, true);
  w.run();
  SmithForm s;
  for (std::size_t i = 0; i < std::min(w.rows, cols); ++i) s.diagonal.push_back(w.a[i][i]);
  s.S = std::move(w.a);
  s.U = std::move(w.u);
  s.V = std::move(w.v);
  return s;
}

std::vector<Integer> smith_diagonal(DenseMatrix m, std::size_t cols) {
  SmithWork w = make_work(m, cols, false);
  w.run();
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(w.rows, cols); ++i) d.push_back(w.a[i][i]);
  return d;
}

namespace {

// SNF that also returns V^-1; used by Subquotient.
void smith_with_inverse(const DenseMatrix& m, std::size_t cols, std::vector<Integer>& diag,
                        DenseMatrix& v, DenseMatrix& vinv) {
  SmithWork w = make_work(m, cols, true);
  w.run();
  diag.assign(cols, 0);
  for (std::size_t i = 0; i < std::min(w.rows, cols); ++i) diag[i] = w.a[i][i];
  v = std::move(w.v);
  vinv = std::move(w.vinv);
}

}  // namespace

// ---------------------------------------------------------------------------
// Echelon lattices

bool EchelonLattice::insert(DenseRow v) {
  v.resize(cols_);
  std::size_t c = 0;
  for (;;) {
    while (c < cols_ && v[c] == 0) ++c;
    if (c == cols_) return false;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    std::size_t k = std::size_t(it - pivots_.begin());
    if (it == pivots_.end() || *it != c) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      rows_.insert(rows_.begin() + std::ptrdiff_t(k), std::move(v));
      pivots_.insert(it, c);
      return true;
    }
    DenseRow& h = rows_[k];
    if (mpz_divisible_p(v[c].get_mpz_t(), h[c].get_mpz_t())) {
      Integer q = v[c] / h[c];
      for (std::size_t j = c; j < cols_; ++j)
        if (h[j] != 0) v[j] -= q * h[j];
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h[c].get_mpz_t(), v[c].get_mpz_t());
    Integer a = h[c] / g, b = v[c] / g;
    for (std::size_t j = c; j < cols_; ++j) {
      Integer nh = s * h[j] + t * v[j];
      Integer nv = a * v[j] - b * h[j];
      h[j] = std::move(nh);
      v[j] = std::move(nv);
    }
    if (h[c] < 0)
      for (auto& x : h) x = -x;
  }
}

std::optional<DenseRow> EchelonLattice::express(DenseRow v) const {
  v.resize(cols_);
  DenseRow x(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::size_t c = pivots_[k];
    for (std::size_t j = (k ? pivots_[k - 1] + 1 : 0); j < c; ++j)
      if (v[j] != 0) return std::nullopt;
    if (v[c] == 0) continue;
    if (!mpz_divisible_p(v[c].get_mpz_t(), rows_[k][c].get_mpz_t())) return std::nullopt;
    x[k] = v[c] / rows_[k][c];
    for (std::size_t j = c; j < cols_; ++j)
      if (rows_[k][j] != 0) v[j] -= x[k] * rows_[k][j];
  }
  for (const auto& e : v)
    if (e != 0) return std::nullopt;
  return x;
}

bool EchelonLattice::contains(DenseRow v) const { return express(std::move(v)).has_value(); }

DenseMatrix EchelonLattice::hermite() const {
  DenseMatrix h = rows_;
  for (std::size_t k = 0; k < h.size(); ++k) {
    std::size_t c = pivots_[k];
    for (std::size_t i = 0; i < k; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[k][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) h[i][j] -= q * h[k][j];
    }
  }
  return h;
}

DenseMatrix hermite_normal_form(const DenseMatrix& m, std::size_t cols) {
  EchelonLattice l(cols);
  for (const auto& r : m) l.insert(r);
  return l.hermite();
}

DenseMatrix left_kernel(const DenseMatrix& m, std::size_t cols) {
  const std::size_t r = m.size();
  EchelonLattice l(cols + r);
  for (std::size_t i = 0; i < r; ++i) {
    DenseRow row = m[i];
    row.resize(cols + r);
    row[cols + i] = 1;
    l.insert(std::move(row));
  }
  DenseMatrix ker;
  for (const auto& row : l.hermite()) {
    bool zero_head = std::all_of(row.begin(), row.begin() + std::ptrdiff_t(cols),
                                 [](const Integer& x) { return x == 0; });
    if (zero_head) ker.emplace_back(row.begin() + std::ptrdiff_t(cols), row.end());
  }
  return ker;
}

// ---------------------------------------------------------------------------
// Sparse unit-pivot elimination

namespace {

struct SparseElimination {
  struct Rule {
    std::uint32_t col;
    int sign;
    SparseRow row;
  };
  std::vector<Rule> rules;
  std::vector<SparseRow> rest;
  std::vector<bool> eliminated;
};

SparseElimination eliminate(std::vector<SparseRow> rows, std::size_t cols) {
  SparseElimination out;
  out.eliminated.assign(cols, false);
  std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });
  const std::size_t n = rows.size();
  std::vector<bool> alive(n, true);
  std::vector<std::vector<std::uint32_t>> col_rows(cols);
  std::vector<std::size_t> col_count(cols, 0);
  std::size_t live_nnz = 0, live_rows = n, live_cols = cols;
  for (std::uint32_t i = 0; i < n; ++i)
    for (const auto& [c, v] : rows[i].entries) {
      col_rows[c].push_back(i);
      ++col_count[c];
      ++live_nnz;
    }

  for (;;) {
    // Dense fallback once fill-in passes 30% of a block small enough to hold densely.
    if (live_rows > 0 && live_cols <= 256 &&
        double(live_nnz) > 0.3 * double(live_rows) * double(live_cols))
      break;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::uint32_t pr = 0, pc = 0;
    int psign = 0;
    for (std::uint32_t i = 0; i < n && best_cost > 0; ++i) {
      if (!alive[i]) continue;
      const std::size_t len = rows[i].nnz();
      for (const auto& [c, v] : rows[i].entries) {
        if (v != 1 && v != -1) continue;
        std::size_t cost = (len - 1) * (col_count[c] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pr = i;
          pc = c;
          psign = v > 0 ? 1 : -1;
          if (cost == 0) break;
        }
      }
    }
    if (psign == 0) break;

    const SparseRow pivot = rows[pr];
    auto touched = std::move(col_rows[pc]);
    col_rows[pc].clear();
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::uint32_t i : touched) {
      if (i == pr || !alive[i]) continue;
      Integer a = rows[i].at(pc);
      if (a == 0) continue;
      for (const auto& [c, v] : rows[i].entries) --col_count[c];
      live_nnz -= rows[i].nnz();
      SparseRow nr = axpy(rows[i], -a * psign, pivot);
      std::vector<std::uint32_t> old_cols;
      for (const auto& e : rows[i].entries) old_cols.push_back(e.first);
      for (const auto& [c, v] : nr.entries) {
        ++col_count[c];
        if (!std::binary_search(old_cols.begin(), old_cols.end(), c)) col_rows[c].push_back(i);
      }
      live_nnz += nr.nnz();
      rows[i] = std::move(nr);
      if (rows[i].empty()) {
        alive[i] = false;
        --live_rows;
      }
    }
    for (const auto& [c, v] : pivot.entries) --col_count[c];
    live_nnz -= pivot.nnz();
    alive[pr] = false;
    --live_rows;
    --live_cols;
    out.eliminated[pc] = true;
    out.rules.push_back({pc, psign, pivot});
  }
  for (std::uint32_t i = 0; i < n; ++i)
    if (alive[i] && !rows[i].empty()) out.rest.push_back(std::move(rows[i]));
  return out;
}

DenseRow restrict_to(const SparseRow& v, const std::vector<std::int64_t>& pos, std::size_t m) {
  DenseRow d(m);
  for (const auto& [c, x] : v.entries) {
    if (pos[c] < 0) throw Error(ErrorKind::InvalidGroup, "eliminated column survived substitution");
    d[std::size_t(pos[c])] = x;
  }
  return d;
}

}  // namespace

EliminationResult eliminate_unit_pivots(const IntMatrix& m) {
  auto e = eliminate(m.row_list(), m.cols());
  EliminationResult r;
  std::vector<std::int64_t> pos(m.cols(), -1);
  for (std::uint32_t c = 0; c < m.cols(); ++c)
    if (!e.eliminated[c]) {
      pos[c] = std::int64_t(r.survivors.size());
      r.survivors.push_back(c);
    }
  for (const auto& row : e.rest) r.remainder.push_back(restrict_to(row, pos, r.survivors.size()));
  r.pivots = e.rules.size();
  return r;
}

AbelianGroupStructure cokernel_structure(const IntMatrix& m) {
  auto e = eliminate_unit_pivots(m);
  const std::size_t k = e.survivors.size();
  EchelonLattice l(k);
  for (auto& r : e.remainder) l.insert(std::move(r));
  AbelianGroupStructure s;
  s.free_rank = k - l.rank();
  for (const auto& d : smith_diagonal(l.rows(), k)) {
    if (d == 0) continue;  // rank-deficient columns already counted as free
    if (d != 1) s.torsion.push_back(d);
  }
  return s;
}

AbelianGroupStructure subgroup_in_quotient(const IntMatrix& relations, const IntMatrix& subgens) {
  return Subquotient(relations, subgens).structure();
}

// ---------------------------------------------------------------------------
// Subquotient

Subquotient::Subquotient(const IntMatrix& relations, const IntMatrix& generators)
    : cols_(relations.cols()) {
  if (generators.cols() != cols_) throw Error(ErrorKind::InvalidGroup, "column count mismatch");
  auto e = eliminate(relations.row_list(), cols_);
  for (auto& r : e.rules) rules_.push_back({r.col, r.sign, std::move(r.row)});
  survivor_pos_.assign(cols_, -1);
  for (std::uint32_t c = 0; c < cols_; ++c)
    if (!e.eliminated[c]) {
      survivor_pos_[c] = std::int64_t(survivors_.size());
      survivors_.push_back(c);
    }
  const std::size_t m = survivors_.size();
  numerator_ = EchelonLattice(m);
  for (const auto& g : generators.row_list()) numerator_.insert(reduce_to_survivors(g));
  DenseMatrix rest;
  for (const auto& r : e.rest) {
    DenseRow d = restrict_to(r, survivor_pos_, m);
    numerator_.insert(d);
    rest.push_back(std::move(d));
  }
  const std::size_t r1 = numerator_.rank();

  // Relations in numerator coordinates, reduced to a basis before the SNF.
  EchelonLattice rel(r1);
  for (auto& d : rest) {
    auto x = numerator_.express(std::move(d));
    if (!x) throw Error(ErrorKind::InvalidGroup, "relation outside the numerator lattice");
    rel.insert(std::move(*x));
  }
  DenseMatrix vinv;
  smith_with_inverse(rel.rows(), r1, diag_, v_, vinv);

  component_of_.assign(r1, std::size_t(-1));
  std::vector<Integer> free_orders;
  for (std::size_t i = 0; i < r1; ++i) {
    if (diag_[i] == 1) continue;
    component_of_[i] = moduli_.size();
    moduli_.push_back(diag_[i]);
    DenseRow lift_s(m);
    for (std::size_t k = 0; k < r1; ++k) {
      if (vinv[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (numerator_.rows()[k][j] != 0) lift_s[j] += vinv[i][k] * numerator_.rows()[k][j];
    }
    SparseRow lift;
    for (std::size_t j = 0; j < m; ++j)
      if (lift_s[j] != 0) lift.entries.emplace_back(survivors_[j], lift_s[j]);
    lifts_.push_back(std::move(lift));
  }
  // SNF places units first, then torsion in increasing order, then zeros, so
  // component order is already torsion-then-free.
  for (const auto& d : moduli_) {
    if (d == 0) {
      ++structure_.free_rank;
    } else {
      structure_.torsion.push_back(d);
    }
  }
}

DenseRow Subquotient::reduce_to_survivors(const SparseRow& v) const {
  SparseRow w = v;
  for (const auto& r : rules_) {
    if (w.empty()) break;
    Integer a = w.at(r.col);
    if (a != 0) w = axpy(w, -a * r.sign, r.row);
  }
  return restrict_to(w, survivor_pos_, survivors_.size());
}

bool Subquotient::in_numerator(const SparseRow& v) const {
  return numerator_.contains(reduce_to_survivors(v));
}

std::vector<Integer> Subquotient::coords(const SparseRow& v) const {
  auto y = numerator_.express(reduce_to_survivors(v));
  if (!y) throw Error(ErrorKind::NotMember, "vector is not in the numerator lattice");
  const std::size_t r1 = numerator_.rank();
  std::vector<Integer> out(moduli_.size());
  for (std::size_t i = 0; i < r1; ++i) {
    if (component_of_[i] == std::size_t(-1)) continue;
    Integer s = 0;
    for (std::size_t k = 0; k < r1; ++k)
      if ((*y)[k] != 0 && v_[k][i] != 0) s += (*y)[k] * v_[k][i];
    const Integer& d = diag_[i];
    if (d != 0) mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
    out[component_of_[i]] = std::move(s);
  }
  return out;
}

bool Subquotient::is_zero(const SparseRow& v) const {
  for (const auto& x : coords(v))
    if (x != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool is_injective_map(const std::vector<Integer>& source_orders, const DenseMatrix& phi,
                      const std::vector<Integer>& target_orders) {
  const std::size_t k = source_orders.size(), kt = target_orders.size();
  if (phi.size() != k) throw Error(ErrorKind::InvalidGroup, "map has wrong number of rows");
  DenseMatrix stacked;
  for (const auto& r : phi) {
    DenseRow row = r;
    row.resize(kt);
    stacked.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < kt; ++j) {
    if (target_orders[j] == 0) continue;
    DenseRow row(kt);
    row[j] = target_orders[j];
    stacked.push_back(std::move(row));
  }
  for (const auto& x : left_kernel(stacked, kt)) {
    for (std::size_t i = 0; i < k; ++i) {
      if (source_orders[i] == 0) {
        if (x[i] != 0) return false;
      } else if (!mpz_divisible_p(x[i].get_mpz_t(), source_orders[i].get_mpz_t())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace regkt
