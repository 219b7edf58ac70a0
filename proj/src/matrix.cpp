#include "qdc/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace qdc {

SparseMat SparseMat::identity(long n) {
  SparseMat m(n, n);
  for (long i = 0; i < n; ++i) m.row[i].emplace_back(i, CycNum(1));
  return m;
}

void SparseMat::add_entry(long r, long c, const CycNum& v) {
  if (v.is_zero()) return;
  auto& rw = row[r];
  auto it = std::lower_bound(
      rw.begin(), rw.end(), c,
      [](const std::pair<long, CycNum>& e, long col) { return e.first < col; });
  if (it != rw.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) rw.erase(it);
  } else {
    rw.insert(it, {c, v});
  }
}

long SparseMat::nnz() const {
  long n = 0;
  for (const auto& r : row) n += static_cast<long>(r.size());
  return n;
}

CycMatrix SparseMat::to_dense() const {
  CycMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (const auto& [c, v] : row[i]) m.at(i, c) = v;
  return m;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  assert(a.cols == b.rows);
  SparseMat out(a.rows, b.cols);
  std::map<long, CycNum> acc;
  for (long i = 0; i < a.rows; ++i) {
    acc.clear();
    for (const auto& [k, av] : a.row[i]) {
      for (const auto& [j, bv] : b.row[k]) {
        auto it = acc.find(j);
        if (it == acc.end())
          acc.emplace(j, av * bv);
        else
          it->second += av * bv;
      }
    }
    auto& rw = out.row[i];
    rw.reserve(acc.size());
    for (auto& [j, v] : acc)
      if (!v.is_zero()) rw.emplace_back(j, std::move(v));
  }
  return out;
}

SparseMat& SparseMat::axpy(const CycNum& alpha, const SparseMat& other) {
  assert(rows == other.rows && cols == other.cols);
  for (long i = 0; i < rows; ++i) row[i] = row_axpy(row[i], alpha, other.row[i]);
  return *this;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows == o.rows && cols == o.cols && row == o.row;
}

SparseRow row_axpy(const SparseRow& r1, const CycNum& alpha,
                   const SparseRow& r2) {
  SparseRow out;
  out.reserve(r1.size() + r2.size());
  size_t i = 0, j = 0;
  while (i < r1.size() || j < r2.size()) {
    if (j == r2.size() || (i < r1.size() && r1[i].first < r2[j].first)) {
      out.push_back(r1[i++]);
    } else if (i == r1.size() || r2[j].first < r1[i].first) {
      CycNum v = alpha * r2[j].second;
      if (!v.is_zero()) out.emplace_back(r2[j].first, std::move(v));
      ++j;
    } else {
      CycNum v = r1[i].second + alpha * r2[j].second;
      if (!v.is_zero()) out.emplace_back(r1[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

CycMatrix CycMatrix::identity(long n) {
  CycMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
  return m;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  CycMatrix out = a;
  for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
  return out;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  CycMatrix out = a;
  for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
  return out;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix out = *this;
  for (auto& v : out.a_) v = -v;
  return out;
}

CycMatrix operator*(const CycNum& s, const CycMatrix& m) {
  CycMatrix out = m;
  for (auto& v : out.a_) v = s * v;
  return out;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  assert(a.cols_ == b.rows_);
  CycMatrix out(a.rows_, b.cols_);
  for (long i = 0; i < a.rows_; ++i) {
    for (long k = 0; k < a.cols_; ++k) {
      const CycNum& av = a.at(i, k);
      if (av.is_zero()) continue;
      for (long j = 0; j < b.cols_; ++j) {
        const CycNum& bv = b.at(k, j);
        if (!bv.is_zero()) out.at(i, j) += av * bv;
      }
    }
  }
  return out;
}

bool CycMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
  CycMatrix out(rows_ * o.rows_, cols_ * o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      const CycNum& v = at(i, j);
      if (v.is_zero()) continue;
      for (long k = 0; k < o.rows_; ++k)
        for (long l = 0; l < o.cols_; ++l) {
          const CycNum& w = o.at(k, l);
          if (!w.is_zero()) out.at(i * o.rows_ + k, j * o.cols_ + l) = v * w;
        }
    }
  return out;
}

SparseMat CycMatrix::to_sparse() const {
  SparseMat m(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) m.row[i].emplace_back(j, at(i, j));
  return m;
}

bool EchelonForm::is_pivot(long col) const {
  return std::binary_search(pivots.begin(), pivots.end(), col);
}

bool EchelonForm::reduce(SparseRow& v) const {
  for (size_t i = 0; i < pivots.size(); ++i) {
    auto it = std::lower_bound(
        v.begin(), v.end(), pivots[i],
        [](const std::pair<long, CycNum>& e, long col) { return e.first < col; });
    if (it == v.end() || it->first != pivots[i]) continue;
    v = row_axpy(v, -it->second, rows[i]);
  }
  return v.empty();
}

// Gauss-Jordan with leftmost-column, first-row pivot selection. Division by
// the pivot happens as we go; the output is the (unique) RREF either way.
EchelonForm rref(SparseMat m) {
  EchelonForm e;
  e.cols = m.cols;

  // Rows that still have no pivot, in original order.
  std::vector<long> active(m.row.size());
  for (size_t i = 0; i < active.size(); ++i) active[i] = static_cast<long>(i);

  // Queue of pivot candidates per column is implicit: scan active rows by
  // their leading column.
  while (true) {
    long best_col = -1, best_row = -1;
    for (long idx : active) {
      if (m.row[idx].empty()) continue;
      long lead = m.row[idx].front().first;
      if (best_col == -1 || lead < best_col) {
        best_col = lead;
        best_row = idx;
      }
    }
    if (best_col == -1) break;

    SparseRow piv = std::move(m.row[best_row]);
    m.row[best_row].clear();
    CycNum inv = piv.front().second.inverse();
    if (!inv.is_one())
      for (auto& [c, v] : piv) v = inv * v;

    // Clear the pivot column from every other stored row.
    for (long idx : active) {
      auto& r = m.row[idx];
      if (r.empty()) continue;
      auto it = std::lower_bound(r.begin(), r.end(), best_col,
                                 [](const std::pair<long, CycNum>& en,
                                    long col) { return en.first < col; });
      if (it != r.end() && it->first == best_col)
        r = row_axpy(r, -it->second, piv);
    }
    for (size_t i = 0; i < e.rows.size(); ++i) {
      auto& r = e.rows[i];
      auto it = std::lower_bound(r.begin(), r.end(), best_col,
                                 [](const std::pair<long, CycNum>& en,
                                    long col) { return en.first < col; });
      if (it != r.end() && it->first == best_col)
        r = row_axpy(r, -it->second, piv);
    }

    e.pivots.push_back(best_col);
    e.rows.push_back(std::move(piv));
    active.erase(std::find(active.begin(), active.end(), best_row));
  }

  // Sort by pivot column (pivots are discovered in increasing column order
  // already, but keep this robust).
  std::vector<size_t> order(e.pivots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return e.pivots[a] < e.pivots[b]; });
  EchelonForm out;
  out.cols = e.cols;
  out.rank = static_cast<long>(e.pivots.size());
  for (size_t i : order) {
    out.pivots.push_back(e.pivots[i]);
    out.rows.push_back(std::move(e.rows[i]));
  }
  return out;
}

EchelonForm rref(const CycMatrix& m) { return rref(m.to_sparse()); }

long mat_rank(const CycMatrix& m) { return rref(m).rank; }
long mat_rank(SparseMat m) { return rref(std::move(m)).rank; }

std::vector<SparseRow> kernel_basis(const EchelonForm& e) {
  std::vector<SparseRow> basis;
  for (long f = 0; f < e.cols; ++f) {
    if (e.is_pivot(f)) continue;
    SparseRow v;
    for (size_t i = 0; i < e.pivots.size(); ++i) {
      auto it = std::lower_bound(e.rows[i].begin(), e.rows[i].end(), f,
                                 [](const std::pair<long, CycNum>& en,
                                    long col) { return en.first < col; });
      if (it != e.rows[i].end() && it->first == f)
        v.emplace_back(e.pivots[i], -it->second);
    }
    v.emplace_back(f, CycNum(1));
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

CycMatrix mat_kernel(const CycMatrix& m) {
  EchelonForm e = rref(m);
  auto basis = kernel_basis(e);
  CycMatrix k(m.cols(), static_cast<long>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (const auto& [r, v] : basis[j]) k.at(r, static_cast<long>(j)) = v;
  return k;
}

}  // namespace qdc
