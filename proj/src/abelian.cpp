// abelian.cpp
#include "relpres/abelian.hpp"

#include <algorithm>

#include "relpres/rewriting.hpp"

namespace relpres {

namespace {

int rows(const ZMat& m) { return static_cast<int>(m.size()); }
int cols(const ZMat& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

ZMat identity(int n) {
  ZMat id(n, ZVec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

void swap_rows(ZMat& m, int i, int j) { std::swap(m[i], m[j]); }
void swap_cols(ZMat& m, int i, int j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}
void add_row(ZMat& m, int dst, int src, const mpz_class& k) {
  for (int c = 0; c < cols(m); ++c) m[dst][c] += k * m[src][c];
}
void add_col(ZMat& m, int dst, int src, const mpz_class& k) {
  for (auto& row : m) row[dst] += k * row[src];
}
void negate_row(ZMat& m, int i) {
  for (auto& x : m[i]) x = -x;
}
void negate_col(ZMat& m, int i) {
  for (auto& row : m) row[i] = -row[i];
}

}  // namespace

SmithForm smith_normal_form(const ZMat& m_in) {
  SmithForm out;
  ZMat d = m_in;
  const int r = rows(d), c = cols(d);
  out.v = identity(c);
  int t = 0;
  while (t < r && t < c) {
    // find a nonzero pivot with least absolute value in the remaining block
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (d[i][j] != 0) {
          mpz_class a = abs(d[i][j]);
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;  // remaining block is zero
    swap_rows(d, t, pi);
    swap_cols(d, t, pj);
    swap_cols(out.v, t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < r; ++i) {
        if (d[i][t] == 0) continue;
        mpz_class q = d[i][t] / d[t][t];
        add_row(d, i, t, -q);
        if (d[i][t] != 0) {  // remainder smaller than pivot: swap up
          swap_rows(d, t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (d[t][j] == 0) continue;
        mpz_class q = d[t][j] / d[t][t];
        add_col(d, j, t, -q);
        add_col(out.v, j, t, -q);
        if (d[t][j] != 0) {
          swap_cols(d, t, j);
          swap_cols(out.v, t, j);
          dirty = true;
        }
      }
    }
    if (d[t][t] < 0) {
      negate_row(d, t);
    }
    ++t;
  }
  // enforce the divisibility chain d[i][i] | d[i+1][i+1]
  bool fixed = true;
  while (fixed) {
    fixed = false;
    for (int i = 0; i + 1 < t; ++i) {
      if (d[i][i] != 0 && d[i + 1][i + 1] % d[i][i] != 0) {
        // fold d[i+1][i+1] into position (i, i+1) and rediagonalize the 2x2
        add_col(d, i, i + 1, 1);
        add_col(out.v, i, i + 1, 1);
        // now column i has entries at (i,i) and (i+1,i); clear by gcd steps
        while (d[i + 1][i] != 0) {
          mpz_class q = d[i][i] / d[i + 1][i];
          add_row(d, i, i + 1, -q);
          swap_rows(d, i, i + 1);
        }
        // clear fill-in at (i, i+1)
        if (d[i][i] != 0 && d[i][i + 1] != 0) {
          mpz_class q = d[i][i + 1] / d[i][i];
          add_col(d, i + 1, i, -q);
          add_col(out.v, i + 1, i, -q);
        }
        if (d[i][i] < 0) negate_row(d, i);
        if (d[i + 1][i + 1] < 0) negate_row(d, i + 1);
        fixed = true;
      }
    }
  }
  out.d = std::move(d);
  out.rank = 0;
  for (int i = 0; i < t; ++i)
    if (out.d[i][i] != 0) {
      out.diagonal.push_back(out.d[i][i]);
      ++out.rank;
    }
  return out;
}

HermiteForm hermite_normal_form(const ZMat& b) {
  HermiteForm out;
  ZMat h = b;
  const int r = rows(h), c = cols(h);
  ZMat u = identity(r);
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    // gcd the column below `row` into position (row, col)
    int nz = -1;
    for (int i = row; i < r; ++i)
      if (h[i][col] != 0) {
        if (nz < 0 || abs(h[i][col]) < abs(h[nz][col])) nz = i;
      }
    if (nz < 0) continue;
    swap_rows(h, row, nz);
    swap_rows(u, row, nz);
    bool again = true;
    while (again) {
      again = false;
      for (int i = row + 1; i < r; ++i) {
        if (h[i][col] == 0) continue;
        mpz_class q = h[i][col] / h[row][col];
        add_row(h, i, row, -q);
        add_row(u, i, row, -q);
        if (h[i][col] != 0) {
          swap_rows(h, row, i);
          swap_rows(u, row, i);
          again = true;
        }
      }
    }
    if (h[row][col] < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][col].get_mpz_t(), h[row][col].get_mpz_t());
      if (q != 0) {
        add_row(h, i, row, -q);
        add_row(u, i, row, -q);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  h.resize(row);
  out.h = std::move(h);
  out.u = std::move(u);  // full transform kept: rows beyond rank span the left kernel
  return out;
}

ZMat left_kernel(const ZMat& b) {
  HermiteForm f = hermite_normal_form(b);
  ZMat out;
  for (std::size_t i = f.h.size(); i < f.u.size(); ++i) out.push_back(f.u[i]);
  return out;
}

IntLattice::IntLattice(int n, ZMat rows) : n_(n), rows_(std::move(rows)) {
  for (auto& r : rows_)
    if (static_cast<int>(r.size()) != n)
      throw Error(Errc::Internal, "lattice row dimension mismatch");
  hnf_ = hermite_normal_form(rows_);
}

bool IntLattice::contains(const ZVec& v) const {
  ZVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
}

ZVec IntLattice::reduce(const ZVec& v) const {
  ZVec r = v;
  for (std::size_t i = 0; i < hnf_.h.size(); ++i) {
    int p = hnf_.pivots[i];
    if (r[p] == 0) continue;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r[p].get_mpz_t(), hnf_.h[i][p].get_mpz_t());
    if (q != 0)
      for (int c = 0; c < n_; ++c) r[c] -= q * hnf_.h[i][c];
  }
  return r;
}

std::optional<ZVec> IntLattice::express(const ZVec& v) const {
  ZVec r = v;
  ZVec coeffs(hnf_.h.size(), 0);
  for (std::size_t i = 0; i < hnf_.h.size(); ++i) {
    int p = hnf_.pivots[i];
    if (r[p] == 0) continue;
    if (r[p] % hnf_.h[i][p] != 0) return std::nullopt;
    mpz_class q = r[p] / hnf_.h[i][p];
    coeffs[i] = q;
    for (int c = 0; c < n_; ++c) r[c] -= q * hnf_.h[i][c];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  // coefficients over HNF rows -> over original rows via U
  ZVec out(rows_.size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < rows_.size(); ++j) out[j] += coeffs[i] * hnf_.u[i][j];
  return out;
}

// ------------------------------------------------------ AbelianizedLattice

AbelianizedLattice AbelianizedLattice::of(const GroupDescriptor& desc) {
  AbelianizedLattice a;
  a.n_ = desc.rank();
  for (const FreeWord& r : desc.relators) {
    ZVec v(a.n_, 0);
    for (const auto& g : r.letters()) v[g.index] += g.exponent;
    a.relators_.push_back(std::move(v));
  }
  if (a.relators_.empty()) a.relators_.push_back(ZVec(a.n_, 0));
  a.smith_ = smith_normal_form(a.relators_);
  return a;
}

ZVec AbelianizedLattice::torsion() const {
  ZVec t;
  for (const auto& d : smith_.diagonal)
    if (d > 1) t.push_back(d);
  return t;
}

ZVec AbelianizedLattice::exponent_vector(const FreeWord& w) const {
  ZVec v(n_, 0);
  for (const auto& g : w.letters()) {
    if (g.index >= n_) throw Error(Errc::UndeclaredGenerator, "exponent vector index");
    v[g.index] += g.exponent;
  }
  return v;
}

bool AbelianizedLattice::image_trivial(const FreeWord& w) const {
  return contains(exponent_vector(w));
}

bool AbelianizedLattice::contains(const ZVec& v) const {
  // v in rowspace(M)  <=>  v * V in rowspace(D)
  const int n = n_;
  ZVec f(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) f[j] += v[i] * smith_.v[i][j];
  const int r = smith_.rank;
  for (int j = 0; j < n; ++j) {
    if (j < r) {
      if (f[j] % smith_.d[j][j] != 0) return false;
    } else {
      if (f[j] != 0) return false;
    }
  }
  return true;
}

}  // namespace relpres
