#include "wboson/linalg.hpp"

#include <algorithm>

namespace wb {
namespace {

using Row = std::map<long, Rational>;

std::vector<Row> toRows(const SparseMatrix& m) {
  std::vector<Row> rows(m.rows());
  for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
  return rows;
}

// In-place reduced row echelon form. Pivot choice: leftmost nonzero column,
// smallest row index among candidates. Returns pivot (row -> column) list in
// elimination order.
std::vector<std::pair<long, long>> rref(std::vector<Row>& rows, long cols) {
  std::vector<std::pair<long, long>> pivots;
  long pr = 0;
  for (long c = 0; c < cols && pr < static_cast<long>(rows.size()); ++c) {
    long sel = -1;
    for (long r = pr; r < static_cast<long>(rows.size()); ++r) {
      auto it = rows[r].find(c);
      if (it != rows[r].end()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[pr], rows[sel]);
    Rational inv = Rational(1) / rows[pr][c];
    if (inv != Rational(1)) {
      Row scaled;
      for (const auto& [cc, v] : rows[pr]) scaled[cc] = inv * v;
      rows[pr] = std::move(scaled);
    }
    for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
      if (r == pr) continue;
      auto it = rows[r].find(c);
      if (it == rows[r].end()) continue;
      Rational f = it->second;
      for (const auto& [cc, v] : rows[pr]) {
        Rational nv = rows[r].count(cc) ? rows[r][cc] - f * v : -(f * v);
        if (nv.isZero())
          rows[r].erase(cc);
        else
          rows[r][cc] = nv;
      }
    }
    pivots.emplace_back(pr, c);
    ++pr;
  }
  return pivots;
}

}  // namespace

long rank(const SparseMatrix& m) {
  auto rows = toRows(m);
  return static_cast<long>(rref(rows, m.cols()).size());
}

std::vector<std::vector<Rational>> nullspace(const SparseMatrix& m) {
  auto rows = toRows(m);
  auto pivots = rref(rows, m.cols());
  std::vector<bool> isPivot(m.cols(), false);
  for (const auto& [r, c] : pivots) isPivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (long free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (const auto& [r, c] : pivots) {
      auto it = rows[r].find(free);
      if (it != rows[r].end()) v[c] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const SparseMatrix& m,
                                           const std::vector<Rational>& b) {
  if (static_cast<long>(b.size()) != m.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  auto rows = toRows(m);
  long bcol = m.cols();  // augmented column
  for (long r = 0; r < m.rows(); ++r)
    if (!b[r].isZero()) rows[r][bcol] = b[r];
  auto pivots = rref(rows, m.cols());
  // Inconsistent iff some reduced row is (0 ... 0 | nonzero).
  for (const auto& row : rows) {
    if (row.size() == 1 && row.count(bcol)) return std::nullopt;
  }
  std::vector<Rational> x(m.cols(), Rational(0));
  for (const auto& [r, c] : pivots) {
    auto it = rows[r].find(bcol);
    if (it != rows[r].end()) x[c] = it->second;
  }
  return x;
}

bool SpanBuilder::add(const std::vector<Rational>& v) {
  if (static_cast<long>(v.size()) != dim_)
    throw std::invalid_argument("SpanBuilder: dimension mismatch");
  Row w;
  for (long i = 0; i < dim_; ++i)
    if (!v[i].isZero()) w[i] = v[i];
  for (size_t k = 0; k < rows_.size(); ++k) {
    auto it = w.find(pivots_[k]);
    if (it == w.end()) continue;
    Rational f = it->second;
    for (const auto& [c, val] : rows_[k]) {
      Rational nv = w.count(c) ? w[c] - f * val : -(f * val);
      if (nv.isZero())
        w.erase(c);
      else
        w[c] = nv;
    }
  }
  if (w.empty()) return false;
  long pc = w.begin()->first;
  Rational inv = Rational(1) / w.begin()->second;
  Row norm;
  for (const auto& [c, val] : w) norm[c] = inv * val;
  rows_.push_back(std::move(norm));
  pivots_.push_back(pc);
  return true;
}

bool SpanBuilder::contains(const std::vector<Rational>& v) const {
  Row w;
  for (long i = 0; i < dim_; ++i)
    if (!v[i].isZero()) w[i] = v[i];
  for (size_t k = 0; k < rows_.size(); ++k) {
    auto it = w.find(pivots_[k]);
    if (it == w.end()) continue;
    Rational f = it->second;
    for (const auto& [c, val] : rows_[k]) {
      Rational nv = w.count(c) ? w.at(c) - f * val : -(f * val);
      if (nv.isZero())
        w.erase(c);
      else
        w[c] = nv;
    }
  }
  return w.empty();
}

}  // namespace wb
