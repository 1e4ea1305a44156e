#ifndef WBOSON_LINALG_HPP
#define WBOSON_LINALG_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wboson/rational.hpp"

namespace wb {

// Sparse matrix over Rational; no stored zeros.
class SparseMatrix {
 public:
  SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  void set(long r, long c, const Rational& v) {
    checkIndex(r, c);
    if (v.isZero())
      e_.erase({r, c});
    else
      e_[{r, c}] = v;
  }
  Rational get(long r, long c) const {
    checkIndex(r, c);
    auto it = e_.find({r, c});
    return it == e_.end() ? Rational(0) : it->second;
  }
  const std::map<std::pair<long, long>, Rational>& entries() const { return e_; }
  long nnz() const { return static_cast<long>(e_.size()); }

 private:
  void checkIndex(long r, long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("SparseMatrix: index out of bounds");
  }
  long rows_, cols_;
  std::map<std::pair<long, long>, Rational> e_;
};

// Exact row reduction with leftmost-pivot, smallest-row-index tie-breaking.
// All results are deterministic for a fixed input.
long rank(const SparseMatrix& m);
std::vector<std::vector<Rational>> nullspace(const SparseMatrix& m);
// One exact solution of Mx = b if consistent (free variables set to zero),
// std::nullopt otherwise.
std::optional<std::vector<Rational>> solve(const SparseMatrix& m,
                                           const std::vector<Rational>& b);

// Incremental independent-set builder: feed candidate vectors in a fixed
// order, keep those that extend the span. Used for span ranks and greedy
// basis extraction.
class SpanBuilder {
 public:
  explicit SpanBuilder(long dim) : dim_(dim) {}
  // Returns true (and absorbs the vector) iff v is independent of the
  // current span.
  bool add(const std::vector<Rational>& v);
  long rank() const { return static_cast<long>(rows_.size()); }
  // Coordinates of v in the absorbed vectors if v lies in the span.
  bool contains(const std::vector<Rational>& v) const;

 private:
  long dim_;
  // Reduced rows plus their pivot columns, kept in echelon form.
  std::vector<std::map<long, Rational>> rows_;
  std::vector<long> pivots_;
};

}  // namespace wb

#endif
