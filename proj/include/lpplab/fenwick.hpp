#pragma once

#include <cstddef>
#include <vector>

namespace lpplab {

/// Binary indexed tree answering prefix maxima under point "raise" updates.
/// T needs operator< and a bottom element passed at construction.
template <class T>
class FenwickMax {
 public:
  FenwickMax(std::size_t n, T bottom) : tree_(n + 1, bottom), bottom_(bottom) {}

  /// tree[pos] = max(tree[pos], value)
  void raise(std::size_t pos, const T& value) {
    for (++pos; pos < tree_.size(); pos += pos & (~pos + 1)) {
      if (tree_[pos] < value) tree_[pos] = value;
    }
  }

  /// max over positions [0, end)
  T prefix(std::size_t end) const {
    T best = bottom_;
    for (; end > 0; end -= end & (~end + 1)) {
      if (best < tree_[end]) best = tree_[end];
    }
    return best;
  }

 private:
  std::vector<T> tree_;
  T bottom_;
};

}  // namespace lpplab
