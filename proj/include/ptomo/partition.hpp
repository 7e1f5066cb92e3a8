// partition.hpp
// Integer partitions / Young diagrams: the carrier for all tableau
// combinatorics. Cells are 1-indexed (row, column).

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ptomo/errors.hpp"

namespace ptomo {

class Partition {
 public:
  Partition() = default;  // the unique partition of 0

  // Parts must be strictly positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }    // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  // 1-indexed row length; rows past the length are 0.
  int row(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  bool has_cell(int i, int j) const {
    return i >= 1 && j >= 1 && j <= row(i);
  }

  bool contains(const Partition& inner) const;

  // Partition with one box added to row i (1 <= i <= length+1);
  // throws if the result is not a partition.
  Partition add_box(int i) const;

  std::string to_string() const;  // parts joined by '-', "0" when empty

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  // Reverse-lexicographic among equal sizes; smaller sizes first overall.
  bool reverse_lex_less(const Partition& o) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n with at most max_len parts, reverse-lexicographic
// ((n) first, then (n-1,1), ...).
std::vector<Partition> partitions_of(int n, int max_len);

inline int cell_content(int i, int j) { return j - i; }

// Arm + leg + 1 for a cell inside lambda.
int hook_length(const Partition& lambda, int i, int j);

}  // namespace ptomo
