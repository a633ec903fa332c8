#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tt2 {

/// A partition of n: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const;  // n
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int row) const { return parts_[static_cast<std::size_t>(row)]; }
  bool is_self_conjugate() const;

  /// "(3,1)"
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in lexicographically descending order: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);

Partition conjugate(const Partition& lambda);

/// Number of standard tableaux of shape lambda, by the hook-length formula.
std::uint64_t dimension(const Partition& lambda);

struct Cell {
  int row = 0;  // 0-based
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A standard filling of a Young diagram, stored as the cell of each label.
class Tableau {
 public:
  /// Throws std::invalid_argument if the cells do not form a standard filling of `shape`.
  Tableau(Partition shape, std::vector<Cell> cells);

  const Partition& shape() const { return shape_; }
  int size() const { return static_cast<int>(cells_.size()); }
  /// Cell holding label i, 1 <= i <= n.
  Cell cell_of(int label) const { return cells_[static_cast<std::size_t>(label - 1)]; }
  std::vector<std::vector<int>> rows() const;

  /// Rows of labels, e.g. "12/34".
  std::string to_string() const;

 private:
  Partition shape_;
  std::vector<Cell> cells_;
};

/// Every standard tableau of shape lambda, each once, generated by placing
/// labels 1..n at addable corners (upper rows tried first).
std::vector<Tableau> enumerate_syt(const Partition& lambda);

/// a_i = column - row of the box holding i.
using ContentVector = std::vector<int>;
ContentVector contents(const Tableau& t);

/// True iff label 2 sits in row 1, column 2 (content +1).
bool upper_standard(const Tableau& t);

/// Row tableau of (n), column tableau of (1^n) and friends for tests and docs.
Tableau row_reading_tableau(const Partition& lambda);

}  // namespace tt2
