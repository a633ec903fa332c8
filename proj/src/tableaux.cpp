#include "tt2/tableaux.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tt2 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_self_conjugate() const { return conjugate(*this) == *this; }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1) throw std::invalid_argument("partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (lambda.length() == 0) return Partition{};
  cols.reserve(static_cast<std::size_t>(lambda.part(0)));
  for (int c = 0; c < lambda.part(0); ++c) {
    int height = 0;
    while (height < lambda.length() && lambda.part(height) > c) ++height;
    cols.push_back(height);
  }
  return Partition(std::move(cols));
}

std::uint64_t dimension(const Partition& lambda) {
  const int n = lambda.size();
  if (n > 20) throw std::out_of_range("dimension supports n <= 20");
  const Partition lambda_t = conjugate(lambda);
  std::uint64_t numerator = 1;
  for (int k = 2; k <= n; ++k) numerator *= static_cast<std::uint64_t>(k);
  std::uint64_t hooks = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c)
      hooks *= static_cast<std::uint64_t>((lambda.part(r) - c) + (lambda_t.part(c) - r) - 1);
  return numerator / hooks;
}

Tableau::Tableau(Partition shape, std::vector<Cell> cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
  if (static_cast<int>(cells_.size()) != shape_.size())
    throw std::invalid_argument("tableau needs one cell per box");
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape_.length()));
  for (int r = 0; r < shape_.length(); ++r)
    grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape_.part(r)), 0);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto [r, c] = cells_[i];
    if (r < 0 || r >= shape_.length() || c < 0 || c >= shape_.part(r))
      throw std::invalid_argument("tableau cell outside the diagram");
    auto& slot = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    if (slot != 0) throw std::invalid_argument("two labels share a cell");
    slot = static_cast<int>(i) + 1;
  }
  for (int r = 0; r < shape_.length(); ++r)
    for (int c = 0; c < shape_.part(r); ++c) {
      const int v = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (c > 0 && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v)
        throw std::invalid_argument("tableau rows must increase");
      if (r > 0 && grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] > v)
        throw std::invalid_argument("tableau columns must increase");
    }
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.length()));
  for (int r = 0; r < shape_.length(); ++r)
    out[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(shape_.part(r)));
  for (std::size_t i = 0; i < cells_.size(); ++i)
    out[static_cast<std::size_t>(cells_[i].row)][static_cast<std::size_t>(cells_[i].col)] =
        static_cast<int>(i) + 1;
  return out;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  const auto rs = rows();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (r) os << '/';
    for (std::size_t c = 0; c < rs[r].size(); ++c) os << (c ? " " : "") << rs[r][c];
  }
  return os.str();
}

namespace {

void fill_syt(const Partition& shape, std::vector<int>& row_len, std::vector<Cell>& cells,
              std::vector<Tableau>& out) {
  if (static_cast<int>(cells.size()) == shape.size()) {
    out.emplace_back(shape, cells);
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    const auto ri = static_cast<std::size_t>(r);
    const bool fits = row_len[ri] < shape.part(r);
    const bool supported = r == 0 || row_len[ri - 1] > row_len[ri];
    if (!fits || !supported) continue;
    cells.push_back({r, row_len[ri]});
    ++row_len[ri];
    fill_syt(shape, row_len, cells, out);
    --row_len[ri];
    cells.pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_syt(const Partition& lambda) {
  std::vector<Tableau> out;
  std::vector<int> row_len(static_cast<std::size_t>(lambda.length()), 0);
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(lambda.size()));
  fill_syt(lambda, row_len, cells, out);
  return out;
}

ContentVector contents(const Tableau& t) {
  ContentVector a(static_cast<std::size_t>(t.size()));
  for (int i = 1; i <= t.size(); ++i) {
    const Cell c = t.cell_of(i);
    a[static_cast<std::size_t>(i - 1)] = c.col - c.row;
  }
  return a;
}

bool upper_standard(const Tableau& t) { return t.size() >= 2 && t.cell_of(2) == Cell{0, 1}; }

Tableau row_reading_tableau(const Partition& lambda) {
  std::vector<Cell> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c) cells.push_back({r, c});
  return Tableau(lambda, std::move(cells));
}

}  // namespace tt2
