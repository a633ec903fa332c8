#include "tt2/perm.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace tt2 {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("images are not a bijection of {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return Perm(std::move(img));
}

Perm Perm::cycle(int n, std::initializer_list<int> points) {
  Perm p = identity(n);
  std::vector<int> pts(points);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int x : pts) {
    if (x < 1 || x > n || used[static_cast<std::size_t>(x)])
      throw std::invalid_argument("cycle points must be distinct values in {1..n}");
    used[static_cast<std::size_t>(x)] = true;
  }
  for (std::size_t k = 0; k < pts.size(); ++k)
    p.images_[static_cast<std::size_t>(pts[k] - 1)] = pts[(k + 1) % pts.size()];
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  if (a == b) throw std::invalid_argument("transposition needs two distinct points");
  return cycle(n, {a, b});
}

Parity Perm::parity() const {
  // n minus the number of cycles has the parity of the permutation.
  std::vector<bool> seen(images_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(images_[i] - 1)) seen[i] = true;
  }
  return (images_.size() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Perm(std::move(inv));
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) img[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Perm(std::move(img));
}

Perm three_cycle(int i, int n, Orientation orientation) {
  if (n < 3) throw std::invalid_argument("three_cycle needs n >= 3");
  if (i < 1 || i > n - 2)
    throw std::invalid_argument("three_cycle index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n - 2));
  return orientation == Orientation::forward ? Perm::cycle(n, {i, n - 1, n})
                                             : Perm::cycle(n, {i, n, n - 1});
}

int fixed_points(const Perm& p) {
  int count = 0;
  for (int i = 1; i <= p.degree(); ++i) count += p(i) == i;
  return count;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankDegree) throw std::out_of_range("factorial argument out of range");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

PermRank rank(const Perm& p) {
  const int n = p.degree();
  if (n > kMaxRankDegree) throw std::out_of_range("rank supports degree <= 20");
  std::uint32_t used = 0;
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    const unsigned v = static_cast<unsigned>(p(i + 1) - 1);
    const unsigned smaller_unused = v - static_cast<unsigned>(std::popcount(used & ((1u << v) - 1u)));
    r += smaller_unused * factorial(n - 1 - i);
    used |= 1u << v;
  }
  return PermRank{r};
}

Perm unrank(PermRank r, int n) {
  if (n < 1 || n > kMaxRankDegree) throw std::out_of_range("unrank supports degree 1..20");
  if (r.value >= factorial(n))
    throw std::out_of_range("rank " + std::to_string(r.value) + " >= " + std::to_string(n) + "!");
  std::vector<int> available(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) available[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(n));
  std::uint64_t rest = r.value;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto digit = static_cast<std::ptrdiff_t>(rest / f);
    rest %= f;
    img.push_back(available[static_cast<std::size_t>(digit)]);
    available.erase(available.begin() + digit);
  }
  return Perm(std::move(img));
}

Parity rank_parity(PermRank r, int n) {
  if (n < 1 || n > kMaxRankDegree) throw std::out_of_range("rank_parity supports degree 1..20");
  std::uint64_t rest = r.value;
  std::uint64_t digit_sum = 0;
  for (std::uint64_t base = 2; base <= static_cast<std::uint64_t>(n); ++base) {
    digit_sum += rest % base;
    rest /= base;
  }
  return digit_sum % 2 == 0 ? Parity::even : Parity::odd;
}

}  // namespace tt2
