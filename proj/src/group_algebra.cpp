#include "tt2/group_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace tt2 {

GroupAlgebraElement GroupAlgebraElement::identity(int n) { return basis(Perm::identity(n)); }

GroupAlgebraElement GroupAlgebraElement::basis(const Perm& p, std::int64_t coeff) {
  GroupAlgebraElement e(p.degree());
  e.add_term(p, coeff);
  return e;
}

void GroupAlgebraElement::check_degree(int other) const {
  if (other != n_)
    throw std::invalid_argument("group algebra degree mismatch: " + std::to_string(n_) + " vs " +
                                std::to_string(other));
}

std::int64_t GroupAlgebraElement::coefficient(const Perm& p) const {
  const auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

void GroupAlgebraElement::add_term(const Perm& p, std::int64_t c) {
  check_degree(p.degree());
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  check_degree(o.n_);
  for (const auto& [p, c] : o.coeffs_) add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  check_degree(o.n_);
  for (const auto& [p, c] : o.coeffs_) add_term(p, -c);
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  a.check_degree(b.n_);
  GroupAlgebraElement out(a.n_);
  for (const auto& [p, c] : a.coeffs_)
    for (const auto& [q, d] : b.coeffs_) out.add_term(compose(p, q), c * d);
  return out;
}

GroupAlgebraElement operator*(std::int64_t s, GroupAlgebraElement a) {
  if (s == 0) return GroupAlgebraElement(a.n_);
  for (auto& [p, c] : a.coeffs_) c *= s;
  return a;
}

std::string GroupAlgebraElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    os << (first ? "" : " + ") << c << "*" << p.to_string();
    first = false;
  }
  return os.str();
}

GroupAlgebraElement jm_symmetric(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("jm_symmetric needs 1 <= i <= n");
  GroupAlgebraElement x(n);
  for (int j = 1; j < i; ++j) x.add_term(Perm::transposition(n, j, i), 1);
  return x;
}

GroupAlgebraElement jm_alternating(int i, int n) {
  if (n < 3) throw std::invalid_argument("jm_alternating needs n >= 3");
  if (i < 1 || i > n) throw std::invalid_argument("jm_alternating needs 1 <= i <= n");
  if (i == 1) return GroupAlgebraElement(n);
  if (i == 2) return GroupAlgebraElement::identity(n);
  return GroupAlgebraElement::basis(Perm::transposition(n, 1, 2)) * jm_symmetric(i, n);
}

GroupAlgebraElement t_generator(int i, int n) {
  if (i < 2 || i >= n) throw std::invalid_argument("t_generator needs 2 <= i < n");
  return GroupAlgebraElement::basis(compose(Perm::transposition(n, 1, 2), Perm::transposition(n, i, i + 1)));
}

GroupAlgebraElement shuffle_element(int n) {
  if (n < 2) throw std::invalid_argument("shuffle_element needs n >= 2");
  GroupAlgebraElement p = GroupAlgebraElement::identity(n);
  for (int i = 1; i <= n - 2; ++i) {
    p.add_term(three_cycle(i, n, Orientation::forward), 1);
    p.add_term(three_cycle(i, n, Orientation::backward), 1);
  }
  return p;
}

namespace {

AlgebraVerdict compare(const GroupAlgebraElement& lhs, const GroupAlgebraElement& rhs,
                       const std::string& label) {
  if (lhs == rhs) return {};
  const GroupAlgebraElement delta = lhs - rhs;
  return {false, label + ": lhs - rhs = " + delta.to_string()};
}

}  // namespace

AlgebraVerdict verify_lemma_P(int n) {
  const GroupAlgebraElement lhs = shuffle_element(n);
  if (n == 2) return compare(lhs, GroupAlgebraElement::identity(2), "n=2");
  if (n == 3) return compare(lhs, GroupAlgebraElement::identity(3) + jm_alternating(3, 3), "n=3");
  const auto rhs = t_generator(n - 1, n) * (jm_alternating(n, n) + jm_alternating(n - 1, n));
  return compare(lhs, rhs, "n=" + std::to_string(n));
}

AlgebraVerdict commutation_check(int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("commutation_check supports 3 <= n <= 6");
  std::vector<GroupAlgebraElement> y;
  for (int i = 1; i <= n; ++i) y.push_back(jm_alternating(i, n));
  AlgebraVerdict v;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto& a = y[static_cast<std::size_t>(i - 1)];
      const auto& b = y[static_cast<std::size_t>(j - 1)];
      if (a * b != b * a) {
        v.ok = false;
        v.detail += "Y_" + std::to_string(i) + " Y_" + std::to_string(j) + " != Y_" +
                    std::to_string(j) + " Y_" + std::to_string(i) + "; ";
      }
    }
  return v;
}

AlgebraVerdict jm_relation_check(int n) {
  if (n < 3) throw std::invalid_argument("jm_relation_check needs n >= 3");
  AlgebraVerdict v;
  for (int i = 3; i < n; ++i) {
    const auto t = t_generator(i, n);
    const auto lhs = t * jm_alternating(i, n);
    const auto rhs = jm_alternating(i + 1, n) * t - GroupAlgebraElement::identity(n);
    if (lhs != rhs) {
      v.ok = false;
      v.detail += "i=" + std::to_string(i) + ": " + (lhs - rhs).to_string() + "; ";
    }
  }
  return v;
}

}  // namespace tt2
