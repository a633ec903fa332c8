#include "tt2/measure.hpp"

#include <stdexcept>
#include <string>

namespace tt2 {

MeasureSpec::MeasureSpec(int n, std::int64_t denominator, std::vector<Atom> atoms)
    : n_(n), denominator_(denominator), atoms_(std::move(atoms)) {
  if (denominator_ <= 0) throw std::invalid_argument("measure denominator must be positive");
  std::int64_t total = 0;
  for (const auto& a : atoms_) {
    if (a.perm.degree() != n_) throw std::invalid_argument("atom degree differs from measure degree");
    if (a.numerator <= 0) throw std::invalid_argument("atom numerators must be positive");
    total += a.numerator;
  }
  if (total != denominator_) throw std::invalid_argument("atom masses do not sum to one");
}

std::vector<Perm> shuffle_generators(int n) {
  if (n < 3) throw std::invalid_argument("shuffle needs n >= 3, got " + std::to_string(n));
  std::vector<Perm> gens;
  gens.reserve(static_cast<std::size_t>(2 * n - 4));
  for (int i = 1; i <= n - 2; ++i) {
    gens.push_back(three_cycle(i, n, Orientation::forward));
    gens.push_back(three_cycle(i, n, Orientation::backward));
  }
  return gens;
}

MeasureSpec build_measure(int n) {
  if (n < 3) throw std::invalid_argument("shuffle measure needs n >= 3, got " + std::to_string(n));
  std::vector<Atom> atoms;
  atoms.push_back({Perm::identity(n), 1});
  for (auto& g : shuffle_generators(n)) atoms.push_back({std::move(g), 1});
  return MeasureSpec(n, 2 * n - 3, std::move(atoms));
}

Rational prob(const MeasureSpec& m, const Perm& p) {
  if (p.degree() != m.degree())
    throw std::invalid_argument("permutation degree " + std::to_string(p.degree()) +
                                " differs from measure degree " + std::to_string(m.degree()));
  for (const auto& a : m.atoms())
    if (a.perm == p) return Rational(a.numerator, m.denominator());
  return Rational(0);
}

}  // namespace tt2
