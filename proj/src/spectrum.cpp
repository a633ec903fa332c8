#include "tt2/spectrum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tt2/measure.hpp"
#include "tt2/parallel.hpp"
#include "tt2/perm.hpp"

namespace tt2 {

std::string to_string(EigenCase c) {
  switch (c) {
    case EigenCase::ascending: return "ascending";
    case EigenCase::descending: return "descending";
    case EigenCase::pair_plus: return "pair_plus";
    case EigenCase::pair_minus: return "pair_minus";
    case EigenCase::direct: return "direct";
  }
  return "unknown";
}

namespace {

void emit_for_shape(const Partition& shape, std::uint64_t mult, int n,
                    std::vector<SpectrumEntry>& out) {
  const int den = 2 * n - 3;
  const auto tableaux = enumerate_syt(shape);
  for (std::size_t idx = 0; idx < tableaux.size(); ++idx) {
    const Tableau& t = tableaux[idx];
    if (!upper_standard(t)) continue;
    const ContentVector a = contents(t);
    const int last = a[static_cast<std::size_t>(n - 1)];
    const int prev = a[static_cast<std::size_t>(n - 2)];
    auto push = [&](int num, EigenCase c) { out.push_back({num, den, mult, shape, idx, c}); };
    if (n == 3) {
      push(1 + last, EigenCase::direct);
    } else if (last == prev + 1) {
      push(2 * last - 1, EigenCase::ascending);
    } else if (last == prev - 1) {
      push(-(2 * last + 1), EigenCase::descending);
    } else if (prev < last) {
      push(last + prev, EigenCase::pair_plus);
      push(-(last + prev), EigenCase::pair_minus);
    }
    // prev > last: the partner tableau (n-1 and n swapped) emits the pair.
  }
}

}  // namespace

std::vector<SpectrumEntry> spectrum_of(int n, Representative rep, unsigned threads) {
  if (n < 3) throw std::invalid_argument("spectrum needs n >= 3, got " + std::to_string(n));
  if (n > 20) throw std::out_of_range("spectrum supports n <= 20");
  const auto all = partitions(n);

  // One job per conjugate class, in canonical order of its first member.
  struct Job {
    Partition representative;
    Partition partner;
    bool self_conjugate;
  };
  std::vector<Job> jobs;
  for (const auto& lambda : all) {
    const Partition lambda_t = conjugate(lambda);
    if (lambda == lambda_t) {
      jobs.push_back({lambda, lambda_t, true});
    } else if (lambda > lambda_t) {  // lambda precedes lambda_t in descending order
      if (rep == Representative::first_in_order)
        jobs.push_back({lambda, lambda_t, false});
      else
        jobs.push_back({lambda_t, lambda, false});
    }
  }

  std::vector<std::vector<SpectrumEntry>> parts(jobs.size());
  for_each_block(jobs.size(), 1, threads, [&](std::size_t b, std::size_t, std::size_t) {
    const Job& job = jobs[b];
    const std::uint64_t mult = dimension(job.representative);
    emit_for_shape(job.representative, mult, n, parts[b]);
    if (!job.self_conjugate) emit_for_shape(job.partner, mult, n, parts[b]);
  });

  std::vector<SpectrumEntry> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::map<int, std::uint64_t> aggregate(std::span<const SpectrumEntry> entries) {
  std::map<int, std::uint64_t> m;
  for (const auto& e : entries) m[e.numerator] += e.multiplicity;
  return m;
}

// ---------------------------------------------------------------------------
// Table check

bool Table1Report::ok() const {
  return std::all_of(families.begin(), families.end(), [](const auto& f) { return f.ok; });
}

std::string Table1Report::diff() const {
  std::ostringstream os;
  const int den = 2 * n - 3;
  for (const auto& f : families) {
    if (f.ok) continue;
    os << "shape " << f.shape.to_string() << " (n=" << n << "):\n";
    std::map<int, std::pair<std::uint64_t, std::uint64_t>> rows;
    for (const auto& [num, m] : f.expected) rows[num].first = m;
    for (const auto& [num, m] : f.actual) rows[num].second = m;
    for (const auto& [num, pair] : rows)
      if (pair.first != pair.second)
        os << "  " << num << "/" << den << ": expected mult " << pair.first << ", got "
           << pair.second << "\n";
  }
  return os.str();
}

Table1Report table1_check(int n) {
  if (n < 6) throw std::invalid_argument("table1_check needs n >= 6, got " + std::to_string(n));
  const auto spectrum = spectrum_of(n);
  Table1Report report;
  report.n = n;

  auto family = [&](Partition shape, std::vector<std::pair<int, std::uint64_t>> rows) {
    Table1Family f;
    f.dimension = dimension(shape);
    for (const auto& [num, m] : rows)
      if (m > 0) f.expected[num] += m;
    const Partition shape_t = conjugate(shape);
    std::map<int, std::uint64_t> total;
    for (const auto& e : spectrum)
      if (e.shape == shape || e.shape == shape_t) total[e.numerator] += e.multiplicity;
    f.ok = true;
    for (const auto& [num, m] : total) {
      if (m % f.dimension != 0) f.ok = false;
      f.actual[num] = m / f.dimension;
    }
    f.ok = f.ok && f.actual == f.expected;
    f.shape = std::move(shape);
    report.families.push_back(std::move(f));
  };

  const auto un = static_cast<std::uint64_t>(n);
  family(Partition({n}), {{2 * n - 3, 1}});
  family(Partition({n - 1, 1}), {{2 * n - 5, un - 3}, {-(n - 3), 1}, {n - 3, 1}});
  family(Partition({n - 2, 2}), {{2 * n - 7, (un - 2) * (un - 5) / 2},
                                 {-1, 1},
                                 {n - 3, un - 3},
                                 {-(n - 3), un - 3}});
  family(Partition({n - 2, 1, 1}), {{2 * n - 7, (un - 3) * (un - 4) / 2},
                                    {3, 1},
                                    {n - 5, un - 3},
                                    {-(n - 5), un - 3}});
  return report;
}

// ---------------------------------------------------------------------------
// Trace oracle

TraceOracleVerdict trace_moment_oracle(int n, int k_max) {
  if (n < 3 || n > 6) throw std::invalid_argument("trace_moment_oracle supports 3 <= n <= 6");
  if (k_max < 1) throw std::invalid_argument("trace_moment_oracle needs k_max >= 1");

  std::vector<Perm> group;
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    Perm p = unrank(PermRank{r}, n);
    if (p.is_even()) group.push_back(std::move(p));
  }
  const std::size_t size = group.size();
  auto index_of = [&](const Perm& p) {
    return static_cast<std::size_t>(std::lower_bound(group.begin(), group.end(), p) - group.begin());
  };

  // preimages[y] lists every z with A[z][y] = 1, i.e. y = z * s for an atom s.
  const MeasureSpec measure = build_measure(n);
  std::vector<std::vector<std::size_t>> preimages(size);
  for (std::size_t z = 0; z < size; ++z)
    for (const auto& atom : measure.atoms()) preimages[index_of(compose(group[z], atom.perm))].push_back(z);

  std::vector<BigInt> power(size * size);  // row-major A^k
  for (std::size_t y = 0; y < size; ++y)
    for (std::size_t z : preimages[y]) power[z * size + y] += 1;

  const auto entries = spectrum_of(n);
  TraceOracleVerdict v;
  v.n = n;
  v.k_max = k_max;
  std::vector<BigInt> num_power(entries.size(), BigInt(1));
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) {
      std::vector<BigInt> next(size * size);
      for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y) {
          BigInt acc = 0;
          for (std::size_t z : preimages[y]) acc += power[x * size + z];
          next[x * size + y] = std::move(acc);
        }
      power = std::move(next);
    }
    BigInt trace = 0;
    for (std::size_t x = 0; x < size; ++x) trace += power[x * size + x];

    BigInt moment = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      num_power[i] *= entries[i].numerator;
      moment += num_power[i] * entries[i].multiplicity;
    }
    if (trace != moment && v.first_mismatch == 0) v.first_mismatch = k;
    v.traces.push_back(std::move(trace));
    v.moments.push_back(std::move(moment));
  }
  return v;
}

}  // namespace tt2
