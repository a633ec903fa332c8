#include "tt2/walk.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "tt2/parallel.hpp"

namespace tt2 {
namespace {

using Small = std::array<std::uint8_t, kMaxWalkDegree>;

constexpr std::array<std::uint32_t, kMaxWalkDegree + 1> kFactorial = [] {
  std::array<std::uint32_t, kMaxWalkDegree + 1> f{};
  f[0] = 1;
  for (std::uint32_t k = 1; k <= kMaxWalkDegree; ++k) f[k] = f[k - 1] * k;
  return f;
}();

constexpr std::size_t kBlock = 1u << 15;

void check_walk_degree(int n) {
  if (n < 3 || n > kMaxWalkDegree)
    throw std::invalid_argument("walk engine supports 3 <= n <= " + std::to_string(kMaxWalkDegree) +
                                ", got " + std::to_string(n));
}

// Values are 0-based here.
std::uint32_t rank_small(const Small& a, int n) {
  std::uint32_t used = 0;
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    const unsigned v = a[static_cast<std::size_t>(i)];
    const auto smaller = v - static_cast<unsigned>(std::popcount(used & ((1u << v) - 1u)));
    r += smaller * kFactorial[static_cast<std::size_t>(n - 1 - i)];
    used |= 1u << v;
  }
  return r;
}

Small unrank_small(std::uint32_t r, int n) {
  Small a{};
  std::uint32_t unused = (1u << n) - 1u;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t f = kFactorial[static_cast<std::size_t>(n - 1 - i)];
    std::uint32_t digit = r / f;
    r %= f;
    std::uint32_t bits = unused;
    for (; digit > 0; --digit) bits &= bits - 1;
    const auto v = static_cast<std::uint8_t>(std::countr_zero(bits));
    a[static_cast<std::size_t>(i)] = v;
    unused &= ~(1u << v);
  }
  return a;
}

int fixed_points_small(const Small& a, int n) {
  int c = 0;
  for (int i = 0; i < n; ++i) c += a[static_cast<std::size_t>(i)] == i;
  return c;
}

// (pi * g)(p) = pi(g(p)): position p of the product reads position g(p) of pi.
Small right_multiply(const Small& a, const std::vector<int>& g, int n) {
  Small b = a;
  for (int p = 0; p < n; ++p)
    b[static_cast<std::size_t>(p)] = a[static_cast<std::size_t>(g[static_cast<std::size_t>(p)])];
  return b;
}

const std::vector<std::uint32_t>& even_ranks_of(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<std::uint32_t>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto ranks = std::make_unique<std::vector<std::uint32_t>>();
    const std::uint32_t total = kFactorial[static_cast<std::size_t>(n)];
    ranks->reserve(total / 2 + 1);
    for (std::uint32_t r = 0; r < total; ++r)
      if (rank_parity(PermRank{r}, n) == Parity::even) ranks->push_back(r);
    slot = std::move(ranks);
  }
  return *slot;
}

/// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      carry += (sum - t) + x;
    else
      carry += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

void put_u16(std::ostream& os, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
  os.write(b, 2);
}

std::uint16_t get_u16(std::istream& is) {
  unsigned char b[2] = {};
  is.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

}  // namespace

// ---------------------------------------------------------------------------
// ActionTable

ActionTable::ActionTable(int n, std::vector<Perm> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    std::vector<int> img(static_cast<std::size_t>(n_));
    for (int p = 1; p <= n_; ++p) img[static_cast<std::size_t>(p - 1)] = g(p) - 1;
    generator_images_.push_back(std::move(img));
  }
}

void ActionTable::compute_even_ranks() { even_ranks_ = even_ranks_of(n_); }

ActionTable ActionTable::on_the_fly(int n) {
  check_walk_degree(n);
  ActionTable t(n, shuffle_generators(n));
  t.compute_even_ranks();
  return t;
}

ActionTable ActionTable::build(int n, unsigned threads) {
  check_walk_degree(n);
  ActionTable t(n, shuffle_generators(n));
  const std::uint32_t total = kFactorial[static_cast<std::size_t>(n)];
  t.columns_.assign(t.generators_.size(), std::vector<std::uint32_t>(total));
  for_each_block(total, kBlock, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    Small a = unrank_small(static_cast<std::uint32_t>(begin), n);
    for (std::size_t r = begin; r < end; ++r) {
      for (std::size_t c = 0; c < t.columns_.size(); ++c)
        t.columns_[c][r] = rank_small(right_multiply(a, t.generator_images_[c], n), n);
      std::next_permutation(a.begin(), a.begin() + n);
    }
  });
  t.compute_even_ranks();
  return t;
}

std::span<const std::uint32_t> ActionTable::column(std::size_t c) const {
  if (!materialized()) throw std::logic_error("low-memory action table has no columns");
  return columns_.at(c);
}

std::uint32_t ActionTable::apply(std::size_t c, std::uint32_t r) const {
  if (materialized()) return columns_[c][r];
  return rank_small(right_multiply(unrank_small(r, n_), generator_images_.at(c), n_), n_);
}

std::filesystem::path ActionTable::cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("action-n" + std::to_string(n) + ".tt2s");
}

void ActionTable::save(const std::filesystem::path& file) const {
  if (!materialized()) throw std::logic_error("cannot save a low-memory action table");
  std::ofstream os(file, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + file.string() + " for writing");
  os.write("TT2S", 4);
  put_u16(os, kFormatVersion);
  put_u16(os, static_cast<std::uint16_t>(n_));
  std::vector<char> buf;
  for (const auto& col : columns_) {
    buf.resize(col.size() * 4);
    for (std::size_t i = 0; i < col.size(); ++i)
      for (int b = 0; b < 4; ++b) buf[i * 4 + b] = static_cast<char>((col[i] >> (8 * b)) & 0xff);
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  if (!os) throw std::runtime_error("write failed for " + file.string());
}

ActionTable ActionTable::load(const std::filesystem::path& file, int n) {
  check_walk_degree(n);
  std::ifstream is(file, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + file.string());
  char magic[4] = {};
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != "TT2S") throw std::runtime_error("bad magic in " + file.string());
  if (const auto version = get_u16(is); version != kFormatVersion)
    throw std::runtime_error("unsupported cache version " + std::to_string(version));
  if (const auto stored_n = get_u16(is); stored_n != n)
    throw std::runtime_error("cache holds n=" + std::to_string(stored_n) + ", wanted " +
                             std::to_string(n));
  ActionTable t(n, shuffle_generators(n));
  const std::uint32_t total = kFactorial[static_cast<std::size_t>(n)];
  std::vector<unsigned char> buf(static_cast<std::size_t>(total) * 4);
  t.columns_.assign(t.generators_.size(), std::vector<std::uint32_t>(total));
  for (auto& col : t.columns_) {
    is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!is) throw std::runtime_error("truncated cache file " + file.string());
    for (std::size_t i = 0; i < total; ++i) {
      const std::uint32_t v = buf[4 * i] | (buf[4 * i + 1] << 8) | (buf[4 * i + 2] << 16) |
                              (static_cast<std::uint32_t>(buf[4 * i + 3]) << 24);
      if (v >= total) throw std::runtime_error("rank out of range in " + file.string());
      col[i] = v;
    }
  }
  if (is.peek() != std::char_traits<char>::eof())
    throw std::runtime_error("trailing bytes in cache file " + file.string());
  t.compute_even_ranks();
  return t;
}

ActionTable ActionTable::cached(const std::filesystem::path& dir, int n, unsigned threads) {
  const auto file = cache_file(dir, n);
  std::error_code ec;
  if (std::filesystem::exists(file, ec)) {
    try {
      return load(file, n);
    } catch (const std::runtime_error&) {
      // stale or corrupt; rebuild below
    }
  }
  ActionTable t = build(n, threads);
  try {
    std::filesystem::create_directories(dir);
    t.save(file);
  } catch (const std::exception&) {
    std::filesystem::remove(file, ec);
  }
  return t;
}

// ---------------------------------------------------------------------------
// DistVector

DistVector DistVector::delta_identity(int n, Mode mode) {
  check_walk_degree(n);
  DistVector d;
  d.n_ = n;
  d.mode_ = mode;
  const std::size_t total = kFactorial[static_cast<std::size_t>(n)];
  if (mode == Mode::float64) {
    std::vector<double> v(total, 0.0);
    v[0] = 1.0;
    d.values_ = std::move(v);
  } else {
    std::vector<BigInt> v(total);
    v[0] = 1;
    d.values_ = std::move(v);
  }
  return d;
}

std::size_t DistVector::size() const { return kFactorial[static_cast<std::size_t>(n_)]; }

std::span<const double> DistVector::probabilities() const {
  if (mode_ != Mode::float64) throw std::logic_error("probabilities() needs float64 mode");
  return std::get<std::vector<double>>(values_);
}

std::span<const BigInt> DistVector::numerators() const {
  if (mode_ != Mode::exact) throw std::logic_error("numerators() needs exact mode");
  return std::get<std::vector<BigInt>>(values_);
}

double DistVector::probability(std::uint64_t r) const {
  if (mode_ == Mode::float64) return probabilities()[r];
  return static_cast<double>(exact_probability(r));
}

Rational DistVector::exact_probability(std::uint64_t r) const {
  return Rational(numerators()[r], denominator_);
}

DistVector convolve_step(const DistVector& d, const MeasureSpec& m, const ActionTable& t,
                         unsigned threads) {
  const int n = d.degree();
  if (m.degree() != n || t.degree() != n)
    throw std::invalid_argument("distribution, measure and action table must share n");

  // Each atom s reads the source rank y * s^-1; -1 marks the identity.
  struct Term {
    std::int64_t numerator;
    int column;
  };
  std::vector<Term> terms;
  for (const auto& atom : m.atoms()) {
    if (atom.perm.is_identity()) {
      terms.push_back({atom.numerator, -1});
      continue;
    }
    const Perm inv = atom.perm.inverse();
    const auto gens = t.generators();
    const auto it = std::find(gens.begin(), gens.end(), inv);
    if (it == gens.end())
      throw std::invalid_argument("no action column for the inverse of atom " + atom.perm.to_string());
    terms.push_back({atom.numerator, static_cast<int>(it - gens.begin())});
  }

  const auto even = t.even_ranks();
  const bool table = t.materialized();

  std::vector<const std::uint32_t*> columns(terms.size(), nullptr);
  if (table)
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (terms[i].column >= 0) columns[i] = t.column(static_cast<std::size_t>(terms[i].column)).data();

  auto for_sources = [&](std::uint32_t y, auto&& visit) {
    if (table) {
      for (std::size_t i = 0; i < terms.size(); ++i)
        visit(terms[i].numerator, columns[i] ? columns[i][y] : y);
    } else {
      for (const auto& term : terms)
        visit(term.numerator,
              term.column < 0 ? y : t.apply(static_cast<std::size_t>(term.column), y));
    }
  };

  DistVector out;
  out.n_ = n;
  out.mode_ = d.mode_;
  out.step_ = d.step_ + 1;

  if (d.mode_ == Mode::float64) {
    const auto& in = std::get<std::vector<double>>(d.values_);
    std::vector<double> next(in.size(), 0.0);
    const double scale = 1.0 / static_cast<double>(m.denominator());
    for_each_block(even.size(), kBlock, threads, [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t i = b; i < e; ++i) {
        const std::uint32_t y = even[i];
        double acc = 0.0;
        for_sources(y, [&](std::int64_t w, std::uint32_t src) {
          acc += static_cast<double>(w) * in[src];
        });
        next[y] = acc * scale;
      }
    });
    out.values_ = std::move(next);
    out.denominator_ = 1;
  } else {
    const auto& in = std::get<std::vector<BigInt>>(d.values_);
    std::vector<BigInt> next(in.size());
    for_each_block(even.size(), 256, threads, [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t i = b; i < e; ++i) {
        const std::uint32_t y = even[i];
        BigInt acc = 0;
        for_sources(y, [&](std::int64_t w, std::uint32_t src) { acc += w * in[src]; });
        next[y] = std::move(acc);
      }
    });
    out.values_ = std::move(next);
    out.denominator_ = d.denominator_ * m.denominator();
  }
  return out;
}

double tv_to_uniform(const DistVector& d, unsigned threads) {
  if (d.mode() == Mode::exact) return static_cast<double>(tv_to_uniform_exact(d));
  const auto p = d.probabilities();
  const auto& even = even_ranks_of(d.degree());
  const double uniform = 2.0 / static_cast<double>(d.size());
  const std::size_t blocks = (even.size() + kBlock - 1) / kBlock;
  std::vector<CompensatedSum> partial(blocks);
  for_each_block(even.size(), kBlock, threads, [&](std::size_t b, std::size_t e, std::size_t blk) {
    CompensatedSum s;
    for (std::size_t i = b; i < e; ++i) s.add(std::abs(p[even[i]] - uniform));
    partial[blk] = s;
  });
  CompensatedSum total;
  for (const auto& s : partial) {
    total.add(s.sum);
    total.add(s.carry);
  }
  return 0.5 * total.value();
}

Rational tv_to_uniform_exact(const DistVector& d) {
  const auto num = d.numerators();
  const BigInt group_order = kFactorial[static_cast<std::size_t>(d.degree())];
  const BigInt twice_den = 2 * d.denominator();
  BigInt acc = 0;
  // |num/D - 2/n!| = |num * n! - 2D| / (D n!)
  for (const auto r : even_ranks_of(d.degree())) acc += abs(num[r] * group_order - twice_den);
  return Rational(acc, 2 * d.denominator() * group_order);
}

namespace {

template <class Weight>
void for_each_even_with_fixed_points(int n, Weight&& visit) {
  for (const auto r : even_ranks_of(n)) visit(r, fixed_points_small(unrank_small(r, n), n));
}

}  // namespace

double expectation_fixed_points(const DistVector& d) {
  if (d.mode() == Mode::exact) return static_cast<double>(fixed_point_moments_exact(d).mean);
  const auto p = d.probabilities();
  CompensatedSum s;
  for_each_even_with_fixed_points(d.degree(), [&](std::uint32_t r, int x) { s.add(p[r] * x); });
  return s.value();
}

double second_moment_fixed_points(const DistVector& d) {
  if (d.mode() == Mode::exact)
    return static_cast<double>(fixed_point_moments_exact(d).second_moment);
  const auto p = d.probabilities();
  CompensatedSum s;
  for_each_even_with_fixed_points(d.degree(),
                                  [&](std::uint32_t r, int x) { s.add(p[r] * x * x); });
  return s.value();
}

ExactMoments fixed_point_moments_exact(const DistVector& d) {
  const auto num = d.numerators();
  BigInt first = 0;
  BigInt second = 0;
  for_each_even_with_fixed_points(d.degree(), [&](std::uint32_t r, int x) {
    first += num[r] * x;
    second += num[r] * (x * x);
  });
  return {Rational(first, d.denominator()), Rational(second, d.denominator())};
}

std::vector<double> tv_curve(int n, int k_max, Mode mode, const ActionTable& table,
                             unsigned threads) {
  if (k_max < 0) throw std::invalid_argument("tv_curve needs k_max >= 0");
  const MeasureSpec m = build_measure(n);
  DistVector d = DistVector::delta_identity(n, mode);
  std::vector<double> tv;
  tv.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    tv.push_back(tv_to_uniform(d, threads));
    if (k < k_max) d = convolve_step(d, m, table, threads);
  }
  return tv;
}

std::uint64_t estimate_walk_bytes(int n, Mode mode, bool materialized_table) {
  check_walk_degree(n);
  const std::uint64_t total = kFactorial[static_cast<std::size_t>(n)];
  std::uint64_t bytes = total / 2 * sizeof(std::uint32_t);
  if (materialized_table) bytes += static_cast<std::uint64_t>(2 * n - 4) * total * sizeof(std::uint32_t);
  const std::uint64_t entry = mode == Mode::float64 ? sizeof(double) : sizeof(BigInt) + 32;
  bytes += 2 * total * entry;
  return bytes;
}

}  // namespace tt2
