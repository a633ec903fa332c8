#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tt2/bigint.hpp"
#include "tt2/tableaux.hpp"

namespace tt2 {

/// Which rule produced an eigenvalue from an upper standard tableau with
/// last two contents a_{n-1}, a_n.
enum class EigenCase {
  ascending,   // a_n = a_{n-1} + 1 : 2a_n - 1
  descending,  // a_n = a_{n-1} - 1 : -(2a_n + 1)
  pair_plus,   // otherwise, a_{n-1} < a_n : +(a_n + a_{n-1})
  pair_minus,  //                            -(a_n + a_{n-1})
  direct,      // n = 3, where the shuffle element is 1 + Y_3 : 1 + a_3
};

std::string to_string(EigenCase c);

/// One eigenvalue numerator/(2n-3) of the transition operator on the group
/// algebra of A_n, with its multiplicity in the regular representation.
struct SpectrumEntry {
  int numerator = 0;
  int denominator = 1;
  std::uint64_t multiplicity = 0;
  Partition shape;                // shape of the generating tableau
  std::size_t tableau_index = 0;  // position in enumerate_syt(shape)
  EigenCase source = EigenCase::ascending;
};

/// Which member of a conjugate pair {lambda, lambda'} labels the pair.
enum class Representative { first_in_order, second_in_order };

/// Full spectrum for n >= 3, in canonical partition order. Multiplicities
/// sum to n!/2.
std::vector<SpectrumEntry> spectrum_of(int n, Representative rep = Representative::first_in_order,
                                       unsigned threads = 1);

/// numerator -> total multiplicity.
std::map<int, std::uint64_t> aggregate(std::span<const SpectrumEntry> entries);

struct Table1Family {
  Partition shape;  // (n), (n-1,1), (n-2,2) or (n-2,1,1)
  std::uint64_t dimension = 0;
  std::map<int, std::uint64_t> expected;  // per-copy multiplicities
  std::map<int, std::uint64_t> actual;
  bool ok = false;
};

struct Table1Report {
  int n = 0;
  std::vector<Table1Family> families;
  bool ok() const;
  /// Human-readable listing of mismatching rows; empty when ok().
  std::string diff() const;
};

/// Compares the spectrum restricted to the four small shapes against the
/// closed-form per-copy rows. Requires n >= 6.
Table1Report table1_check(int n);

struct TraceOracleVerdict {
  int n = 0;
  int k_max = 0;
  std::vector<BigInt> traces;   // Trace(A^k), k = 1..k_max
  std::vector<BigInt> moments;  // sum mult * num^k
  int first_mismatch = 0;       // 0 when all agree
  bool ok() const { return first_mismatch == 0; }
};

/// Exact check that Trace(A^k) equals sum mult * num^k, where A is the 0/1
/// matrix over A_n with A[x][y] = 1 iff x^-1 y lies in the shuffle support.
/// Supports 3 <= n <= 6.
TraceOracleVerdict trace_moment_oracle(int n, int k_max);

}  // namespace tt2
