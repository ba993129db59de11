#ifndef BRAIDREV_REVERSING_HPP
#define BRAIDREV_REVERSING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidrev/word.hpp"

namespace braidrev {

/// Final positive-negative (or negative-positive) data of an exhaustive
/// reversal: w reverses to numerator * denominator^-1 on the right, and to
/// denominator^-1 * numerator on the left. Both parts are positive words.
struct ReverseOutcome {
  Word numerator;
  Word denominator;
  std::uint64_t steps = 0;
};

enum class PickStrategy { leftmost, rightmost, random };

/// Guard against runaway loops: 10 * (n(n-1)/2)^2 * len^2 elementary steps.
/// Reversing of a braid word always terminates well below this.
std::uint64_t default_step_budget(int strands, std::size_t length);

/// Applies right-reversing steps (leftmost redex first) until the word is
/// positive-negative. The outcome is the same under any strategy. Throws
/// budget_exhausted if the step budget runs out.
ReverseOutcome reverse_right(const Word& w);
ReverseOutcome reverse_right(const Word& w, std::uint64_t step_budget);

/// Mirror of reverse_right; ends at a negative-positive word
/// denominator^-1 * numerator.
ReverseOutcome reverse_left(const Word& w);
ReverseOutcome reverse_left(const Word& w, std::uint64_t step_budget);

/// reverse_right with an explicit redex-picking strategy; `seed` matters only
/// for PickStrategy::random.
ReverseOutcome reverse_right_with_strategy(const Word& w, PickStrategy strategy, std::uint64_t seed,
                                           std::uint64_t step_budget);

/// The rectangular spine of the maximal right-reversing diagram of w.
///
/// Nodes form a (p+1) x (q+1) lattice, row 0 on top. u[i][j] labels the
/// vertical edge in column j between rows i-1 and i (1 <= i <= p); v[i][j]
/// labels the horizontal edge in row i between columns j-1 and j
/// (1 <= j <= q). The input word is placed as a staircase from the
/// bottom-left node: a negative letter moves one row up, a positive letter
/// one column right. Each cell closes by u[i][j-1]^-1 v[i-1][j] reversing to
/// v[i][j] u[i][j]^-1. Cells above the staircase never materialize; when w is
/// not negative-positive the top-left corner region is missing and
/// corner_missing is set.
struct ReversingGrid {
  int strands = 2;
  std::size_t p = 0;  // negative letters of w
  std::size_t q = 0;  // positive letters of w
  bool corner_missing = false;
  std::vector<std::vector<std::optional<Word>>> u;  // (p+1) x (q+1)
  std::vector<std::vector<std::optional<Word>>> v;  // (p+1) x (q+1)

  /// Concatenation of the bottom row v[p][1..q]; equals the right numerator.
  Word bottom_row() const;
  /// Concatenation of the right column u[1..p][q]; equals the right denominator.
  Word right_column() const;
};

ReversingGrid build_grid(const Word& w);

/// Numbers of nonempty simple factors in the grid's bottom row and right
/// column; at most q and p respectively.
std::pair<std::size_t, std::size_t> simple_factor_counts(const Word& w);

std::string grid_to_json(const ReversingGrid& g);
ReversingGrid grid_from_json(const std::string& text);
std::string grid_to_ascii(const ReversingGrid& g);

}  // namespace braidrev

#endif
