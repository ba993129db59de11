#ifndef BRAIDREV_MOVES_HPP
#define BRAIDREV_MOVES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "braidrev/word.hpp"

namespace braidrev {

enum class MoveKind { reverse_right, reverse_left, monotone, free_cancel, strong_cancel };

/// Which relation case a move uses: comm for |i-j| >= 2, braid for |i-j| = 1,
/// cancel for i = j.
enum class MoveRule { comm, braid, cancel };

/// One elementary transformation: a rule applied at a letter offset of the
/// source word. The unit of traces.
struct Move {
  MoveKind kind;
  std::size_t pos;
  MoveRule rule;

  friend bool operator==(const Move& a, const Move& b) {
    return a.kind == b.kind && a.pos == b.pos && a.rule == b.rule;
  }
};

const char* to_string(MoveKind k);
const char* to_string(MoveRule r);
MoveKind move_kind_from_string(const std::string& s);
MoveRule move_rule_from_string(const std::string& s);

/// Applies one move, validating that the letters at the position match the
/// declared kind and rule. Throws std::invalid_argument on an illegal move.
Word apply_move(const Word& w, const Move& m);

/// All positions where a negative-then-positive pair can be rewritten:
/// sigma_i^-1 sigma_j -> sigma_j sigma_i^-1 (comm), sigma_j sigma_i
/// sigma_j^-1 sigma_i^-1 (braid), or epsilon (cancel). Empty iff the word is
/// positive-negative.
std::vector<std::pair<Move, Word>> right_reverse_moves(const Word& w);

/// Mirror of right_reverse_moves on positive-then-negative pairs.
std::vector<std::pair<Move, Word>> left_reverse_moves(const Word& w);

/// All positions where a commutation swap (two adjacent same-sign letters,
/// |i-j| >= 2) or a Reidemeister-III replacement (three adjacent same-sign
/// letters i,j,i with |i-j| = 1) applies.
std::vector<std::pair<Move, Word>> monotone_moves(const Word& w);

/// monotone_moves restricted to the commutation case.
std::vector<std::pair<Move, Word>> commutation_moves(const Word& w);

}  // namespace braidrev

#endif
