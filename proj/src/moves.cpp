#include "braidrev/moves.hpp"

#include <cstdlib>

namespace braidrev {

namespace {

int index_gap(Letter a, Letter b) {
  int g = a.index() - b.index();
  return g < 0 ? -g : g;
}

MoveRule rule_for(Letter a, Letter b) {
  int g = index_gap(a, b);
  if (g == 0) return MoveRule::cancel;
  if (g == 1) return MoveRule::braid;
  return MoveRule::comm;
}

Word splice(const Word& w, std::size_t pos, std::size_t window, const std::vector<Letter>& repl) {
  std::vector<Letter> out;
  out.reserve(w.size() - window + repl.size());
  const auto& ls = w.letters();
  out.insert(out.end(), ls.begin(), ls.begin() + pos);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), ls.begin() + pos + window, ls.end());
  return Word(w.strands(), std::move(out));
}

// Replacement for a right-reversing redex sigma_i^-1 sigma_j.
std::vector<Letter> right_replacement(Letter neg, Letter pos, MoveRule rule) {
  int i = neg.index(), j = pos.index();
  switch (rule) {
    case MoveRule::cancel:
      return {};
    case MoveRule::comm:
      return {Letter(j, 1), Letter(i, -1)};
    case MoveRule::braid:
      return {Letter(j, 1), Letter(i, 1), Letter(j, -1), Letter(i, -1)};
  }
  return {};
}

// Replacement for a left-reversing redex sigma_i sigma_j^-1.
std::vector<Letter> left_replacement(Letter pos, Letter neg, MoveRule rule) {
  int i = pos.index(), j = neg.index();
  switch (rule) {
    case MoveRule::cancel:
      return {};
    case MoveRule::comm:
      return {Letter(j, -1), Letter(i, 1)};
    case MoveRule::braid:
      return {Letter(j, -1), Letter(i, -1), Letter(j, 1), Letter(i, 1)};
  }
  return {};
}

}  // namespace

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::reverse_right: return "reverse-right";
    case MoveKind::reverse_left: return "reverse-left";
    case MoveKind::monotone: return "monotone";
    case MoveKind::free_cancel: return "free-cancel";
    case MoveKind::strong_cancel: return "strong-cancel";
  }
  return "?";
}

const char* to_string(MoveRule r) {
  switch (r) {
    case MoveRule::comm: return "comm";
    case MoveRule::braid: return "braid";
    case MoveRule::cancel: return "cancel";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  if (s == "reverse-right") return MoveKind::reverse_right;
  if (s == "reverse-left") return MoveKind::reverse_left;
  if (s == "monotone") return MoveKind::monotone;
  if (s == "free-cancel") return MoveKind::free_cancel;
  if (s == "strong-cancel") return MoveKind::strong_cancel;
  throw std::invalid_argument("unknown move kind: " + s);
}

MoveRule move_rule_from_string(const std::string& s) {
  if (s == "comm") return MoveRule::comm;
  if (s == "braid") return MoveRule::braid;
  if (s == "cancel") return MoveRule::cancel;
  throw std::invalid_argument("unknown move rule: " + s);
}

Word apply_move(const Word& w, const Move& m) {
  const auto& ls = w.letters();
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("illegal move: ") + what);
  };
  switch (m.kind) {
    case MoveKind::reverse_right: {
      need(m.pos + 1 < ls.size(), "position out of range");
      Letter a = ls[m.pos], b = ls[m.pos + 1];
      need(!a.positive() && b.positive(), "expected a negative-positive pair");
      need(rule_for(a, b) == m.rule, "rule does not match the letters");
      return splice(w, m.pos, 2, right_replacement(a, b, m.rule));
    }
    case MoveKind::reverse_left: {
      need(m.pos + 1 < ls.size(), "position out of range");
      Letter a = ls[m.pos], b = ls[m.pos + 1];
      need(a.positive() && !b.positive(), "expected a positive-negative pair");
      need(rule_for(a, b) == m.rule, "rule does not match the letters");
      return splice(w, m.pos, 2, left_replacement(a, b, m.rule));
    }
    case MoveKind::monotone: {
      if (m.rule == MoveRule::comm) {
        need(m.pos + 1 < ls.size(), "position out of range");
        Letter a = ls[m.pos], b = ls[m.pos + 1];
        need(a.sign() == b.sign(), "commutation needs letters of one sign");
        need(index_gap(a, b) >= 2, "commutation needs |i-j| >= 2");
        return splice(w, m.pos, 2, {b, a});
      }
      need(m.rule == MoveRule::braid, "monotone rule must be comm or braid");
      need(m.pos + 2 < ls.size(), "position out of range");
      Letter a = ls[m.pos], b = ls[m.pos + 1], c = ls[m.pos + 2];
      need(a.sign() == b.sign() && b.sign() == c.sign(), "braid replacement needs letters of one sign");
      need(a.index() == c.index() && index_gap(a, b) == 1, "braid replacement needs pattern i,j,i with |i-j| = 1");
      return splice(w, m.pos, 3, {b, a, b});
    }
    case MoveKind::free_cancel: {
      need(m.rule == MoveRule::cancel, "free-cancel rule must be cancel");
      need(m.pos + 1 < ls.size(), "position out of range");
      Letter a = ls[m.pos], b = ls[m.pos + 1];
      need(a.index() == b.index() && a.sign() == -b.sign(), "expected an inverse pair");
      return splice(w, m.pos, 2, {});
    }
    case MoveKind::strong_cancel: {
      need(m.rule == MoveRule::comm, "strong-cancel rule must be comm");
      need(m.pos + 2 < ls.size(), "position out of range");
      Letter a = ls[m.pos], b = ls[m.pos + 1], c = ls[m.pos + 2];
      need(a.index() == c.index() && a.sign() == -c.sign() && index_gap(a, b) >= 2,
           "expected pattern sigma_i^e sigma_j^d sigma_i^-e with |i-j| >= 2");
      return splice(w, m.pos, 3, {b});
    }
  }
  throw std::invalid_argument("unknown move kind");
}

std::vector<std::pair<Move, Word>> right_reverse_moves(const Word& w) {
  std::vector<std::pair<Move, Word>> out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    if (!ls[i].positive() && ls[i + 1].positive()) {
      Move m{MoveKind::reverse_right, i, rule_for(ls[i], ls[i + 1])};
      out.emplace_back(m, apply_move(w, m));
    }
  }
  return out;
}

std::vector<std::pair<Move, Word>> left_reverse_moves(const Word& w) {
  std::vector<std::pair<Move, Word>> out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    if (ls[i].positive() && !ls[i + 1].positive()) {
      Move m{MoveKind::reverse_left, i, rule_for(ls[i], ls[i + 1])};
      out.emplace_back(m, apply_move(w, m));
    }
  }
  return out;
}

std::vector<std::pair<Move, Word>> monotone_moves(const Word& w) {
  std::vector<std::pair<Move, Word>> out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    if (ls[i].sign() == ls[i + 1].sign() && index_gap(ls[i], ls[i + 1]) >= 2) {
      Move m{MoveKind::monotone, i, MoveRule::comm};
      out.emplace_back(m, apply_move(w, m));
    }
    if (i + 2 < ls.size() && ls[i].sign() == ls[i + 1].sign() && ls[i + 1].sign() == ls[i + 2].sign() &&
        ls[i].index() == ls[i + 2].index() && index_gap(ls[i], ls[i + 1]) == 1) {
      Move m{MoveKind::monotone, i, MoveRule::braid};
      out.emplace_back(m, apply_move(w, m));
    }
  }
  return out;
}

std::vector<std::pair<Move, Word>> commutation_moves(const Word& w) {
  std::vector<std::pair<Move, Word>> out;
  for (auto& mw : monotone_moves(w))
    if (mw.first.rule == MoveRule::comm) out.push_back(std::move(mw));
  return out;
}

}  // namespace braidrev
