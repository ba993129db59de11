#include "braidrev/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidrev {

Word parse_word(const std::string& text, int strands) {
  Word w(strands);
  bool any_alpha = false;
  bool any_other = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (std::isalpha(static_cast<unsigned char>(c)))
      any_alpha = true;
    else
      any_other = true;
  }
  if (any_alpha && any_other) throw std::invalid_argument("mixed alphabetic and numeric word input");
  if (any_alpha) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      int index;
      int sign;
      if (c >= 'a' && c <= 'y') {
        index = c - 'a' + 1;
        sign = 1;
      } else if (c >= 'A' && c <= 'Y') {
        index = c - 'A' + 1;
        sign = -1;
      } else {
        throw std::invalid_argument(std::string("unknown character in word: '") + c + "'");
      }
      if (index >= strands) throw std::invalid_argument(std::string("generator index out of range for strands: '") + c + "'");
      w.append(Letter(index, sign));
    }
    return w;
  }
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown token in numeric word: '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("unknown token in numeric word: '" + tok + "'");
    if (v == 0) throw std::invalid_argument("generator index 0 is invalid");
    int index = v < 0 ? -v : v;
    if (index >= strands) throw std::invalid_argument("generator index out of range for strands: " + tok);
    w.append(Letter(index, v < 0 ? -1 : 1));
  }
  return w;
}

std::string format_word(const Word& w, WordStyle style) {
  std::string out;
  if (style == WordStyle::alphabetic) {
    if (w.strands() > 26) throw std::invalid_argument("alphabetic style needs strands <= 26");
    for (Letter l : w.letters()) {
      char base = l.positive() ? 'a' : 'A';
      out.push_back(static_cast<char>(base + l.index() - 1));
    }
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i].sign() * w[i].index());
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w.letters()) {
    if (!stack.empty() && stack.back().index() == l.index() && stack.back().sign() == -l.sign())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(w.strands(), std::move(stack));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].index() == w[i + 1].index() && w[i].sign() == -w[i + 1].sign()) return false;
  return true;
}

Word strong_reduce(const Word& w) {
  Word cur = free_reduce(w);
  for (;;) {
    bool changed = false;
    const auto& ls = cur.letters();
    for (std::size_t i = 0; i + 2 < ls.size(); ++i) {
      Letter a = ls[i], b = ls[i + 1], c = ls[i + 2];
      int gap = a.index() - b.index();
      if (gap < 0) gap = -gap;
      if (a.index() == c.index() && a.sign() == -c.sign() && gap >= 2) {
        std::vector<Letter> next(ls.begin(), ls.begin() + i);
        next.push_back(b);
        next.insert(next.end(), ls.begin() + i + 3, ls.end());
        cur = free_reduce(Word(cur.strands(), std::move(next)));
        changed = true;
        break;
      }
    }
    if (!changed) return cur;
  }
}

bool is_strongly_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    Letter a = w[i], b = w[i + 1], c = w[i + 2];
    int gap = a.index() - b.index();
    if (gap < 0) gap = -gap;
    if (a.index() == c.index() && a.sign() == -c.sign() && gap >= 2) return false;
  }
  return true;
}

int exponent_sum(const Word& w) {
  int s = 0;
  for (Letter l : w.letters()) s += l.sign();
  return s;
}

Permutation permutation_of(const Word& w) {
  const int n = w.strands();
  // occ[p] = strand currently at position p (1-based).
  std::vector<int> occ(static_cast<std::size_t>(n) + 1);
  std::iota(occ.begin(), occ.end(), 0);
  for (Letter l : w.letters()) std::swap(occ[l.index()], occ[l.index() + 1]);
  Permutation images(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) images[static_cast<std::size_t>(occ[p]) - 1] = p;
  return images;
}

bool is_simple(const Word& u) {
  if (!u.is_positive()) throw std::invalid_argument("is_simple requires a positive word");
  const int n = u.strands();
  std::vector<int> occ(static_cast<std::size_t>(n) + 1);
  std::iota(occ.begin(), occ.end(), 0);
  std::vector<bool> crossed(static_cast<std::size_t>(n + 1) * (n + 1), false);
  for (Letter l : u.letters()) {
    int i = l.index();
    int s = occ[i], t = occ[i + 1];
    if (s > t) std::swap(s, t);
    std::size_t at = static_cast<std::size_t>(s) * (n + 1) + t;
    if (crossed[at]) return false;
    crossed[at] = true;
    std::swap(occ[i], occ[i + 1]);
  }
  return true;
}

Word fundamental_word(int strands) {
  Word w(strands);
  for (int k = 1; k < strands; ++k)
    for (int i = k; i >= 1; --i) w.append(Letter(i, 1));
  return w;
}

}  // namespace braidrev
