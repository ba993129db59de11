#ifndef BRAIDREV_WORD_HPP
#define BRAIDREV_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidrev {

/// Raised when a step budget or node budget runs out. Callers treat this as a
/// resource limit, not a domain error.
struct budget_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One signed Artin generator. Stored as a single byte: +i encodes sigma_i,
/// -i encodes its inverse.
class Letter {
 public:
  Letter(int index, int sign) {
    if (index < 1 || index > 127) throw std::invalid_argument("letter index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    code_ = static_cast<std::int8_t>(sign > 0 ? index : -index);
  }

  static Letter from_code(std::int8_t code) {
    if (code == 0) throw std::invalid_argument("letter code must be nonzero");
    Letter l;
    l.code_ = code;
    return l;
  }

  int index() const { return code_ < 0 ? -code_ : code_; }
  int sign() const { return code_ < 0 ? -1 : 1; }
  bool positive() const { return code_ > 0; }
  Letter inverse() const { return from_code(static_cast<std::int8_t>(-code_)); }
  std::int8_t code() const { return code_; }

  friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  friend bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }

 private:
  Letter() : code_(1) {}
  std::int8_t code_;
};

/// Images of 1..n under the induced permutation, 1-based:
/// images[i-1] is the final position of the strand starting at position i.
using Permutation = std::vector<int>;

/// A braid word on a fixed number of strands: a finite sequence of letters
/// sigma_i^{+-1} with 1 <= i <= strands-1. The empty sequence is the word
/// epsilon. Words are immutable values for all practical purposes; every
/// operation returns a new word.
class Word {
 public:
  Word() : strands_(2) {}

  explicit Word(int strands) : strands_(strands) { check_strands(strands); }

  Word(int strands, std::vector<Letter> letters) : strands_(strands), letters_(std::move(letters)) {
    check_strands(strands);
    for (Letter l : letters_) check_letter(l);
  }

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void append(Letter l) {
    check_letter(l);
    letters_.push_back(l);
  }

  Word inverse() const {
    Word r(strands_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
    return r;
  }

  Word subword(std::size_t pos, std::size_t len) const {
    if (pos + len > letters_.size()) throw std::out_of_range("subword out of range");
    Word r(strands_);
    r.letters_.assign(letters_.begin() + pos, letters_.begin() + pos + len);
    return r;
  }

  friend Word operator+(const Word& a, const Word& b) {
    if (a.strands_ != b.strands_) throw std::invalid_argument("strand count mismatch");
    Word r = a;
    r.letters_.insert(r.letters_.end(), b.letters_.begin(), b.letters_.end());
    return r;
  }

  bool is_positive() const {
    for (Letter l : letters_)
      if (!l.positive()) return false;
    return true;
  }

  bool is_negative() const {
    for (Letter l : letters_)
      if (l.positive()) return false;
    return true;
  }

  /// Positive prefix followed by negative suffix (either part may be empty).
  bool is_positive_negative() const {
    bool seen_negative = false;
    for (Letter l : letters_) {
      if (!l.positive())
        seen_negative = true;
      else if (seen_negative)
        return false;
    }
    return true;
  }

  /// Negative prefix followed by positive suffix.
  bool is_negative_positive() const {
    bool seen_positive = false;
    for (Letter l : letters_) {
      if (l.positive())
        seen_positive = true;
      else if (seen_positive)
        return false;
    }
    return true;
  }

  std::size_t positive_letter_count() const {
    std::size_t c = 0;
    for (Letter l : letters_) c += l.positive() ? 1 : 0;
    return c;
  }

  std::size_t negative_letter_count() const { return letters_.size() - positive_letter_count(); }

  /// Raw letter codes as bytes; used as a dedup key by searches that work over
  /// a fixed strand count.
  std::string key() const {
    std::string k;
    k.reserve(letters_.size());
    for (Letter l : letters_) k.push_back(static_cast<char>(l.code()));
    return k;
  }

  static Word from_key(int strands, const std::string& key) {
    Word r(strands);
    r.letters_.reserve(key.size());
    for (char c : key) r.append(Letter::from_code(static_cast<std::int8_t>(c)));
    return r;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  /// Letterwise order on byte codes; total and deterministic, used only as a
  /// tie-break in searches.
  friend bool lexicographically_less(const Word& a, const Word& b) {
    const auto& x = a.letters_;
    const auto& y = b.letters_;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      if (x[i].code() != y[i].code()) return x[i].code() < y[i].code();
    }
    return x.size() < y.size();
  }

 private:
  static void check_strands(int strands) {
    if (strands < 2) throw std::invalid_argument("strand count must be at least 2");
  }
  void check_letter(Letter l) const {
    if (l.index() >= strands_) throw std::invalid_argument("letter index out of range for strand count");
  }

  int strands_;
  std::vector<Letter> letters_;
};

enum class WordStyle { alphabetic, numeric };

/// Parses alphabetic ("Bacb": a-y positive, A-Y negative) or numeric
/// ("-2 1 3 2") input. Whitespace-only input is epsilon.
Word parse_word(const std::string& text, int strands);

/// Formats a word; alphabetic style requires strands <= 26.
std::string format_word(const Word& w, WordStyle style = WordStyle::alphabetic);

/// Deletes adjacent inverse pairs until none remain. The result does not
/// depend on the cancellation order.
Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

/// Free reduction plus collapsing sigma_i^e sigma_j^d sigma_i^{-e} (|i-j| >= 2)
/// to sigma_j^d, scanning leftmost-first. Other scan orders can give different
/// but commutation-equivalent words; this one is fixed for reproducibility.
Word strong_reduce(const Word& w);
bool is_strongly_reduced(const Word& w);

int exponent_sum(const Word& w);

/// Image in the symmetric group; letters act left to right, sign-independent.
Permutation permutation_of(const Word& w);

/// True iff every pair of strands crosses at most once in the wire diagram of
/// u, i.e. u represents a permutation braid (a divisor of the half twist).
/// Requires a positive word.
bool is_simple(const Word& u);

/// The half-twist word sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1).
Word fundamental_word(int strands);

}  // namespace braidrev

#endif
