#pragma once

// Freely reduced words over the two-letter alphabet {a, b} and parsing of
// group presentations.  Letters are encoded as small integers so that the
// inverse of a letter is a single xor:
//
//   0 = a, 1 = a^-1, 2 = b, 3 = b^-1,   inv(x) = x ^ 1
//
// The letter order (a < a^-1 < b < b^-1) is the canonical order used
// throughout the engine (coset-table columns, BFS transversals, canonical
// forms).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace contextua {

using Letter = std::uint8_t;

inline constexpr Letter kLetterA = 0;     // a
inline constexpr Letter kLetterAInv = 1;  // a^-1
inline constexpr Letter kLetterB = 2;     // b
inline constexpr Letter kLetterBInv = 3;  // b^-1
inline constexpr int kNumLetters = 4;

inline constexpr Letter inverse_letter(Letter x) { return x ^ 1u; }

inline char letter_char(Letter x) {
  static constexpr char chars[4] = {'a', 'A', 'b', 'B'};
  return chars[x];
}

class WordSyntaxError : public std::runtime_error {
 public:
  WordSyntaxError(std::size_t position, const std::string& what)
      : std::runtime_error("word syntax error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A freely reduced word.  The empty word is the identity e.  Instances are
// immutable after construction; every constructor reduces its input.
class Word {
 public:
  Word() = default;

  static Word from_letters(const std::vector<Letter>& raw) {
    Word w;
    w.letters_.reserve(raw.size());
    for (Letter x : raw) w.push_reduced(x);
    return w;
  }

  static Word single(Letter x) { return from_letters({x}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word operator*(const Word& rhs) const {
    Word w(*this);
    for (Letter x : rhs.letters_) w.push_reduced(x);
    return w;
  }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(inverse_letter(*it));
    return w;
  }

  Word pow(long long k) const {
    Word base = k >= 0 ? *this : inverse();
    unsigned long long reps = k >= 0 ? static_cast<unsigned long long>(k)
                                     : static_cast<unsigned long long>(-k);
    Word out;
    for (unsigned long long i = 0; i < reps; ++i) out = out * base;
    return out;
  }

  bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
  bool operator!=(const Word& rhs) const { return letters_ != rhs.letters_; }
  bool operator<(const Word& rhs) const {
    if (letters_.size() != rhs.letters_.size())
      return letters_.size() < rhs.letters_.size();
    return letters_ < rhs.letters_;
  }

 private:
  void push_reduced(Letter x) {
    if (!letters_.empty() && letters_.back() == inverse_letter(x))
      letters_.pop_back();
    else
      letters_.push_back(x);
  }

  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence.
inline Word reduce(const std::vector<Letter>& raw) {
  return Word::from_letters(raw);
}

// Canonical rendering: runs of a letter are collapsed to powers, inverses
// rendered in the a^-1 style.  parse_word(render(w)) == w.
inline std::string render(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    std::size_t run = j - i;
    Letter x = ls[i];
    bool inv = (x & 1u) != 0;
    out += letter_char(x & ~1u);  // base letter: 'a' or 'b'
    if (inv) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

namespace detail {

inline constexpr long long kMaxPower = 1ll << 20;
inline constexpr std::size_t kMaxWordLength = 1u << 20;

class WordParser {
 public:
  explicit WordParser(const std::string& text) : text_(text) {}

  Word parse() {
    Word w = parse_word_seq();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  Word parse_word_seq() {
    Word w;
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      w = w * parse_term();
      any = true;
      check_length(w);
    }
    if (!any) fail("empty word");
    return w;
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      long long k = parse_int();
      atom = atom.pow(k);
      check_length(atom);
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected letter or '('");
    char c = text_[pos_];
    switch (c) {
      case 'a': ++pos_; return Word::single(kLetterA);
      case 'A': ++pos_; return Word::single(kLetterAInv);
      case 'b': ++pos_; return Word::single(kLetterB);
      case 'B': ++pos_; return Word::single(kLetterBInv);
      case 'e': ++pos_; return Word();
      case '(': {
        ++pos_;
        Word w = parse_word_seq();
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
        ++pos_;
        return w;
      }
      default:
        fail(std::string("letter outside {a,b,A,B}: '") + c + "'");
    }
    return Word();  // unreachable
  }

  long long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > detail::kMaxPower) fail("exponent exceeds 2^20");
      ++pos_;
    }
    return neg ? -v : v;
  }

  void check_length(const Word& w) {
    if (w.length() > kMaxWordLength) fail("expanded word exceeds length bound");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw WordSyntaxError(pos_, msg);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the word grammar:  word := term+ ; term := atom ("^" int)? ;
// atom := "a"|"b"|"A"|"B"|"("word")".  Uppercase letters are inverses.
inline Word parse_word(const std::string& text) {
  return detail::WordParser(text).parse();
}

// A two-generator finite presentation <a,b | relators>.
struct Presentation {
  std::vector<Word> relators;
  std::string name;

  bool operator==(const Presentation&) const = default;
};

inline Presentation make_presentation(const std::vector<std::string>& relator_texts,
                                      const std::string& name = "") {
  Presentation p;
  p.name = name;
  for (std::size_t i = 0; i < relator_texts.size(); ++i) {
    Word r;
    try {
      r = parse_word(relator_texts[i]);
    } catch (const WordSyntaxError& e) {
      throw std::runtime_error("relator " + std::to_string(i + 1) + ": " +
                               e.what());
    }
    if (r.is_identity())
      throw std::runtime_error("relator " + std::to_string(i + 1) +
                               " reduces to the empty word");
    p.relators.push_back(r);
  }
  return p;
}

}  // namespace contextua
