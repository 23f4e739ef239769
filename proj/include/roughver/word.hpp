#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace roughver {

/// Alphabets are {1, ..., d} with 1 <= d <= kMaxAlphabet.
inline constexpr int kMaxAlphabet = 64;

/// Throws InvalidParameter unless 1 <= d <= kMaxAlphabet.
void check_alphabet(int d);

/// A finite word over {1, ..., d}. Letters are stored one per byte so that the
/// natural byte order is the lexicographic order on words (a proper prefix is
/// smaller). The empty word is the unit of concatenation.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(const std::vector<int>& letters);

  static Word letter(int i);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
  int front() const { return (*this)[0]; }
  int back() const { return (*this)[size() - 1]; }
  int max_letter() const noexcept;

  Word prefix(std::size_t len) const { return Word(letters_.substr(0, len)); }
  Word suffix_from(std::size_t pos) const { return Word(letters_.substr(pos)); }
  Word drop_back() const { return Word(letters_.substr(0, size() - 1)); }
  std::vector<int> letters() const;

  Word& operator+=(const Word& other) {
    letters_ += other.letters_;
    return *this;
  }
  Word& push_back(int letter);
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    int c = a.letters_.compare(b.letters_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Byte string with one letter per byte; usable as a hash/map key.
  const std::string& key() const noexcept { return letters_; }

  /// Digit string ("1122") when d <= 9, otherwise comma-separated ("1,12,3").
  std::string to_string(int d = 9) const;

  /// Inverse of to_string. A string containing a comma is always read as the
  /// comma-separated form. When d > 0 every letter is range-checked.
  static Word parse(std::string_view text, int d = 0);

 private:
  explicit Word(std::string bytes) : letters_(std::move(bytes)) {}
  std::string letters_;
};

/// Canonical order: by length first, then lexicographically.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.key()); }
};

/// All d^len words of length len, in lexicographic order.
std::vector<Word> words_of_length(int d, std::size_t len);

}  // namespace roughver
