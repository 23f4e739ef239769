#include "roughver/word.hpp"

#include <algorithm>
#include <charconv>

#include "roughver/errors.hpp"

namespace roughver {

void check_alphabet(int d) {
  if (d < 1 || d > kMaxAlphabet) {
    throw InvalidParameter("alphabet size must be in 1.." + std::to_string(kMaxAlphabet) +
                           ", got " + std::to_string(d));
  }
}

namespace {

char encode_letter(int i) {
  if (i < 1 || i > kMaxAlphabet) {
    throw InvalidParameter("letter " + std::to_string(i) + " outside 1.." +
                           std::to_string(kMaxAlphabet));
  }
  return static_cast<char>(i);
}

}  // namespace

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int i : letters) letters_.push_back(encode_letter(i));
}

Word::Word(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int i : letters) letters_.push_back(encode_letter(i));
}

Word Word::letter(int i) { return Word(std::string(1, encode_letter(i))); }

int Word::max_letter() const noexcept {
  int best = 0;
  for (std::size_t i = 0; i < size(); ++i) best = std::max(best, (*this)[i]);
  return best;
}

std::vector<int> Word::letters() const {
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = (*this)[i];
  return out;
}

Word& Word::push_back(int letter) {
  letters_.push_back(encode_letter(letter));
  return *this;
}

std::string Word::to_string(int d) const {
  std::string out;
  if (d <= 9) {
    for (std::size_t i = 0; i < size(); ++i) out.push_back(static_cast<char>('0' + (*this)[i]));
    return out;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string((*this)[i]);
  }
  return out;
}

Word Word::parse(std::string_view text, int d) {
  std::vector<int> letters;
  auto check = [&](int v, std::size_t pos) {
    int limit = d > 0 ? d : kMaxAlphabet;
    if (v < 1 || v > limit) {
      throw ParseError("letter " + std::to_string(v) + " outside 1.." + std::to_string(limit), pos);
    }
  };
  if (text.find(',') != std::string_view::npos || d > 9) {
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
      if (ec != std::errc() || ptr != text.data() + end) {
        throw ParseError("malformed word '" + std::string(text) + "'", pos);
      }
      check(v, pos);
      letters.push_back(v);
      pos = end + 1;
    }
    return Word(letters);
  }
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw ParseError("malformed word '" + std::string(text) + "'", pos);
    }
    check(c - '0', pos);
    letters.push_back(c - '0');
  }
  return Word(letters);
}

std::vector<Word> words_of_length(int d, std::size_t len) {
  check_alphabet(d);
  std::vector<Word> out{Word()};
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(d));
    for (const Word& w : out) {
      for (int i = 1; i <= d; ++i) {
        Word x = w;
        next.push_back(std::move(x.push_back(i)));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace roughver
