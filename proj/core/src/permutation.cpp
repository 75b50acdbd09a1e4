#include "ptcount/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptcount {

namespace {

void validate_word(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) throw std::invalid_argument("permutation word must be nonempty");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation word value out of range [1, n]");
    if (seen[v]) throw std::invalid_argument("permutation word repeats a value");
    seen[v] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  validate_word(word_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(Unchecked{}, std::move(word));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> word;
  const bool delimited =
      text.find(',') != std::string::npos || text.find(' ') != std::string::npos;
  if (delimited) {
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
      std::istringstream inner(piece);
      std::string tok;
      while (inner >> tok) word.push_back(std::stoi(tok));
    }
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw std::invalid_argument("permutation word must be digits 1-9 or a "
                                    "comma-separated list");
      word.push_back(ch - '0');
    }
  }
  return Permutation(std::move(word));
}

int Permutation::image_of(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("permutation position out of range");
  return word_[static_cast<std::size_t>(i) - 1];
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i)
    if (image_of(image_of(i)) != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 9) {
    for (int v : word_) out += static_cast<char>('0' + v);
  } else {
    for (std::size_t k = 0; k < word_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(word_[k]);
    }
  }
  return out;
}

}  // namespace ptcount
