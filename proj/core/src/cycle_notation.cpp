#include "chowsym/cycle_notation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chowsym {

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; }

std::vector<std::string> split_tokens(std::string_view body) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : body) {
    if (is_separator(c)) {
      if (!current.empty()) tokens.push_back(std::exchange(current, {}));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      current.push_back(c);
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in cycle");
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

int to_letter(const std::string& token) {
  const int v = std::stoi(token);
  if (v < 1) throw std::invalid_argument("letters are 1-based, got " + token);
  return v;
}

}  // namespace

Involution parse_cycles(std::string_view text, int m) {
  std::vector<std::pair<int, int>> pairs;
  int largest = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') {
      throw std::invalid_argument("expected '(' in cycle notation at offset " +
                                  std::to_string(pos));
    }
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced '('");
    auto tokens = split_tokens(text.substr(pos + 1, close - pos - 1));
    if (tokens.size() == 1 && tokens.front().size() > 1) {
      std::vector<std::string> digits;
      for (char d : tokens.front()) digits.emplace_back(1, d);
      tokens = std::move(digits);
    }
    std::vector<int> letters;
    for (const auto& t : tokens) letters.push_back(to_letter(t));
    for (int l : letters) largest = std::max(largest, l);
    if (letters.size() > 2) {
      throw std::invalid_argument("cycle of length " + std::to_string(letters.size()) +
                                  " is not part of an involution");
    }
    if (letters.size() == 2) pairs.emplace_back(letters[0], letters[1]);
    pos = close + 1;
  }
  if (m == 0) m = largest;
  if (m == 0) throw std::invalid_argument("cannot infer the size of an empty cycle list");
  if (largest > m) {
    throw std::invalid_argument("letter " + std::to_string(largest) + " exceeds m = " +
                                std::to_string(m));
  }
  return Involution::from_transpositions(m, pairs);
}

Involution parse_one_line(std::string_view text) {
  std::string body;
  for (char c : text) {
    if (c == '[' || c == ']') {
      body.push_back(' ');
    } else {
      body.push_back(c);
    }
  }
  std::vector<int> images;
  for (const auto& t : split_tokens(body)) images.push_back(to_letter(t));
  return Involution(std::move(images));
}

Involution parse_involution(std::string_view text, int m) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') return parse_cycles(text, m);
    break;
  }
  Involution w = parse_one_line(text);
  if (m != 0 && w.size() != m) {
    throw std::invalid_argument("one-line notation has size " + std::to_string(w.size()) +
                                ", expected " + std::to_string(m));
  }
  return w;
}

}  // namespace chowsym
