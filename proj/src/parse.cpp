#include "hq/parse.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace hq {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

namespace {

class ScalarParser {
 public:
  ScalarParser(const std::string& s, const CycContext& ctx) : s_(s), ctx_(ctx) {}

  Scalar parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty scalar", pos_);
    Scalar v = sum();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "' in scalar", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar sum() {
    Scalar acc(0);
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        return acc;
      }
      Scalar t = product();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
  }

  Scalar product() {
    Scalar acc = power();
    while (true) {
      skip();
      if (eat('*')) {
        acc = acc * power();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        size_t at = pos_++;
        Scalar d = power();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  Scalar power() {
    Scalar base = atom();
    skip();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      else eat('+');
      skip();
      size_t start = pos_;
      long e = integer();
      if (neg) e = -e;
      if (e < 0 && base.is_zero()) throw ParseError("negative power of zero", start);
      return pow(base, e);
    }
    return base;
  }

  long integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return std::stol(s_.substr(start, pos_ - start));
  }

  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of scalar", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = sum();
      if (!eat(')')) throw ParseError("missing ')'", pos_);
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (s_.compare(pos_, 4, "zeta") == 0) {
      size_t start = pos_;
      pos_ += 4;
      long n = integer();
      if (n < 1) throw ParseError("zeta order must be positive", start);
      if (ctx_.order() % n != 0)
        throw ParseError("zeta" + std::to_string(n) + " needs the session order to be a multiple of " +
                             std::to_string(n) + " (order is " + std::to_string(ctx_.order()) + "; use order " +
                             std::to_string(std::lcm(static_cast<long>(ctx_.order()), n)) + ")",
                         start);
      return root_of_unity(ctx_, ctx_.order() / n);
    }
    if (c == 'z' && (pos_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return root_of_unity(ctx_, 1);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "' in scalar", pos_);
  }

  const std::string& s_;
  const CycContext& ctx_;
  size_t pos_ = 0;
};

std::vector<SignedTerm> split_at(const std::string& text, bool at_signs) {
  std::vector<SignedTerm> out;
  int depth = 0;
  int sign = 1;
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string piece = text.substr(start, end - start);
    size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    out.push_back({sign, trim(piece), start + lead});
  };
  size_t last_nonspace = std::string::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    bool split = false;
    if (depth == 0) {
      if (at_signs && (c == '+' || c == '-')) {
        char prev = last_nonspace == std::string::npos ? '\0' : text[last_nonspace];
        // Signs after an operator belong to the following factor.
        split = prev != '^' && prev != '*' && prev != '/';
      } else if (!at_signs && c == '*') {
        split = true;
      }
    }
    if (split) {
      bool empty = trim(text.substr(start, i - start)).empty();
      if (at_signs && empty) {
        if (c == '-') sign = -sign;
      } else {
        flush(i);
        sign = (at_signs && c == '-') ? -1 : 1;
      }
      start = i + 1;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) last_nonspace = i;
  }
  flush(text.size());
  return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text, const CycContext& ctx) { return ScalarParser(text, ctx).parse(); }

Matrix parse_matrix(const std::string& text, const CycContext& ctx) {
  std::string t = trim(text);
  size_t base = text.find_first_not_of(" \t");
  if (base == std::string::npos) base = 0;
  if (t.size() < 4 || t.front() != '[' || t.back() != ']')
    throw ParseError("matrix must look like [[a, b], [c, d]]", base);
  std::vector<Vector> rows;
  size_t i = 1;
  while (i + 1 < t.size()) {
    while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ',')) ++i;
    if (i + 1 >= t.size()) break;
    if (t[i] != '[') throw ParseError("expected '[' starting a matrix row", base + i);
    size_t close = t.find(']', i);
    if (close == std::string::npos) throw ParseError("unterminated matrix row", base + i);
    std::string body = t.substr(i + 1, close - i - 1);
    Vector row;
    size_t start = 0;
    int depth = 0;
    for (size_t k = 0; k <= body.size(); ++k) {
      if (k < body.size() && body[k] == '(') ++depth;
      if (k < body.size() && body[k] == ')') --depth;
      if (k == body.size() || (body[k] == ',' && depth == 0)) {
        std::string entry = body.substr(start, k - start);
        try {
          row.push_back(parse_scalar(entry, ctx));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), base + i + 1 + start + e.column());
        }
        start = k + 1;
      }
    }
    rows.push_back(std::move(row));
    i = close + 1;
  }
  if (rows.empty()) throw ParseError("matrix has no rows", base);
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw ParseError("matrix rows have different lengths", base);
  return Matrix::from_rows(rows);
}

std::vector<SignedTerm> split_terms(const std::string& text) { return split_at(text, true); }
std::vector<SignedTerm> split_factors(const std::string& text) { return split_at(text, false); }

std::optional<std::vector<size_t>> parse_word(const std::string& raw, const std::vector<std::string>& names) {
  std::string text = trim(raw);
  if (text.empty()) return std::nullopt;
  // Reads "name" or "name^k" at position pos of piece; returns the matched letters.
  auto read_power = [](const std::string& s, size_t& pos) -> long {
    if (pos >= s.size() || s[pos] != '^') return 1;
    size_t start = ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) return -1;
    return std::stol(s.substr(start, pos - start));
  };
  std::function<bool(const std::string&, size_t, std::vector<size_t>&)> segment =
      [&](const std::string& s, size_t pos, std::vector<size_t>& acc) -> bool {
    if (pos == s.size()) return true;
    // Longest names first so "ab" wins over "a" when both exist.
    std::vector<size_t> order(names.size());
    for (size_t k = 0; k < names.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return names[x].size() > names[y].size(); });
    for (size_t k : order) {
      const auto& nm = names[k];
      if (nm.empty() || s.compare(pos, nm.size(), nm) != 0) continue;
      size_t next = pos + nm.size();
      long e = read_power(s, next);
      if (e < 1) continue;
      size_t before = acc.size();
      for (long r = 0; r < e; ++r) acc.push_back(k);
      if (segment(s, next, acc)) return true;
      acc.resize(before);
    }
    return false;
  };
  std::vector<size_t> word;
  if (text.find('.') != std::string::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t dot = text.find('.', start);
      if (dot == std::string::npos) dot = text.size();
      std::string piece = trim(text.substr(start, dot - start));
      if (piece.empty()) return std::nullopt;
      std::vector<size_t> part;
      if (!segment(piece, 0, part)) return std::nullopt;
      word.insert(word.end(), part.begin(), part.end());
      start = dot + 1;
    }
    return word;
  }
  if (!segment(text, 0, word)) return std::nullopt;
  return word;
}

std::vector<std::pair<std::vector<size_t>, Scalar>> parse_linear_combination(
    const std::string& text, const std::vector<std::string>& names, const CycContext& ctx) {
  std::vector<std::pair<std::vector<size_t>, Scalar>> out;
  for (const auto& term : split_terms(text)) {
    if (term.text.empty()) throw ParseError("empty term", term.offset);
    Scalar coeff(term.sign);
    std::vector<size_t> word;
    bool have_word = false;
    for (const auto& f : split_factors(term.text)) {
      if (f.text.empty()) throw ParseError("empty factor", term.offset + f.offset);
      std::string factor = f.text;
      // A leading number glued to a word, as in "2aA".
      size_t k = 0;
      while (k < factor.size() && (std::isdigit(static_cast<unsigned char>(factor[k])) || factor[k] == '/')) ++k;
      if (k > 0 && k < factor.size()) {
        auto w = parse_word(factor.substr(k), names);
        if (w) {
          coeff = coeff * parse_scalar(factor.substr(0, k), ctx);
          word.insert(word.end(), w->begin(), w->end());
          have_word = true;
          continue;
        }
      }
      if (auto w = parse_word(factor, names)) {
        word.insert(word.end(), w->begin(), w->end());
        have_word = true;
        continue;
      }
      try {
        coeff = coeff * parse_scalar(factor, ctx);
      } catch (const ParseError& e) {
        throw ParseError("cannot read '" + factor + "' as a word or a scalar: " + e.what(),
                         term.offset + f.offset + e.column());
      }
    }
    if (!have_word) throw ParseError("term '" + term.text + "' has no word", term.offset);
    out.emplace_back(std::move(word), coeff);
  }
  return out;
}

}  // namespace hq
