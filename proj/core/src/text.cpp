#include "dioid/text.hpp"

#include <cctype>
#include <charconv>

namespace dioid {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ == s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }
  // Only the "g" of an exponent marker may be glued to digits.
  bool accept_exponent_marker() {
    if (peek() != 'g') return false;
    ++pos_;
    return true;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  MaxPlus scalar() {
    if (accept_word("eps")) return MaxPlus::eps();
    if (accept_word("top")) return MaxPlus::top();
    if (accept_word("e")) return MaxPlus::unit();
    char c = peek();
    if (c != '-' && !std::isdigit(static_cast<unsigned char>(c))) fail("expected eps, top, e or an integer");
    return MaxPlus(integer());
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  std::size_t pos() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }
  std::string_view rest() const { return s_.substr(pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

MaxPlus parse_scalar_all(std::string_view text) {
  Cursor c(text);
  MaxPlus v = c.scalar();
  if (!c.done()) c.fail("unexpected trailing input");
  return v;
}

// One monomial T[.gN]. A following ".(" is left for the period.
Monomial monomial(Cursor& c) {
  MaxPlus t = c.scalar();
  std::int64_t n = 0;
  if (c.peek() == '.' && c.rest().size() > 1) {
    std::string_view r = c.rest();
    std::size_t k = 1;
    while (k < r.size() && std::isspace(static_cast<unsigned char>(r[k]))) ++k;
    if (k < r.size() && r[k] == 'g') {
      c.expect('.');
      c.accept_exponent_marker();
      n = c.integer();
    }
  }
  return Monomial{t, n};
}

Series series(Cursor& c) {
  Series result;
  do {
    // Bare "top" and "eps" are ⊤(γ) and ε(γ); with an exponent they are
    // coefficients.
    std::size_t save = c.pos();
    if (c.accept_word("top") && c.peek() != '.') {
      result = Series::top();
      continue;
    }
    c.reset(save);
    if (c.accept_word("eps") && c.peek() != '.') continue;
    c.reset(save);

    std::vector<Monomial> group;
    if (c.accept('(')) {
      do group.push_back(monomial(c));
      while (c.accept('+'));
      c.expect(')');
    } else {
      group.push_back(monomial(c));
    }
    if (c.peek() == '.') {
      c.expect('.');
      c.expect('(');
      Monomial r = monomial(c);
      c.expect(')');
      c.expect('*');
      if (!r.coef.is_finite() || r.coef.value() <= 0 || r.exp <= 0)
        c.fail("period must be tau.gnu with tau > 0 and nu > 0");
      result = oplus(result, Series::periodic({}, group, Period{r.coef.value(), r.exp}));
    } else {
      result = oplus(result, Series::polynomial(group));
    }
  } while (c.accept('+'));
  return result;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T, class F>
Interval<T> parse_interval(std::string_view text, F parse_bound) {
  std::string_view s = trim(text);
  std::size_t offset = static_cast<std::size_t>(s.data() - text.data());
  auto sub = [&](std::size_t from, std::size_t len) {
    try {
      return parse_bound(s.substr(from, len));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), 1, offset + from + e.column());
    }
  };
  if (s.empty() || s.front() != '[') {
    T v = sub(0, s.size());
    return Interval<T>(v);
  }
  if (s.back() != ']') throw ParseError("expected ']'", 1, offset + s.size() + 1);
  int depth = 0;
  std::size_t comma = std::string_view::npos;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      if (comma != std::string_view::npos) throw ParseError("too many ',' in interval", 1, offset + i + 1);
      comma = i;
    }
  }
  if (comma == std::string_view::npos) throw ParseError("expected ',' in interval", 1, offset + 2);
  T lo = sub(1, comma - 1);
  T hi = sub(comma + 1, s.size() - comma - 2);
  if (!leq(lo, hi)) throw ParseError("interval lower bound exceeds upper bound", 1, offset + 1);
  return Interval<T>(lo, hi);
}

}  // namespace

MaxPlus parse_maxplus(std::string_view text) { return parse_scalar_all(text); }

Series parse_series(std::string_view text) {
  Cursor c(text);
  if (c.done()) c.fail("empty series literal");
  Series s = series(c);
  if (!c.done()) c.fail("unexpected trailing input");
  return s;
}

Interval<MaxPlus> parse_interval_maxplus(std::string_view text) {
  return parse_interval<MaxPlus>(text, parse_maxplus);
}

Interval<Series> parse_interval_series(std::string_view text) { return parse_interval<Series>(text, parse_series); }

std::string to_string(const Monomial& m) { return to_string(m.coef) + ".g" + std::to_string(m.exp); }

std::string to_string(const Series& s) {
  if (s.is_eps()) return "eps";
  if (s.is_top()) return "top";
  std::string out;
  auto add = [&](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  for (const auto& m : s.transient()) add(to_string(m));
  if (s.period()) {
    std::string q;
    for (const auto& m : s.pattern()) q += (q.empty() ? "" : " + ") + to_string(m);
    if (s.pattern().size() > 1) q = "(" + q + ")";
    add(q + ".(" + std::to_string(s.period()->tau) + ".g" + std::to_string(s.period()->nu) + ")*");
  }
  return out;
}

std::string to_string(const Interval<MaxPlus>& x) { return "[" + to_string(x.lo()) + "," + to_string(x.hi()) + "]"; }

std::string to_string(const Interval<Series>& x) { return "[" + to_string(x.lo()) + "," + to_string(x.hi()) + "]"; }

namespace detail {

std::vector<Token> tokenize_matrix(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&]() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto skip_blank = [&]() {
    while (i < text.size()) {
      if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
        advance();
      } else {
        break;
      }
    }
  };
  while (true) {
    skip_blank();
    if (i >= text.size()) break;
    Token t{"", line, col};
    int depth = 0;
    while (i < text.size()) {
      char ch = text[i];
      if (depth == 0 && (std::isspace(static_cast<unsigned char>(ch)) || ch == '#')) {
        // A '+' on either side of the gap keeps the literal going.
        std::size_t j = i;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        bool joined = (j < text.size() && text[j] == '+') || (!t.text.empty() && t.text.back() == '+');
        if (!joined || ch == '#') break;
        while (i < j) advance();
        t.text += ' ';
        continue;
      }
      if (ch == '(' || ch == '[') ++depth;
      if (ch == ')' || ch == ']') --depth;
      t.text += ch;
      advance();
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

long long parse_dimension(const Token& t) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v <= 0)
    throw ParseError("expected a positive dimension, found '" + t.text + "'", t.line, t.column);
  return v;
}

}  // namespace detail

}  // namespace dioid
