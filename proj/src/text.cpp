#include "hn/text.hpp"

#include <cctype>

#include "hn/errors.hpp"

namespace hn {

std::string to_text(const Bundle& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& p : v.summands()) {
    if (!out.empty()) out += " + ";
    out += "O(" + p.slope.str() + ")";
    if (p.mult > 1) out += "^" + std::to_string(p.mult);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(std::string("expected ") + what, pos_);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer", start);
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (1LL << 60)) throw ParseError("integer too large", start);
      ++pos_;
    }
    return neg ? -value : value;
  }

  long long positive_integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    long long value = integer();
    if (value <= 0) throw ParseError(std::string("expected positive ") + what, start);
    return value;
  }

  std::size_t position() {
    skip_ws();
    return pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational parse_slope(Cursor& cur) {
  std::size_t start = cur.position();
  long long num = cur.integer();
  long long den = 1;
  if (cur.consume('/')) den = cur.positive_integer("denominator");
  (void)start;
  return Rational(num, den);
}

}  // namespace

Bundle parse_bundle(std::string_view text) {
  Cursor cur(text);
  if (cur.peek() == '0') {
    cur.consume('0');
    if (!cur.at_end()) throw ParseError("trailing input after zero bundle", cur.position());
    return Bundle();
  }
  std::vector<Bundle::Summand> parts;
  while (true) {
    cur.expect('O', "'O'");
    cur.expect('(', "'('");
    Rational slope = parse_slope(cur);
    cur.expect(')', "')'");
    long long mult = 1;
    if (cur.consume('^')) mult = cur.positive_integer("multiplicity");
    parts.push_back({slope, mult});
    if (cur.at_end()) break;
    cur.expect('+', "'+'");
  }
  return Bundle::from_summands(std::move(parts));
}

Rational parse_rational(std::string_view text) {
  Cursor cur(text);
  Rational value = parse_slope(cur);
  if (!cur.at_end()) throw ParseError("trailing input after rational", cur.position());
  return value;
}

}  // namespace hn
