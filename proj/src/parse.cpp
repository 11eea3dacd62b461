#include "galcurve/parse.hpp"

#include <cctype>
#include <map>

namespace galcurve {
namespace {

constexpr int kMaxDegree = 64;

struct Tokenizer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
};

int parse_exponent(Tokenizer& tk) {
  if (!std::isdigit(static_cast<unsigned char>(tk.peek())))
    fail_input("expected an exponent after '^'");
  long v = 0;
  while (tk.i < tk.s.size() && std::isdigit(static_cast<unsigned char>(tk.s[tk.i]))) {
    v = v * 10 + (tk.s[tk.i] - '0');
    if (v > kMaxDegree) fail_input("exponent too large");
    ++tk.i;
  }
  return int(v);
}

// integer literal folded into the field as it is read, so arbitrarily long
// decimal strings are fine in positive characteristic
FE parse_integer(Tokenizer& tk, const Field* f) {
  bool rational = f->is_rational();
  auto digits = [&]() {
    FE v = f->zero();
    FE ten = f->from_int(10);
    std::int64_t raw = 0;
    while (tk.i < tk.s.size() && std::isdigit(static_cast<unsigned char>(tk.s[tk.i]))) {
      int d = tk.s[tk.i] - '0';
      if (rational) {
        if (raw > (std::int64_t(1) << 60) / 10) fail_input("coefficient too large");
        raw = raw * 10 + d;
        v = f->from_int(raw);
      } else {
        v = v * ten + f->from_int(d);
      }
      ++tk.i;
    }
    return v;
  };
  FE num = digits();
  if (rational && tk.i < tk.s.size() && tk.s[tk.i] == '/') {
    ++tk.i;
    if (tk.i >= tk.s.size() || !std::isdigit(static_cast<unsigned char>(tk.s[tk.i])))
      fail_input("expected a denominator after '/'");
    FE den = digits();
    if (den.is_zero()) fail_input("zero denominator");
    return num / den;
  }
  return num;
}

FE parse_generator_power(Tokenizer& tk, const Field* f);

// parenthesized scalar: a sum of products of integers and generator powers
FE parse_scalar_group(Tokenizer& tk, const Field* f) {
  tk.take();  // '('
  FE acc = f->zero();
  bool first = true;
  while (true) {
    char c = tk.peek();
    if (c == ')') {
      tk.take();
      break;
    }
    if (c == '\0') fail_input("unterminated coefficient group");
    FE sign = f->one();
    if (c == '+' || c == '-') {
      tk.take();
      if (c == '-') sign = -sign;
    } else if (!first) {
      fail_input(std::string("expected '+' or '-' before '") + c + "'");
    }
    first = false;
    FE val = sign;
    bool expect_factor = true;
    while (true) {
      if (expect_factor) {
        char h = tk.peek();
        if (std::isdigit(static_cast<unsigned char>(h))) val = val * parse_integer(tk, f);
        else if (h == 'g') val = val * parse_generator_power(tk, f);
        else fail_input("coefficient groups may only hold integers and g");
        expect_factor = false;
      } else if (tk.peek() == '*') {
        tk.take();
        expect_factor = true;
      } else {
        break;
      }
    }
    acc = acc + val;
  }
  if (first) fail_input("empty coefficient group");
  return acc;
}

FE parse_generator_power(Tokenizer& tk, const Field* f) {
  tk.take();  // 'g'
  if (f->is_rational() || f->k() == 1)
    fail_input("generator symbol g needs an extension field");
  int e = 1;
  if (tk.peek() == '^') {
    tk.take();
    e = parse_exponent(tk);
  }
  return f->gen().pow(e);
}

struct Term {
  FE coeff;
  int e[3] = {0, 0, 0};
};

// vars is "XYZ" or "st"; returns accumulated terms plus the common degree
std::pair<std::map<std::array<int, 3>, FE>, int> parse_terms(const Field* f,
                                                             const std::string& text,
                                                             const std::string& vars) {
  Tokenizer tk{text};
  if (tk.done()) fail_input("empty polynomial");
  std::map<std::array<int, 3>, FE> acc;
  int degree = -1;
  bool first = true;
  while (!tk.done()) {
    FE sign = f->one();
    char c = tk.peek();
    if (c == '+' || c == '-') {
      tk.take();
      if (c == '-') sign = -sign;
    } else if (!first) {
      fail_input(std::string("expected '+' or '-' before '") + c + "'");
    }
    first = false;

    Term term;
    term.coeff = sign;
    bool expect_factor = true;
    while (true) {
      if (expect_factor) {
        char h = tk.peek();
        if (std::isdigit(static_cast<unsigned char>(h))) {
          term.coeff = term.coeff * parse_integer(tk, f);
        } else if (h == 'g') {
          term.coeff = term.coeff * parse_generator_power(tk, f);
        } else if (h == '(') {
          term.coeff = term.coeff * parse_scalar_group(tk, f);
        } else {
          size_t vi = vars.find(h);
          if (vi == std::string::npos)
            fail_input(h == '\0' ? std::string("unexpected end of polynomial")
                                 : std::string("unexpected character '") + h + "'");
          tk.take();
          int e = 1;
          if (tk.peek() == '^') {
            tk.take();
            e = parse_exponent(tk);
          }
          term.e[vi] += e;
          if (term.e[0] + term.e[1] + term.e[2] > kMaxDegree)
            fail_input("term degree too large");
        }
        expect_factor = false;
      } else if (tk.peek() == '*') {
        tk.take();
        expect_factor = true;
      } else {
        break;
      }
    }

    int total = term.e[0] + term.e[1] + term.e[2];
    if (degree < 0) degree = total;
    if (total != degree) fail_input("terms of unequal total degree");
    std::array<int, 3> key{term.e[0], term.e[1], term.e[2]};
    auto it = acc.find(key);
    if (it == acc.end()) acc.emplace(key, term.coeff);
    else it->second = it->second + term.coeff;
  }
  return {std::move(acc), degree};
}

}  // namespace

TernaryForm parse_ternary(const Field* f, const std::string& text) {
  auto [acc, degree] = parse_terms(f, text, "XYZ");
  std::vector<std::tuple<int, int, FE>> terms;
  for (auto& [e, c] : acc) terms.emplace_back(e[0], e[1], c);
  return TernaryForm::from_terms_fe(f, degree, terms);
}

BinaryForm parse_binary(const Field* f, const std::string& text) {
  auto [acc, degree] = parse_terms(f, text, "st");
  std::vector<FE> c(size_t(degree) + 1, f->zero());
  for (auto& [e, v] : acc) c[size_t(e[1])] = v;
  return BinaryForm(f, degree, std::move(c));
}

}  // namespace galcurve
