#include "fewroots/io.hpp"

#include "fewroots/errors.hpp"

#include <cctype>
#include <optional>

namespace fewroots {

SparseSystem parse_system_json(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("system must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field \"n\"");
    long n = j["n"].get<long>();
    if (n < 1) throw ParseError("\"n\" must be >= 1");
    if (!j.contains("polynomials") || !j["polynomials"].is_array())
      throw ParseError("missing array field \"polynomials\"");
    auto nv = static_cast<std::size_t>(n);
    std::vector<SparsePolynomial> polys;
    for (const auto& pj : j["polynomials"]) {
      if (!pj.is_array()) throw ParseError("each polynomial must be an array of terms");
      SparsePolynomial f(nv);
      for (const auto& tj : pj) {
        if (!tj.is_object() || !tj.contains("exp") || !tj.contains("coeff"))
          throw ParseError("each term needs \"exp\" and \"coeff\"");
        Exponent exp = tj["exp"].get<Exponent>();
        if (exp.size() != nv) throw ParseError("exponent length differs from n");
        const auto& cj = tj["coeff"];
        Rational c = cj.is_string() ? parse_rational(cj.get<std::string>())
                     : cj.is_number_integer() ? Rational(cj.get<long>())
                                              : throw ParseError("coefficient must be a string or integer");
        f.add_term(exp, c);
      }
      if (f.is_zero()) throw ParseError("zero polynomial in system");
      polys.push_back(std::move(f));
    }
    if (polys.empty()) throw ParseError("system has no polynomials");
    return SparseSystem(nv, std::move(polys));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed system JSON: ") + e.what());
  }
}

namespace {

class TextParser {
 public:
  TextParser(std::string_view s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  SparsePolynomial parse() {
    SparsePolynomial f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(s_) + "\"");
  }

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

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  SparsePolynomial expr() {
    SparsePolynomial acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  SparsePolynomial term() {
    SparsePolynomial acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  SparsePolynomial unary() {
    if (eat('-')) return Rational(-1) * unary();
    if (eat('+')) return unary();
    return power();
  }

  long exponent() {
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    std::string d = digits();
    if (d.empty()) fail("expected integer exponent");
    if (paren && !eat(')')) fail("expected ')'");
    if (d.size() > 6) fail("exponent too large");
    long v = std::stol(d);
    return neg ? -v : v;
  }

  SparsePolynomial power() {
    SparsePolynomial base = atom();
    if (!eat('^')) return base;
    long e = exponent();
    if (e >= 0) return base.pow(static_cast<unsigned>(e));
    if (base.term_count() != 1) fail("negative exponent needs a single-term base");
    const auto& [exp, c] = *base.terms().begin();
    Exponent inv(exp.size());
    for (std::size_t i = 0; i < exp.size(); ++i) inv[i] = exp[i] * e;
    Rational ce = 1;
    for (long i = 0; i < -e; ++i) ce *= c;
    return SparsePolynomial::monomial(inv, 1 / ce);
  }

  SparsePolynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePolynomial f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == 'x') {
      ++pos_;
      std::string d = digits();
      if (d.empty() || d.size() > 3) fail("expected variable index after 'x'");
      std::size_t idx = std::stoul(d);
      if (idx < 1 || idx > nvars_) fail("variable index out of range");
      return SparsePolynomial::variable(nvars_, idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        num += "/" + den;
      }
      try {
        return SparsePolynomial::constant(nvars_, parse_rational(num));
      } catch (const ParseError&) {
        fail("invalid rational literal");
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_equations(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n' || text[i] == ';') {
      std::string_view piece = text.substr(start, i - start);
      if (auto hash = piece.find('#'); hash != std::string_view::npos) piece = piece.substr(0, hash);
      bool blank = true;
      for (char c : piece)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) out.push_back(piece);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

SparseSystem parse_system_text(std::string_view text, std::size_t nvars) {
  auto pieces = split_equations(text);
  if (pieces.empty()) throw ParseError("no polynomials in input");
  if (nvars == 0) {
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
      if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
      std::size_t j = i + 1, idx = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && idx < 1000)
        idx = idx * 10 + static_cast<std::size_t>(text[j++] - '0');
      nvars = std::max(nvars, idx);
    }
    if (nvars == 0) nvars = 1;
  }
  std::vector<SparsePolynomial> polys;
  for (auto piece : pieces) {
    SparsePolynomial f = TextParser(piece, nvars).parse();
    if (f.is_zero()) throw ParseError("polynomial \"" + std::string(piece) + "\" is identically zero");
    polys.push_back(std::move(f));
  }
  return SparseSystem(nvars, std::move(polys));
}

SparseSystem parse_system(std::string_view input) {
  std::size_t i = 0;
  while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i]))) ++i;
  if (i < input.size() && input[i] == '{') {
    Json j;
    try {
      j = Json::parse(input);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_system_json(j);
  }
  return parse_system_text(input);
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const ExtendedValuation& v) { return v.to_string(); }

Json to_json(const Polytope& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices()) out.push_back(to_json(v));
  return out;
}

Json to_json(const SparseSystem& system) {
  Json polys = Json::array();
  for (const auto& f : system.polynomials()) {
    Json terms = Json::array();
    for (const auto& [exp, c] : f.terms()) terms.push_back({{"exp", exp}, {"coeff", to_string(c)}});
    polys.push_back(std::move(terms));
  }
  return {{"n", system.n()}, {"polynomials", std::move(polys)}};
}

Json to_json(const BoundReport& report) {
  Json inputs = Json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  return {{"formula_id", to_string(report.formula_id)},
          {"inputs", std::move(inputs)},
          {"raw", report.raw.to_decimal(30)},
          {"integer_bound", to_string(report.integer_bound)},
          {"notes", report.notes},
          {"expression", report.expression}};
}

Json to_json(const RootCount& count) {
  Json factors = Json::array();
  for (const auto& [mult, n] : count.factor_counts) factors.push_back({{"multiplicity", mult}, {"roots", n}});
  Json out = {{"count", to_string(count.count)},
              {"method", to_string(count.method)},
              {"region", count.region},
              {"with_multiplicity", count.with_multiplicity}};
  if (!count.factor_counts.empty()) out["factor_counts"] = std::move(factors);
  return out;
}

}  // namespace fewroots
