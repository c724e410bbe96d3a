#include "extsq/algebra/matrix_json.hpp"

#include <cctype>

namespace extsq::algebra {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse entry '" + std::string(s_) + "': " + why);
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

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      if (eat('*'))
        r *= unary();
      else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else
        return r;
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFunc power() {
    RatFunc base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      return base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        ++pos_;
      return RatFunc(Rat::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return RatFunc::var(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return ExprParser(text).parse(); }

nlohmann::json matrix_to_json(const Matrix<RatFunc>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix<RatFunc> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix JSON needs rows, cols and entries");
  auto r = j.at("rows").get<long>(), c = j.at("cols").get<long>();
  if (r <= 0 || c <= 0) throw ParseError("matrix dimensions must be positive");
  const auto& e = j.at("entries");
  if (!e.is_array() || e.size() != static_cast<std::size_t>(r))
    throw ParseError("entries must hold " + std::to_string(r) + " rows");
  Matrix<RatFunc> m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!e[i].is_array() || e[i].size() != m.cols())
      throw ParseError("row " + std::to_string(i + 1) + " must hold " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const auto& x = e[i][k];
      if (x.is_string())
        m(i, k) = parse_ratfunc(x.get<std::string>());
      else if (x.is_number_integer())
        m(i, k) = RatFunc(Rat(x.get<long>()));
      else
        throw ParseError("matrix entries must be strings or integers");
    }
  }
  return m;
}

}  // namespace extsq::algebra
