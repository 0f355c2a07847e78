#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qsalg/ring.hpp"

namespace qsalg {

class ScenarioError : public Error {
public:
  ScenarioError(int line, int column, const std::string &msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg), line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

struct Scenario {
  std::string source = "<builtin>";
  std::optional<std::string> task;
  std::optional<std::string> family;
  std::optional<int> N;
  bool symbolic_N = false;
  std::vector<std::string> params;
  std::map<std::string, RatFunc> values;
  std::optional<int> degree_bound;

  bool has(const std::string &k) const { return values.count(k) > 0; }
  const RatFunc &get(const std::string &k) const {
    auto it = values.find(k);
    if (it == values.end())
      throw Error("scenario does not define '" + k + "'");
    return it->second;
  }
  RatFunc get_or(const std::string &k, const RatFunc &fallback) const { return has(k) ? get(k) : fallback; }
  /// A constant value, e.g. a parameter assignment.
  ParamPoly constant(const std::string &k) const {
    const RatFunc &f = get(k);
    if (!f.is_polynomial() || f.as_polynomial().degree() > 0)
      throw Error("scenario value '" + k + "' must not depend on z");
    return f.as_polynomial().coeff(0);
  }
};

namespace detail {

/// Recursive-descent parser for expressions over rationals, declared
/// parameters and z.
class ExprParser {
public:
  ExprParser(const std::string &text, int line, int col0, const std::set<std::string> &declared)
      : s_(text), line_(line), col0_(col0), declared_(declared) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip();
    if (pos_ < s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ScenarioError(line_, col0_ + static_cast<int>(pos_), msg); }
  [[noreturn]] void fail_at(std::size_t p, const std::string &msg) const {
    throw ScenarioError(line_, col0_ + static_cast<int>(p), msg);
  }
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t'))
      ++pos_;
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
    RatFunc v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      skip();
      std::size_t at = pos_;
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero())
          fail_at(at, "division by zero");
        try {
          v = v / d;
        } catch (const DivisionByZeroError &) {
          fail_at(at, "division by a polynomial that may vanish identically");
        }
      } else {
        return v;
      }
    }
  }
  RatFunc unary() {
    if (eat('-'))
      return -unary();
    if (eat('+'))
      return unary();
    return power();
  }
  RatFunc power() {
    RatFunc base = primary();
    if (!eat('^'))
      return base;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer exponent");
    long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + (s_[pos_++] - '0');
      if (e > 10000)
        fail("exponent too large");
    }
    if (neg) {
      if (base.is_zero())
        fail("zero raised to a negative power");
      return base.inverse().pow(static_cast<unsigned>(e));
    }
    return base.pow(static_cast<unsigned>(e));
  }
  RatFunc primary() {
    skip();
    if (pos_ >= s_.size())
      fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!eat(')'))
        fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return RatFunc(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "z")
        return RatFunc::z();
      if (!declared_.count(id))
        fail_at(start, "undeclared identifier '" + id + "'");
      return RatFunc(ParamPoly::symbol(id));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string &s_;
  std::size_t pos_ = 0;
  int line_, col0_;
  const std::set<std::string> &declared_;
};

inline std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

inline bool is_identifier(const std::string &s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

} // namespace detail

/// Parses `key = expression` lines; `#` starts a comment.
inline Scenario parse_scenario(const std::string &text, const std::string &source = "<inline>") {
  Scenario sc;
  sc.source = source;
  std::set<std::string> declared;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (lineno == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0)
      raw = raw.substr(3);
    if (!raw.empty() && raw.back() == '\r')
      raw.pop_back();
    std::string line = raw.substr(0, raw.find('#'));
    if (detail::trim(line).empty())
      continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioError(lineno, static_cast<int>(line.find_first_not_of(" \t")) + 1, "expected 'key = value'");
    std::string key = detail::trim(line.substr(0, eq));
    if (!detail::is_identifier(key))
      throw ScenarioError(lineno, static_cast<int>(line.find_first_not_of(" \t")) + 1, "invalid key '" + key + "'");
    std::string rhs = line.substr(eq + 1);
    std::string value = detail::trim(rhs);
    int vcol = static_cast<int>(eq + 2 + rhs.find_first_not_of(" \t"));
    if (value.empty())
      throw ScenarioError(lineno, static_cast<int>(eq) + 2, "missing value");
    if (key == "task" || key == "family") {
      if (!detail::is_identifier(value) && value != "osp22")
        throw ScenarioError(lineno, vcol, "expected a name");
      (key == "task" ? sc.task : sc.family) = value;
      if (key == "family" && value != "q2" && value != "osp22")
        throw ScenarioError(lineno, vcol, "family must be q2 or osp22");
    } else if (key == "N" || key == "degree_bound") {
      if (key == "N" && value == "symbolic") {
        sc.symbolic_N = true;
        sc.N.reset();
        continue;
      }
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(value, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != value.size() || v < (key == "N" ? 1 : 0))
        throw ScenarioError(lineno, vcol, key == "N" ? "N must be a positive integer or 'symbolic'"
                                                      : "degree_bound must be a non-negative integer");
      if (key == "N") {
        sc.N = v;
        sc.symbolic_N = false;
      } else {
        sc.degree_bound = v;
      }
    } else if (key == "params") {
      std::size_t start = 0;
      while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        std::string name = detail::trim(value.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!detail::is_identifier(name) || name == "z")
          throw ScenarioError(lineno, vcol + static_cast<int>(start), "invalid parameter name '" + name + "'");
        if (declared.insert(name).second)
          sc.params.push_back(name);
        if (comma == std::string::npos)
          break;
        start = comma + 1;
      }
    } else {
      detail::ExprParser p(rhs, lineno, static_cast<int>(eq) + 2, declared);
      sc.values[key] = p.parse();
    }
  }
  return sc;
}

} // namespace qsalg
