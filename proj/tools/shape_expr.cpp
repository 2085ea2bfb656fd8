#include "shape_expr.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <variant>
#include <vector>

#include "odot/cylinder.hpp"
#include "odot/io.hpp"

namespace odot::cli {

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(i) + " in '" + s + "'");
  }
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    const std::size_t b = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (b == i) error("expected a name");
    return s.substr(b, i - b);
  }
  int integer() {
    skip();
    const std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) error("expected a non-negative integer");
    if (i - b > 6) error("integer too large");
    return std::stoi(s.substr(b, i - b));
  }
  Sign sign() {
    skip();
    if (eat('+')) return Sign::Plus;
    if (eat('-')) return Sign::Minus;
    const auto w = word();
    if (w == "in") return Sign::Minus;
    if (w == "out") return Sign::Plus;
    error("expected +, -, in or out");
  }

  Molecule expr() {
    const auto name = word();
    if (name == "point") return point();
    if (name == "arrow") return arrow();
    expect('(');
    Molecule r;
    if (name == "globe" || name == "simplex" || name == "cube") {
      const int n = integer();
      r = name == "globe" ? globe(n) : name == "simplex" ? simplex(n) : cube(n);
    } else if (name == "atom" || name == "gray") {
      auto U = expr();
      expect(',');
      auto V = expr();
      r = name == "atom" ? atom(U, V) : gray(U, V);
    } else if (name == "paste") {
      auto U = expr();
      expect(',');
      auto V = expr();
      r = eat(',') ? paste(U, V, integer()) : paste(U, V);
    } else if (name == "merger" || name == "cyl" || name == "lcyl" || name == "rcyl") {
      auto U = expr();
      if (name == "merger") r = merger(U);
      else if (name == "cyl") r = partial_gray_cylinder(U, {}).shape;
      else if (name == "lcyl") r = inverted_left(U, boundary(U.poset(), Side::Plus)).shape;
      else r = inverted_right(U, boundary(U.poset(), Side::Minus)).shape;
    } else if (name == "dual") {
      auto U = expr();
      std::vector<int> dims;
      while (eat(',')) dims.push_back(integer());
      if (dims.empty())
        for (int k = 1; k <= U.dim(); ++k) dims.push_back(k);
      r = dual(U, dims);
    } else if (name == "bd") {
      auto U = expr();
      expect(',');
      const int k = integer();
      expect(',');
      r = boundary_of(U, k, sign()).mol;
    } else if (name == "invertor") {
      auto U = expr();
      expect(',');
      skip();
      std::string w;
      while (i < s.size() && (s[i] == 'L' || s[i] == 'R')) w += s[i++];
      r = invertor_shape(U, w).shape;
    } else {
      error("unknown constructor '" + name + "'");
    }
    expect(')');
    return r;
  }
};

}  // namespace

Molecule parse_shape(const std::string& expr) {
  Parser p{expr};
  auto r = p.expr();
  p.skip();
  if (p.i != expr.size()) p.error("trailing input");
  return r;
}

Molecule load_shape(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return parse_shape(arg);
  std::ifstream in(arg);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::ParseError, "'" + arg + "' is not valid JSON");
  // Accept a bare shape or any report carrying one under "shape".
  if (!j.contains("elements") && j.contains("shape")) j = j["shape"];
  return molecule_from_json(j);
}

}  // namespace odot::cli
