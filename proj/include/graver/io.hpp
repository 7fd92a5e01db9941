#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graver/errors.hpp"
#include "graver/lattice.hpp"
#include "graver/symmetry.hpp"
#include "graver/vector.hpp"

// Text formats (4ti2 style):
//   matrix / lattice / vector files:  "m n" then m*n integers, row-major
//   symmetry files:                   "k n" then k lines of n 1-based images

namespace graver {

namespace detail {

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  // Next whitespace-separated token, or false at end of input.
  bool next(std::string& token) {
    token.clear();
    int c;
    while ((c = in_.get()) != EOF) {
      if (c == '\n') ++line_;
      if (!std::isspace(c)) break;
    }
    if (c == EOF) return false;
    token_line_ = line_;
    token.push_back(static_cast<char>(c));
    while ((c = in_.peek()) != EOF && !std::isspace(c)) {
      token.push_back(static_cast<char>(c));
      in_.get();
    }
    return true;
  }

  BigInt integer(const char* what) {
    std::string tok;
    if (!next(tok)) throw ParseError(std::string("unexpected end of input, expected ") + what, line_);
    return parse_integer(tok);
  }

  std::size_t count(const char* what) {
    const BigInt x = integer(what);
    if (x < 0 || x > BigInt(std::size_t{1} << 40))
      throw ParseError(std::string("invalid ") + what + " " + x.str(), token_line_);
    return static_cast<std::size_t>(x);
  }

  std::size_t token_line() const noexcept { return token_line_; }

  void expect_end() {
    std::string tok;
    if (next(tok)) throw ParseError("unexpected trailing token '" + tok + "'", token_line_);
  }

 private:
  BigInt parse_integer(const std::string& tok) const {
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) throw ParseError("non-integer token '" + tok + "'", token_line_);
    for (std::size_t j = i; j < tok.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(tok[j])))
        throw ParseError("non-integer token '" + tok + "'", token_line_);
    return BigInt(tok[0] == '+' ? tok.substr(1) : tok);
  }

  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t token_line_ = 1;
};

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace detail

inline IntMatrix<BigInt> parse_matrix(std::istream& in) {
  detail::TokenReader reader(in);
  const std::size_t m = reader.count("row count");
  const std::size_t n = reader.count("column count");
  IntMatrix<BigInt> A(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = reader.integer("matrix entry");
  reader.expect_end();
  return A;
}

inline IntMatrix<BigInt> read_matrix(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_matrix(in);
}

template <Scalar T>
void format_matrix(std::ostream& out, const IntMatrix<T>& A) {
  out << A.num_rows() << ' ' << A.num_cols() << '\n';
  for (const auto& row : A.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

template <Scalar T>
void write_matrix(const std::string& path, const IntMatrix<T>& A) {
  auto out = detail::open_output(path);
  format_matrix(out, A);
  if (!out) throw ParseError("write to '" + path + "' failed");
}

template <Scalar T>
IntMatrix<T> vectors_to_matrix(const std::vector<IntVector<T>>& vs, std::size_t n) {
  return IntMatrix<T>(vs, n);
}

inline PermutationGroup parse_symmetry(std::istream& in) {
  detail::TokenReader reader(in);
  const std::size_t k = reader.count("permutation count");
  const std::size_t n = reader.count("degree");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> images(n);
    std::size_t line = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt x = reader.integer("permutation image");
      if (j == 0) line = reader.token_line();
      if (x < 1 || x > BigInt(n))
        throw ValidationError("permutation " + std::to_string(i + 1) +
                              " (line " + std::to_string(reader.token_line()) +
                              "): image " + x.str() + " out of range 1.." +
                              std::to_string(n));
      images[j] = static_cast<std::uint32_t>(x) - 1;
    }
    std::vector<bool> hit(n, false);
    for (auto im : images) {
      if (hit[im])
        throw ValidationError("permutation " + std::to_string(i + 1) +
                              " (line " + std::to_string(line) +
                              ") is not a bijection: image " +
                              std::to_string(im + 1) + " repeats");
      hit[im] = true;
    }
    gens.emplace_back(std::move(images));
  }
  reader.expect_end();
  return PermutationGroup(n, std::move(gens));
}

inline PermutationGroup read_symmetry(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_symmetry(in);
}

inline void format_symmetry(std::ostream& out, const PermutationGroup& group) {
  out << group.generators().size() << ' ' << group.degree() << '\n';
  for (const auto& p : group.generators()) {
    for (std::size_t j = 0; j < p.degree(); ++j) {
      if (j) out << ' ';
      out << p[j] + 1;
    }
    out << '\n';
  }
}

inline void write_symmetry(const std::string& path, const PermutationGroup& group) {
  auto out = detail::open_output(path);
  format_symmetry(out, group);
  if (!out) throw ParseError("write to '" + path + "' failed");
}

}  // namespace graver
