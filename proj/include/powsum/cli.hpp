#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "powsum/search.hpp"

namespace powsum {

struct ParsedLiteral {
  unsigned n = 0;
  std::vector<Term> lhs;
  std::vector<Term> rhs;
};

class LiteralParseError : public std::runtime_error {
 public:
  LiteralParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// "(a,b;c)^n" with optional "= 0" tail and free whitespace.
ParsedLiteral parse_solution_literal(const std::string& text);
std::string render_solution_literal(unsigned n, const std::vector<Term>& lhs,
                                    const std::vector<Term>& rhs);
std::string render_solution_literal(const Solution& s);

// argv-style dispatch; returns the process exit status: 0 success,
// 1 verification failure, 2 usage error.
int dispatch(const std::vector<std::string>& args);
int dispatch(int argc, char** argv);

}  // namespace powsum
