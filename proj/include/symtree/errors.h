#ifndef SYMTREE_ERRORS_H_
#define SYMTREE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symtree {

// Malformed input file. line() is 1-based, 0 when the error is not tied to
// a particular line (for example a header/edge count mismatch).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A precondition of a public operation was not met by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The library computed something that failed its own verification, e.g. a
// generator that is not an automorphism.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symtree

#endif  // SYMTREE_ERRORS_H_
