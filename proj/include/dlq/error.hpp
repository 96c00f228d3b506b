#ifndef DLQ_ERROR_HPP
#define DLQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dlq {

// Error categories map 1:1 onto CLI exit codes.
struct ParseError : std::runtime_error {
  int line = 0, column = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        column(col_) {}
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedConstructError : std::runtime_error {
  explicit UnsupportedConstructError(const std::string& what_construct)
      : std::runtime_error("unsupported construct: " + what_construct) {}
};

struct InconsistentOntologyError : std::runtime_error {
  InconsistentOntologyError() : std::runtime_error("ontology is inconsistent") {}
};

// Node budget or rule-application budget exhausted inside the reasoner.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& msg)
      : std::runtime_error("resource limit exceeded: " + msg) {}
};

// Oracle mapping budget exhausted.
struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& msg)
      : std::runtime_error("budget exceeded: " + msg) {}
};

}  // namespace dlq

#endif  // DLQ_ERROR_HPP
