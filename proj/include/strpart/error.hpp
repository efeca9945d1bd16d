#pragma once

#include <stdexcept>
#include <string>

namespace strpart {

// Malformed input text (instance files, formulas, partitions, FASTA).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input that violates a domain precondition.
struct SemanticError : std::runtime_error {
  explicit SemanticError(const std::string& msg) : std::runtime_error(msg) {}
};

// A search ran out of its node or time budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace strpart
