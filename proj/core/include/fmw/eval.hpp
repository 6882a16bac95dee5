#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "fmw/formula.hpp"
#include "fmw/structure.hpp"

namespace fmw {

class CharCache;

struct EvalOptions {
  /// Nesting depth of CHAR leaves that may still be evaluated. Each leaf
  /// evaluates its payload sentences with one less; at zero a leaf throws
  /// RecursionBudgetExhausted.
  int char_budget = 8;
  /// Optional memo for CHAR leaf verdicts, shared across structures.
  std::shared_ptr<CharCache> cache;
};

/// Values for free variables and free relation variables.
struct Assignment {
  std::map<std::string, Element> vars;
  std::map<std::string, Relation> relations;
};

/// A formula compiled against a vocabulary, reusable across structures of
/// that vocabulary. Throws IllFormedFormula for unknown symbols, wrong arities
/// or unassigned free variables, and PositivityViolation for a non-positive
/// LFP operand.
class ModelChecker {
 public:
  ModelChecker(const Formula& f, const Vocabulary& vocab, EvalOptions options = {});
  /// `free_shape` names the free variables and relation variables a later
  /// Assignment will provide.
  ModelChecker(const Formula& f, const Vocabulary& vocab, const Assignment& free_shape, EvalOptions options = {});
  ~ModelChecker();
  ModelChecker(ModelChecker&&) noexcept;
  ModelChecker& operator=(ModelChecker&&) noexcept;

  bool operator()(const Structure& a) const;
  bool operator()(const Structure& a, const Assignment& assignment) const;

  /// Compiled form; opaque outside eval.cpp.
  struct Program;

 private:
  std::unique_ptr<Program> program_;
};

bool models(const Structure& a, const Formula& f, const EvalOptions& options = {});
bool models(const Structure& a, const Formula& f, const Assignment& assignment, const EvalOptions& options = {});

/// Least structure over `vocab` with 2 <= n <= n_max (enumeration order)
/// falsifying f, if any. With jobs > 1 the structures are checked in parallel
/// and the reported witness is still the least one.
std::optional<Structure> valid_upto(const Formula& f, const Vocabulary& vocab, int n_max,
                                    const EvalOptions& options = {}, unsigned jobs = 1);

/// Least structure on which f and g disagree.
std::optional<Structure> mod_eq_upto(const Formula& f, const Formula& g, const Vocabulary& vocab, int n_max,
                                     const EvalOptions& options = {}, unsigned jobs = 1);

/// Least structure in enumeration order satisfying `pred`; shared driver for
/// the bounded checks above.
std::optional<Structure> find_first_structure(const Vocabulary& vocab, int n_max,
                                              const std::function<bool(const Structure&)>& pred, unsigned jobs = 1);

}  // namespace fmw
