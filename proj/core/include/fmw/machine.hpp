#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmw/bits.hpp"
#include "fmw/formula.hpp"
#include "fmw/structure.hpp"

namespace fmw {

enum class MachineKind { Polytime, Logspace };

std::string_view to_string(MachineKind k);

/// Tape symbols. The input tape's end markers read as Blank.
enum class Sym : std::uint8_t { Zero, One, Blank };
enum class Move : std::uint8_t { Left, Right, Stay };
enum class OracleOut : std::uint8_t { Zero, One, None };

struct Transition {
  int from = 0;
  Sym input = Sym::Blank;
  Sym storage = Sym::Blank;
  int to = 0;
  Sym write = Sym::Blank;
  Move input_move = Move::Stay;
  Move storage_move = Move::Stay;
  OracleOut oracle = OracleOut::None;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic oracle machine with a two-way read-only input tape, one
/// storage tape and an append-only oracle tape. Entering the query state
/// consults the oracle on the oracle tape, erases it, and moves to the yes or
/// no state. The accept state may coincide with the yes state.
class OracleMachine {
 public:
  struct Spec {
    int states = 0;
    int start = 0, accept = 0, query = 0, yes = 0, no = 0;
    MachineKind kind = MachineKind::Polytime;
    int clock_c = 1;
    int step_c = 1;
    std::vector<Transition> transitions;
    /// Optional display names, one per state.
    std::vector<std::string> names;
  };

  /// Sorts transitions; throws InvalidMachine on any violated invariant.
  explicit OracleMachine(Spec spec);

  const Spec& spec() const noexcept { return spec_; }
  int states() const noexcept { return spec_.states; }
  MachineKind kind() const noexcept { return spec_.kind; }
  const std::vector<Transition>& transitions() const noexcept { return spec_.transitions; }
  const std::string& name(int state) const { return spec_.names.at(static_cast<std::size_t>(state)); }

  const Transition* find(int state, Sym input, Sym storage) const;

  /// Equality ignores state names.
  friend bool operator==(const OracleMachine& a, const OracleMachine& b);

 private:
  Spec spec_;
};

inline constexpr int kMaxStates = 1 << 12;
inline constexpr int kMaxExponent = 16;

BitString encode_tm(const OracleMachine& t);
/// Throws Malformed, including for codes that are not canonical.
OracleMachine decode_tm(std::string_view bits);
/// Throws IncompleteInput when the reader runs dry.
OracleMachine read_tm(BitReader& in);

/// Text format:
///   kind polytime        (or logspace)
///   clockC 2
///   stepC 2
///   start q0
///   accept acc           (query, yes, no likewise)
///   q0 0 _ -> q0 _ R S 0
/// Transition fields: state input storage -> next write inputMove storageMove
/// oracleAppend, with `_` for blank and `-` for no oracle output.
OracleMachine parse_machine(std::string_view text);
std::string print_machine(const OracleMachine& t);

/// Answers a query given the oracle tape content.
using OracleFn = std::function<bool(std::string_view)>;

/// Oracle deciding MOD[sentence] over `vocab`: decodes the tape as <B>;
/// undecodable tapes answer no.
OracleFn sentence_oracle(const Formula& sentence, const Vocabulary& vocab);

struct RunLimits {
  /// Extra cap on steps on top of the machine's own bounds.
  std::optional<std::uint64_t> max_steps;
};

struct RunResult {
  bool accepted = false;
  std::uint64_t steps = 0;
  std::uint64_t queries = 0;
  /// "accept", "halt", "steps" or "space".
  std::string_view reason;
};

/// (n+2)^e saturating at UINT64_MAX.
std::uint64_t poly_bound(std::size_t n, int exponent);
std::uint64_t step_limit(const OracleMachine& t, std::size_t input_length);
/// Storage cells available to a logspace machine; unbounded for polytime.
std::uint64_t storage_limit(const OracleMachine& t, std::size_t input_length);

RunResult simulate(const OracleMachine& t, std::string_view input, const OracleFn& oracle,
                   const RunLimits& limits = {});

bool run(const OracleMachine& t, std::string_view input, const Formula& oracle_sentence,
         const Vocabulary& oracle_vocab, const RunLimits& limits = {});

/// Least B with n <= n_max where acceptance of <B> disagrees with B |= target.
std::optional<Structure> is_reduction_upto(const OracleMachine& t, const Formula& gamma, const Formula& target,
                                           const Vocabulary& vocab, int n_max, unsigned jobs = 1);

/// Copies the input to the oracle tape, queries, and accepts iff the answer
/// is yes.
OracleMachine identity_machine(MachineKind kind = MachineKind::Polytime);
OracleMachine reject_machine(MachineKind kind = MachineKind::Polytime);
OracleMachine accept_machine(MachineKind kind = MachineKind::Polytime);
/// Walks right forever.
OracleMachine walker_machine(MachineKind kind = MachineKind::Polytime);

}  // namespace fmw
