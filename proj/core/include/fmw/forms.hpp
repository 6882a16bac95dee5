#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fmw/fragment.hpp"
#include "fmw/formula.hpp"
#include "fmw/machine.hpp"

namespace fmw {

/// ord2:    (g & G) | (~g & U)                 g = CHAR_ORD(G, T, U)
/// unord4:  (h & G) | (h' & U)                 h = CHAR_UNORD, h' = COCHAR_UNORD
/// ord5:    ((g & G) | (~g & U)) | psi_<T>
/// unord6:  ((h & G) | (h' & U)) | psi_<T>
/// npconp8: (CHAR_NPCONP(L, G) & G) | psi_<L>
/// U is the distinguished sentence moved to the target vocabulary.
enum class FormKind { Ord2, Unord4, Ord5, Unord6, NpConp8 };

std::string_view to_string(FormKind k);
std::optional<FormKind> parse_form_kind(std::string_view text);
bool is_ordered(FormKind k) noexcept;

struct CanonicalForm {
  FormKind kind = FormKind::Ord5;
  ComplexityClass cls = ComplexityClass::NP;
  Vocabulary tau;
  Formula gamma;
  /// Set for every kind except npconp8.
  std::optional<OracleMachine> machine;
  /// Set for npconp8.
  Formula lambda;
  /// Image of the distinguished sentence under the vocabulary operator.
  Formula upsilon_tau;
  Formula formula;
};

using FormExtra = std::variant<OracleMachine, Formula>;

/// The machine kind an N-specific machine must have: logspace for NL and P,
/// polynomial time otherwise.
MachineKind machine_kind_for(ComplexityClass c);

/// Throws FragmentMismatch, PayloadNotCharFree, MachineKindMismatch,
/// AristotelianTarget, NoOrderInTarget, OrderInTarget, InvalidArgument.
/// For npconp8 `cls` and `upsilon` are ignored and gamma, lambda must be
/// SO-exists sentences.
CanonicalForm build_form(FormKind kind, ComplexityClass cls, const Formula& gamma, const FormExtra& extra,
                         const Vocabulary& tau, const Formula& upsilon);

/// Decides membership in the logic: returns the components iff `phi` is
/// exactly the form build_form would assemble from them.
std::optional<CanonicalForm> recognize(FormKind kind, ComplexityClass cls, const Formula& phi,
                                       const Vocabulary& tau, const Formula& upsilon);

/// Emits up to `budget` forms, pairs ordered by total code length, then the
/// first code, then the second (lexicographic). The first code is Gamma's
/// (Lambda's for npconp8), the second the machine's (Gamma's for npconp8).
/// `emit` returns false to stop early.
void enumerate_logic(FormKind kind, ComplexityClass cls, const Vocabulary& tau, const Formula& upsilon,
                     std::size_t budget, const std::function<bool(const CanonicalForm&)>& emit);
std::vector<CanonicalForm> enumerate_logic(FormKind kind, ComplexityClass cls, const Vocabulary& tau,
                                           const Formula& upsilon, std::size_t budget);

}  // namespace fmw
