#include "fmw/psi.hpp"

#include "fmw/error.hpp"

namespace fmw {

namespace {

std::string var(std::size_t i) { return "x" + std::to_string(i); }

}  // namespace

Formula psi_encode(std::string_view w) {
  if (w.empty()) fail(ErrorCode::EmptyString, "psi needs a nonempty string");
  if (!is_bitstring(w)) fail(ErrorCode::InvalidArgument, "psi needs a bit string");
  Formula matrix = Formula::neq(var(1), var(1));
  for (std::size_t i = 2; i <= w.size(); ++i) matrix = Formula::conjunction(matrix, Formula::neq(var(i), var(i)));
  Formula f = matrix;
  for (std::size_t i = w.size(); i >= 1; --i) {
    f = w[i - 1] == '1' ? Formula::exists(var(i), f) : Formula::forall(var(i), f);
  }
  return f;
}

std::optional<BitString> psi_recognize(const Formula& f) {
  if (f.empty()) return std::nullopt;
  BitString w;
  const Formula* cur = &f;
  while (cur->kind() == NodeKind::Exists || cur->kind() == NodeKind::Forall) {
    if (cur->name() != var(w.size() + 1)) return std::nullopt;
    w.push_back(cur->kind() == NodeKind::Exists ? '1' : '0');
    cur = &cur->child();
  }
  if (w.empty()) return std::nullopt;
  // Walk the left spine of the matrix from x_k down to x_1.
  const Formula* m = cur;
  for (std::size_t i = w.size(); i >= 1; --i) {
    const Formula* leaf = m;
    if (i > 1) {
      if (m->kind() != NodeKind::And) return std::nullopt;
      leaf = &m->child(1);
    }
    if (leaf->kind() != NodeKind::Neq || leaf->vars()[0] != var(i) || leaf->vars()[1] != var(i)) return std::nullopt;
    if (i > 1) m = &m->child(0);
  }
  return w;
}

}  // namespace fmw
