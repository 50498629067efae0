#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkt/form.hpp"

namespace hkt {

/// A Lie algebra given through its Chevalley-Eilenberg data: the dimension 4n
/// and the 2-forms d e^k on the dual basis.
struct LieAlgebraSpec {
  int dim = 0;
  std::vector<Form> differentials;  // differentials[k] = d e^{k+1}, degree 2

  int quaternionic_dim() const { return dim / 4; }
};

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

/// Salamon notation: comma-separated entries, one per generator; each entry
/// is "0" or a signed sum of 2-index monomials with optional rational
/// coefficients, e.g. "12+34" or "2*13-1/2*24". Index characters are
/// '1'..'9' and 'a'..'z' for 10..35. Dimension must be a multiple of 4.
LieAlgebraSpec parse_salamon(const std::string& text);

/// Structured notation, one line per generator:
///   d e6 = e1^e2 + e3^e4
///   d e1 = 0
/// Lines may appear in any order but every generator must occur exactly once.
LieAlgebraSpec parse_structured(const std::string& text);

/// Chevalley-Eilenberg differential, extended by the graded Leibniz rule.
Form d(const Form& x, const LieAlgebraSpec& spec);

struct JacobiResult {
  bool ok = true;
  int failing_generator = 0;  // 1-based, valid when !ok
};

/// d(d e^k) = 0 for every generator.
JacobiResult check_jacobi(const LieAlgebraSpec& spec);

/// The filtration V_0 = ker d, V_{i+1} = d^{-1}(Lambda^2 V_i) reaches the
/// whole dual space iff the algebra is nilpotent.
bool is_nilpotent(const LieAlgebraSpec& spec);

/// Coefficient of the volume monomial e^1 ^ ... ^ e^{4n}, with the volume
/// normalized to 1.
Scalar integrate_top(const Form& x, const LieAlgebraSpec& spec);

}  // namespace hkt
