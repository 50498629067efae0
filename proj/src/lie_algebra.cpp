#include "hkt/lie_algebra.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "hkt/linalg.hpp"

namespace hkt {

namespace {

int index_from_char(char c, size_t pos) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  throw ParseError(std::string("invalid index character '") + c + "'", pos);
}

// Parses one Salamon entry ("0", "12+34", "2*13-1/2*24") into a 2-form.
Form parse_entry(const std::string& entry, int dim, size_t base_pos) {
  std::string s;
  std::vector<size_t> posmap;
  for (size_t i = 0; i < entry.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(entry[i]))) {
      s += entry[i];
      posmap.push_back(base_pos + i);
    }
  }
  if (s == "0") return Form();
  if (s.empty()) throw ParseError("empty entry", base_pos);
  Form result;
  size_t i = 0;
  while (i < s.size()) {
    Rational coeff(1);
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') coeff = -1;
      ++i;
    }
    // Optional rational coefficient followed by '*'.
    size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) ||
                            s[j] == '/'))
      ++j;
    if (j < s.size() && s[j] == '*') {
      coeff *= parse_rational(s.substr(i, j - i));
      i = j + 1;
    }
    if (i + 2 > s.size())
      throw ParseError("expected 2-index monomial",
                       i < posmap.size() ? posmap[i] : base_pos + s.size());
    int a = index_from_char(s[i], posmap[i]);
    int b = index_from_char(s[i + 1], posmap[i + 1]);
    if (a > dim || b > dim)
      throw ParseError("index out of range", posmap[i]);
    if (a == b) throw ParseError("repeated index in monomial", posmap[i]);
    Form mono = wedge(Form::basis1(a), Form::basis1(b));
    result += mono * Scalar(coeff);
    i += 2;
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw ParseError("expected '+' or '-' between monomials", posmap[i]);
  }
  return result;
}

}  // namespace

LieAlgebraSpec parse_salamon(const std::string& text) {
  std::vector<std::string> entries;
  std::vector<size_t> offsets;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      entries.push_back(text.substr(start, i - start));
      offsets.push_back(start);
      start = i + 1;
    }
  }
  int dim = static_cast<int>(entries.size());
  if (dim % 4 != 0 || dim == 0)
    throw ParseError("dimension " + std::to_string(dim) +
                         " is not a positive multiple of 4",
                     0);
  if (dim > 35) throw ParseError("dimension too large for index notation", 0);
  LieAlgebraSpec spec;
  spec.dim = dim;
  spec.differentials.reserve(dim);
  for (int k = 0; k < dim; ++k)
    spec.differentials.push_back(parse_entry(entries[k], dim, offsets[k]));
  return spec;
}

LieAlgebraSpec parse_structured(const std::string& text) {
  std::map<int, std::string> rhs;
  std::istringstream is(text);
  std::string line;
  size_t line_start = 0;
  while (std::getline(is, line)) {
    size_t this_start = line_start;
    line_start += line.size() + 1;
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed[0] == '#') continue;
    // Expected shape: "de<k>=<expr>" after whitespace removal.
    if (trimmed.rfind("de", 0) != 0)
      throw ParseError("expected line of the form 'd e<k> = ...'", this_start);
    size_t p = 2;
    size_t q = p;
    while (q < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[q])))
      ++q;
    if (q == p || q >= trimmed.size() || trimmed[q] != '=')
      throw ParseError("expected 'd e<k> ='", this_start);
    int k = std::stoi(trimmed.substr(p, q - p));
    std::string expr = trimmed.substr(q + 1);
    // Convert "e1^e2" wedge syntax into the compact Salamon entry form.
    std::string compact;
    for (size_t i = 0; i < expr.size(); ++i) {
      if (expr[i] == 'e') {
        size_t j = i + 1;
        while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j])))
          ++j;
        int idx = std::stoi(expr.substr(i + 1, j - i - 1));
        if (idx <= 0 || idx > 35)
          throw ParseError("index out of range", this_start);
        compact += idx < 10 ? static_cast<char>('0' + idx)
                            : static_cast<char>('a' + idx - 10);
        i = j - 1;
      } else if (expr[i] == '^') {
        continue;
      } else {
        compact += expr[i];
      }
    }
    if (!rhs.emplace(k, compact).second)
      throw ParseError("generator e" + std::to_string(k) + " defined twice",
                       this_start);
  }
  if (rhs.empty()) throw ParseError("no generator lines found", 0);
  int dim = rhs.rbegin()->first;
  if (dim % 4 != 0)
    throw ParseError("dimension " + std::to_string(dim) +
                         " is not a multiple of 4",
                     0);
  LieAlgebraSpec spec;
  spec.dim = dim;
  spec.differentials.resize(dim);
  for (int k = 1; k <= dim; ++k) {
    auto it = rhs.find(k);
    if (it == rhs.end())
      throw ParseError("missing line for generator e" + std::to_string(k), 0);
    spec.differentials[k - 1] = parse_entry(it->second, dim, 0);
  }
  return spec;
}

Form d(const Form& x, const LieAlgebraSpec& spec) {
  Form result;
  for (const auto& [mask, coeff] : x.terms()) {
    int position = 0;
    for (Mask mm = mask; mm; mm &= mm - 1) {
      int idx = std::countr_zero(mm);
      Form rest = Form::monomial(mask & ~(Mask(1) << idx),
                                 (position & 1) ? -coeff : coeff);
      result += wedge(spec.differentials[idx], rest);
      ++position;
    }
  }
  return result;
}

JacobiResult check_jacobi(const LieAlgebraSpec& spec) {
  for (int k = 0; k < spec.dim; ++k) {
    if (!spec.differentials[k].is_homogeneous(2))
      return {false, k + 1};
    if (!d(spec.differentials[k], spec).is_zero()) return {false, k + 1};
  }
  return {true, 0};
}

bool is_nilpotent(const LieAlgebraSpec& spec) {
  // W_{i+1} = { x in Lambda^1 : d x in Lambda^2(W_i) }, W_0 = 0.
  const int n = spec.dim;
  Mat w = Mat::Zero(n, 0);
  for (int iter = 0; iter <= n; ++iter) {
    // Basis of Lambda^2(W) as coordinates over all 2-index monomials.
    std::vector<Mask> two_masks;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        two_masks.push_back((Mask(1) << a) | (Mask(1) << b));
    Mat lambda2 = Mat::Zero(static_cast<Eigen::Index>(two_masks.size()),
                            w.cols() * (w.cols() - 1) / 2);
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < w.cols(); ++i) {
      for (Eigen::Index j = i + 1; j < w.cols(); ++j) {
        Form wi, wj;
        for (int r = 0; r < n; ++r) {
          wi.add_term(Mask(1) << r, w(r, i));
          wj.add_term(Mask(1) << r, w(r, j));
        }
        Form prod = wedge(wi, wj);
        for (size_t t = 0; t < two_masks.size(); ++t)
          lambda2(static_cast<Eigen::Index>(t), col) =
              prod.coefficient(two_masks[t]);
        ++col;
      }
    }
    // d as a matrix Lambda^1 -> Lambda^2.
    Mat dmat = Mat::Zero(static_cast<Eigen::Index>(two_masks.size()), n);
    for (int k = 0; k < n; ++k)
      for (size_t t = 0; t < two_masks.size(); ++t)
        dmat(static_cast<Eigen::Index>(t), k) =
            spec.differentials[k].coefficient(two_masks[t]);
    // Preimage of span(lambda2): kernel of (projection away from the span).
    // Solve via kernel of [dmat | -lambda2] restricted to the first block.
    Mat joined(dmat.rows(), n + lambda2.cols());
    joined.leftCols(n) = dmat;
    joined.rightCols(lambda2.cols()) = -lambda2;
    Mat null = kernel_basis(joined);
    Mat next = image_basis(null.topRows(n));
    if (static_cast<int>(next.cols()) == n) return true;
    if (next.cols() == w.cols() && subspace_equal(next, w)) return false;
    w = next;
  }
  return false;
}

Scalar integrate_top(const Form& x, const LieAlgebraSpec& spec) {
  Mask top = (spec.dim >= 64) ? ~Mask(0) : ((Mask(1) << spec.dim) - 1);
  return x.coefficient(top);
}

}  // namespace hkt
