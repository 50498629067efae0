#include "hkt/form.hpp"

#include <bit>
#include <sstream>

namespace hkt {

int popcount(Mask m) { return std::popcount(m); }

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (Mask bb = b; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

Form Form::basis1(int idx) {
  return monomial(Mask(1) << (idx - 1), Scalar(1));
}

Form Form::monomial(Mask m, const Scalar& c) {
  Form f;
  f.add_term(m, c);
  return f;
}

bool Form::is_homogeneous(int k) const {
  for (const auto& [m, c] : terms_)
    if (popcount(m) != k) return false;
  return true;
}

int Form::max_degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, popcount(m));
  return deg;
}

Scalar Form::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Form::add_term(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Form Form::operator-() const {
  Form r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Form Form::conj() const {
  Form r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
  return r;
}

Form Form::degree_part(int k) const {
  Form r;
  for (const auto& [m, c] : terms_)
    if (popcount(m) == k) r.terms_.emplace(m, c);
  return r;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (m != 0) {
      os << "*";
      bool firstIdx = true;
      for (Mask mm = m; mm; mm &= mm - 1) {
        if (!firstIdx) os << "^";
        firstIdx = false;
        os << "e" << (std::countr_zero(mm) + 1);
      }
    }
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  Form r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(ma | mb, c);
    }
  }
  return r;
}

}  // namespace hkt
