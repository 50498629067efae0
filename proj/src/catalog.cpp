#include "hkt/catalog.hpp"

#include <stdexcept>

namespace hkt {

Instance make_torus8() {
  LieAlgebraSpec spec;
  spec.dim = 8;
  spec.differentials.assign(8, Form());

  Mat I = Mat::Zero(8, 8), J = Mat::Zero(8, 8);
  // I: e1 -> e2, e3 -> e4 on each quaternionic block.
  for (int b = 0; b < 8; b += 2) {
    I(b + 1, b) = Scalar(1);
    I(b, b + 1) = Scalar(-1);
  }
  // J: e1 -> e3, e2 -> -e4 per 4-block.
  for (int b = 0; b < 8; b += 4) {
    J(b + 2, b) = Scalar(1);
    J(b, b + 2) = Scalar(-1);
    J(b + 3, b + 1) = Scalar(-1);
    J(b + 1, b + 3) = Scalar(1);
  }
  HypercomplexStructure h{2, I, J};
  auto v = validate_structure(h);
  if (!v.ok) throw std::logic_error("torus8 structure invalid");
  return Instance(std::move(spec), std::move(h), "torus8");
}

Instance make_rxh7(const Rational& t) {
  if (t == 0 || t == 1)
    throw std::invalid_argument("rxh7: parameter t must avoid 0 and 1");
  LieAlgebraSpec spec = parse_salamon("0,0,0,0,0,12+34,13-24,14+23");

  Rational a = (t - 1) / t;   // I e1 = a e2, J e1 = a e3
  Rational ai = t / (1 - t);  // so that I^2 = -Id on the first block
  Rational b = 1 / t;         // I e5 = b e6, J e5 = b e7

  Mat I = Mat::Zero(8, 8), J = Mat::Zero(8, 8);
  I(1, 0) = Scalar(a);
  I(0, 1) = Scalar(ai);
  I(3, 2) = Scalar(1);
  I(2, 3) = Scalar(-1);
  I(5, 4) = Scalar(b);
  I(4, 5) = Scalar(-t);
  I(7, 6) = Scalar(1);
  I(6, 7) = Scalar(-1);

  J(2, 0) = Scalar(a);
  J(0, 2) = Scalar(ai);
  J(3, 1) = Scalar(-1);
  J(1, 3) = Scalar(1);
  J(6, 4) = Scalar(b);
  J(4, 6) = Scalar(-t);
  J(7, 5) = Scalar(-1);
  J(5, 7) = Scalar(1);

  HypercomplexStructure h{2, I, J};
  auto v = validate_structure(h);
  if (!v.ok) throw std::logic_error("rxh7 structure invalid");
  return Instance(std::move(spec), std::move(h),
                  "rxh7(t=" + rational_str(t) + ")");
}

Instance instance_by_id(const std::string& id) {
  if (id == "torus8") return make_torus8();
  if (id.rfind("rxh7", 0) == 0) {
    std::string rest = id.substr(4);
    if (rest.empty())
      throw std::invalid_argument(
          "rxh7 needs a parameter, e.g. rxh7(t=1/2)");
    if (rest.front() == '(' && rest.back() == ')') {
      std::string inner = rest.substr(1, rest.size() - 2);
      if (inner.rfind("t=", 0) == 0) inner = inner.substr(2);
      return make_rxh7(parse_rational(inner));
    }
    throw std::invalid_argument("malformed rxh7 id: " + id);
  }
  throw std::invalid_argument("unknown instance id: " + id);
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids = {"torus8"};
  for (const Rational& t : default_sweep_values())
    ids.push_back("rxh7(t=" + rational_str(t) + ")");
  return ids;
}

std::vector<Rational> default_sweep_values() {
  return {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
          Rational(3, 4)};
}

}  // namespace hkt
