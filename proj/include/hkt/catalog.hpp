#pragma once

#include <string>
#include <vector>

#include "hkt/hypercomplex.hpp"

namespace hkt {

/// The 8-dimensional abelian algebra with its standard hypercomplex
/// structure (two quaternionic blocks).
Instance make_torus8();

/// R x h7 with the one-parameter family of hypercomplex structures I_t, J_t;
/// defined for t outside {0, 1}, throws std::invalid_argument otherwise.
Instance make_rxh7(const Rational& t);

/// Parses an instance id: "torus8" or "rxh7(t=<rational>)". Also accepts
/// a bare "rxh7" together with an explicit parameter.
Instance instance_by_id(const std::string& id);

/// Ids of the default catalog, in sweep order.
std::vector<std::string> catalog_ids();

/// Default parameter values for rxh7 sweeps.
std::vector<Rational> default_sweep_values();

}  // namespace hkt
