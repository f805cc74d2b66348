#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "eagc/types.hpp"

namespace eagc {

/// Interaction variables measure conserved net power imbalance. The rate of a
/// generator's interaction variable is zero exactly when the machine's
/// scheduled power, delivered power and secondary control cancel; integrating
/// the rate gives the z accumulators carried as augmented simulation states.

/// Rate of a single generator's interaction variable, pu.
/// Depends only on the machine's own measurements; no topology enters.
template <typename Scalar>
Scalar component_intv_rate(Scalar p_mech_ref, Scalar p_elec, Scalar u_agc,
                           const GeneratorParams<Scalar>& p) {
    return p_mech_ref - p_elec + (p.turbine_gain / p.droop) * u_agc;
}

/// Rate of an area's interaction variable: the sum over its members.
template <typename Scalar>
Scalar area_intv_rate(const Eigen::Ref<const VecX<Scalar>>& member_rates) {
    if (member_rates.size() == 0)
        throw std::invalid_argument("area_intv_rate: area has no generators");
    return member_rates.sum();
}

/// Rate of the system interaction variable: the sum over all areas.
template <typename Scalar>
Scalar system_intv_rate(const Eigen::Ref<const VecX<Scalar>>& area_rates) {
    if (area_rates.size() == 0) throw std::invalid_argument("system_intv_rate: no areas");
    return area_rates.sum();
}

/// Rates at the three aggregation layers, evaluated together.
template <typename Scalar = double>
struct IntvRates {
    VecX<Scalar> component;  ///< one entry per generator
    VecX<Scalar> area;       ///< one entry per area
    Scalar system{};
};

}  // namespace eagc
