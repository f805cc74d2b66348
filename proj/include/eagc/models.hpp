#pragma once

#include <cmath>
#include <stdexcept>

#include "eagc/types.hpp"

namespace eagc {

/// Rate of change of a generator's state.
///
/// `p_elec` is the electric power the machine delivers at its bus and is the
/// sole coupling into the network; `u_agc` is the composite secondary control
/// input. Pure function; inputs must be finite.
template <typename Scalar>
GeneratorRates<Scalar> generator_deriv(const GeneratorState<Scalar>& x,
                                       const GeneratorParams<Scalar>& p, Scalar p_elec,
                                       Scalar u_agc) {
    if (!x.all_finite() || !std::isfinite(static_cast<double>(p_elec)) ||
        !std::isfinite(static_cast<double>(u_agc)))
        throw std::domain_error("generator_deriv: non-finite input");

    GeneratorRates<Scalar> r;
    r.rotor_angle = p.omega0 * (x.speed - p.omega_ref);
    r.speed = (x.p_mech + p.p_mech_ref - p.damping * (x.speed - p.omega0) - p_elec) / p.inertia;
    r.p_mech = (-x.p_mech + p.turbine_gain * x.valve) / p.turbine_time;
    r.valve = (-p.droop * x.valve - (x.speed - p.omega_ref) + u_agc) / p.governor_time;

    if (p.has_valve_limits()) {
        // Hold at the stops instead of integrating past them.
        if (x.valve >= p.valve_max && r.valve > Scalar{0}) r.valve = Scalar{0};
        if (x.valve <= p.valve_min && r.valve < Scalar{0}) r.valve = Scalar{0};
    }
    return r;
}

/// Rate of change of a series R-L load current in the rotating frame.
/// `omega` is the frame speed in pu.
template <typename Scalar>
DqCurrent<Scalar> load_deriv(const DqCurrent<Scalar>& i, const LoadParams<Scalar>& p,
                             const DqVoltage<Scalar>& v, Scalar omega) {
    if (!i.all_finite() || !v.all_finite() || !std::isfinite(static_cast<double>(omega)))
        throw std::domain_error("load_deriv: non-finite input");

    DqCurrent<Scalar> di;
    di.d = (-p.resistance * i.d + omega * p.inductance * i.q + v.d) / p.inductance;
    di.q = (-p.resistance * i.q - omega * p.inductance * i.d + v.q) / p.inductance;
    return di;
}

/// Rate of change of a transmission-line current in the rotating frame.
/// Positive current flows from the left port toward the right port, driven by
/// the port voltage difference v_left - v_right.
template <typename Scalar>
DqCurrent<Scalar> line_deriv(const DqCurrent<Scalar>& i, const LineParams<Scalar>& p,
                             const DqVoltage<Scalar>& v_left, const DqVoltage<Scalar>& v_right,
                             Scalar omega) {
    if (!i.all_finite() || !v_left.all_finite() || !v_right.all_finite() ||
        !std::isfinite(static_cast<double>(omega)))
        throw std::domain_error("line_deriv: non-finite input");

    DqCurrent<Scalar> di;
    di.d = (-p.resistance * i.d + omega * p.inductance * i.q + (v_left.d - v_right.d)) /
           p.inductance;
    di.q = (-p.resistance * i.q - omega * p.inductance * i.d + (v_left.q - v_right.q)) /
           p.inductance;
    return di;
}

}  // namespace eagc
