#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace eagc {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vec4 = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Non-reheat generator with embedded primary governor.
///
/// All quantities are per unit on the system base; time constants in seconds.
/// The model runs on the equations exactly as written, so `inertia` divides
/// the accelerating power and the dq rotation terms use the per-unit frame
/// speed directly.
template <typename Scalar = double>
struct GeneratorParams {
    Scalar inertia{};          ///< M, pu*s
    Scalar damping{};          ///< D, pu per pu speed deviation
    Scalar turbine_gain{1};    ///< K_t
    Scalar turbine_time{};     ///< T_u, s
    Scalar governor_time{};    ///< T_g, s
    Scalar droop{};            ///< r, pu speed per pu power
    Scalar omega0{1};          ///< rated speed, pu
    Scalar omega_ref{1};       ///< governor speed setpoint, pu
    Scalar p_mech_ref{};       ///< scheduled mechanical power, pu
    Scalar u_max{1};           ///< saturation limit of the composite control input, pu

    // Optional physical valve travel range; unlimited unless configured.
    Scalar valve_min = -std::numeric_limits<Scalar>::infinity();
    Scalar valve_max = std::numeric_limits<Scalar>::infinity();

    bool has_valve_limits() const {
        return std::isfinite(static_cast<double>(valve_min)) ||
               std::isfinite(static_cast<double>(valve_max));
    }

    void validate() const {
        if (!(inertia > Scalar{0})) throw std::invalid_argument("generator: inertia must be > 0");
        if (!(turbine_time > Scalar{0}))
            throw std::invalid_argument("generator: turbine_time must be > 0");
        if (!(governor_time > Scalar{0}))
            throw std::invalid_argument("generator: governor_time must be > 0");
        if (!(droop > Scalar{0})) throw std::invalid_argument("generator: droop must be > 0");
        if (!(turbine_gain > Scalar{0}))
            throw std::invalid_argument("generator: turbine_gain must be > 0");
        if (!(damping >= Scalar{0})) throw std::invalid_argument("generator: damping must be >= 0");
        if (!(u_max > Scalar{0})) throw std::invalid_argument("generator: u_max must be > 0");
        if (!(valve_min < valve_max))
            throw std::invalid_argument("generator: valve_min must be < valve_max");
    }
};

/// Rotor angle (rad), speed (pu), mechanical power (pu), valve position (pu).
/// Also serves as the rate-of-change container returned by the derivative
/// functions.
template <typename Scalar = double>
struct GeneratorState {
    Scalar rotor_angle{};
    Scalar speed{};
    Scalar p_mech{};
    Scalar valve{};

    Vec4<Scalar> to_vector() const { return Vec4<Scalar>(rotor_angle, speed, p_mech, valve); }

    static GeneratorState from_vector(const Vec4<Scalar>& v) {
        return GeneratorState{v[0], v[1], v[2], v[3]};
    }

    bool all_finite() const {
        return std::isfinite(static_cast<double>(rotor_angle)) &&
               std::isfinite(static_cast<double>(speed)) &&
               std::isfinite(static_cast<double>(p_mech)) &&
               std::isfinite(static_cast<double>(valve));
    }
};

template <typename Scalar = double>
using GeneratorRates = GeneratorState<Scalar>;

/// d/q axis current pair in the network reference frame, pu.
template <typename Scalar = double>
struct DqCurrent {
    Scalar d{};
    Scalar q{};

    Vec2<Scalar> to_vector() const { return Vec2<Scalar>(d, q); }
    static DqCurrent from_vector(const Vec2<Scalar>& v) { return DqCurrent{v[0], v[1]}; }

    Scalar norm() const { return std::hypot(static_cast<double>(d), static_cast<double>(q)); }
    bool all_finite() const {
        return std::isfinite(static_cast<double>(d)) && std::isfinite(static_cast<double>(q));
    }

    DqCurrent operator+(const DqCurrent& o) const { return {d + o.d, q + o.q}; }
    DqCurrent operator-(const DqCurrent& o) const { return {d - o.d, q - o.q}; }
    DqCurrent operator*(Scalar s) const { return {d * s, q * s}; }
    DqCurrent& operator+=(const DqCurrent& o) {
        d += o.d;
        q += o.q;
        return *this;
    }
    DqCurrent& operator-=(const DqCurrent& o) {
        d -= o.d;
        q -= o.q;
        return *this;
    }
};

/// d/q axis voltage pair in the network reference frame, pu.
template <typename Scalar = double>
struct DqVoltage {
    Scalar d{};
    Scalar q{};

    Vec2<Scalar> to_vector() const { return Vec2<Scalar>(d, q); }
    static DqVoltage from_vector(const Vec2<Scalar>& v) { return DqVoltage{v[0], v[1]}; }

    Scalar norm() const { return std::hypot(static_cast<double>(d), static_cast<double>(q)); }
    bool all_finite() const {
        return std::isfinite(static_cast<double>(d)) && std::isfinite(static_cast<double>(q));
    }

    DqVoltage operator+(const DqVoltage& o) const { return {d + o.d, q + o.q}; }
    DqVoltage operator-(const DqVoltage& o) const { return {d - o.d, q - o.q}; }
    DqVoltage operator*(Scalar s) const { return {d * s, q * s}; }
};

/// Instantaneous real power v . i of a voltage/current pair, pu.
template <typename Scalar>
Scalar real_power(const DqVoltage<Scalar>& v, const DqCurrent<Scalar>& i) {
    return v.d * i.d + v.q * i.q;
}

/// Series R-L load, pu impedance on the system base.
template <typename Scalar = double>
struct LoadParams {
    Scalar resistance{};  ///< R_L, pu
    Scalar inductance{};  ///< L_L, pu*s

    void validate() const {
        if (!(resistance > Scalar{0})) throw std::invalid_argument("load: resistance must be > 0");
        if (!(inductance > Scalar{0})) throw std::invalid_argument("load: inductance must be > 0");
    }
};

/// Series R-L transmission line segment, pu impedance on the system base.
/// Endpoint wiring lives with the topology.
template <typename Scalar = double>
struct LineParams {
    Scalar resistance{};  ///< R_TL, pu
    Scalar inductance{};  ///< L_TL, pu*s

    void validate() const {
        if (!(resistance > Scalar{0})) throw std::invalid_argument("line: resistance must be > 0");
        if (!(inductance > Scalar{0})) throw std::invalid_argument("line: inductance must be > 0");
    }
};

}  // namespace eagc
