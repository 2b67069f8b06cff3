#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tpjc {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

// Internal electronic levels of the cascade configuration, ordered by energy.
enum class Level : int { g = 0, r = 1, e = 2 };

inline constexpr int kLevels = 3;

// Raised when an initial state loses more probability to the Fock-space
// truncation than the caller allowed.
class TruncationError : public std::runtime_error {
public:
    TruncationError(std::string what, double deficit)
        : std::runtime_error(std::move(what)), m_deficit(deficit) {}

    double deficit() const { return m_deficit; }

private:
    double m_deficit;
};

// Raised when a time integration leaves its accuracy envelope (norm drift
// beyond the configured limit). Carries the time at which the check failed.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(std::string what, double time)
        : std::runtime_error(std::move(what)), m_time(time) {}

    double time() const { return m_time; }

private:
    double m_time;
};

} // namespace tpjc
