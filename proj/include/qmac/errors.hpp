#pragma once

#include <stdexcept>
#include <string>

namespace qmac {

/// An exact division left a nonzero remainder. Where the algebra guarantees
/// divisibility (operator application on symmetric input, Gaussian
/// coefficients) this doubles as an internal-consistency alarm.
struct not_divisible : std::runtime_error {
    explicit not_divisible(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates the hyperoctahedral invariance precondition.
struct not_symmetric : std::runtime_error {
    explicit not_symmetric(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric evaluation point came within the guard distance of a pole.
struct pole_proximity : std::runtime_error {
    explicit pole_proximity(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature hit the node cap before successive values agreed.
struct no_convergence : std::runtime_error {
    no_convergence(const std::string& what, double last, double prev)
        : std::runtime_error(what), last_diff(last), prev_diff(prev) {}
    double last_diff;
    double prev_diff;
};

/// Two distinct partitions produced equal eigenvalues in a triangular solve.
struct degenerate_eigenvalue : std::runtime_error {
    explicit degenerate_eigenvalue(const std::string& what) : std::runtime_error(what) {}
};

/// A condition the library itself guarantees failed; indicates a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qmac
