#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qmac/contour.hpp"

namespace qmac {

/// Seeded source of evaluation points. Only raw 64-bit engine output feeds
/// the uniform draws, so a seed reproduces the same points everywhere.
class point_sampler {
  public:
    explicit point_sampler(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    complex annulus_point(double rmin = 0.7, double rmax = 1.4) {
        const double mod = uniform(rmin, rmax);
        const double arg = uniform(0.0, 2.0 * std::numbers::pi);
        return std::polar(mod, arg);
    }

    std::vector<complex> y_vector(int n, double rmin = 0.7, double rmax = 1.4) {
        std::vector<complex> y(n);
        for (auto& yi : y) yi = annulus_point(rmin, rmax);
        return y;
    }

    /// y vector whose pole set {y_j^{\pm 1} q^m} keeps distinct poles at least
    /// min_sep apart and away from the default contour radius. Resamples on
    /// violation, up to max_tries.
    std::vector<complex> y_vector_for_contour(int lambda, int n, int k, double q,
                                              int max_tries = 1000) {
        for (int attempt = 0; attempt < max_tries; ++attempt) {
            auto y = y_vector(n);
            qjp_spec spec(lambda, n, k, q, y);
            if (poles_well_separated(spec)) return y;
        }
        throw pole_proximity("y_vector_for_contour: could not find well-separated poles");
    }

    static bool poles_well_separated(const qjp_spec& spec, double min_sep = 1e-3) {
        const double radius = spec.default_radius();
        for (std::size_t a = 0; a < spec.poles.size(); ++a) {
            if (radius - std::abs(spec.poles[a]) < min_sep) return false;
            for (std::size_t b = a + 1; b < spec.poles.size(); ++b)
                if (std::abs(spec.poles[a] - spec.poles[b]) < min_sep) return false;
        }
        return true;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace qmac
