#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string_view>

#include "latdet/lattice.hpp"

namespace latdet {

/// Continuum potential b^3 x on [0, 1] sampled at p interior vertices.
struct LinearPotentialParams {
    double b = 0.0;
    std::size_t p = 1;

    /// Lattice strength B = (b/(p+1))^3, so that V(j) = B j.
    double strength() const noexcept;
};

/// -l(l+1)/cosh^2 x on [-1/2, 1/2], mapped to the lattice on [0, 1].
struct RosenMorseParams {
    double l = 0.0;
    std::size_t p = 1;

    double step() const noexcept { return 1.0 / static_cast<double>(p + 1); }
    double l_bar() const noexcept { return l + 0.5; }
};

PotentialTable linear_lattice_potential(const LinearPotentialParams& params);

/// V(j) = -h^2 l(l+1) / cosh^2(h j - 1/2).
PotentialTable rosen_morse_lattice_potential(const RosenMorseParams& params);

/// Determinant ratio at three interior vertices,
///   1 + (3 S1 + 2 S2 + S3 + v2)/4,
/// with S1, S2, S3 the elementary symmetric functions of v1, v2, v3.
/// Throws std::invalid_argument unless p = 3.
double discdet_p3_closed_form(const PotentialTable& v);

/// One real per line; a non-numeric first line is taken as a header and
/// blank lines are skipped. Errors name the offending line.
PotentialTable parse_potential_csv(std::istream& in, std::string_view source = "<input>");
PotentialTable load_potential_csv(const std::filesystem::path& path);

}  // namespace latdet
