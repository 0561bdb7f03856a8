#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ezfloat/decimal.hpp"

namespace ezfloat::cli {

/// All corpora draw from std::mt19937_64, whose output sequence is fixed by
/// the C++ standard, so a seed names the same corpus on every platform.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);

/// Standard normal deviate by Box-Muller. Written out rather than using
/// std::normal_distribution, whose algorithm is implementation-defined.
double standard_normal(Rng& rng);

/// Finite doubles from uniformly random bit patterns (NaNs and infinities
/// redrawn).
std::vector<double> random_finite_doubles(std::size_t count, std::uint64_t seed);

/// Signed zeros, subnormal and normal extremes, 1.0, and every power of two
/// together with its neighbours one ulp away.
std::vector<double> curated_doubles();

/// Decimals with 1..max_digits digit mantissas (leading digit nonzero) and
/// point uniform in [point_low, point_high].
std::vector<DecimalSci> random_decimals(std::size_t count, std::uint64_t seed,
                                        int max_digits = 40, int point_low = -360,
                                        int point_high = 330);

/// Mantissas of 1..17 digits (several digit patterns per length) at every
/// point that puts the value inside the finite double range.
std::vector<DecimalSci> bounds_grid();

}  // namespace ezfloat::cli
