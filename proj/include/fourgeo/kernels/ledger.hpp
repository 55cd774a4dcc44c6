#pragma once

#include <span>
#include <vector>

#include "fourgeo/algebra/laurent.hpp"

// Data-parallel ledger kernels. Each `*_serial` function is the reference the
// OpenMP version is tested against; both return identical results.
namespace fourgeo::kernels {

/// base * Delta_i(t^2) for every i.
std::vector<LaurentPoly> surgery_ledgers_serial(const LaurentPoly& base,
                                                std::span<const LaurentPoly> alexanders);
std::vector<LaurentPoly> surgery_ledgers(const LaurentPoly& base,
                                         std::span<const LaurentPoly> alexanders);

/// Number of index pairs i < j with values[i] == values[j].
std::size_t count_collisions_serial(std::span<const LaurentPoly> values);
std::size_t count_collisions(std::span<const LaurentPoly> values);

}  // namespace fourgeo::kernels
