#ifndef CHARTAB_DIXON_HPP
#define CHARTAB_DIXON_HPP

#include "chartab/chartable.hpp"
#include "chartab/group.hpp"

#include <memory>

namespace chartab {

/// Class multiplication coefficients a_{ijk} = #{(x,y) in C_i x C_j : xy = z}
/// for a fixed representative z of class k, as a vector over k.
std::vector<std::uint64_t> class_mult_coeffs(const FiniteGroup& G, std::uint32_t i,
                                             std::uint32_t j);

/// The full ordinary character table, computed by the modular
/// class-matrix eigenvalue method and lifted exactly to cyclotomic integers.
/// The result is validated (exact orthogonality) before being returned;
/// an inconsistency aborts with a diagnostic.
CharTable character_table(const FiniteGroup& G);

/// Cached oracle table per family spec.
const CharTable& oracle_table(const std::string& spec);

/// Smallest prime l with l = 1 (mod e) and l > 2*sqrt(group order).
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t group_order);

} // namespace chartab

#endif
