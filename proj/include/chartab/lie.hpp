#ifndef CHARTAB_LIE_HPP
#define CHARTAB_LIE_HPP

#include "chartab/chartable.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace chartab {

/// Analytic character tables for the rank-1 families, instantiated per q with
/// exact cyclotomic values.  Rows carry labels ("1", "st", "chi:i",
/// "theta:j", "xi:1", ..., "lambda", "lambda_st"), classes carry labels
/// ("1", "z", "c", "d", "zc", "zd", "a:l", "b:m", "t", "t'", "u") in the
/// class_labels field.  For even q all three coincide up to the label.
CharTable sl2_table(std::uint64_t q);
CharTable psl2_table(std::uint64_t q);
CharTable pgl2_table(std::uint64_t q);

/// Exact zero set of each character: (class index, element order) pairs.
std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
vanishing_profile(const CharTable& t);

enum class GroupFamily { SL2Odd, PSL2Odd, SL2Even };
enum class CharFamily { Steinberg, Chi, Theta, Xi, Eta };

/// The closed-form count of vanishing classes within the character family's
/// designated torus-class range, for the enumerated (family, q) combinations;
/// throws std::invalid_argument outside the case analysis.
std::uint64_t predicted_vanishing_count(GroupFamily g, CharFamily c, std::uint64_t q);

/// Number of zeros of row i among its designated torus classes (the class
/// range the closed forms count).  Requires a labeled analytic table.
std::uint64_t designated_zero_count(const CharTable& t, std::size_t i);

/// |Out(PSL2(q))| = gcd(2, q-1) * f for q = p^f.
std::uint64_t out_order(std::uint64_t q);

/// The outer-bound inequality 2f + 1 < (q-3)/4 for odd prime powers q > 32.
bool lemma45_check(std::uint64_t q);

} // namespace chartab

#endif
