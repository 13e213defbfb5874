#ifndef CHARTAB_FAMILIES_HPP
#define CHARTAB_FAMILIES_HPP

#include "chartab/group.hpp"

#include <memory>
#include <string>

namespace chartab {

/// Builds a group from a spec string.  Grammar:
///   sn:<n> an:<n> sl2:<q> psl2:<q> gl2:<q> pgl2:<q> psigmal2:<q>
///   m10 2a5 3a6 3a6:2_3 m11
/// psigmal2:<q> is the full projective semilinear group (PGL2(q) extended by
/// the field automorphisms); for even q this is PSL2(q):f.  Stored-generator
/// families (3a6, 3a6:2_3, m11) are validated on construction: group order,
/// center structure, and simplicity of the central quotient by class
/// statistics.  Throws std::invalid_argument / BudgetExceeded /
/// ValidationError.
std::shared_ptr<const FiniteGroup> construct_family(const std::string& spec);

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// True when the label refers to a family this build knows to be
/// non-solvable (used by the primitivity gate).
bool spec_is_known(const std::string& spec);

} // namespace chartab

#endif
