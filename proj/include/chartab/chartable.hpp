#ifndef CHARTAB_CHARTABLE_HPP
#define CHARTAB_CHARTABLE_HPP

#include "chartab/cyclotomic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chartab {

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An ordered character table with exact cyclotomic values.
///
/// Classes are ordered canonically at construction; characters are ordered
/// with the trivial character first and the rest by (degree, value key).
struct CharTable {
    struct Cls {
        std::string name;      // e.g. "4a"
        std::uint64_t size = 1;
        std::uint32_t element_order = 1;
        std::vector<std::uint32_t> power_map; // class of rep^k, k in [0, element_order)
    };

    std::string label;
    std::uint64_t group_order = 1;
    std::vector<Cls> classes;
    std::vector<std::vector<CycNum>> rows;   // rows[i][k] = chi_i(class k)
    std::vector<std::string> row_labels;     // optional (analytic tables)
    std::vector<std::string> class_labels;   // optional family labels ("a:2", "c", ...)

    std::size_t class_count() const { return classes.size(); }
    std::size_t char_count() const { return rows.size(); }
    std::size_t identity_index() const; // class with element_order 1

    /// chi_i(1) as a nonnegative integer; throws if the value is not one.
    std::uint64_t degree(std::size_t i) const;

    /// Index of the class containing inverses of class k.
    std::uint32_t inverse_class(std::uint32_t k) const;

    /// Checks, exactly: class equation, row and column orthogonality,
    /// sum of squared degrees, char count, trivial first row, integral
    /// degrees.  Throws TableError naming the failing invariant and indices.
    void validate() const;

    /// Sorts characters canonically (trivial first, then (degree, value key))
    /// and fills class names; used by table builders.
    void finalize();

    /// Representation-independent canonical encoding: two tables of
    /// isomorphic groups with identical character data (up to class/character
    /// relabeling consistent with orders, sizes and power maps) produce equal
    /// keys.
    std::string canonical_key() const;
};

/// Fills Cls::name fields as "<order><letter>" in class order.
void assign_class_names(CharTable& t);

/// Sum of a list of cyclotomic values, grouping by order to keep the
/// intermediate merges cheap.
CycNum cyc_sum(const std::vector<CycNum>& terms);

/// Burnside: every character of degree > 1 has at least one zero value.
bool nonlinear_rows_have_zero(const CharTable& t);
/// Strengthened zero existence: every character of degree > 1 vanishes on
/// some class of prime-power element order.
bool nonlinear_rows_have_prime_power_order_zero(const CharTable& t);

} // namespace chartab

#endif
