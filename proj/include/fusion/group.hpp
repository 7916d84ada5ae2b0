#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

using Element = std::size_t;

/// A finite group given by its Cayley table. Element 0 is the identity.
/// The constructor checks the Latin-square property, the identity and
/// associativity, and throws StructuralError on failure.
class FiniteGroup {
public:
    FiniteGroup(std::size_t order, std::vector<Element> table, std::string name = "");

    std::size_t order() const noexcept { return order_; }
    const std::string &name() const noexcept { return name_; }
    const std::vector<Element> &table() const noexcept { return table_; }

    Element multiply(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
    Element inverse(Element a) const noexcept { return inverse_[a]; }
    /// x a x^-1
    Element conjugate(Element x, Element a) const noexcept {
        return multiply(multiply(x, a), inverse(x));
    }
    bool commute(Element a, Element b) const noexcept {
        return multiply(a, b) == multiply(b, a);
    }
    bool is_abelian() const noexcept;

    /// Conjugacy classes, each sorted, ordered by smallest member.
    std::vector<std::vector<Element>> conjugacy_classes() const;

    /// Elements commuting with a, in increasing order.
    std::vector<Element> centralizer(Element a) const;

    /// Subgroup generated by the given elements, sorted.
    std::vector<Element> generated_subgroup(const std::vector<Element> &generators) const;

    /// The subgroup on `members` (which must contain 0 and be closed) as a
    /// standalone group; element k of the result is members[k].
    FiniteGroup subgroup(const std::vector<Element> &members, std::string name = "") const;

private:
    std::size_t order_;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    std::string name_;
};

/// A permutation of 0..n-1 in one-line notation.
using Permutation = std::vector<std::size_t>;

/// Closure of the generators under composition. Elements are numbered in
/// breadth-first order from the identity.
FiniteGroup permutation_group(const std::vector<Permutation> &generators, std::string name);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n); // order 2n
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup quaternion_group();

/// Element (g, h) has index g * b.order() + h.
FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);

/// Catalogue names: z1 .. z16, z2xz2, s3, d4, d5, q8, a4.
FiniteGroup named_group(std::string_view name);
std::vector<std::string> group_catalogue();

struct GroupNilpotency {
    bool nilpotent = false;
    /// Number of steps for the lower central series to reach the trivial group.
    std::optional<std::size_t> nilpotency_class;
    /// Sizes of G_1 = G, G_2 = [G, G_1], ... until it reaches 1 or stabilizes.
    std::vector<std::size_t> series_orders;
};

GroupNilpotency group_is_nilpotent(const FiniteGroup &group);

struct CharacterTable {
    std::vector<std::vector<Element>> classes;
    /// characters[r][c] is the value of irreducible r on class c.
    std::vector<std::vector<std::complex<double>>> characters;
    std::vector<std::size_t> degrees;

    /// Class index of every group element.
    std::vector<std::size_t> class_of;
};

inline constexpr std::size_t kDefaultGroupCap = 24;

/// Irreducible characters from the class-algebra eigenvectors. Rows are sorted
/// by degree, the trivial character first. Throws CapacityError above the cap
/// and NumericalError if the orthogonality relations fail at 1e-6.
CharacterTable character_table(const FiniteGroup &group, std::size_t max_order = kDefaultGroupCap);

} // namespace fusion
