#ifndef TQS_GROUP_HPP
#define TQS_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tqs {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 2000;
inline constexpr std::size_t kDefaultAutCap = 512;
/// Tables are stored with 16-bit entries.
inline constexpr std::size_t kMaxGroupOrder = 65535;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A fully enumerated finite group.
///
/// Elements are the indices 0..order()-1 and element 0 is the identity.
/// Products come from a dense Cayley table, so every query is O(1). Element
/// orders, inverses and conjugacy classes are computed once at construction
/// and the object is immutable afterwards.
class FiniteGroup {
public:
    /// `table[a * order + b]` is the index of a*b. Validates that the table
    /// is a Latin square with identity 0 and that `generators` generate.
    static GroupPtr from_table(std::size_t order, std::vector<std::uint16_t> table, std::vector<Elem> generators);

    std::size_t order() const noexcept { return n_; }
    Elem identity() const noexcept { return 0; }
    Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem inv(Elem a) const noexcept { return inv_[a]; }
    Elem pow(Elem a, long k) const;
    /// g x g^-1
    Elem conj(Elem x, Elem g) const noexcept { return mul(mul(g, x), inv_[g]); }
    /// a^-1 b^-1 a b
    Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
    unsigned element_order(Elem a) const noexcept { return orders_[a]; }
    unsigned exponent() const noexcept { return exponent_; }
    const std::vector<Elem>& generators() const noexcept { return gens_; }
    bool is_abelian() const noexcept { return abelian_; }

    /// Conjugacy classes, ordered by smallest member; class 0 is {identity}.
    std::size_t num_classes() const noexcept { return classes_.size(); }
    const std::vector<std::vector<Elem>>& classes() const noexcept { return classes_; }
    std::uint32_t class_of(Elem a) const noexcept { return class_of_[a]; }

    /// True when both groups have literally the same Cayley table.
    bool same_table(const FiniteGroup& other) const noexcept { return table_ == other.table_; }
    std::size_t table_hash() const noexcept;
    const std::vector<std::uint16_t>& table() const noexcept { return table_; }

private:
    FiniteGroup() = default;

    std::size_t n_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<Elem> inv_;
    std::vector<unsigned> orders_;
    unsigned exponent_ = 1;
    std::vector<Elem> gens_;
    bool abelian_ = true;
    std::vector<std::vector<Elem>> classes_;
    std::vector<std::uint32_t> class_of_;
};

class Subgroup {
public:
    /// `members` need not be sorted; it is not checked for closure (see is_subgroup()).
    Subgroup(GroupPtr parent, std::vector<Elem> members);

    const GroupPtr& parent() const noexcept { return parent_; }
    const std::vector<Elem>& members() const noexcept { return members_; }
    std::size_t order() const noexcept { return members_.size(); }
    bool contains(Elem a) const;
    bool is_trivial() const noexcept { return members_.size() == 1; }
    bool is_whole() const;
    /// Closed under products, contains the identity.
    bool is_subgroup() const;
    /// Closed under conjugation by the parent's generators.
    bool is_normal() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

private:
    GroupPtr parent_;
    std::vector<Elem> members_;
};

struct GroupHomomorphism {
    GroupPtr source;
    GroupPtr target;
    std::vector<Elem> image;  // indexed by source element

    Elem operator()(Elem a) const { return image[a]; }
    /// Exhaustive check of image(ab) = image(a) image(b).
    bool is_homomorphism() const;
    bool is_bijective() const;
    Subgroup kernel() const;
};

struct Quotient {
    GroupPtr group;
    GroupHomomorphism projection;
};

using Permutation = std::vector<std::uint32_t>;

/// Enumerated permutation group; elements[i] is the permutation of group element i.
/// Products compose right to left: (p q)(x) = p(q(x)).
struct PermutationGroup {
    GroupPtr group;
    std::size_t degree = 0;
    std::vector<Permutation> elements;
};

/// Breadth-first closure of permutation generators (0-based image arrays).
/// Throws OrderCapExceeded or NonInvertibleGenerator.
PermutationGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                         std::size_t order_cap = kDefaultOrderCap);

Subgroup generated_subgroup(const GroupPtr& g, std::span<const Elem> gens);
Subgroup normal_closure(const GroupPtr& g, std::span<const Elem> elems);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
bool is_perfect(const GroupPtr& g);
/// Orders of G = G^(0) > G^(1) > ... down to the first repeated term.
std::vector<std::size_t> derived_series_orders(const GroupPtr& g);
/// All normal subgroups, sorted by (order, members).
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);
/// G/N with its projection; throws NotNormal.
Quotient quotient(const Subgroup& n);
/// The subgroup as a group in its own right; embedding[i] is the parent element of new element i.
GroupPtr subgroup_as_group(const Subgroup& h, std::vector<Elem>* embedding = nullptr);
/// Greedy small generating set (used to keep homomorphism searches narrow).
std::vector<Elem> small_generating_set(const GroupPtr& g);

} // namespace tqs

#endif
