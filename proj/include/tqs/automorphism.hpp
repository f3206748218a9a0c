#ifndef TQS_AUTOMORPHISM_HPP
#define TQS_AUTOMORPHISM_HPP

#include "tqs/group.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tqs {

/// Full automorphism group of G with Inn(G) and (optionally) a complement.
///
/// An automorphism is identified by the images of `domain_generators`;
/// element a of `aut_group` has images `generator_images[a]`. Products in
/// aut_group compose like maps: (a*b)(x) = a(b(x)). Element 0 is the identity.
struct AutOutData {
    GroupPtr group;
    GroupPtr aut_group;
    std::vector<Elem> domain_generators;
    std::vector<std::vector<std::uint16_t>> generator_images;
    Subgroup inner;
    std::size_t out_order = 1;
    std::optional<Subgroup> splitting;

    /// Image array of automorphism a (indexed by element of G).
    std::vector<Elem> map_of(Elem a) const;
    GroupHomomorphism automorphism(Elem a) const;
    /// Index in aut_group of x -> g x g^-1.
    Elem inner_automorphism(Elem g) const;
    /// Index in aut_group of the automorphism with the given generator images, if any.
    std::optional<Elem> find(const std::vector<std::uint16_t>& images) const;
};

/// Throws AutCapExceeded if |G| > aut_cap or |Aut G| > 8 * aut_cap.
AutOutData automorphism_group(const GroupPtr& g, std::size_t aut_cap = kDefaultAutCap);

/// Number of automorphisms by a plain search (no partial pruning); used to cross-check.
std::size_t count_automorphisms(const GroupPtr& g);

/// The unique homomorphism source -> target sending gens[i] to images[i], if
/// it exists. gens must generate source.
std::optional<std::vector<Elem>> extend_to_homomorphism(const FiniteGroup& source, const std::vector<Elem>& gens,
                                                        const FiniteGroup& target, const std::vector<Elem>& images);

/// Cheap isomorphism invariants.
struct GroupFingerprint {
    std::size_t order = 0;
    std::vector<std::size_t> class_sizes;    // sorted
    std::vector<unsigned> element_orders;    // sorted multiset
    std::vector<std::size_t> derived_series; // orders
    std::size_t center_order = 0;

    friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
    std::string key() const;
};

GroupFingerprint fingerprint(const GroupPtr& g);

/// An explicit isomorphism g -> h, or nullopt (exhaustive, so definitive).
std::optional<GroupHomomorphism> is_isomorphic(const GroupPtr& g, const GroupPtr& h);

} // namespace tqs

#endif
