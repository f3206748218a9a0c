#ifndef TQS_CATALOG_HPP
#define TQS_CATALOG_HPP

#include "tqs/group.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tqs {

/// Degree plus generating permutations (0-based image arrays).
struct PermutationSpec {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
};

// Standard permutation realizations of the catalog families.
PermutationSpec cyclic_spec(unsigned n);
/// Dihedral group of order 2n on n points; n = 2 is the Klein group on 4 points, n = 1 is C_2.
PermutationSpec dihedral_spec(unsigned n);
PermutationSpec symmetric_spec(unsigned n);
PermutationSpec alternating_spec(unsigned n);
/// Dicyclic group of order 4n in its regular representation; n = 2 gives Q_8.
PermutationSpec quaternion_spec(unsigned n);
PermutationSpec elementary_abelian_spec(unsigned p, unsigned k);
/// Disjoint-union action of the factors.
PermutationSpec direct_product_spec(const std::vector<PermutationSpec>& factors);

/// Short name ("C6", "D4", "S3", "C2^2", "Q8", "1", ...) when g matches a
/// small catalog family, else "".
std::string identify_group(const GroupPtr& g);

struct CatalogEntry {
    std::string id;
    nlohmann::json spec;  // GroupSpec
};

/// Abstract groups: every family, the order 21 and 55 Frobenius groups, a few products.
const std::vector<CatalogEntry>& builtin_catalog();
/// Matrix groups: dihedral and diagonal reflection groups, scalar mu_n actions, small non-reflection cases.
const std::vector<CatalogEntry>& builtin_matrix_catalog();

} // namespace tqs

#endif
