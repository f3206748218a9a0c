#ifndef TQS_REFLECTION_HPP
#define TQS_REFLECTION_HPP

#include "tqs/character_table.hpp"
#include "tqs/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tqs {

/// Eigenvalue 1 with multiplicity exactly d-1 (so g != 1).
bool is_pseudoreflection(const std::vector<long>& eigen_multiplicities, std::size_t d);
/// Matrix path: rank(g - I) = 1.
bool is_pseudoreflection(const CycMatrix& g);

/// Per-class flags computed from the character alone.
std::vector<char> pseudoreflection_classes(const CharacterTable& t, const std::vector<CyclotomicNumber>& chi);
std::size_t pseudoreflection_count(const CharacterTable& t, const std::vector<char>& class_flags);

/// P, the subgroup generated by the pseudoreflections (always normal).
Subgroup reflection_subgroup(const CharacterTable& t, const std::vector<CyclotomicNumber>& chi);
Subgroup reflection_subgroup(const MatrixRepresentation& rep);

/// G/P with its projection.
Quotient fundamental_group(const CharacterTable& t, const std::vector<CyclotomicNumber>& chi);
Quotient fundamental_group(const MatrixRepresentation& rep);

/// H = G intersected with the scalar matrices.
Subgroup scalar_subgroup(const MatrixRepresentation& rep);

/// Inconclusive: more than the list limit of faithful representations, none refuting.
enum class StrongVerdict { Certified, Refuted, Vacuous, Inconclusive };

inline constexpr std::size_t kStrongListLimit = 20000;

struct StronglyRdResult {
    StrongVerdict verdict = StrongVerdict::Vacuous;
    std::vector<AbstractRepresentation> faithful;  // everything that was checked, in enumeration order
    std::optional<AbstractRepresentation> witness; // a faithful rep not generated by pseudoreflections
};

/// Is G generated by pseudoreflections in every faithful d-dimensional representation?
/// Stops at the first representation that is not.
StronglyRdResult strongly_rd_verdict(const CharacterTable& t, std::size_t d, std::size_t list_limit = kStrongListLimit);

/// Degrees d_1 <= ... <= d_dim with prod d_i = |G| and molien * prod (1 - t^d_i) = 1
/// up to the truncation order, if any exist.
std::optional<std::vector<unsigned>> shephard_todd_degrees(const PowerSeries<Rational>& molien, std::size_t group_order,
                                                           std::size_t dimension);

/// Is there a faithful degree-d representation of q with no pseudoreflections?
/// nullopt when q has no faithful degree-d representation at all.
std::optional<bool> reflection_free_embedding(const GroupPtr& q, std::size_t d);

struct SingularityDescriptor {
    GroupPtr group;
    std::size_t dimension = 0;
    std::optional<Subgroup> reflection_subgroup;
    GroupPtr fundamental_group;
    std::string fundamental_group_label;
    bool is_smooth = false;
    std::size_t pseudoreflection_count = 0;
    std::optional<Subgroup> scalar_subgroup;
    std::size_t scalar_order = 0;
    std::size_t projective_image_order = 0;

    PowerSeries<Rational> molien;
    std::optional<std::vector<unsigned>> degrees;
    bool degrees_match_count = false;  // sum (d_i - 1) = pseudoreflection_count
    bool character_and_matrix_paths_agree = false;
    std::optional<bool> quotient_reflection_free;
};

/// series_order 0 means 2|G|.
SingularityDescriptor analyze_singularity(const MatrixRepresentation& rep, std::size_t series_order = 0);

} // namespace tqs

#endif
