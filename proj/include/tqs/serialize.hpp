#ifndef TQS_SERIALIZE_HPP
#define TQS_SERIALIZE_HPP

#include "tqs/catalog.hpp"
#include "tqs/certifier.hpp"
#include "tqs/character_table.hpp"
#include "tqs/cyclotomic.hpp"
#include "tqs/matrix.hpp"
#include "tqs/reflection.hpp"
#include "tqs/representation.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace tqs {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "0.1.0";

/// {"n": conductor, "coeffs": ["p/q", ...]} at minimal conductor.
nlohmann::json to_json(const CyclotomicNumber& x);
/// Accepts the object form, a "p/q" string, or a JSON integer.
CyclotomicNumber cyclotomic_from_json(const nlohmann::json& j, const std::string& where = "");

nlohmann::json to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const nlohmann::json& j, std::size_t dimension, const std::string& where = "");

struct ParsedGroup {
    GroupPtr group;
    std::string kind;  // "catalog", "permutation" or "matrix"
    std::size_t degree = 0;
    std::vector<Permutation> permutations;  // per element, for catalog and permutation input
    std::optional<MatrixRepresentation> rep;  // matrix input only
};

/// Parses a GroupSpec; ParseError carries a JSON-pointer location.
ParsedGroup parse_group_spec(const nlohmann::json& spec, std::size_t order_cap = kDefaultOrderCap);
/// Catalog part only: {"family": ..., "params": [...]}.
PermutationSpec catalog_permutations(const nlohmann::json& catalog, const std::string& where = "/catalog");
/// Explicit spec (permutation or matrix form) built from the group's generators.
nlohmann::json serialize_group_spec(const ParsedGroup& g);

nlohmann::json to_json(const CharacterTable& t);
nlohmann::json to_json(const RdCertificate& c, bool with_timing = false);
nlohmann::json to_json(const SingularityDescriptor& s);

} // namespace tqs

#endif
