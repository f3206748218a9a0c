#ifndef TQS_REPRESENTATION_HPP
#define TQS_REPRESENTATION_HPP

#include "tqs/character_table.hpp"
#include "tqs/group.hpp"
#include "tqs/matrix.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace tqs {

/// G -> GL_d given on every element.
struct MatrixRepresentation {
    GroupPtr group;
    std::size_t dimension = 0;
    std::vector<CycMatrix> images;  // by element index

    const CycMatrix& operator()(Elem g) const { return images[g]; }
    /// Exhaustive check rho(ab) = rho(a) rho(b).
    bool is_homomorphism() const;
    bool is_faithful() const;
    /// Trace of each class representative, reduced.
    std::vector<CyclotomicNumber> character(const ConjugacyData& conj) const;
};

struct MatrixGroup {
    GroupPtr group;
    MatrixRepresentation rep;
};

/// Closure of invertible d x d matrices; throws NonInvertibleGenerator or OrderCapExceeded.
MatrixGroup group_from_matrices(std::size_t dimension, const std::vector<CycMatrix>& gens,
                                std::size_t order_cap = kDefaultOrderCap);

/// A representation up to equivalence: multiplicity of each irreducible.
struct AbstractRepresentation {
    std::vector<long> multiplicities;  // indexed like CharacterTable::irreducibles()
    long total_degree = 0;

    std::vector<CyclotomicNumber> character(const CharacterTable& t) const;
    friend bool operator==(const AbstractRepresentation&, const AbstractRepresentation&) = default;
};

/// m[a] = multiplicity of zeta_n^a as an eigenvalue, given chi(g^k) for k = 0..n-1.
/// Throws NonIntegralMultiplicity when the values are not a trace sequence.
std::vector<long> eigenvalue_multiset(const std::vector<CyclotomicNumber>& values, unsigned n);

/// Eigenvalue multiplicities of the class representative of c, from the character chi.
std::vector<long> class_eigenvalues(const CharacterTable& t, const std::vector<CyclotomicNumber>& chi,
                                    std::uint32_t c);

/// Same data straight from a matrix of finite order n: repeated division of
/// the characteristic polynomial by (t - zeta_n^a).
std::vector<long> eigenvalues_by_charpoly(const CycMatrix& m, unsigned n);

/// Classes in the kernel of a class function of degree chi[0].
std::vector<std::uint32_t> kernel_classes(const std::vector<CyclotomicNumber>& chi);

/// Every faithful representation of degree d, up to equivalence (deterministic order).
std::vector<AbstractRepresentation> faithful_characters_of_degree(const CharacterTable& t, std::size_t d);
/// Same enumeration, streamed; returning false from f stops it.
void for_each_faithful_character(const CharacterTable& t, std::size_t d,
                                 const std::function<bool(const AbstractRepresentation&)>& f);
/// Whether at least one exists (much cheaper than enumerating).
bool has_faithful_representation(const CharacterTable& t, std::size_t d);

/// (irreducible index, multiplicity) for every constituent with nonzero multiplicity.
std::vector<std::pair<std::size_t, long>> isotypic_decomposition(const CharacterTable& t,
                                                                 const std::vector<CyclotomicNumber>& chi);
std::vector<std::pair<std::size_t, long>> isotypic_decomposition(const CharacterTable& t,
                                                                 const MatrixRepresentation& rep);

/// (1/|G|) sum_g 1/det(I - t rho(g)), truncated at `order`.
PowerSeries<Rational> molien_series(const MatrixRepresentation& rep, const ConjugacyData& conj, std::size_t order);

} // namespace tqs

#endif
