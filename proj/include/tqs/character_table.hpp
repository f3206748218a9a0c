#ifndef TQS_CHARACTER_TABLE_HPP
#define TQS_CHARACTER_TABLE_HPP

#include "tqs/cyclotomic.hpp"
#include "tqs/group.hpp"

#include <cstdint>
#include <vector>

namespace tqs {

/// Class data shared by every character of a group.
struct ConjugacyData {
    std::vector<std::vector<Elem>> classes;
    std::vector<std::uint32_t> class_of;
    std::vector<Elem> representative;        // smallest member
    std::vector<unsigned> rep_order;
    std::vector<std::uint32_t> inverse_class; // class of g^-1
    /// power_map[c][k] = class of rep^k, for 0 <= k < rep_order[c].
    std::vector<std::vector<std::uint32_t>> power_map;

    explicit ConjugacyData(const FiniteGroup& g);
    std::uint32_t power(std::uint32_t c, long k) const;
    std::size_t size(std::uint32_t c) const { return classes[c].size(); }
};

struct Character {
    std::vector<CyclotomicNumber> values;  // by class id, minimal conductors
    long degree = 0;
    /// Class ids c with chi(c) = chi(1).
    std::vector<std::uint32_t> kernel_classes;
};

class CharacterTable {
public:
    /// Irreducible characters, trivial first, then by degree.
    explicit CharacterTable(GroupPtr g);

    const GroupPtr& group() const noexcept { return group_; }
    const ConjugacyData& conj() const noexcept { return conj_; }
    const std::vector<Character>& irreducibles() const noexcept { return irr_; }
    std::size_t size() const noexcept { return irr_.size(); }
    unsigned exponent() const noexcept { return exponent_; }
    /// Prime used for the modular computation (0 for the abelian shortcut).
    unsigned long prime() const noexcept { return prime_; }

    /// Values chi(rep(c)^k), k = 0..ord-1, of a class function.
    std::vector<CyclotomicNumber> power_values(const std::vector<CyclotomicNumber>& chi, std::uint32_t c) const;
    /// <a, b> = (1/|G|) sum_c |c| a(c) conj(b(c)).
    CyclotomicNumber inner_product(const std::vector<CyclotomicNumber>& a, const std::vector<CyclotomicNumber>& b) const;

private:
    void build_abelian();
    void build_dixon();

    GroupPtr group_;
    ConjugacyData conj_;
    std::vector<Character> irr_;
    unsigned exponent_ = 1;
    unsigned long prime_ = 0;
};

struct OrthogonalityReport {
    bool rows = false;     // sum_c |c| chi_i(c) conj(chi_j(c)) = |G| delta_ij
    bool columns = false;  // sum_i chi_i(a) conj(chi_i(b)) = |C_G(a)| delta_ab
    bool degree_sum = false;
    bool degrees_divide = false;
    bool ok() const { return rows && columns && degree_sum && degrees_divide; }
};

/// Exact check of both orthogonality relations and the degree identities.
OrthogonalityReport verify_orthogonality(const CharacterTable& t);

} // namespace tqs

#endif
