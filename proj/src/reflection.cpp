#include "tqs/reflection.hpp"

#include "tqs/catalog.hpp"
#include "tqs/errors.hpp"

#include <algorithm>

namespace tqs {

bool is_pseudoreflection(const std::vector<long>& m, std::size_t d) {
    return d >= 1 && !m.empty() && m[0] == static_cast<long>(d) - 1;
}

bool is_pseudoreflection(const CycMatrix& g) {
    return rank(g - CycMatrix::identity(g.rows())) == 1;
}

std::vector<char> pseudoreflection_classes(const CharacterTable& t, const std::vector<CyclotomicNumber>& chi) {
    const CyclotomicNumber& deg = chi[0];
    if (!deg.is_rational()) throw Error("character degree is not rational");
    const auto d = static_cast<std::size_t>(deg.to_rational().get_num().get_si());
    std::vector<char> flags(chi.size(), 0);
    for (std::uint32_t c = 1; c < chi.size(); ++c) flags[c] = is_pseudoreflection(class_eigenvalues(t, chi, c), d);
    return flags;
}

std::size_t pseudoreflection_count(const CharacterTable& t, const std::vector<char>& flags) {
    std::size_t n = 0;
    for (std::size_t c = 0; c < flags.size(); ++c)
        if (flags[c]) n += t.conj().classes[c].size();
    return n;
}

namespace {

Subgroup generated_by_classes(const CharacterTable& t, const std::vector<char>& flags) {
    std::vector<Elem> gens;
    for (std::size_t c = 0; c < flags.size(); ++c)
        if (flags[c]) gens.insert(gens.end(), t.conj().classes[c].begin(), t.conj().classes[c].end());
    return generated_subgroup(t.group(), gens);
}

} // namespace

Subgroup reflection_subgroup(const CharacterTable& t, const std::vector<CyclotomicNumber>& chi) {
    return generated_by_classes(t, pseudoreflection_classes(t, chi));
}

Subgroup reflection_subgroup(const MatrixRepresentation& rep) {
    std::vector<Elem> gens;
    for (Elem g = 1; g < rep.images.size(); ++g)
        if (is_pseudoreflection(rep.images[g])) gens.push_back(g);
    return generated_subgroup(rep.group, gens);
}

Quotient fundamental_group(const CharacterTable& t, const std::vector<CyclotomicNumber>& chi) {
    return quotient(reflection_subgroup(t, chi));
}

Quotient fundamental_group(const MatrixRepresentation& rep) { return quotient(reflection_subgroup(rep)); }

Subgroup scalar_subgroup(const MatrixRepresentation& rep) {
    std::vector<Elem> h;
    for (Elem g = 0; g < rep.images.size(); ++g)
        if (rep.images[g].is_scalar()) h.push_back(g);
    return Subgroup(rep.group, std::move(h));
}

StronglyRdResult strongly_rd_verdict(const CharacterTable& t, std::size_t d, std::size_t list_limit) {
    StronglyRdResult res;
    res.verdict = StrongVerdict::Vacuous;
    for_each_faithful_character(t, d, [&](const AbstractRepresentation& rep) {
        if (res.faithful.size() == list_limit) {
            res.verdict = StrongVerdict::Inconclusive;
            return false;
        }
        res.faithful.push_back(rep);
        if (!reflection_subgroup(t, rep.character(t)).is_whole()) {
            res.verdict = StrongVerdict::Refuted;
            res.witness = rep;
            return false;
        }
        res.verdict = StrongVerdict::Certified;
        return true;
    });
    return res;
}

std::optional<std::vector<unsigned>> shephard_todd_degrees(const PowerSeries<Rational>& molien, std::size_t group_order,
                                                           std::size_t dimension) {
    const std::size_t order = molien.truncation_order();
    std::vector<unsigned> degs;
    std::optional<std::vector<unsigned>> found;
    // Nondecreasing factorizations of |G| into `dimension` positive factors.
    auto rec = [&](auto&& self, std::size_t left, unsigned min_deg, std::size_t slots) -> void {
        if (found) return;
        if (slots == 0) {
            if (left != 1) return;
            std::vector<Rational> s = molien.coeffs();
            for (unsigned k : degs)
                for (std::size_t m = s.size(); m-- > k;) s[m] -= s[m - k];
            if (s[0] != 1) return;
            for (std::size_t m = 1; m <= order; ++m)
                if (s[m] != 0) return;
            found = degs;
            return;
        }
        for (std::size_t k = min_deg; k <= left; ++k) {
            if (left % k != 0) continue;
            // the remaining slots-1 factors are >= k
            std::size_t rest = left / k, pw = 1;
            bool fits = true;
            for (std::size_t i = 1; i < slots; ++i) {
                pw *= k;
                if (pw > rest) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            degs.push_back(static_cast<unsigned>(k));
            self(self, rest, static_cast<unsigned>(k), slots - 1);
            degs.pop_back();
        }
    };
    rec(rec, group_order, 1, dimension);
    return found;
}

std::optional<bool> reflection_free_embedding(const GroupPtr& q, std::size_t d) {
    const CharacterTable t(q);
    const auto faithful = faithful_characters_of_degree(t, d);
    if (faithful.empty()) return std::nullopt;
    for (const auto& rep : faithful) {
        const auto flags = pseudoreflection_classes(t, rep.character(t));
        if (std::none_of(flags.begin(), flags.end(), [](char f) { return f != 0; })) return true;
    }
    return false;
}

SingularityDescriptor analyze_singularity(const MatrixRepresentation& rep, std::size_t series_order) {
    SingularityDescriptor s;
    s.group = rep.group;
    s.dimension = rep.dimension;
    const std::size_t n = rep.group->order();
    if (!rep.is_faithful()) throw Error("representation is not faithful");

    const CharacterTable t(rep.group);
    const auto chi = rep.character(t.conj());
    const auto flags = pseudoreflection_classes(t, chi);
    s.pseudoreflection_count = pseudoreflection_count(t, flags);
    Subgroup p = generated_by_classes(t, flags);

    // Cross-check against rank(g - I) = 1 on every element.
    std::size_t matrix_count = 0;
    bool agree = true;
    for (Elem g = 1; g < n; ++g) {
        const bool m = is_pseudoreflection(rep.images[g]);
        matrix_count += m;
        if (m != static_cast<bool>(flags[t.conj().class_of[g]])) agree = false;
    }
    s.character_and_matrix_paths_agree = agree && matrix_count == s.pseudoreflection_count;

    s.is_smooth = p.is_whole();
    const Quotient fq = quotient(p);
    s.fundamental_group = fq.group;
    s.fundamental_group_label = identify_group(fq.group);
    s.reflection_subgroup = std::move(p);

    Subgroup h = scalar_subgroup(rep);
    s.scalar_order = h.order();
    s.projective_image_order = n / h.order();
    s.scalar_subgroup = std::move(h);

    s.molien = molien_series(rep, t.conj(), series_order ? series_order : 2 * n);
    s.degrees = shephard_todd_degrees(s.molien, n, rep.dimension);
    if (s.degrees) {
        std::size_t sum = 0;
        for (unsigned k : *s.degrees) sum += k - 1;
        s.degrees_match_count = sum == s.pseudoreflection_count;
    }
    s.quotient_reflection_free = reflection_free_embedding(fq.group, rep.dimension);
    return s;
}

} // namespace tqs
