#ifndef TQS_DETAIL_CLOSURE_HPP
#define TQS_DETAIL_CLOSURE_HPP

#include "tqs/errors.hpp"
#include "tqs/group.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tqs::detail {

template <class E>
struct Closure {
    GroupPtr group;
    std::vector<E> elements;
};

// Breadth-first closure of `gens` under right multiplication, starting at the
// identity. The Cayley table is filled without further hashing: if b = p*s
// (p the BFS parent of b, s a generator) then a*b = (a*p)*s.
template <class E, class Mul, class Hash, class Eq>
Closure<E> enumerate_group(const E& identity, const std::vector<E>& gens, Mul mul, Hash hash, Eq eq,
                           std::size_t order_cap) {
    const std::size_t cap = std::min(order_cap, kMaxGroupOrder);
    std::vector<E> elems;
    elems.reserve(64);
    std::unordered_multimap<std::size_t, std::uint32_t> index;
    auto find = [&](const E& x, std::size_t hx) -> long {
        auto [lo, hi] = index.equal_range(hx);
        for (auto it = lo; it != hi; ++it)
            if (eq(elems[it->second], x)) return static_cast<long>(it->second);
        return -1;
    };
    const std::size_t k = gens.size();
    std::vector<std::uint32_t> right;  // right[x * k + i] = x * gens[i]
    std::vector<std::uint32_t> parent{0}, pgen{0};

    elems.push_back(identity);
    index.emplace(hash(identity), 0);
    for (std::size_t x = 0; x < elems.size(); ++x) {
        for (std::size_t i = 0; i < k; ++i) {
            E y = mul(elems[x], gens[i]);
            const std::size_t hy = hash(y);
            long idx = find(y, hy);
            if (idx < 0) {
                if (elems.size() >= cap) throw OrderCapExceeded(order_cap);
                idx = static_cast<long>(elems.size());
                elems.push_back(std::move(y));
                index.emplace(hy, static_cast<std::uint32_t>(idx));
                parent.push_back(static_cast<std::uint32_t>(x));
                pgen.push_back(static_cast<std::uint32_t>(i));
            }
            right.push_back(static_cast<std::uint32_t>(idx));
        }
    }
    const std::size_t n = elems.size();
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        std::uint16_t* row = &table[a * n];
        row[0] = static_cast<std::uint16_t>(a);
        for (std::size_t b = 1; b < n; ++b)
            row[b] = static_cast<std::uint16_t>(right[static_cast<std::size_t>(row[parent[b]]) * k + pgen[b]]);
    }
    std::vector<Elem> gen_idx;
    gen_idx.reserve(k);
    for (std::size_t i = 0; i < k; ++i) gen_idx.push_back(right[i]);  // identity * gens[i]
    Closure<E> out;
    out.group = FiniteGroup::from_table(n, std::move(table), std::move(gen_idx));
    out.elements = std::move(elems);
    return out;
}

} // namespace tqs::detail

#endif
