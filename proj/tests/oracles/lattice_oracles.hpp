#pragma once

// Test-only enumeration of SL_2 Iwahori chains by Hermite normal form, and
// relative positions from intersection dimensions.

#include <map>
#include <set>
#include <vector>

#include "twloop/loops.hpp"

namespace oracle {

using namespace twl;

// All chains L_0 in L_1 in u^-1 L_0 with [L_0 : O^2] = 0 and u^N O^2 in L_0 in u^-N O^2.
inline std::vector<LatticeChain> sl2_iwahori_chains(const Field* f, int n_radius, int box)
{
    std::vector<LatticeChain> out;
    const int q = f->q();
    for (int a = -n_radius; a <= n_radius; ++a) {
        // L_0 = span{u^a e_1, c e_1 + u^-a e_2}, c reduced mod u^a with exponents >= -N
        const int slots = a + n_radius;
        std::vector<int> c(slots, 0);
        while (true) {
            Series cs = Series::zero(f);
            for (int k = 0; k < slots; ++k) cs = cs + Series::monomial(f, c[k], k - n_radius);
            SMat b = {{Series::monomial(f, 1, a), cs}, {Series::zero(f), Series::monomial(f, 1, -a)}};
            const Series u_inv = Series::monomial(f, 1, -1);
            // the q + 1 lines of L_0 / u L_0
            for (int x = 0; x <= q; ++x) {
                SMat m = b;
                if (x == q) {
                    m[0][0] = b[0][0] * u_inv;
                    m[1][0] = b[1][0] * u_inv;
                } else {
                    for (int r = 0; r < 2; ++r) {
                        m[r][1] = (b[r][0].scaled(x) + b[r][1]) * u_inv;
                        m[r][0] = b[r][0];
                    }
                }
                LatticeChain ch;
                ch.indices = {0, 1};
                ch.lattices = {Lattice::from_columns(b, box), Lattice::from_columns(m, box)};
                out.push_back(std::move(ch));
            }
            int k = 0;
            while (k < slots && ++c[k] == q) c[k++] = 0;
            if (k == slots) break;
        }
    }
    return out;
}

// dim (L_i cap u^k lambda_j) for every chain member i, standard lattice j and |k| <= radius.
inline std::vector<int> signature(const LatticeChain& c, const LatticeChain& standard, int radius)
{
    std::vector<int> sig;
    for (const Lattice& l : c.lattices)
        for (const Lattice& s : standard.lattices)
            for (int k = -radius; k <= radius; ++k) sig.push_back(l.intersection_dim(s.shifted(k)));
    return sig;
}

// Reduced words of every element of W_a up to the given length, by breadth-first search.
inline std::map<Element, std::vector<int>> affine_ball(const WeylGroup& g, int max_len)
{
    std::map<Element, std::vector<int>> seen{{g.identity(), {}}};
    std::vector<Element> frontier{g.identity()};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Element> next;
        for (const Element& w : frontier)
            for (int i = 0; i < g.nodes(); ++i) {
                Element v = g.mul(w, g.simple(i));
                if (seen.count(v)) continue;
                std::vector<int> word = seen[w];
                word.push_back(i);
                seen.emplace(v, word);
                next.push_back(v);
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace oracle
