#pragma once

#include <string>
#include <vector>

#include "twloop/root_data.hpp"

namespace twl {

// Weyl dimension formula for a Cartan matrix c (c_ij = beta_j(beta_i^vee)) and a
// dominant weight in fundamental-weight coordinates.
i64 weyl_dim(const IMat& c, const Vec& lambda);

// Fundamental-coweight coordinates r of H with mu = varpi_r^vee, or -1 if mu is
// not a fundamental coweight.  mu may be given in eps-coordinates for type A.
int fundamental_index(const Vec& mu, const std::string& split_parent);
bool is_minuscule_node(const std::string& split_parent, int r);

// Decomposition of a dominant coweight into minuscule fundamental coweights
// (node indices of H, 0-based, with repetition).
std::vector<int> minuscule_parts(const Vec& mu, const std::string& split_parent);

i64 h_mu(const AffineRootDatum& d, const Vec& mu, i64 m);
i64 h_mu_sum(const AffineRootDatum& d, const std::vector<Vec>& parts, i64 m);
i64 h_mu_parts(const AffineRootDatum& d, const std::vector<int>& nodes, i64 m);

i64 hook_content(int n, int r, i64 m);

i64 central_charge(const AffineRootDatum& d, const Vec& weight);
// iota(eps_i) = eps_i - a_i^vee eps_0; finite weight has entries for nodes 1..l.
Vec iota_embed(const AffineRootDatum& d, const Vec& finite_weight);

struct CoherenceReport {
    std::string datum;
    Vec mu;
    NodeSet y = 0;
    i64 a = 0;
    i64 lhs = 0;
    i64 rhs = 0;
    bool equal = false;
    double seconds = 0;
};

class WeylGroup;
CoherenceReport check_coherence(const WeylGroup& g, const Vec& mu, NodeSet y, i64 a, std::size_t cap = 20000);

}  // namespace twl
