#pragma once

#include <vector>

#include "twloop/weyl.hpp"

namespace twl {

struct AdmissibleSet {
    Vec lambda;
    Element tau;
    std::vector<Element> elements;  // sorted by length, then canonical form
    std::vector<Element> maximal;   // t_{w(lambda)}, w in W_0
};

// W_0-orbit of a coweight, sorted.
std::vector<Vec> coweight_orbit(const WeylGroup& g, const Vec& lambda);

AdmissibleSet adm(const WeylGroup& g, const Vec& lambda, std::size_t cap = 20000);

// Adm * tau^-1, inside W_a.
std::vector<Element> adm_neutral(const WeylGroup& g, const AdmissibleSet& a);

// Y° = { j : tau s_i tau^-1 = s_j, i in Y }.
NodeSet y_circ(const WeylGroup& g, const Element& tau, NodeSet y);

struct AdmissibleY {
    NodeSet y = 0;
    NodeSet y_circ = 0;
    std::vector<Element> full;       // W_{S-Y} Adm° W_{S-Y°}
    std::vector<Element> mod_right;  // minimal representatives mod W_{S-Y°}
};

AdmissibleY adm_Y(const WeylGroup& g, const AdmissibleSet& a, NodeSet y, std::size_t cap = 20000);

}  // namespace twl
