#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twloop/root_data.hpp"

namespace twl {

// t_lambda * w0, acting on coweights by v -> w v + t.  Both are written in the
// coordinates x_i = beta_i(v) of the echelonnage system, so w is an integer matrix
// and t lies in P^vee = Z^l.
struct ExtAffineWeylElement {
    IMat w;
    Vec t;

    bool operator==(const ExtAffineWeylElement&) const = default;
    auto operator<=>(const ExtAffineWeylElement&) const = default;
};
using Element = ExtAffineWeylElement;

struct ElementHash {
    std::size_t operator()(const Element& e) const;
};

struct ReducedWord {
    std::vector<int> word;  // affine node indices
    Element omega;          // length-zero remainder
};

class WeylGroup {
public:
    explicit WeylGroup(FiniteRootDatum fin);

    const FiniteRootDatum& finite() const { return fin_; }
    const AffineRootDatum& affine() const { return *fin_.base; }
    int rank() const { return fin_.rank(); }
    int nodes() const { return affine().size(); }
    NodeSet all() const { return affine().all(); }

    Element identity() const;
    Element simple(int node) const;
    Element translation(const Vec& lambda) const;
    Element make_element(const Element& finite_part, const Vec& lambda) const;
    Element from_word(const std::vector<int>& word) const;

    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;

    int length(const Element& w) const;
    bool is_left_descent(const Element& w, int node) const;
    bool is_right_descent(const Element& w, int node) const;
    NodeSet left_descents(const Element& w) const;
    NodeSet right_descents(const Element& w) const;

    ReducedWord reduced_word(const Element& w) const;
    Vec omega_component(const Element& w) const;
    bool in_affine_weyl(const Element& w) const;

    // The length-zero elements, one per class of P^vee / Q^vee.
    const std::vector<Element>& omega_elements() const { return omega_; }
    // Permutation pi with tau s_i tau^-1 = s_pi(i).
    std::vector<int> node_permutation(const Element& tau) const;

    bool bruhat_leq(const Element& v, const Element& w) const;

    // Minimal element of W_{S - yl} w W_{S - yr}.
    Element coset_min(const Element& w, NodeSet yl, NodeSet yr) const;
    // Same with the generator sets given directly.
    Element coset_min_gen(const Element& w, NodeSet jl, NodeSet jr) const;
    bool is_min_right(const Element& w, NodeSet jr) const;

    // Longest element of W_J; J must generate a finite group.
    Element longest(NodeSet j) const;

    // s_i on affine coroots (simple-coroot coordinates over all nodes) and on
    // affine roots (simple-root coordinates).
    Vec reflect_affine_coroot(int node, const Vec& h) const;
    Vec reflect_affine_root(int node, const Vec& r) const;

    std::string format_word(const ReducedWord& rw) const;
    nlohmann::json to_json(const Element& w) const;

private:
    FiniteRootDatum fin_;
    std::vector<Element> simples_;
    std::vector<Element> omega_;
    Vec theta_coeffs_;
    i64 denom_ = 1;  // interior point of the base alcove is (1,...,1)/denom_
    Vec alcove_image(const Element& w) const;  // denom_ * w(p)
};

// Element specs: "e", "s0.s1.s2", "tau", "tau^k", "tau[j]", "t[1,0]", "w0[1.2]"
// joined by '*'.
Element parse_element(const WeylGroup& g, const std::string& spec);
std::vector<int> parse_word(const std::string& s);

struct BruhatEdge {
    int upper = 0;
    int lower = 0;
    Vec root;    // positive real affine root beta, simple-root coordinates
    Vec coroot;  // beta^vee, simple-coroot coordinates
    Vec pull;    // lower^-1(beta^vee), so that <lower(lam), beta^vee> = <lam, pull>
};

// A lower set of minimal coset representatives of W / W_J with its cover relations.
struct BruhatGraph {
    NodeSet generators = 0;  // J
    std::vector<Element> elements;
    std::vector<int> lengths;
    std::vector<BruhatEdge> edges;
    std::vector<std::vector<int>> down;  // edge indices by upper element
    std::unordered_map<Element, int, ElementHash> index;

    int find(const Element& w) const;
};

BruhatGraph bruhat_interval(const WeylGroup& g, const std::vector<Element>& tops, NodeSet j,
                            std::size_t cap = 20000);

}  // namespace twl
