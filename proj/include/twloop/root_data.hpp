#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twloop/common.hpp"
#include "twloop/intlinalg.hpp"

namespace twl {

// Generalized Cartan matrix of affine type, a_ij = alpha_j(alpha_i^vee), in Kac numbering.
struct AffineRootDatum {
    std::string name;
    IMat cartan;
    Vec marks;    // A * marks = 0
    Vec comarks;  // comarks * A = 0
    int twist_order = 1;
    std::vector<int> kappa;    // 2 on the node with multipliable vector part
    std::string split_parent;  // finite type of the split form H, e.g. "A2"

    int size() const { return static_cast<int>(cartan.size()); }
    NodeSet all() const { return all_nodes(size()); }
};

// name is "X(k)_n" (Kac tables Aff 1-3); also accepts "G(2)_twisted" for D(3)_4.
AffineRootDatum load_affine_datum(const std::string& name);

// Every name in the built-in catalog, in table order.
const std::vector<std::string>& shipped_datum_names();

// Finalizes a datum given only name/cartan/twist_order/kappa/split_parent:
// validates the matrix and computes marks and comarks.
AffineRootDatum complete_datum(AffineRootDatum d);

AffineRootDatum datum_from_json(const nlohmann::json& j);
nlohmann::json datum_to_json(const AffineRootDatum& d);

// Finite Cartan matrix of type "A2", "C3", "G2", ... (Bourbaki numbering 1..n,
// returned 0-indexed).
IMat finite_cartan(const std::string& type);
std::pair<char, int> parse_finite_type(const std::string& type);

// Positive roots of a finite Cartan matrix c (c_ij = beta_j(beta_i^vee)) in
// simple-root coordinates, ordered by height and then lexicographically.
std::vector<Vec> positive_roots(const IMat& c);

// The echelonnage root system attached to a special node x.
//
// Coweights are written in coordinates x_i = beta_i(v), so P^vee is Z^l.  The
// simple roots beta_i of the echelonnage system are alpha_i / c_i, where c_i is
// the least positive integer with c_i * alpha_i^vee in the translation lattice
// of the affine Weyl group; for untwisted data all c_i = 1.
struct FiniteRootDatum {
    std::shared_ptr<const AffineRootDatum> base;
    int special = 0;
    std::vector<int> nodes;   // affine node of each finite index
    std::vector<int> finite_index;  // inverse of nodes, -1 at the special node
    IMat gcm_cartan;          // A with row/column x deleted
    Vec scale;                // c_i
    IMat cartan;              // C_ij = c_i a_ij / c_j
    std::vector<Vec> positive_roots;
    Vec highest_root;         // theta in simple-root coordinates
    Vec h_theta;              // coweight coordinates of the vector part of -alpha_x^vee
    IMat coroot_lattice;      // rows: a Z-basis generating set of Q^vee in P^vee coordinates
    SmithForm omega;          // P^vee / Q^vee
    std::vector<Rational> rho;  // in fundamental-weight coordinates

    int rank() const { return static_cast<int>(nodes.size()); }
};

FiniteRootDatum echelon_system(const AffineRootDatum& datum, int x = 0);

// <w, h> for w over fundamental weights (or eps_i) and h over simple coroots.
Rational pairing(const std::vector<Rational>& weight, const Vec& coroot);
i64 pairing(const Vec& weight, const Vec& coroot);

// Simple reflection s_i on weights over {eps_j} and on coroots over {alpha_j^vee}.
Vec reflect_weight(const IMat& cartan, int i, const Vec& weight);
Vec reflect_coroot(const IMat& cartan, int i, const Vec& coroot);

struct ProjectedCoweight {
    Vec lambda;                    // in P^vee of the echelonnage system
    std::vector<i64> coinvariant_invariants;  // Smith invariants of X_*(T)_sigma
    Vec coinvariant_class;         // class of mu in those factors
};

// mu is a coweight of the split form H: for type A parents it is given in
// eps-coordinates (n+1 entries) or fundamental-coweight coordinates (n entries);
// for other parents in fundamental-coweight coordinates.
ProjectedCoweight project_coweight(const Vec& mu, const AffineRootDatum& datum,
                                   const FiniteRootDatum& fin);

// eps-coordinates to fundamental-coweight coordinates of H (identity outside type A).
Vec coweight_coordinates(const Vec& mu, const std::string& split_parent);

// Data describing how a twisted diagram folds the Dynkin diagram of H.
struct FoldData {
    std::vector<int> sigma;        // permutation of H nodes (0-indexed)
    std::vector<Vec> node_roots;   // for each finite node of the datum: an H root restricting to it
    std::vector<std::vector<int>> orbits;  // sigma-orbit of H nodes for each finite node
};
FoldData fold_data(const AffineRootDatum& datum);

}  // namespace twl
