#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twloop/lattice.hpp"
#include "twloop/weyl.hpp"

namespace twl {

// ---- Kottwitz maps -------------------------------------------------------

// f in F_q((t)): ord_t(f).
i64 kottwitz_gm(const Series& f);
// a in F_q((u)) with a * conj(a) = 1 at the working precision.  Returns +1 or -1.
int kottwitz_norm_one(const Series& a);
// g unitary for phi(e_i, e_j) = delta_{i,n+1-j}: kottwitz_norm_one(det g).
int kottwitz_unitary(const SMat& g);
bool is_unitary(const SMat& g);

// n odd: the middle basis vector negated.  n even: the two middle vectors swapped.
SMat kottwitz_sign_element(const Field* f, int n);

// ---- lattice index dictionary for ramified SU_n --------------------------

// Lattice index m' (n = 2m even).
constexpr int kMPrime = -1;

// Kac node whose simple reflection does not stabilize lambda_i.
int node_of_lattice(int n, int i);
int lattice_of_node(int n, int node);
// "0,1,2'" -> indices (kMPrime for the primed one)
std::vector<int> parse_lattice_set(int n, const std::string& text);
std::string format_lattice_index(int n, int i);
// replace m' by m-1 when m and m' are both present; result sorted
std::vector<int> i_sharp(int n, std::vector<int> indices);
// Exponents p with lambda_i = span{u^p_a e_a}; i in [0, n] or kMPrime.
Vec standard_exponents(int n, int i);

// ---- loop groups with explicit root subgroups ----------------------------

enum class LoopKind { SplitSL, SU3 };

struct LatticeChain {
    std::vector<int> indices;  // positions j, increasing
    std::vector<Lattice> lattices;

    bool operator==(const LatticeChain& o) const { return indices == o.indices && lattices == o.lattices; }
    bool operator<(const LatticeChain& o) const { return lattices < o.lattices; }
};

class LoopGroup {
public:
    // SplitSL: SL_n over F_q((u)), 2 <= n <= 4.  SU3: ramified SU_3, u^2 = t, q odd.
    LoopGroup(LoopKind kind, int n, int q);

    LoopKind kind() const { return kind_; }
    int n() const { return n_; }
    const Field* field() const { return field_.get(); }
    const WeylGroup& weyl() const { return *weyl_; }
    std::string datum_name() const;
    int nodes() const { return weyl_->nodes(); }

    SMat root_subgroup(int node, int x) const;
    SMat weyl_lift(int node) const;

    // every chain position of the full (Iwahori) standard chain
    std::vector<int> full_chain() const;
    // SU3: I sharp together with the dual positions n - i
    std::vector<int> chain_positions(const std::vector<int>& isharp) const;
    LatticeChain standard_chain(const std::vector<int>& positions, int box) const;
    LatticeChain act(const SMat& g, const std::vector<int>& positions, int box) const;

private:
    LoopKind kind_;
    int n_;
    std::shared_ptr<Field> field_;
    std::shared_ptr<WeylGroup> weyl_;
};

struct ChainCheck {
    bool ok = true;
    std::string failure;  // first failed condition
};

// Inclusions, ranks against the standard chain, u-stability, volume (the
// determinant condition) and, for SU3, the duality sandwich.
ChainCheck validate_chain(const LoopGroup& g, const LatticeChain& chain);

// U_{i_1}(x_1) s_{i_1} ... U_{i_r}(x_r) s_{i_r} . standard chain, all x in F_q^r.
// box = 0 picks one large enough for the word.
std::vector<LatticeChain> cell_points(const LoopGroup& g, const std::vector<int>& word,
                                      const std::vector<int>& positions, int box = 0,
                                      std::size_t cap = 2000000);

// sum of q^l(v) over v <= w minimal in v W_modulo
i64 schubert_count(const WeylGroup& g, const Element& w, int q, NodeSet modulo, std::size_t cap = 20000);

// ---- naive local model special fiber --------------------------------------

struct FiberOptions {
    std::size_t cap = 5000000;        // estimated tuple count allowed
    std::size_t interval_cap = 20000;
    bool assert_nilpotent = false;    // recheck that u acts nilpotently on each E_j
};

struct FiberRecord {
    int n = 0, r = 0, s = 0, q = 0;
    std::vector<int> isharp;
    std::vector<int> positions;
    NodeSet y = 0;
    i64 candidates = 0;   // u-stable rank-n subspaces of one Lambda_j / t Lambda_j
    i64 naive_count = 0;
    i64 adm_count = 0;
    std::optional<bool> contains_admissible;  // null where cells are not generated
    i64 admissible_points = 0;
};

FiberRecord enumerate_fiber(int n, int r, int q, const std::vector<int>& isharp, const FiberOptions& opt = {});

}  // namespace twl
