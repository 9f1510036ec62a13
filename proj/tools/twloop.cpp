// twloop: command-line front end.  Every subcommand prints a JSON envelope
// {schema, command, payload} by default; --format csv|text flattens the payload.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twloop/dims.hpp"
#include "twloop/loops.hpp"
#include "twloop/paths.hpp"

using namespace twl;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

struct Common {
    std::string format = "json";
    std::size_t cap = 20000;
    unsigned seed = 1;
    i64 precision = 8;
    bool timing = false;
};

struct Result {
    json payload;
    int status = 0;
};

// ---- input parsing ------------------------------------------------------------

AffineRootDatum datum_arg(const std::string& s)
{
    if (s.size() > 5 && s.substr(s.size() - 5) == ".json") {
        std::ifstream in(s);
        if (!in) throw DomainError("cannot read datum file '" + s + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw DomainError("datum file '" + s + "' is not JSON: " + e.what());
        }
        return datum_from_json(j);
    }
    return load_affine_datum(s);
}

// "1,0,0" or a sum of minuscule parts "1,0,0+1,1,0"
Vec mu_arg(const std::string& s)
{
    Vec total;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '+')) {
        Vec v = parse_csv_ints(part);
        if (total.empty()) total.assign(v.size(), 0);
        if (v.size() != total.size()) throw DomainError("summands of mu have different lengths");
        for (std::size_t i = 0; i < v.size(); ++i) total[i] += v[i];
    }
    if (total.empty()) throw DomainError("empty coweight");
    return total;
}

NodeSet nodes_arg(const std::string& s, const WeylGroup& g)
{
    if (s == "all") return g.all();
    NodeSet y = 0;
    for (i64 i : parse_csv_ints(s)) {
        if (i < 0 || i >= g.nodes()) throw DomainError("node " + std::to_string(i) + " outside the diagram");
        y |= node_bit(static_cast<int>(i));
    }
    return y;
}

// "2" or "1..3"
std::vector<i64> range_arg(const std::string& s)
{
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) return {std::stoll(s)};
        i64 lo = std::stoll(s.substr(0, dots)), hi = std::stoll(s.substr(dots + 2));
        if (hi < lo) throw DomainError("empty range '" + s + "'");
        std::vector<i64> out;
        for (i64 a = lo; a <= hi; ++a) out.push_back(a);
        return out;
    } catch (const std::logic_error&) {
        throw DomainError("bad integer range '" + s + "'");
    }
}

json nodes_json(NodeSet y) { return node_list(y); }

// the lambda for adm/hpoly: projected from mu
Vec lambda_of(const WeylGroup& g, const Vec& mu) { return project_coweight(mu, g.affine(), g.finite()).lambda; }

bool proven_case(const AffineRootDatum& d)
{
    return d.twist_order == 1 && (d.split_parent[0] == 'A' || d.split_parent[0] == 'C');
}

json lattice_json(const Lattice& l)
{
    return {{"box", l.box()}, {"volume", l.volume()}, {"rows", l.space().rows()}};
}

json chain_json(const LatticeChain& c)
{
    json ls = json::array();
    for (const auto& l : c.lattices) ls.push_back(lattice_json(l));
    std::vector<std::string> idx;
    for (int i : c.indices) idx.push_back(std::to_string(i));
    return {{"positions", idx}, {"lattices", ls}};
}

SMat matrix_arg(const Field* f, const std::string& s, i64 precision)
{
    SMat m;
    std::stringstream rows(s);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<Series> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) r.push_back(parse_series(f, cell, precision));
        m.push_back(std::move(r));
    }
    for (const auto& r : m)
        if (r.size() != m.size()) throw DomainError("matrix must be square");
    if (m.empty()) throw DomainError("empty matrix");
    return m;
}

// ---- commands -----------------------------------------------------------------

Result cmd_datum_info(const std::string& name)
{
    AffineRootDatum d = datum_arg(name);
    FiniteRootDatum f = echelon_system(d, 0);
    WeylGroup g(f);
    json p = datum_to_json(d);
    p["finite_cartan"] = f.cartan;
    p["positive_roots"] = f.positive_roots.size();
    p["omega_order"] = g.omega_elements().size();
    return {p};
}

Result cmd_datum_export(const std::string& dir)
{
    json names = json::array();
    for (const auto& n : shipped_datum_names()) {
        std::ofstream out(dir + "/" + n + ".json");
        if (!out) throw DomainError("cannot write into '" + dir + "'");
        out << datum_to_json(load_affine_datum(n)).dump(2) << "\n";
        names.push_back(n);
    }
    return {{{"directory", dir}, {"written", names}}};
}

Result cmd_weyl(const std::string& op, const std::string& datum, const std::string& a, const std::string& b)
{
    WeylGroup g(echelon_system(datum_arg(datum), 0));
    Element w = parse_element(g, a);
    json p = {{"datum", g.affine().name}, {"element", g.to_json(w)}};
    if (op == "leq") {
        Element v = parse_element(g, b);
        p["other"] = g.to_json(v);
        p["leq"] = g.bruhat_leq(w, v);
    } else if (op == "length") {
        p["length"] = g.length(w);
    } else {
        ReducedWord rw = g.reduced_word(w);
        p["word"] = rw.word;
        p["text"] = g.format_word(rw);
        p["omega"] = g.omega_component(rw.omega);
    }
    return {p};
}

Result cmd_adm(const std::string& datum, const std::string& mu, const std::string& ys, bool list, const Common& c)
{
    WeylGroup g(echelon_system(datum_arg(datum), 0));
    Vec lam = lambda_of(g, mu_arg(mu));
    AdmissibleSet a = adm(g, lam, c.cap);
    json p = {{"datum", g.affine().name}, {"lambda", lam}, {"size", a.elements.size()}, {"tau", g.to_json(a.tau)}};
    json maxes = json::array();
    for (const Element& m : a.maximal) maxes.push_back(g.format_word(g.reduced_word(m)));
    p["maximal"] = maxes;
    if (list) {
        json els = json::array();
        for (const Element& w : a.elements) els.push_back(g.format_word(g.reduced_word(w)));
        p["elements"] = els;
    }
    if (!ys.empty()) {
        NodeSet y = nodes_arg(ys, g);
        AdmissibleY ay = adm_Y(g, a, y, c.cap);
        p["Y"] = nodes_json(y);
        p["Y_circ"] = nodes_json(ay.y_circ);
        p["saturated_size"] = ay.full.size();
        p["cosets"] = ay.mod_right.size();
        if (list) {
            json reps = json::array();
            for (const Element& w : ay.mod_right) reps.push_back(g.format_word(g.reduced_word(w)));
            p["coset_representatives"] = reps;
        }
    }
    return {p};
}

Result cmd_hpoly(const std::string& datum, const std::string& mu, const std::string& ys, i64 a, bool emit,
                 const Common& c)
{
    WeylGroup g(echelon_system(datum_arg(datum), 0));
    Vec lam = lambda_of(g, mu_arg(mu));
    NodeSet y = nodes_arg(ys, g);
    json paths = json::array();
    std::function<void(const LSPath&, const BruhatGraph&)> sink = nullptr;
    if (emit) sink = [&](const LSPath& p, const BruhatGraph& bg) { paths.push_back(format_path(g, bg, p)); };
    HCount h = count_h_Y(g, lam, y, a, c.cap, sink);
    json p = {{"datum", g.affine().name}, {"lambda", lam}, {"Y", nodes_json(y)}, {"Y_circ", nodes_json(h.y_circ)},
              {"a", a}, {"h_Y", h.value}, {"initial_cosets", h.allowed}, {"graph_size", h.graph_size}};
    if (emit) p["paths"] = paths;
    return {p};
}

json coherence_row(const CoherenceReport& r)
{
    std::vector<int> ys = node_list(r.y);
    return {{"datum", r.datum}, {"mu", to_string(r.mu)}, {"Y", to_string(Vec(ys.begin(), ys.end()))},
            {"a", r.a}, {"h_Y", r.lhs}, {"h", r.rhs}, {"equal", r.equal}};
}

Result cmd_coherence(const std::string& datum, const std::string& mu, const std::string& ys, const std::string& as,
                     const Common& c)
{
    AffineRootDatum d = datum_arg(datum);
    WeylGroup g(echelon_system(d, 0));
    Vec m = mu_arg(mu);
    std::vector<NodeSet> yset;
    if (ys == "every")
        for (NodeSet y = 1; y <= g.all(); ++y) yset.push_back(y);
    else
        yset.push_back(nodes_arg(ys, g));
    json rows = json::array();
    int status = 0;
    for (NodeSet y : yset)
        for (i64 a : range_arg(as)) {
            CoherenceReport r = check_coherence(g, m, y, a, c.cap);
            rows.push_back(coherence_row(r));
            if (!r.equal && proven_case(d)) status = kExitMismatch;
        }
    json p = {{"proven_case", proven_case(d)}, {"rows", rows}};
    if (rows.size() == 1) {
        p["h_Y"] = rows[0]["h_Y"];
        p["h"] = rows[0]["h"];
        p["equal"] = rows[0]["equal"];
    }
    return {p, status};
}

// Flat config: one row per line, "datum mu Y a", '#' comments.
Result cmd_sweep(const std::string& path, const Common& c)
{
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read sweep config '" + path + "'");
    json rows = json::array();
    int status = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::stringstream ss(line);
        std::string datum, mu, ys, as, extra;
        if (!(ss >> datum)) continue;
        if (!(ss >> mu >> ys >> as) || (ss >> extra))
            throw DomainError(path + ":" + std::to_string(lineno) + ": expected 'datum mu Y a'");
        Result r = cmd_coherence(datum, mu, ys, as, c);
        for (const auto& row : r.payload["rows"]) rows.push_back(row);
        status = std::max(status, r.status);
    }
    return {{{"rows", rows}}, status};
}

Result cmd_kottwitz(const std::string& torus, int q, const std::string& elt, int n, int samples, const Common& c)
{
    Field f(q);
    json p = {{"torus", torus}, {"q", q}};
    if (torus == "gm") {
        Series s = parse_series(&f, elt, c.precision);
        p["element"] = s.to_string('t');
        p["kappa"] = kottwitz_gm(s);
    } else if (torus == "norm1") {
        if (samples > 0) {
            // random norm-one units conj(b) / b, multiplicativity on all pairs
            std::mt19937 rng(c.seed);
            std::uniform_int_distribution<int> coef(0, q - 1), unit(1, q - 1);
            std::vector<Series> xs;
            for (int k = 0; k < samples; ++k) {
                std::vector<int> co(static_cast<std::size_t>(c.precision));
                for (auto& v : co) v = coef(rng);
                co[0] = unit(rng);
                Series b(&f, k % 2, co, c.precision + k % 2);
                xs.push_back(b.conj() * b.inverse(c.precision));
            }
            int bad = 0;
            for (const auto& x : xs)
                for (const auto& y : xs)
                    if (kottwitz_norm_one(x * y) != kottwitz_norm_one(x) * kottwitz_norm_one(y)) ++bad;
            p["samples"] = samples;
            p["seed"] = c.seed;
            p["pairs"] = samples * samples;
            p["violations"] = bad;
            return {p, bad ? kExitMismatch : 0};
        }
        Series s = parse_series(&f, elt, c.precision);
        p["element"] = s.to_string();
        p["kappa"] = kottwitz_norm_one(s);
    } else if (torus == "un") {
        SMat g = elt == "sign" ? kottwitz_sign_element(&f, n) : matrix_arg(&f, elt, c.precision);
        p["n"] = g.size();
        p["kappa"] = kottwitz_unitary(g);
    } else {
        throw DomainError("--torus must be gm, norm1 or un");
    }
    return {p};
}

Result cmd_cells(const std::string& group, int n, const std::string& word, int q, bool count_only, const std::string& pos,
                 const Common& c)
{
    LoopKind kind = group == "su3" ? LoopKind::SU3 : LoopKind::SplitSL;
    if (group != "sl" && group != "su3") throw DomainError("--group must be sl or su3");
    if (kind == LoopKind::SU3) n = 3;
    LoopGroup lg(kind, n, q);
    std::vector<int> w = parse_word(word);
    std::vector<int> positions = lg.full_chain();
    if (!pos.empty()) {
        positions.clear();
        for (i64 i : parse_csv_ints(pos)) positions.push_back(static_cast<int>(i));
    }
    auto pts = cell_points(lg, w, positions, 0, c.cap * 100);
    json p = {{"group", group}, {"datum", lg.datum_name()}, {"n", n}, {"q", q}, {"word", w}, {"count", pts.size()}};
    p["closure_count"] = schubert_count(lg.weyl(), lg.weyl().from_word(w), q, 0, c.cap);
    if (!count_only) {
        json arr = json::array();
        for (const auto& ch : pts) arr.push_back(chain_json(ch));
        p["points"] = arr;
    }
    return {p};
}

Result cmd_fiber(int n, int r, int q, const std::string& set, bool nilpotent, const Common& c)
{
    FiberOptions opt;
    opt.interval_cap = c.cap;
    opt.assert_nilpotent = nilpotent;
    FiberRecord rec = enumerate_fiber(n, r, q, parse_lattice_set(n, set), opt);
    json isharp = json::array();
    for (int i : rec.isharp) isharp.push_back(format_lattice_index(n, i));
    json p = {{"n", rec.n},
              {"r", rec.r},
              {"s", rec.s},
              {"q", rec.q},
              {"I_sharp", isharp},
              {"positions", rec.positions},
              {"Y", nodes_json(rec.y)},
              {"candidates", rec.candidates},
              {"naive_count", rec.naive_count},
              {"adm_count", rec.adm_count},
              {"admissible_points", rec.admissible_points}};
    p["contains_admissible"] = rec.contains_admissible ? json(*rec.contains_admissible) : json(nullptr);
    return {p};
}

// ---- output -------------------------------------------------------------------

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_cell(const json& v)
{
    std::string s = scalar_text(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void emit(const std::string& command, const std::vector<std::string>& argv, const Result& r, const Common& c, double secs)
{
    if (c.format == "json") {
        json env = {{"schema", "twloop/" + command + "/1"}, {"command", argv}, {"payload", r.payload}};
        if (c.timing) env["seconds"] = secs;
        std::cout << env.dump(2) << "\n";
        return;
    }
    // tables for row payloads, one header + row otherwise
    std::vector<json> rows;
    if (r.payload.contains("rows") && r.payload["rows"].is_array())
        for (const auto& row : r.payload["rows"]) rows.push_back(row);
    else
        rows.push_back(r.payload);
    if (c.format == "csv") {
        std::vector<std::string> keys;
        for (const auto& item : rows[0].items()) keys.push_back(item.key());
        if (command == "coherence" || command == "sweep") keys = {"datum", "mu", "Y", "a", "h_Y", "h", "equal"};
        for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
        std::cout << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row[keys[i]]) : "");
            std::cout << "\n";
        }
    } else {
        for (const auto& row : rows) {
            for (const auto& [k, v] : row.items()) std::cout << k << ": " << scalar_text(v) << "\n";
            if (rows.size() > 1) std::cout << "\n";
        }
    }
    if (c.timing) std::cerr << "seconds: " << secs << "\n";
}

void add_common(CLI::App* app, Common& c)
{
    app->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--cap", c.cap, "interval / enumeration cap");
    app->add_option("--seed", c.seed, "seed for randomized checks");
    app->add_option("--precision", c.precision, "series truncation for parsed input");
    app->add_flag("--timing", c.timing, "report wall time");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Affine Weyl groups, admissible sets, LS-path counts and loop-group point counts"};
    app.require_subcommand(1);
    Common c;
    std::function<Result()> run;
    std::string command;

    // datum
    auto* datum = app.add_subcommand("datum", "affine root data");
    datum->require_subcommand(1);
    std::string dname, ddir = "data";
    auto* dinfo = datum->add_subcommand("info", "Cartan matrix, marks, comarks, kappa");
    dinfo->add_option("name", dname, "datum name like A(1)_2, or a .json file")->required();
    add_common(dinfo, c);
    dinfo->callback([&] { command = "datum"; run = [&] { return cmd_datum_info(dname); }; });
    auto* dlist = datum->add_subcommand("list", "shipped data");
    add_common(dlist, c);
    dlist->callback([&] {
        command = "datum";
        run = [] { return Result{{{"data", shipped_datum_names()}}}; };
    });
    auto* dexp = datum->add_subcommand("export", "write every shipped datum as JSON");
    dexp->add_option("dir", ddir, "target directory")->required();
    add_common(dexp, c);
    dexp->callback([&] { command = "datum"; run = [&] { return cmd_datum_export(ddir); }; });

    // weyl
    auto* weyl = app.add_subcommand("weyl", "Iwahori-Weyl group elements");
    weyl->require_subcommand(1);
    std::string wdatum, welt, wother;
    for (const std::string op : {"length", "word", "leq"}) {
        auto* s = weyl->add_subcommand(op, op == "leq" ? "Bruhat comparison v <= w" : op == "length" ? "length" : "reduced word");
        s->add_option("--datum", wdatum)->required();
        s->add_option("--elt", welt, "element spec")->required();
        if (op == "leq") s->add_option("--than", wother, "element spec")->required();
        add_common(s, c);
        s->callback([&, op] { command = "weyl"; run = [&, op] { return cmd_weyl(op, wdatum, welt, wother); }; });
    }

    // adm
    std::string adatum, amu, ay;
    bool alist = false;
    auto* ad = app.add_subcommand("adm", "admissible set");
    ad->add_option("--datum", adatum)->required();
    ad->add_option("--mu", amu, "coweight, csv integers")->required();
    ad->add_option("--Y", ay, "node set for the parabolic saturation");
    ad->add_flag("--list", alist, "list elements as reduced words");
    add_common(ad, c);
    ad->callback([&] { command = "adm"; run = [&] { return cmd_adm(adatum, amu, ay, alist, c); }; });

    // hpoly
    std::string hdatum, hmu, hy;
    i64 ha = 1;
    bool hemit = false;
    auto* hp = app.add_subcommand("hpoly", "LS-path count h_Y(a)");
    hp->add_option("--datum", hdatum)->required();
    hp->add_option("--mu", hmu)->required();
    hp->add_option("--Y", hy)->required();
    hp->add_option("--a", ha)->required()->check(CLI::PositiveNumber);
    hp->add_flag("--emit-paths", hemit, "list the paths");
    add_common(hp, c);
    hp->callback([&] { command = "hpoly"; run = [&] { return cmd_hpoly(hdatum, hmu, hy, ha, hemit, c); }; });

    // coherence
    std::string cdatum, cmu, cy, ca;
    auto* co = app.add_subcommand("coherence", "compare h_Y(a) with h(|Y| a)");
    co->add_option("--datum", cdatum)->required();
    co->add_option("--mu", cmu, "csv integers, or a '+'-separated sum")->required();
    co->add_option("--Y", cy, "nodes, 'all', or 'every' for each nonempty subset")->required();
    co->add_option("--a", ca, "integer or range lo..hi")->required();
    add_common(co, c);
    co->callback([&] { command = "coherence"; run = [&] { return cmd_coherence(cdatum, cmu, cy, ca, c); }; });

    // sweep
    std::string sconf;
    auto* sw = app.add_subcommand("sweep", "coherence over a config grid");
    sw->add_option("--config", sconf, "rows 'datum mu Y a'")->required();
    add_common(sw, c);
    sw->callback([&] {
        command = "sweep";
        if (sw->count("--format") == 0) c.format = "csv";
        run = [&] { return cmd_sweep(sconf, c); };
    });

    // kottwitz
    std::string ktorus, kelt = "";
    int kq = 3, kn = 3, ksamples = 0;
    auto* ko = app.add_subcommand("kottwitz", "Kottwitz invariants");
    ko->add_option("--torus", ktorus, "gm, norm1 or un")->required()->check(CLI::IsMember({"gm", "norm1", "un"}));
    ko->add_option("--q", kq)->required();
    ko->add_option("--elt", kelt, "series; for un a matrix 'a,b;c,d' or 'sign'");
    ko->add_option("--n", kn, "size of the sign element");
    ko->add_option("--samples", ksamples, "norm1: random multiplicativity check");
    add_common(ko, c);
    ko->callback([&] {
        command = "kottwitz";
        run = [&] {
            if (kelt.empty() && ksamples == 0) throw CLI::ValidationError("--elt", "required");
            return cmd_kottwitz(ktorus, kq, kelt, kn, ksamples, c);
        };
    });

    // cells
    std::string cgroup, cword, cpos;
    int cq = 2, cn = 2;
    bool ccount = false;
    auto* ce = app.add_subcommand("cells", "Schubert cell points");
    ce->add_option("--group", cgroup, "sl or su3")->required()->check(CLI::IsMember({"sl", "su3"}));
    ce->add_option("--n", cn, "sl: matrix size");
    ce->add_option("--word", cword, "reduced word like s0.s1")->required();
    ce->add_option("--q", cq)->required();
    ce->add_option("--positions", cpos, "chain positions (default: full chain)");
    ce->add_flag("--count-only", ccount);
    add_common(ce, c);
    ce->callback([&] { command = "cells"; run = [&] { return cmd_cells(cgroup, cn, cword, cq, ccount, cpos, c); }; });

    // fiber
    int fn = 3, fr = 1, fq = 3;
    std::string fset;
    bool fnil = false;
    auto* fi = app.add_subcommand("fiber", "naive local model special fiber");
    fi->add_option("--n", fn)->required();
    fi->add_option("--r", fr)->required();
    fi->add_option("--q", fq)->required();
    fi->add_option("--I", fset, "lattice indices like 0,2'")->required();
    fi->add_flag("--assert-nilpotent", fnil);
    add_common(fi, c);
    fi->callback([&] { command = "fiber"; run = [&] { return cmd_fiber(fn, fr, fq, fset, fnil, c); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        auto start = std::chrono::steady_clock::now();
        Result r = run();
        emit(command, args, r, c, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        return r.status;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --cap)\n";
        return kExitCap;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PrecisionError& e) {
        std::cerr << "error: precision: " << e.what() << " (raise --precision)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
