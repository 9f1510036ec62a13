#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>

#include "twloop/root_data.hpp"

using namespace twl;

namespace {

const std::vector<std::string>& kShipped = shipped_datum_names();

i64 orbit_size_of_group(const FiniteRootDatum& f)
{
    return static_cast<i64>(f.positive_roots.size());
}

}  // namespace

TEST_CASE("A(1)_2 matrix and comarks")
{
    auto d = load_affine_datum("A(1)_2");
    CHECK(d.cartan == IMat{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    CHECK(d.comarks == Vec{1, 1, 1});
    CHECK(d.twist_order == 1);
}

TEST_CASE("A(2)_2 twist and kappa")
{
    auto d = load_affine_datum("A(2)_2");
    CHECK(d.twist_order == 2);
    CHECK(std::count(d.kappa.begin(), d.kappa.end(), 2) == 1);
    Vec left = vec_mat(d.comarks, d.cartan);
    CHECK(left == Vec{0, 0});
    CHECK(d.comarks == Vec{1, 2});
}

TEST_CASE("null vectors for every shipped datum")
{
    for (const auto& name : kShipped) {
        CAPTURE(name);
        auto d = load_affine_datum(name);
        CHECK(vec_mat(d.comarks, d.cartan) == Vec(d.size(), 0));
        CHECK(mat_vec(d.cartan, d.marks) == Vec(d.size(), 0));
        CHECK(d.comarks[0] == 1);
        int twos = static_cast<int>(std::count(d.kappa.begin(), d.kappa.end(), 2));
        bool odd_a2 = name.rfind("A(2)_", 0) == 0 && std::stoi(name.substr(5)) % 2 == 0;
        CHECK(twos == (odd_a2 ? 1 : 0));
    }
}

TEST_CASE("echelon systems")
{
    for (const auto& name : kShipped) {
        CAPTURE(name);
        auto d = load_affine_datum(name);
        auto f = echelon_system(d, 0);
        // closure under simple reflections
        std::set<Vec> roots(f.positive_roots.begin(), f.positive_roots.end());
        for (const Vec& r : f.positive_roots)
            for (int i = 0; i < f.rank(); ++i) {
                i64 p = 0;
                for (int j = 0; j < f.rank(); ++j) p += r[j] * f.cartan[i][j];
                Vec s = r;
                s[i] -= p;
                Vec neg = s;
                for (auto& x : neg) x = -x;
                CHECK((roots.count(s) || roots.count(neg)));
            }
        for (const auto& r : f.rho) CHECK(r.denominator() <= 2);
        for (int i = 0; i < f.rank(); ++i) {
            Vec e(f.rank(), 0);
            e[i] = 1;
            CHECK(pairing(f.rho, e) == Rational(1));
        }
        if (d.twist_order == 1) {
            int special = static_cast<int>(std::count(d.marks.begin(), d.marks.end(), 1));
            CHECK(f.omega.order() == special);
        }
        (void)orbit_size_of_group(f);
    }
}

TEST_CASE("classical positive root counts")
{
    auto count = [](const std::string& n) { return echelon_system(load_affine_datum(n)).positive_roots.size(); };
    CHECK(count("A(1)_2") == 3);
    CHECK(count("A(1)_4") == 10);
    CHECK(count("C(1)_2") == 4);
    CHECK(count("C(1)_3") == 9);
    CHECK(count("B(1)_3") == 9);
    CHECK(count("D(1)_4") == 12);
    CHECK(count("G(1)_2") == 6);
    CHECK(count("F(1)_4") == 24);
    CHECK(count("E(1)_6") == 36);
    CHECK(count("E(1)_7") == 63);
    CHECK(count("E(1)_8") == 120);
    CHECK(count("A(2)_2") == 1);
}

TEST_CASE("rejections")
{
    CHECK_THROWS_AS(load_affine_datum("Q(1)_2"), DomainError);
    CHECK_THROWS_AS(load_affine_datum("B(1)_2"), DomainError);
    CHECK_THROWS_AS(echelon_system(load_affine_datum("C(1)_2"), 1), DomainError);
    CHECK_THROWS_AS(pairing(Vec{1, 0}, Vec{1}), DomainError);
}

TEST_CASE("pairing basics")
{
    CHECK(pairing(Vec{1, 0, 0}, Vec{1, 0, 0}) == 1);
    CHECK(pairing(Vec{1, 0, 0}, Vec{0, 1, 0}) == 0);
}

TEST_CASE("json round trip")
{
    for (const auto& name : kShipped) {
        auto d = load_affine_datum(name);
        auto e = datum_from_json(datum_to_json(d));
        CHECK(e.cartan == d.cartan);
        CHECK(e.comarks == d.comarks);
        CHECK(e.kappa == d.kappa);
    }
}

TEST_CASE("project_coweight")
{
    auto a2 = load_affine_datum("A(1)_2");
    auto fa2 = echelon_system(a2);
    CHECK(project_coweight({1, 0, 0}, a2, fa2).lambda == Vec{1, 0});
    CHECK(project_coweight({0, 0, 0}, a2, fa2).lambda == Vec{0, 0});

    auto su3 = load_affine_datum("A(2)_2");
    auto fsu3 = echelon_system(su3);
    auto p = project_coweight({1, 0, 0}, su3, fsu3);
    CHECK(p.lambda == Vec{2});
    CHECK(project_coweight({0, 0, 0}, su3, fsu3).lambda == Vec{0});

    // additivity on generators for each twisted datum
    for (const std::string name : {"A(2)_2", "A(2)_4", "A(2)_3", "A(2)_5", "D(2)_3", "D(2)_4", "E(2)_6", "D(3)_4"}) {
        CAPTURE(name);
        auto d = load_affine_datum(name);
        auto f = echelon_system(d);
        int n = parse_finite_type(d.split_parent).second;
        Vec sum(f.rank(), 0);
        Vec all(n, 0);
        for (int h = 0; h < n; ++h) {
            Vec e(n, 0);
            e[h] = 1;
            all[h] = 1;
            Vec l = project_coweight(e, d, f).lambda;
            for (int k = 0; k < f.rank(); ++k) sum[k] += l[k];
        }
        CHECK(project_coweight(all, d, f).lambda == sum);
    }
}

TEST_CASE("shipped data files load to the catalog entries")
{
    for (const auto& name : kShipped) {
        CAPTURE(name);
        std::ifstream in(std::string(TWLOOP_DATA_DIR) + "/" + name + ".json");
        REQUIRE(in.good());
        auto d = datum_from_json(nlohmann::json::parse(in));
        auto ref = load_affine_datum(name);
        CHECK(d.cartan == ref.cartan);
        CHECK(d.comarks == ref.comarks);
        CHECK(d.kappa == ref.kappa);
        CHECK(d.split_parent == ref.split_parent);
    }
}
