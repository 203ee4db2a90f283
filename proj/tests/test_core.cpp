#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "rjd/algebras.hpp"
#include "rjd/hopf.hpp"
#include "rjd/presentation.hpp"
#include "rjd/reptheory.hpp"
#include "rjd/rewrite.hpp"

using namespace rjd;

TEST_CASE("GF(4) arithmetic") {
    Field f = make_field(2, 0b111);
    fe w = f.generator();
    CHECK(f.mul(w, w ^ 1) == 1);
    CHECK(f.frobenius(w) == (w ^ 1));
    CHECK(f.inv(w) == (w ^ 1));
    CHECK(f.str(w ^ 1) == "w+1");
}

TEST_CASE("field multiplication against schoolbook reduction") {
    for (int k : {3, 4, 8, 11}) {
        Field f = make_field(k);
        std::uint32_t q = f.size();
        for (std::uint32_t a = 1; a < q; a += 1 + q / 37)
            for (std::uint32_t b = 1; b < q; b += 1 + q / 29)
                REQUIRE(f.mul(static_cast<fe>(a), static_cast<fe>(b)) == oracle::gf_mul(a, b, f.modulus(), k));
    }
}

TEST_CASE("reducible modulus is rejected") {
    CHECK_THROWS_AS(make_field(2, 0b101), FieldError);
    CHECK_THROWS(make_field(17));
}

TEST_CASE("matrices of the simple V1") {
    Field f;
    Matrix a = Matrix::from_rows(f, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    Matrix c = Matrix::from_rows(f, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
    auto r = row_reduce(a);
    CHECK(r.rank == 2);
    CHECK(r.kernel.cols() == 1);
    CHECK_FALSE(invert(c).has_value());
    CHECK(jordan_type(a) == std::vector<std::size_t>{3});
}

TEST_CASE("inverse over GF(4)") {
    Field f = make_field(2);
    Matrix m = Matrix::from_rows(f, {{f.generator()}});
    auto inv = invert(m);
    REQUIRE(inv);
    CHECK(inv->at(0, 0) == (f.generator() ^ 1));
}

TEST_CASE("rank agrees with naive elimination on wide random matrices") {
    Field f;
    unsigned s = 12345;
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 5 + trial, cols = 70 + 3 * trial;
        oracle::Mat m(rows, std::vector<int>(cols));
        Matrix x(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                s = s * 1103515245u + 12345u;
                int v = (s >> 16) & 1 & ((s >> 20) & 1);
                m[i][j] = v;
                x.set(i, j, static_cast<fe>(v));
            }
        REQUIRE(rank(x) == oracle::rank(m));
    }
}

TEST_CASE("subspace operations") {
    Field f;
    Subspace u = Subspace::span(Matrix::from_rows(f, {{1, 1, 0, 0}, {0, 0, 1, 0}}));
    Subspace v = Subspace::span(Matrix::from_rows(f, {{1, 1, 1, 0}, {0, 0, 0, 1}}));
    CHECK(u.sum(v).dim() == 3);
    CHECK(u.intersect(v).dim() == 1);
    CHECK(u.intersect(v).contains(Matrix::from_rows(f, {{1, 1, 1, 0}})));
}

TEST_CASE("preset dimensions") {
    for (auto [name, d] : std::vector<std::pair<std::string, std::size_t>>{
             {"um", 32}, {"H", 32}, {"Hstar", 32}, {"DH", 1024}, {"quiverQI", 8}}) {
        auto a = Algebra::build(name);
        CAPTURE(name);
        CHECK(a->finite());
        CHECK(a->dim() == d);
        CHECK(a->report().confluent());
    }
    CHECK_FALSE(Algebra::build("Htilde")->finite());
}

TEST_CASE("normal forms in u(m)") {
    auto a = Algebra::build("um");
    CHECK(a->str(a->parse("b a")) == a->str(a->parse("a b + c")));
    CHECK(a->parse("a^4").is_zero());
    CHECK(a->parse("c c") == a->parse("c"));
    CHECK(a->parse("c a") == a->parse("a c + a"));
}

TEST_CASE("H~ basis to total degree 2 is the exponent-vector list") {
    auto a = Algebra::build("Htilde");
    auto basis = a->system().enumerate_basis(2);
    std::set<std::string> got;
    for (auto& w : basis) got.insert(a->alphabet().str(w));
    CHECK(got.count("x1"));
    CHECK(got.count("x2^2"));
    CHECK_FALSE(got.count("x1^2"));
    for (auto& w : basis) CHECK(a->alphabet().weight(w) <= 2);
}

TEST_CASE("malformed presentations") {
    CHECK_THROWS_AS(parse_presentation("name x\ngen a nilpotent 2\nrel a b = 0\n"), InputError);
    CHECK_THROWS_AS(load_preset("nope"), InputError);
}

TEST_CASE("basic algebra and bound quiver") {
    auto bd = BasicAlgebraData::load();
    CHECK(bd.algebra()->dim() == 8);
    auto q = QuiverData::bound_quiver();
    CHECK(q.arrows.size() == 4);
    CHECK(q.zero_relation({q.arrow("al1"), q.arrow("be1")}));
    CHECK_FALSE(q.zero_relation({q.arrow("al1"), q.arrow("be2")}));
    auto p = q.binomial_partner({q.arrow("al1"), q.arrow("be2")});
    REQUIRE(p);
    CHECK(*p == std::vector<int>{q.arrow("al2"), q.arrow("be1")});
}

TEST_CASE("restricted Lie algebra m") {
    auto L = RestrictedLieData::m();
    Field f = make_field(2);
    CHECK(L.check_axioms(f, 40, 3).empty());
    // a -> a, b -> b, c -> c + a breaks [a, b] = c
    std::vector<std::vector<fe>> phi(5, std::vector<fe>(5, 0));
    for (std::size_t i = 0; i < 5; ++i) phi[i][i] = 1;
    phi[L.index("c")][L.index("a")] = 1;
    auto r = check_lie_automorphism(phi, L, f);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("group algebra integrals") {
    auto p = parse_presentation(
        "name kG\ngen g periodic 2 = 1\ncoproduct g = g @ g\ncounit g = 1\nantipode g = g\n");
    auto h = std::make_shared<Hopf>(Algebra::from_presentation(p));
    auto I = integral_spaces(*h);
    CHECK(I.unimodular);
    REQUIRE(I.left.dim() == 1);
    const Algebra& A = h->algebra();
    CHECK(I.left.contains(A.coords(A.parse("1 + g"))));
}

TEST_CASE("Hopf axioms on u(m) and S^2") {
    auto h = Hopf::of("um");
    CHECK(check_hopf_axioms(*h).ok());
    CHECK(check_antipode_power(*h, 2, h->algebra().basis()).ok);
    Element a = h->algebra().letter("a");
    Tensor prim = Tensor::pure(a, Element::one());
    prim += Tensor::pure(Element::one(), a);
    CHECK(h->delta(a) == prim);
    CHECK(h->counit(h->algebra().parse("c")) == 0);
}

TEST_CASE("<x2> is not a Hopf subalgebra of H") {
    auto h = Hopf::of("H");
    const Algebra& A = h->algebra();
    std::vector<Element> span{A.parse("1"), A.parse("x2"), A.parse("x2^2"), A.parse("x2^3")};
    SparseSpan s(span);
    auto v = adjoint_stable(*h, span, [&](const Element& x) { return s.contains(x); });
    CHECK_FALSE(v.ok);
    CHECK(s.contains(A.parse("x2")));
    CHECK_FALSE(s.contains(A.parse("x2 + x1")));
}

TEST_CASE("skew pairing values") {
    auto tau = dtilde_pairing();
    const Algebra &L = tau.left().algebra(), &R = tau.right().algebra();
    CHECK(tau(L.parse("x1"), R.parse("w2")) == 1);
    CHECK(tau(L.parse("g"), R.parse("zeta^2")) == 1);
    CHECK(tau(L.parse("1"), R.parse("w1")) == 0);
    CHECK(check_pairing_axioms(tau, 60, 2, 5).ok());
}
