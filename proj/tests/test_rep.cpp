#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "rjd/identities.hpp"
#include "rjd/reptheory.hpp"
#include "rjd/sequences.hpp"
#include "rjd/zoo.hpp"

using namespace rjd;

namespace {

oracle::Mat to_mat(const Matrix& m) {
    oracle::Mat r(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m.at(i, j) ? 1 : 0;
    return r;
}

const RepContext& um_ctx() {
    static RepContext ctx(FDAlgebra::of(Algebra::build("um")), 1);
    return ctx;
}

}  // namespace

TEST_CASE("Jacobson radical of u(m)") {
    auto& ctx = um_ctx();
    CHECK(ctx.jacobson().dim() == 22);
    CHECK(ctx.nilpotency_index() == 3);
    CHECK(ctx.simples().size() == 2);
}

TEST_CASE("Schur and Hom between the simples") {
    Module v0 = make_module({Family::V0}), v1 = make_module({Family::V1});
    CHECK(hom_space(v1, v1).size() == 1);
    CHECK(hom_space(v0, v1).empty());
    CHECK(is_simple(v1));
}

TEST_CASE("swapped action matrices violate ab + ba = c") {
    Module v1 = make_module({Family::V1});
    Module bad = v1;
    std::swap(bad.gens[0], bad.gens[2]);
    auto um = Algebra::build("um");
    CHECK_FALSE(check_representation(*um, bad).empty());
}

TEST_CASE("Jordan types") {
    CHECK(jordan_type(make_module({Family::V1}).act("a")) == std::vector<std::size_t>{3});
    Module m = make_module({Family::M});
    CHECK(jordan_type(m.act("a")) == std::vector<std::size_t>{4, 4});
    CHECK(oracle::jordan(to_mat(m.act("a"))) == std::vector<std::size_t>{4, 4});
    Field f;
    CHECK_THROWS_AS(jordan_type(Matrix::identity(f, 2)), InputError);
}

TEST_CASE("action tables pinned residue by residue") {
    using table::kappa;
    using table::mu;
    using table::nu;
    using table::xi;
    // U1, d = 9
    CHECK(kappa(Family::U1, 1, 9));
    CHECK_FALSE(kappa(Family::U1, 4, 9));
    CHECK_FALSE(kappa(Family::U1, 8, 9));
    CHECK_FALSE(kappa(Family::U1, 9, 9));
    CHECK_FALSE(mu(Family::U1, 2, 9));
    CHECK(mu(Family::U1, 3, 9));
    CHECK(nu(Family::U1, 1) == 0);
    CHECK(nu(Family::U1, 2) == 1);
    // U2, d = 7
    CHECK_FALSE(kappa(Family::U2, 3, 7));
    CHECK(kappa(Family::U2, 4, 7));
    CHECK_FALSE(mu(Family::U2, 5, 7));
    CHECK(nu(Family::U2, 1) == 1);
    // U3, d = 7
    CHECK_FALSE(kappa(Family::U3, 4, 7));
    CHECK_FALSE(kappa(Family::U3, 7, 7));
    CHECK_FALSE(mu(Family::U3, 4, 7));
    CHECK(mu(Family::U3, 2, 7));
    // U4, d = 5
    CHECK_FALSE(kappa(Family::U4, 1, 5));
    CHECK(kappa(Family::U4, 4, 5));
    CHECK_FALSE(mu(Family::U4, 5, 5));
    // V, W, d = 8
    CHECK_FALSE(kappa(Family::Vfam2, 8, 8));
    CHECK_FALSE(kappa(Family::Vfam2, 3, 8));
    CHECK_FALSE(kappa(Family::Wfam2, 5, 8));
    CHECK_FALSE(mu(Family::Wfam2, 1, 8));
    CHECK(mu(Family::Wfam1, 2, 8));
    // bands
    CHECK(xi(Family::Aband, 1, 8));
    CHECK(xi(Family::Bband, 5, 8));
    CHECK_FALSE(xi(Family::Aband, 2, 8));
    CHECK_FALSE(xi(Family::U1, 1, 9));
}

TEST_CASE("family modules match the tables read independently") {
    struct Case {
        Family f;
        const char* tag;
        int r, t, n;
    };
    std::vector<Case> cases;
    for (int r = 1; r <= 3; ++r) {
        cases.push_back({Family::U1, "U1", r, 0, 1});
        cases.push_back({Family::U2, "U2", r, 0, 1});
        cases.push_back({Family::U3, "U3", r, 0, 1});
        cases.push_back({Family::U4, "U4", r, 0, 1});
    }
    for (int t = 0; t <= 2; ++t) {
        cases.push_back({Family::Vfam1, "V1", 1, t, 1});
        cases.push_back({Family::Vfam2, "V2", 1, t, 1});
        cases.push_back({Family::Wfam1, "W1", 1, t, 1});
        cases.push_back({Family::Wfam2, "W2", 1, t, 1});
    }
    for (int n = 1; n <= 3; ++n) {
        cases.push_back({Family::Aband, "A", 1, 0, n});
        cases.push_back({Family::Bband, "B", 1, 0, n});
    }
    for (auto& cs : cases) {
        StringBandSpec s{cs.f};
        s.r = cs.r;
        s.t = cs.t;
        s.n = cs.n;
        Module m = make_module(s);
        auto o = oracle::table_module(cs.tag, m.dim);
        CAPTURE(s.label(Field()));
        CHECK(m.dim == s.dim());
        CHECK(oracle::um_relations(o.a, o.b, o.c));
        CHECK(to_mat(m.act("a")) == o.a);
        CHECK(to_mat(m.act("b")) == o.b);
        CHECK(to_mat(m.act("c")) == o.c);
        auto parts = oracle::jordan(o.a);
        CHECK(std::find(parts.begin(), parts.end(), 2) == parts.end());
    }
}

TEST_CASE("bad family parameters") {
    Field f4 = make_field(4);
    StringBandSpec s{Family::Aband};
    s.lambda = 0;
    CHECK_THROWS_AS(make_module(s, f4), InputError);
    s.lambda = 20;
    CHECK_THROWS_AS(make_module(s, f4), InputError);
    StringBandSpec u{Family::U1};
    u.r = 0;
    CHECK_THROWS_AS(make_module(u), InputError);
}

TEST_CASE("U1(1) and U4(1) are not isomorphic") {
    StringBandSpec a{Family::U1}, b{Family::U4};
    auto r = isomorphism(make_module(a), make_module(b));
    CHECK_FALSE(r.iso);
    CHECK(r.certain);
}

TEST_CASE("pullback of U1(1) to D(H)") {
    Module p = pullback_to_double(make_module({Family::U1}));
    CHECK(p.dim == 5);
    CHECK(check_representation(*Algebra::build("DH"), p).empty());
    CHECK(is_indecomposable(p));
}

TEST_CASE("walks, strings and bands") {
    auto q = QuiverData::bound_quiver();
    CHECK(is_string(q, parse_walk(q, "al1 al2^-1 al1")));
    CHECK_FALSE(is_string(q, parse_walk(q, "al1 be1")));
    CHECK_FALSE(is_string(q, parse_walk(q, "al1 be2 al1 al2^-1")));
    CHECK_FALSE(is_reduced(q, parse_walk(q, "al1 al1^-1")));
    CHECK_THROWS_AS(parse_walk(q, "al1 al2"), InputError);
    CHECK_FALSE(is_walk(q, Walk{{{0, false}, {1, false}}, 0}));
    CHECK(is_band(q, parse_walk(q, "al1 al2^-1")));
    CHECK_FALSE(is_band(q, parse_walk(q, "al1 al2^-1 al1 al2^-1")));
    CHECK_THROWS_AS(enumerate_strings(q, 13), ResourceError);
}

TEST_CASE("string enumeration agrees with filtering every signed word") {
    auto q = QuiverData::bound_quiver();
    // every sequence of signed arrows up to length 6, filtered by the predicate
    std::set<Walk> brute;
    for (int v = 0; v < 2; ++v) brute.insert(Walk{{}, v});
    std::vector<WalkLetter> alphabet;
    for (int a = 0; a < 4; ++a)
        for (bool inv : {false, true}) alphabet.push_back({a, inv});
    std::vector<Walk> layer{Walk{}};
    for (std::size_t len = 1; len <= 6; ++len) {
        std::vector<Walk> next;
        for (auto& w : layer)
            for (auto& l : alphabet) {
                Walk x = w;
                x.letters.push_back(l);
                x.vertex = 0;
                for (int v = 0; v < 2; ++v) {
                    x.vertex = v;
                    if (is_walk(q, x) && is_string(q, x)) brute.insert(x);
                }
                next.push_back(x);
            }
        layer = std::move(next);
    }
    auto got = enumerate_strings(q, 6);
    std::set<Walk> gs;
    for (auto& w : got) {
        Walk x = w;
        if (!x.trivial()) x.vertex = x.source(q);
        gs.insert(x);
    }
    std::set<Walk> bs;
    for (auto& w : brute) {
        Walk x = w;
        if (!x.trivial()) x.vertex = x.source(q);
        bs.insert(x);
    }
    CHECK(gs == bs);
}

TEST_CASE("biserial witness for the projectives") {
    auto& ctx = um_ctx();
    auto bd = BasicAlgebraData::load();
    auto um = Algebra::build("um");
    Module p0 = ctx.projective(um->coords(bd.e0));
    auto w = biserial_witness(ctx, p0);
    CHECK(w.found);
    CHECK(ctx.simples()[static_cast<std::size_t>(w.meet)].dim == 1);
}

TEST_CASE("duality and the Chevalley twist") {
    auto h = Hopf::of("um");
    Module u1 = make_module({Family::U1}), u4 = make_module({Family::U4});
    CHECK(is_isomorphic(dual_module(*h, u1), u4));
    Field f = make_field(4);
    auto tw = chevalley_twist_check(f, 2);
    CHECK(tw.ok());
    CHECK(tw.involution);
    CHECK(tw.same_lambda == std::vector<std::string>{"1"});
}

TEST_CASE("identity rows at a small bound") {
    auto res = check_identities(3);
    auto verdicts = summarize_identities(res);
    std::size_t fails = 0;
    for (auto& v : verdicts) fails += v.status == "fail";
    CHECK(fails == 0);
    CHECK(instantiate("x2^{2n+1}", 0, 1) == "x2^3");
}

TEST_CASE("sequence K -> D(H) -> u(m)") {
    auto r = exact_sequence_check("K", catalog::k_generators(), catalog::pi_double());
    CHECK(r.ok());
    CHECK(r.kernel_dim == 992);
    auto squares = diagram_check();
    CHECK(squares.size() == 4);
    for (auto& s : squares) CHECK(s.v.ok);
}
