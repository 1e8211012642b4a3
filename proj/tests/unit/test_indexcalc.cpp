#include <catch_amalgamated.hpp>

#include <phdet/error.hpp>
#include <phdet/indexcalc/cstar.hpp>
#include <phdet/indexcalc/formulas.hpp>
#include <phdet/indexcalc/ledger.hpp>
#include <phdet/polyalg/parser.hpp>

#include "../support/generators.hpp"

using namespace phdet;
using phdet::testing::xs;

namespace {

DeterminantalModel twisted_cubic(AmbientKind kind = AmbientKind::projective) {
    auto v = xs(5);
    auto P = [&](const char* s) { return parse_polynomial(s, v); };
    return DeterminantalModel(PolyMatrix(v, {{P("x0"), P("x1"), P("x2")}, {P("x1"), P("x2"), P("x3")}}), 2,
                              {kind, kind == AmbientKind::projective ? 4u : 5u});
}

const Point vertex = Point::parse("[0:0:0:0:1]");
const Point e0 = Point::parse("[1:0:0:0:0]");
const Point e3 = Point::parse("[0:0:0:1:0]");

SingularPointRecord surface_record(std::optional<long long> mu = 1) {
    SingularPointRecord r;
    r.point = vertex;
    r.type = {2, 3, 2};
    r.d = 2;
    r.smoothable = true;
    r.mu = mu;
    return r;
}

IndexLedger twisted_cubic_ledger() {
    IndexLedger l;
    l.entries = {{vertex, PointRole::variety_singularity, 3},
                 {e0, PointRole::form_singularity_smooth_point, 1},
                 {e3, PointRole::form_singularity_smooth_point, 1}};
    l.chi_x = 3;
    return l;
}

SingularPointRecord record(int d, long long mu) {
    SingularPointRecord r = surface_record(mu);
    r.d = d;
    return r;
}

SingularPointRecord nonsmoothable(MatrixType type, long long chi, long long chi_lower) {
    SingularPointRecord r;
    r.point = Point::parse("[0:0:0:0:0:0:1]");
    r.type = type;
    r.d = 4;
    r.smoothable = false;
    r.chi_smoothing = chi;
    r.chi_lower_stratum = chi_lower;
    return r;
}

LedgerError::Kind ledger_error_kind(const IndexLedger& l, const std::vector<SingularPointRecord>& recs) {
    try {
        (void)global_identity(l, recs);
    } catch (const LedgerError& e) {
        return e.kind();
    }
    FAIL("expected a LedgerError");
    return LedgerError::Kind::missing_data;
}

}  // namespace

TEST_CASE("smooth zero index", "[indexcalc]") {
    VariableList xy{"x", "y"};
    VariableList xyz{"x", "y", "z"};
    auto form = [](const VariableList& v, std::initializer_list<const char*> cs) {
        ExplicitForm f;
        for (const char* c : cs) f.coefficients.push_back(parse_polynomial(c, v));
        return f;
    };
    CHECK(smooth_zero_index(form(xy, {"x", "y"})) == 1);
    CHECK(smooth_zero_index(form(xy, {"x^2", "y^3"})) == 6);
    CHECK(smooth_zero_index(form(xyz, {"x", "y", "z"})) == 1);
    CHECK(smooth_zero_index(form(xy, {"x^2 - y^3", "y"})) == 2);
    CHECK_THROWS_AS(smooth_zero_index(form(xy, {"x", "x"})), UnsupportedError);
    CHECK_THROWS_AS(smooth_zero_index(form(xy, {"x + x^2", "y"})), UnsupportedError);
    CHECK_THROWS_AS(smooth_zero_index(form(xy, {"x"})), std::invalid_argument);
}

TEST_CASE("radial and PHN indices", "[indexcalc]") {
    CHECK(phn_from_radial(1, 2, 2) == 2);
    CHECK(phn_from_radial(1, 3, 2) == 0);
    CHECK(phn_from_radial(7, 2, 1) == 7);
    CHECK(phn_from_radial(7, 3, 1) == 7);

    CHECK(radial_from_decomposition({}) == 1);
    CHECK(radial_from_decomposition({{1, 1}}) == 3);
    CHECK(radial_from_decomposition({{-1}}) == 0);

    for (long long c = -5; c <= 5; ++c) {
        auto rec = nonsmoothable({2, 3, 2}, c, 1);
        CHECK(phn_from_radial_nonsmoothable(1, rec) == c + 2);
        rec.chi_lower_stratum = 0;
        CHECK(phn_from_radial_nonsmoothable(4, rec) == phn_from_radial(4, rec.d, c));
    }
    auto missing = nonsmoothable({2, 3, 2}, 1, 1);
    missing.chi_lower_stratum.reset();
    CHECK_THROWS_AS(phn_from_radial_nonsmoothable(1, missing), LedgerError);
    CHECK_THROWS_AS(phn_from_radial_nonsmoothable(1, surface_record()), std::invalid_argument);
}

TEST_CASE("defect", "[indexcalc]") {
    CHECK(defect(record(2, 1)) == 2);
    CHECK(defect(record(3, 5)) == 5);
    CHECK(resolve_chi_smoothing(record(3, 5)) == std::optional<long long>(-3));
    CHECK(defect(nonsmoothable({2, 3, 2}, 7, 1)) == 9);
    CHECK_THROWS_AS(defect(surface_record(std::nullopt)), LedgerError);
    // chi is never inferred outside d in {2, 3}
    auto four = record(4, 1);
    CHECK_FALSE(resolve_chi_smoothing(four).has_value());
    CHECK_THROWS_AS(defect(four), LedgerError);
}

TEST_CASE("C* fixed points", "[indexcalc]") {
    auto m = twisted_cubic();
    std::vector<long long> w{0, 1, 2, 3, 4};
    auto fixed = cstar_fixed_points(m, w);
    REQUIRE(fixed.size() == 3);
    CHECK(fixed[0].point == e0);
    CHECK(fixed[0].stratum == Stratum::smooth_stratum);
    CHECK(fixed[1].point == e3);
    CHECK(fixed[1].stratum == Stratum::smooth_stratum);
    CHECK(fixed[2].point == vertex);
    CHECK(fixed[2].stratum == Stratum::essential_singular);

    CHECK_THROWS_AS(cstar_fixed_points(m, {0, 0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(cstar_fixed_points(m, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cstar_fixed_points(m, {0, 1, 3, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(cstar_fixed_points(twisted_cubic(AmbientKind::affine), w), std::invalid_argument);

    CHECK(cstar_smooth_index(e0, w, m) == 1);
    CHECK(cstar_smooth_index(e3, w, m) == 1);
    CHECK_THROWS_AS(cstar_smooth_index(vertex, w, m), std::invalid_argument);
    CHECK_THROWS_AS(cstar_smooth_index(Point::parse("[0:1:0:0:0]"), w, m), std::invalid_argument);
    CHECK_THROWS_AS(cstar_smooth_index(Point::parse("[1:0:0:0:1]"), w, m), std::invalid_argument);
}

TEST_CASE("global identity on the twisted cubic", "[indexcalc]") {
    std::vector<SingularPointRecord> recs{surface_record()};
    auto ledger = twisted_cubic_ledger();

    auto verified = global_identity(ledger, recs);
    REQUIRE(std::holds_alternative<IdentityVerified>(verified));
    CHECK(std::get<IdentityVerified>(verified).lhs == 5);
    CHECK(std::get<IdentityVerified>(verified).rhs == 5);

    auto unknown_vertex = ledger;
    unknown_vertex.entries[0].index.reset();
    auto solved = global_identity(unknown_vertex, recs);
    REQUIRE(std::holds_alternative<IdentitySolved>(solved));
    CHECK(std::get<IdentitySolved>(solved).value == 3);
    CHECK(std::get<IdentitySolved>(solved).unknown.name() == "index@[0:0:0:0:1]");

    auto unknown_chi = ledger;
    unknown_chi.chi_x.reset();
    auto chi = global_identity(unknown_chi, recs);
    REQUIRE(std::holds_alternative<IdentitySolved>(chi));
    CHECK(std::get<IdentitySolved>(chi).value == 3);

    auto wrong = ledger;
    wrong.chi_x = 4;
    auto violated = global_identity(wrong, recs);
    REQUIRE(std::holds_alternative<IdentityViolated>(violated));
    CHECK(std::get<IdentityViolated>(violated).lhs == 5);
    CHECK(std::get<IdentityViolated>(violated).rhs == 6);
}

TEST_CASE("smooth variety reduces to the classical count", "[indexcalc]") {
    IndexLedger l;
    l.entries = {{Point::parse("[1:0:0]"), PointRole::form_singularity_smooth_point, 1},
                 {Point::parse("[0:0:1]"), PointRole::form_singularity_smooth_point, 1}};
    l.chi_x = 2;
    CHECK(std::holds_alternative<IdentityVerified>(global_identity(l, {})));
    l.chi_x.reset();
    auto r = global_identity(l, {});
    REQUIRE(std::holds_alternative<IdentitySolved>(r));
    CHECK(std::get<IdentitySolved>(r).value == 2);
}

TEST_CASE("three-dimensional singularity", "[indexcalc]") {
    // one singularity with mu = 2, indices summing to S: chi = S - 2
    IndexLedger l;
    l.entries = {{Point::parse("[0:0:0:0:0:1]"), PointRole::variety_singularity, 3},
                 {Point::parse("[1:0:0:0:0:0]"), PointRole::form_singularity_smooth_point, 1},
                 {Point::parse("[0:0:1:0:0:0]"), PointRole::form_singularity_smooth_point, 1}};
    SingularPointRecord r = record(3, 2);
    r.point = Point::parse("[0:0:0:0:0:1]");
    std::vector<SingularPointRecord> recs{r};
    auto solved = global_identity(l, recs);
    REQUIRE(std::holds_alternative<IdentitySolved>(solved));
    CHECK(std::get<IdentitySolved>(solved).value == 5 - 2);
}

TEST_CASE("global identity errors", "[indexcalc]") {
    std::vector<SingularPointRecord> recs{surface_record()};

    auto two = twisted_cubic_ledger();
    two.chi_x.reset();
    two.entries[0].index.reset();
    CHECK(ledger_error_kind(two, recs) == LedgerError::Kind::too_many_unknowns);

    auto other = surface_record();
    other.point = e0;
    other.type = {2, 2, 2};
    auto ledger = twisted_cubic_ledger();
    ledger.entries[1].role = PointRole::variety_singularity;
    CHECK(ledger_error_kind(ledger, {surface_record(), other}) == LedgerError::Kind::mixed_types);

    other.type = {2, 3, 2};
    other.d = 3;
    CHECK(ledger_error_kind(ledger, {surface_record(), other}) == LedgerError::Kind::inconsistent_dimension);

    CHECK(ledger_error_kind(twisted_cubic_ledger(), {}) == LedgerError::Kind::missing_data);
    auto stray = surface_record();
    stray.point = Point::parse("[0:1:0:0:0]");
    CHECK(ledger_error_kind(twisted_cubic_ledger(), {surface_record(), stray}) == LedgerError::Kind::missing_data);

    auto dup = twisted_cubic_ledger();
    dup.entries.push_back(dup.entries[1]);
    CHECK_THROWS_AS(global_identity(dup, recs), std::invalid_argument);

    IndexLedger p6;
    auto ns = nonsmoothable({2, 3, 2}, 1, 1);
    ns.chi_smoothing.reset();
    ns.chi_lower_stratum.reset();
    p6.entries = {{ns.point, PointRole::variety_singularity, 4}};
    p6.chi_x = 7;
    CHECK(ledger_error_kind(p6, {ns}) == LedgerError::Kind::missing_data);
}

TEST_CASE("solving then substituting verifies", "[indexcalc][property]") {
    const std::vector<SingularPointRecord> base_recs{surface_record()};
    const auto base = twisted_cubic_ledger();

    auto check_round_trip = [](IndexLedger ledger, std::vector<SingularPointRecord> recs, auto&& substitute) {
        auto r = global_identity(ledger, recs);
        REQUIRE(std::holds_alternative<IdentitySolved>(r));
        const auto& s = std::get<IdentitySolved>(r);
        CHECK(s.lhs == s.rhs);
        substitute(ledger, recs, s.value);
        CHECK(std::holds_alternative<IdentityVerified>(global_identity(ledger, recs)));
        return s.value;
    };

    for (std::size_t i = 0; i < base.entries.size(); ++i) {
        auto l = base;
        l.entries[i].index.reset();
        auto v = check_round_trip(l, base_recs, [i](IndexLedger& lg, auto&, long long x) { lg.entries[i].index = x; });
        CHECK(v == *base.entries[i].index);
    }
    {
        auto l = base;
        l.chi_x.reset();
        CHECK(check_round_trip(l, base_recs, [](IndexLedger& lg, auto&, long long x) { lg.chi_x = x; }) == 3);
    }
    {
        auto recs = base_recs;
        recs[0].mu.reset();
        CHECK(check_round_trip(base, recs, [](IndexLedger&, auto& rs, long long x) { rs[0].mu = x; }) == 1);
    }
    {
        auto recs = base_recs;
        recs[0].mu.reset();
        recs[0].smoothable = false;  // chi cannot come from mu, so it is the unknown
        recs[0].chi_lower_stratum = 0;
        CHECK(check_round_trip(base, recs, [](IndexLedger&, auto& rs, long long x) { rs[0].chi_smoothing = x; }) == 2);
    }
    // threefold: chi_smoothing enters with a negative sign
    {
        IndexLedger l;
        Point p = Point::parse("[0:0:0:0:0:1]");
        l.entries = {{p, PointRole::variety_singularity, 3}, {Point::parse("[1:0:0:0:0:0]"), PointRole::form_singularity_smooth_point, 1}};
        l.chi_x = 2;
        SingularPointRecord r = record(3, 2);
        r.point = p;
        r.mu.reset();
        std::vector<SingularPointRecord> recs{r};
        CHECK(check_round_trip(l, recs, [](IndexLedger&, auto& rs, long long x) { rs[0].mu = x; }) == 2);
    }
}

TEST_CASE("defect matches the corollaries", "[indexcalc][property]") {
    for (long long mu = 0; mu <= 100; ++mu) {
        CHECK(defect(record(2, mu)) == 1 + mu);
        CHECK(defect(record(3, mu)) == mu);
    }
    for (std::size_t n = 2; n <= 5; ++n)
        for (long long c = -20; c <= 20; ++c) CHECK(defect(nonsmoothable({n, n + 1, n}, c, 1)) == c + 2);
}

TEST_CASE("radial form index equals the defect", "[indexcalc][property]") {
    for (int d : {2, 3})
        for (long long mu = 0; mu <= 20; ++mu) {
            auto rec = record(d, mu);
            auto chi = resolve_chi_smoothing(rec);
            REQUIRE(chi.has_value());
            CHECK(phn_from_radial(radial_from_decomposition({}), d, *chi) == defect(rec));
        }
}
