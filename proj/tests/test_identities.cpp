#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "airysum/identities.hpp"
#include "airysum/report_io.hpp"
#include "airysum/zeros.hpp"

using namespace airysum;

TEST_CASE("spot verifications") {
    const VerificationReport trk = verify_identity("linear.trk", 3);
    CHECK(trk.pass);
    CHECK(trk.rhs == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(trk.rel_residual < 1e-8);

    const VerificationReport mono = verify_identity("linear.even_monopole", 1);
    CHECK(mono.pass);
    // Positive RHS; the sum (eta_k - eta_n)^7 ordering makes the LHS positive.
    CHECK(mono.lhs > 0.0);

    const VerificationReport htrk = verify_identity("halfsho.trk", 0);
    CHECK(htrk.pass);
    CHECK(htrk.rhs == doctest::Approx(M_PI).epsilon(1e-15));

    const VerificationReport hc = verify_identity("halfsho.completeness", 0);
    CHECK(hc.pass);
    CHECK(hc.rhs == doctest::Approx(6.0 * M_PI).epsilon(1e-15));
}

TEST_CASE("n-independence of the constant-RHS identities") {
    for (const char* id : {"linear.force_squared", "linear.force_momentum", "linear.trk"}) {
        for (int n = 1; n <= 20; ++n) {
            const VerificationReport r = verify_identity(id, n);
            CHECK_MESSAGE(r.pass, id, " n=", n, " rel=", r.rel_residual);
        }
    }
    for (int n = 0; n < 20; ++n) CHECK(verify_identity("halfsho.trk", n).pass);
}

TEST_CASE("unknown ids and bad indices are usage errors") {
    CHECK_THROWS_AS(verify_identity("bogus", 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity("linear.trk", 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity("halfsho.trk", -1), std::invalid_argument);
}

TEST_CASE("tolerance overrides flow through") {
    // An override below machine epsilon cannot pass (n = 2 carries a
    // residual of a couple of ulps; n = 1 happens to round to exactly 1).
    const VerificationReport r = verify_identity("linear.force_squared", 2, {}, 1e-17);
    CHECK_FALSE(r.pass);
    // And a loose override must pass even at low term counts.
    SummationConfig coarse;
    coarse.explicit_terms = 100;
    CHECK(verify_identity("linear.force_squared", 1, coarse, 1e-3).pass);
}

TEST_CASE("report serialization is deterministic and schema-stable") {
    const VerificationReport r1 = verify_identity("linear.trk", 2);
    const VerificationReport r2 = verify_identity("linear.trk", 2);
    CHECK(report_json_line(r1) == report_json_line(r2));
    CHECK(report_csv_row(r1) == report_csv_row(r2));
    CHECK(report_csv_header() == "id,n,lhs,rhs,abs_res,rel_res,terms,tail,pass");
    const std::string j = report_json_line(r1);
    for (const char* key : {"\"id\"", "\"n\"", "\"lhs\"", "\"rhs\"", "\"abs_res\"",
                            "\"rel_res\"", "\"terms\"", "\"tail\"", "\"pass\""})
        CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("zero-table CSV export") {
    const ZeroTable t = zero_table(ZeroKind::AiZero, 3, 2);
    const std::string csv = zero_table_csv(t);
    CHECK(csv.rfind("kind,k,value,refined\n", 0) == 0);
    CHECK(csv.find("ai,1,2.338107410459767") != std::string::npos);
    CHECK(csv.find(",0\n") != std::string::npos);  // third row unrefined
}
