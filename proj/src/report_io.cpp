#include "airysum/report_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace airysum {

using nlohmann::json;

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string report_json_line(const VerificationReport& r) {
    json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_res"] = r.abs_residual;
    j["rel_res"] = r.rel_residual;
    j["terms"] = r.terms_used;
    j["tail"] = r.tail_estimate;
    j["pass"] = r.pass;
    return j.dump();
}

std::string report_csv_header() { return "id,n,lhs,rhs,abs_res,rel_res,terms,tail,pass"; }

std::string report_csv_row(const VerificationReport& r) {
    std::ostringstream os;
    os << r.id << ',' << r.n << ',' << csv_double(r.lhs) << ',' << csv_double(r.rhs) << ','
       << csv_double(r.abs_residual) << ',' << csv_double(r.rel_residual) << ',' << r.terms_used
       << ',' << csv_double(r.tail_estimate) << ',' << (r.pass ? 1 : 0);
    return os.str();
}

std::string report_table_row(const VerificationReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-28s n=%-3d lhs=%-22.15g rhs=%-22.15g rel=%-10.2e %s",
                  r.id.c_str(), r.n, r.lhs, r.rhs, r.rel_residual, r.pass ? "pass" : "FAIL");
    return buf;
}

std::string zero_table_csv(const ZeroTable& table) {
    std::ostringstream os;
    os << "kind,k,value,refined\n";
    const char* kind = table.kind() == ZeroKind::AiZero ? "ai" : "aiprime";
    for (int k = 1; k <= table.count(); ++k)
        os << kind << ',' << k << ',' << csv_double(table.value(k)) << ','
           << (table.refined(k) ? 1 : 0) << '\n';
    return os.str();
}

std::string moment_json(const MomentExpression& e) {
    json j;
    j["parity"] = (e.parity == Parity::Odd) ? "odd" : "even";
    j["p"] = e.power;
    json terms = json::array();
    for (const auto& t : e.terms) {
        json jt;
        const auto num = boost::multiprecision::numerator(t.coeff);
        const auto den = boost::multiprecision::denominator(t.coeff);
        // Exact integers when they fit, decimal strings beyond 2^63.
        if (num >= std::numeric_limits<long long>::min() &&
            num <= std::numeric_limits<long long>::max())
            jt["num"] = static_cast<long long>(num);
        else
            jt["num"] = num.str();
        if (den <= std::numeric_limits<long long>::max())
            jt["den"] = static_cast<long long>(den);
        else
            jt["den"] = den.str();
        jt["exp"] = t.exponent;
        terms.push_back(jt);
    }
    j["terms"] = terms;
    return j.dump();
}

std::string fig1_csv(const std::vector<Fig1Row>& rows) {
    std::ostringstream os;
    os << "n,r1,r2,pt2_terms,pt2_tail\n";
    for (const auto& r : rows)
        os << r.n << ',' << csv_double(r.r1) << ',' << csv_double(r.r2) << ',' << r.pt2_terms
           << ',' << csv_double(r.pt2_tail) << '\n';
    return os.str();
}

}  // namespace airysum
