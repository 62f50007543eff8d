#pragma once

#include <string>
#include <vector>

#include "airysum/identities.hpp"
#include "airysum/moments.hpp"
#include "airysum/stark.hpp"
#include "airysum/zeros.hpp"

namespace airysum {

// Report serialization.  JSON uses the shortest round-trip representation
// for doubles; CSV uses fixed 17-significant-digit scientific notation.
// Both are byte-deterministic for identical inputs.

std::string csv_double(double v);  // %.16e

// Verification reports.
// JSON line: {"id":...,"n":...,"lhs":...,"rhs":...,"abs_res":...,
//             "rel_res":...,"terms":...,"tail":...,"pass":...}
std::string report_json_line(const VerificationReport& r);
// CSV header: id,n,lhs,rhs,abs_res,rel_res,terms,tail,pass
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);
std::string report_table_row(const VerificationReport& r);

// Zero tables: kind,k,value,refined
std::string zero_table_csv(const ZeroTable& table);

// Moment expressions: {"parity":...,"p":...,"terms":[{"num":...,"den":...,"exp":...}]}
std::string moment_json(const MomentExpression& e);

// Fig-1 comparison series: n,r1,r2,pt2_terms,pt2_tail
std::string fig1_csv(const std::vector<Fig1Row>& rows);

}  // namespace airysum
