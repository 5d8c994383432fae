#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hermitian/common.hpp"
#include "hermitian/improve.hpp"
#include "hermitian/minwords.hpp"
#include "hermitian/smallwords.hpp"

namespace hermitian {

nlohmann::json to_json(const MinWeightCensus& census);
nlohmann::json to_json(const ImproveReport& report);
nlohmann::json to_json(const SweepReport& report);

// One verification suite run: machine-readable details plus a pass flag. The
// details contain only mathematical content (no timings), so a rerun with a
// different worker count serializes byte-identically.
struct SuiteReport {
  std::string name;
  bool ok = false;
  nlohmann::json details;
};

// Line dichotomy: every line of PG(2, q^2) is either tangent (one rational
// curve point, contact order q+1 via the local series) or meets the curve in
// exactly q+1 rational points; class sizes q^3+1 / q^2 / q^4-q^3.
SuiteReport verify_lines(unsigned q);

// Parabola census totals and the vanishing tails (q odd: census[2q] =
// q^2(q+1)(q-1)/2, nothing above 2q; q even: nothing above 2q-1).
SuiteReport verify_parabolas(unsigned q, unsigned workers = 0);

// min_distance(C_m) == the table value, for every m the budgets allow:
// exhaustive codeword enumeration when |F|^k fits, support search when the
// subset budget fits; skipped m are listed.
SuiteReport verify_table1(unsigned q, const Budget& budget = {});

// dual(C_m) has the row space of C_{m_perp} for every valid m.
SuiteReport verify_duality(unsigned q);

// Monomial-basis and projective-forms constructions coincide for all
// 0 < m <= q(q+1).
SuiteReport verify_isometry(unsigned q);

// Seed-fixed random (d, a, S) instances: kernel dimension == h1, every time.
SuiteReport verify_oracle(unsigned q, std::uint64_t seed, int instances);

// The q = 7, (d,a) = (7,3) census: computes the number of minimum-weight dual
// words over the 2352 candidate supports and reports which of the two
// published values it supports, flagging the other as the erratum.
SuiteReport verify_q7_erratum(const Budget& budget = {});

}  // namespace hermitian
