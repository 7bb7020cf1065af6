/**
 * @file report.hpp
 * @brief Command reports: exact JSON payloads (rationals as "p/q" strings,
 *        weights as {base, sign, radicand} records, never floating point) and
 *        a plain-text rendering for eyeballing. Each report echoes the command
 *        and carries a digest of its canonical input.
 */
#ifndef CAYLEY_REPORT_HPP
#define CAYLEY_REPORT_HPP

#include <string>

#include <json.hpp>

#include "cayley/cone_profile.hpp"
#include "cayley/quadratic_weight.hpp"
#include "cayley/rational.hpp"

namespace cayley {

using Json = nlohmann::ordered_json;

struct Report {
    Json payload;      // full report object, command echo and digest included
    std::string text;  // plain rendering of the same content

    std::string json_str() const { return payload.dump(2) + "\n"; }
};

/// FNV-1a 64-bit digest of the canonical input text, as fixed-width hex.
std::string input_digest(const std::string& canonical_input);

Json rational_json(const Rational& r);              // "p/q" string
Json weight_json(const QuadraticWeight& w);         // {base:"-1", sign, radicand:"p/q"}

Report dims_report(const ConeProfile& profile);
Report weights_report(const ConeProfile& profile, const Rational& lo, const Rational& hi);
Report eta_report(const ConeProfile& profile, long long k0);
Report index_report(const ConeProfile& profile, long long chi, const Rational& rate);
Report genus_report(long long d1, long long d2);
Report spectrum_report(long long degree, const Rational& kappa, long long q_max);
Report verify_frames_report();

} // namespace cayley

#endif
