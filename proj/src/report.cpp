#include "cayley/report.hpp"

#include <cstdint>
#include <sstream>

#include "cayley/cone_deformations.hpp"
#include "cayley/eta_index.hpp"
#include "cayley/exceptional_weights.hpp"
#include "cayley/frame_algebra.hpp"
#include "cayley/riemann_roch.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

std::string input_digest(const std::string& canonical_input) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical_input) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) out << ((hash >> shift) & 0xf);
    return out.str();
}

Json rational_json(const Rational& r) { return r.str(); }

Json weight_json(const QuadraticWeight& w) {
    return Json{{"base", "-1"}, {"sign", w.sign()}, {"radicand", w.radicand().str()}};
}

namespace {

Json profile_json(const ConeProfile& p) {
    Json summands = Json::array();
    for (const auto& s : p.summands)
        summands.push_back(Json{{"slope", s.slope}, {"offset", s.offset}});
    return Json{{"name", p.name},
                {"genus", p.genus},
                {"kappa", rational_json(p.kappa)},
                {"lattice_denominator", p.lattice_denominator},
                {"connection", connection_name(p.connection)},
                {"summands", summands}};
}

Json header(const std::string& command, const ConeProfile* profile, const std::string& extra) {
    std::string canonical = command;
    if (profile) canonical += "\n" + emit_profile(*profile);
    if (!extra.empty()) canonical += "\n" + extra;
    Json j;
    j["command"] = command;
    j["input_digest"] = input_digest(canonical);
    if (profile) j["profile"] = profile_json(*profile);
    return j;
}

Json witness_json(const Witness& w) {
    Json j{{"mode", w.mode}, {"kind", witness_kind_name(w.kind)}, {"count", w.count}};
    if (w.target) j["target"] = rational_json(*w.target);
    return j;
}

Json weight_entry_json(const WeightEntry& entry) {
    Json j;
    j["weight"] = weight_json(entry.weight);
    if (auto value = entry.weight.to_rational()) j["value"] = rational_json(*value);
    j["multiplicity"] = entry.multiplicity;
    Json witnesses = Json::array();
    for (const auto& w : entry.witnesses) witnesses.push_back(witness_json(w));
    j["witnesses"] = witnesses;
    return j;
}

} // namespace

Report dims_report(const ConeProfile& profile) {
    ConicalReport dims = conical_cayley_dimension(profile);

    Json j = header("dims", &profile, "");
    j["complex_dim"] = dims.complex_dim;
    j["cayley_dim"] = dims.cayley_dim;
    Json extras = Json::array();
    for (const auto& e : dims.extra_modes)
        extras.push_back(Json{{"mode", rational_json(e.mode)},
                              {"count", e.count},
                              {"mechanism", mechanism_name(e.mechanism)}});
    j["extra_modes"] = extras;

    std::ostringstream text;
    text << "profile " << profile.name << ": conical Cayley: " << dims.cayley_dim
         << ", conical complex: " << dims.complex_dim << "\n";
    for (const auto& e : dims.extra_modes)
        text << "  mode " << e.mode.str() << ": +" << e.count << " (" << mechanism_name(e.mechanism)
             << ")\n";
    return Report{std::move(j), text.str()};
}

Report weights_report(const ConeProfile& profile, const Rational& lo, const Rational& hi) {
    auto entries = enumerate_weights(profile, lo, hi);

    Json j = header("weights", &profile, lo.str() + ".." + hi.str());
    j["min"] = rational_json(lo);
    j["max"] = rational_json(hi);
    Json list = Json::array();
    for (const auto& entry : entries) list.push_back(weight_entry_json(entry));
    j["weights"] = list;

    std::ostringstream text;
    text << "profile " << profile.name << ", window [" << lo.str() << ", " << hi.str() << "]: "
         << entries.size() << " exceptional weight(s)\n";
    for (const auto& entry : entries) {
        text << "  " << entry.weight.str() << ": d = " << entry.multiplicity << " (";
        bool first = true;
        for (const auto& w : entry.witnesses) {
            if (!first) text << ", ";
            first = false;
            text << witness_kind_name(w.kind) << " @ n=" << w.mode << ": " << w.count;
        }
        text << ")\n";
    }
    return Report{std::move(j), text.str()};
}

Report eta_report(const ConeProfile& profile, long long k0) {
    MultiplicityProfile mp = fit_multiplicity_profile_auto(profile, k0);
    Rational eta = eta_at_zero(mp);
    long long d0 = weight_multiplicity(profile, Rational(0)).multiplicity;
    Rational correction = (Rational(d0) + eta) / Rational(2);

    auto poly_json = [](const Polynomial& p) {
        Json arr = Json::array();
        for (const auto& c : p) arr.push_back(rational_json(c));
        return arr;
    };

    Json j = header("eta", &profile, "k0=" + std::to_string(k0));
    j["k0"] = mp.k0;
    Json head = Json::array();
    for (const auto& [w, d] : mp.head) head.push_back(Json{{"weight", w}, {"multiplicity", d}});
    j["head"] = head;
    j["tail_positive"] = poly_json(mp.tail_positive);
    j["tail_negative"] = poly_json(mp.tail_negative);
    j["eta_zero"] = rational_json(eta);
    j["d0"] = d0;
    j["correction"] = rational_json(correction);

    std::ostringstream text;
    text << "profile " << profile.name << ": eta(0) = " << eta.str() << ", d(0) = " << d0
         << ", correction (d(0)+eta(0))/2 = " << correction.str() << " (k0 = " << mp.k0 << ")\n";
    return Report{std::move(j), text.str()};
}

Report index_report(const ConeProfile& profile, long long chi, const Rational& rate) {
    IndexQuery query{chi, rate, profile};
    Rational index = expected_index(query);
    long long mid = exceptional_sum(profile, rate);
    Rational correction = index_correction(profile);

    Json j = header("index", &profile, "chi=" + std::to_string(chi) + " rate=" + rate.str());
    j["chi"] = chi;
    j["rate"] = rational_json(rate);
    j["exceptional_sum"] = mid;
    j["correction"] = rational_json(correction);
    j["expected_index"] = rational_json(index);

    std::ostringstream text;
    text << "profile " << profile.name << ", chi = " << chi << ", rate = " << rate.str()
         << ": expected index = " << index.str() << " (mid-sum " << mid << ", correction "
         << correction.str() << ")\n";
    return Report{std::move(j), text.str()};
}

Report genus_report(long long d1, long long d2) {
    long long g = genus_complete_intersection(d1, d2);

    Json j = header("genus", nullptr, std::to_string(d1) + "," + std::to_string(d2));
    j["degrees"] = Json::array({d1, d2});
    j["genus"] = g;

    std::ostringstream text;
    text << "complete intersection (" << d1 << ", " << d2 << ") in CP^3: genus " << g << "\n";
    return Report{std::move(j), text.str()};
}

Report spectrum_report(long long degree, const Rational& kappa, long long q_max) {
    SpectrumQuery query{degree, kappa};
    auto lines = enumerate_spectrum(query, q_max);

    Json j = header("spectrum",
                    nullptr,
                    "degree=" + std::to_string(degree) + " kappa=" + kappa.str() +
                        " qmax=" + std::to_string(q_max));
    j["degree"] = degree;
    j["kappa"] = rational_json(kappa);
    j["qmax"] = q_max;
    Json list = Json::array();
    for (const auto& line : lines)
        list.push_back(Json{{"eigenvalue", rational_json(line.eigenvalue)},
                            {"q", line.q},
                            {"shift", line.shift},
                            {"multiplicity", line.multiplicity}});
    j["lines"] = list;

    std::ostringstream text;
    text << "spectrum of 2 dbar* dbar on degree " << degree << ", kappa = " << kappa.str()
         << ":\n";
    for (const auto& line : lines)
        text << "  q = " << line.q << ": eigenvalue " << line.eigenvalue.str() << ", multiplicity "
             << line.multiplicity << "\n";
    return Report{std::move(j), text.str()};
}

Report verify_frames_report() {
    StructureReport frames = verify_structure_equations();

    Json j = header("verify-frames", nullptr, "");
    Json eqs = Json::array();
    for (const auto& eq : frames.equations) {
        Json e{{"name", eq.name}, {"pass", eq.pass}};
        if (!eq.pass) e["failures"] = eq.failures;
        eqs.push_back(e);
    }
    j["equations"] = eqs;
    j["all_pass"] = frames.all_pass;

    std::ostringstream text;
    for (const auto& eq : frames.equations) {
        text << eq.name << ": " << (eq.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& f : eq.failures) text << "    " << f << "\n";
    }
    text << (frames.all_pass ? "all structure equations hold\n"
                             : "structure equation residuals are nonzero\n");
    return Report{std::move(j), text.str()};
}

} // namespace cayley
