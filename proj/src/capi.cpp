#include "cayley.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "cayley/cone_profile.hpp"
#include "cayley/report.hpp"

using namespace cayley;

struct cay_profile {
    ConeProfile profile;
};

namespace {

thread_local std::string g_last_error = "no error";

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
cay_status guarded(Fn&& fn) {
    try {
        fn();
        return CAY_OK;
    } catch (const math_error& e) {
        g_last_error = e.what();
        return CAY_EMATH;
    } catch (const usage_error& e) {
        g_last_error = e.what();
        return CAY_EUSAGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CAY_EINTERNAL;
    }
}

cay_status emit_report(const Report& report, cay_format format, char** out) {
    if (!out) {
        g_last_error = "null output parameter";
        return CAY_EUSAGE;
    }
    *out = copy_string(format == CAY_FORMAT_JSON ? report.json_str() : report.text);
    if (!*out) {
        g_last_error = "out of memory";
        return CAY_EINTERNAL;
    }
    return CAY_OK;
}

const ConeProfile& require(const cay_profile* profile) {
    if (!profile) throw usage_error("null profile handle");
    return profile->profile;
}

} // namespace

extern "C" {

const char* cay_version(void) { return "1.0.0"; }

const char* cay_last_error(void) { return g_last_error.c_str(); }

void cay_string_free(char* s) { std::free(s); }

cay_status cay_profile_builtin(const char* name, cay_profile** out) {
    return guarded([&] {
        if (!name || !out) throw usage_error("null argument");
        *out = new cay_profile{builtin_profile(name)};
    });
}

cay_status cay_profile_parse(const char* text, cay_profile** out) {
    return guarded([&] {
        if (!text || !out) throw usage_error("null argument");
        *out = new cay_profile{parse_profile(text)};
    });
}

cay_status cay_profile_load(const char* path, cay_profile** out) {
    return guarded([&] {
        if (!path || !out) throw usage_error("null argument");
        std::ifstream in(path, std::ios::binary);
        if (!in) throw usage_error("cannot open profile file '" + std::string(path) + "'");
        std::ostringstream text;
        text << in.rdbuf();
        *out = new cay_profile{parse_profile(text.str())};
    });
}

void cay_profile_free(cay_profile* profile) { delete profile; }

cay_status cay_profile_emit(const cay_profile* profile, char** out) {
    return guarded([&] {
        if (!out) throw usage_error("null argument");
        *out = copy_string(emit_profile(require(profile)));
        if (!*out) throw std::bad_alloc();
    });
}

const char* cay_profile_name(const cay_profile* profile) {
    return profile ? profile->profile.name.c_str() : "";
}

cay_status cay_dims_report(const cay_profile* profile, cay_format format, char** out) {
    Report report;
    cay_status status = guarded([&] { report = dims_report(require(profile)); });
    return status == CAY_OK ? emit_report(report, format, out) : status;
}

cay_status cay_weights_report(const cay_profile* profile, const char* min, const char* max,
                              cay_format format, char** out) {
    Report report;
    cay_status status = guarded([&] {
        if (!min || !max) throw usage_error("null window bound");
        Rational lo = Rational::parse_or_throw(min, "--min");
        Rational hi = Rational::parse_or_throw(max, "--max");
        report = weights_report(require(profile), lo, hi);
    });
    return status == CAY_OK ? emit_report(report, format, out) : status;
}

cay_status cay_eta_report(const cay_profile* profile, long k0, cay_format format, char** out) {
    Report report;
    cay_status status = guarded([&] { report = eta_report(require(profile), k0); });
    return status == CAY_OK ? emit_report(report, format, out) : status;
}

cay_status cay_index_report(const cay_profile* profile, const char* chi, const char* rate,
                            cay_format format, char** out) {
    Report report;
    cay_status status = guarded([&] {
        if (!chi || !rate) throw usage_error("null argument");
        Rational chi_value = Rational::parse_or_throw(chi, "--chi");
        if (!chi_value.is_integer()) throw usage_error("--chi must be an integer");
        Rational mu = Rational::parse_or_throw(rate, "--rate");
        report = index_report(require(profile), chi_value.numerator().get_si(), mu);
    });
    return status == CAY_OK ? emit_report(report, format, out) : status;
}

cay_status cay_genus_report(long d1, long d2, cay_format format, char** out) {
    Report report;
    cay_status status = guarded([&] { report = genus_report(d1, d2); });
    return status == CAY_OK ? emit_report(report, format, out) : status;
}

cay_status cay_spectrum_report(long degree, const char* kappa, long qmax, cay_format format,
                               char** out) {
    Report report;
    cay_status status = guarded([&] {
        if (!kappa) throw usage_error("null kappa");
        Rational k = Rational::parse_or_throw(kappa, "--kappa");
        report = spectrum_report(degree, k, qmax);
    });
    return status == CAY_OK ? emit_report(report, format, out) : status;
}

cay_status cay_verify_frames_report(cay_format format, char** out) {
    Report report;
    bool all_pass = false;
    cay_status status = guarded([&] {
        report = verify_frames_report();
        all_pass = report.payload.at("all_pass").get<bool>();
    });
    if (status != CAY_OK) return status;
    status = emit_report(report, format, out);
    if (status != CAY_OK) return status;
    if (!all_pass) {
        g_last_error = "structure equation residuals are nonzero";
        return CAY_EMATH;
    }
    return CAY_OK;
}

} // extern "C"
