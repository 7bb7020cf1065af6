// cayley - command-line front end for the exact cone-geometry engine.
//
// Talks to the engine exclusively through the C API in cayley.h. Exit codes:
// 0 success, 1 mathematical rejection (non-Fredholm rate, indeterminate
// dimension count, unsupported connection), 2 usage or parse error.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "cayley.h"

namespace {

struct ProfileDeleter {
    void operator()(cay_profile* p) const { cay_profile_free(p); }
};
using ProfilePtr = std::unique_ptr<cay_profile, ProfileDeleter>;

struct StringDeleter {
    void operator()(char* s) const { cay_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail(cay_status status) {
    std::fprintf(stderr, "cayley: %s\n", cay_last_error());
    return status == CAY_EMATH ? 1 : 2;
}

// --builtin NAME | --profile PATH, exactly one of the two.
ProfilePtr open_profile(const std::string& builtin, const std::string& path, cay_status& status) {
    cay_profile* raw = nullptr;
    if (!builtin.empty())
        status = cay_profile_builtin(builtin.c_str(), &raw);
    else
        status = cay_profile_load(path.c_str(), &raw);
    return ProfilePtr(raw);
}

int print_report(cay_status status, const StringPtr& report) {
    if (status != CAY_OK) return fail(status);
    std::fputs(report.get(), stdout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral and index computations for complex cone links"};
    app.require_subcommand(1);

    std::string builtin, profile_path;
    bool json = false;

    auto add_profile_flags = [&](CLI::App* cmd) {
        auto* b = cmd->add_option("--builtin", builtin, "builtin profile name (c1, c2, c3)");
        auto* p = cmd->add_option("--profile", profile_path, "profile file path");
        b->excludes(p);
        cmd->add_flag("--json", json, "emit the report as JSON");
    };
    auto profile_chosen = [&]() { return !builtin.empty() || !profile_path.empty(); };

    auto* dims = app.add_subcommand("dims", "conical Cayley/complex deformation dimensions");
    add_profile_flags(dims);

    auto* weights = app.add_subcommand("weights", "exceptional weights with multiplicities");
    add_profile_flags(weights);
    std::string min_str, max_str;
    weights->add_option("--min", min_str, "window lower bound, rational p/q")->required();
    weights->add_option("--max", max_str, "window upper bound, rational p/q")->required();

    auto* eta = app.add_subcommand("eta", "eta invariant and index correction");
    add_profile_flags(eta);
    long k0 = 1;
    eta->add_option("--k0", k0, "head/tail split point (default 1)");

    auto* index = app.add_subcommand("index", "expected index at a Fredholm rate");
    add_profile_flags(index);
    std::string chi_str, rate_str;
    index->add_option("--chi", chi_str, "holomorphic Euler characteristic (integer)")->required();
    index->add_option("--rate", rate_str, "rate in (1,2), rational p/q")->required();

    auto* genus = app.add_subcommand("genus", "genus of a complete intersection curve in CP^3");
    std::string degrees;
    genus->add_option("--degrees", degrees, "pair d1,d2 of positive degrees")->required();
    genus->add_flag("--json", json, "emit the report as JSON");

    auto* spectrum = app.add_subcommand("spectrum", "twisted Laplacian spectrum on a rational curve");
    long degree = 0, qmax = 10;
    std::string kappa_str = "8";
    spectrum->add_option("--degree", degree, "bundle degree")->required();
    spectrum->add_option("--kappa", kappa_str, "scalar curvature, rational p/q")->required();
    spectrum->add_option("--qmax", qmax, "highest level to list (default 10)");
    spectrum->add_flag("--json", json, "emit the report as JSON");

    auto* frames = app.add_subcommand("verify-frames", "check the link frame structure equations");
    frames->add_flag("--json", json, "emit the report as JSON");

    auto* profile_cmd = app.add_subcommand("profile", "emit a profile in the text format");
    std::string emit_name;
    profile_cmd->add_option("--emit", emit_name, "builtin profile to emit")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cay_format format = json ? CAY_FORMAT_JSON : CAY_FORMAT_TEXT;
    cay_status status = CAY_OK;
    char* raw = nullptr;

    if (*genus) {
        auto comma = degrees.find(',');
        long d1 = 0, d2 = 0;
        try {
            if (comma == std::string::npos) throw std::invalid_argument("missing comma");
            d1 = std::stol(degrees.substr(0, comma));
            d2 = std::stol(degrees.substr(comma + 1));
        } catch (const std::exception&) {
            std::fprintf(stderr, "cayley: --degrees expects d1,d2 (got '%s')\n", degrees.c_str());
            return 2;
        }
        status = cay_genus_report(d1, d2, format, &raw);
        return print_report(status, StringPtr(raw));
    }

    if (*spectrum) {
        status = cay_spectrum_report(degree, kappa_str.c_str(), qmax, format, &raw);
        return print_report(status, StringPtr(raw));
    }

    if (*frames) {
        status = cay_verify_frames_report(format, &raw);
        StringPtr report(raw);
        if (report) std::fputs(report.get(), stdout);
        if (status != CAY_OK && !report) return fail(status);
        return status == CAY_OK ? 0 : 1;
    }

    if (*profile_cmd) {
        ProfilePtr handle(nullptr);
        cay_profile* p = nullptr;
        status = cay_profile_builtin(emit_name.c_str(), &p);
        handle.reset(p);
        if (status != CAY_OK) return fail(status);
        status = cay_profile_emit(handle.get(), &raw);
        return print_report(status, StringPtr(raw));
    }

    // Remaining subcommands all consume a profile.
    if (!profile_chosen()) {
        std::fprintf(stderr, "cayley: one of --builtin or --profile is required\n");
        return 2;
    }
    ProfilePtr handle = open_profile(builtin, profile_path, status);
    if (status != CAY_OK) return fail(status);

    if (*dims) {
        status = cay_dims_report(handle.get(), format, &raw);
    } else if (*weights) {
        status = cay_weights_report(handle.get(), min_str.c_str(), max_str.c_str(), format, &raw);
    } else if (*eta) {
        status = cay_eta_report(handle.get(), k0, format, &raw);
    } else if (*index) {
        status = cay_index_report(handle.get(), chi_str.c_str(), rate_str.c_str(), format, &raw);
    }
    return print_report(status, StringPtr(raw));
}
