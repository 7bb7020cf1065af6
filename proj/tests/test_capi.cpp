// Exercises the shared-library surface the way an external client would:
// opaque handles, status codes and rendered report strings only.
#include <doctest.h>

#include <memory>
#include <string>

#include <json.hpp>

#include "cayley.h"

namespace {

using Json = nlohmann::json;

struct Free {
    void operator()(char* s) const { cay_string_free(s); }
};
using Str = std::unique_ptr<char, Free>;

struct ProfileFree {
    void operator()(cay_profile* p) const { cay_profile_free(p); }
};
using Profile = std::unique_ptr<cay_profile, ProfileFree>;

Profile builtin(const char* name) {
    cay_profile* raw = nullptr;
    REQUIRE(cay_profile_builtin(name, &raw) == CAY_OK);
    return Profile(raw);
}

} // namespace

TEST_CASE("dims through the C boundary") {
    auto c1 = builtin("c1");
    char* raw = nullptr;
    REQUIRE(cay_dims_report(c1.get(), CAY_FORMAT_JSON, &raw) == CAY_OK);
    Str out(raw);
    Json j = Json::parse(out.get());
    CHECK(j["command"] == "dims");
    CHECK(j["complex_dim"] == 8);
    CHECK(j["cayley_dim"] == 12);
    CHECK(j["extra_modes"][0]["mode"] == "-2");
    CHECK(j["extra_modes"][0]["count"] == 4);
    CHECK(j["input_digest"].get<std::string>().size() == 16);

    raw = nullptr;
    REQUIRE(cay_dims_report(c1.get(), CAY_FORMAT_TEXT, &raw) == CAY_OK);
    Str text(raw);
    CHECK(std::string(text.get()).find("conical Cayley: 12, conical complex: 8") !=
          std::string::npos);
}

TEST_CASE("weights report serializes weights as surd records") {
    auto c2 = builtin("c2");
    char* raw = nullptr;
    REQUIRE(cay_weights_report(c2.get(), "1", "1", CAY_FORMAT_JSON, &raw) == CAY_OK);
    Str out(raw);
    Json j = Json::parse(out.get());
    REQUIRE(j["weights"].size() == 1);
    const auto& entry = j["weights"][0];
    CHECK(entry["weight"]["base"] == "-1");
    CHECK(entry["weight"]["sign"] == 1);
    CHECK(entry["weight"]["radicand"] == "4");
    CHECK(entry["value"] == "1");
    CHECK(entry["multiplicity"] == 22);
    CHECK(entry["witnesses"].size() == 3);
}

TEST_CASE("eta and index reports") {
    auto c1 = builtin("c1");
    char* raw = nullptr;
    REQUIRE(cay_eta_report(c1.get(), 1, CAY_FORMAT_JSON, &raw) == CAY_OK);
    Str eta(raw);
    Json j = Json::parse(eta.get());
    CHECK(j["eta_zero"] == "-1");
    CHECK(j["d0"] == 4);
    CHECK(j["correction"] == "3/2");

    raw = nullptr;
    REQUIRE(cay_index_report(c1.get(), "4", "3/2", CAY_FORMAT_JSON, &raw) == CAY_OK);
    Str index(raw);
    Json k = Json::parse(index.get());
    CHECK(k["expected_index"] == "-19/2");
    CHECK(k["exceptional_sum"] == 12);

    // non-Fredholm rate comes back as the math status with a message
    raw = nullptr;
    CHECK(cay_index_report(c1.get(), "4", "1", CAY_FORMAT_JSON, &raw) == CAY_EMATH);
    CHECK(std::string(cay_last_error()).find("non-Fredholm") != std::string::npos);
}

TEST_CASE("genus, spectrum and frames") {
    char* raw = nullptr;
    REQUIRE(cay_genus_report(4, 3, CAY_FORMAT_JSON, &raw) == CAY_OK);
    Str genus(raw);
    CHECK(Json::parse(genus.get())["genus"] == 19);

    raw = nullptr;
    REQUIRE(cay_spectrum_report(0, "8/3", 2, CAY_FORMAT_JSON, &raw) == CAY_OK);
    Str spectrum(raw);
    Json lines = Json::parse(spectrum.get())["lines"];
    REQUIRE(lines.size() == 3);
    CHECK(lines[2]["eigenvalue"] == "8");
    CHECK(lines[2]["multiplicity"] == 5);

    raw = nullptr;
    REQUIRE(cay_verify_frames_report(CAY_FORMAT_JSON, &raw) == CAY_OK);
    Str frames(raw);
    Json f = Json::parse(frames.get());
    CHECK(f["all_pass"] == true);
    CHECK(f["equations"].size() == 5);
}

TEST_CASE("status codes partition the error space") {
    cay_profile* raw_profile = nullptr;
    CHECK(cay_profile_builtin("nope", &raw_profile) == CAY_EUSAGE);
    CHECK(cay_profile_load("/no/such/file.toml", &raw_profile) == CAY_EUSAGE);
    CHECK(cay_profile_parse("genus = 0\n", &raw_profile) == CAY_EUSAGE);
    CHECK(std::string(cay_last_error()).find("missing 'name'") != std::string::npos);

    auto c3 = builtin("c3");
    char* out = nullptr;
    CHECK(cay_weights_report(c3.get(), "0", "1", CAY_FORMAT_JSON, &out) == CAY_EMATH);
    CHECK(std::string(cay_last_error()).find("twisted_cubic") != std::string::npos);

    auto c1 = builtin("c1");
    CHECK(cay_weights_report(c1.get(), "5", "4", CAY_FORMAT_JSON, &out) == CAY_EUSAGE);
    CHECK(cay_weights_report(c1.get(), "x", "4", CAY_FORMAT_JSON, &out) == CAY_EUSAGE);
}

TEST_CASE("profile round trip through the boundary") {
    auto c3 = builtin("c3");
    char* raw = nullptr;
    REQUIRE(cay_profile_emit(c3.get(), &raw) == CAY_OK);
    Str text(raw);
    CHECK(std::string(cay_profile_name(c3.get())) == "c3");

    cay_profile* reparsed_raw = nullptr;
    REQUIRE(cay_profile_parse(text.get(), &reparsed_raw) == CAY_OK);
    Profile reparsed(reparsed_raw);
    char* again = nullptr;
    REQUIRE(cay_profile_emit(reparsed.get(), &again) == CAY_OK);
    Str second(again);
    CHECK(std::string(text.get()) == std::string(second.get()));
}

TEST_CASE("json reports round-trip losslessly") {
    auto c1 = builtin("c1");
    for (auto format_call : {+[](cay_profile* p, char** out) {
                                 return cay_weights_report(p, "-3", "3", CAY_FORMAT_JSON, out);
                             },
                             +[](cay_profile* p, char** out) {
                                 return cay_dims_report(p, CAY_FORMAT_JSON, out);
                             }}) {
        char* raw = nullptr;
        REQUIRE(format_call(c1.get(), &raw) == CAY_OK);
        Str out(raw);
        Json parsed = Json::parse(out.get());
        CHECK(Json::parse(parsed.dump()) == parsed);
    }
}
