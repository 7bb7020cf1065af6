#include "cayley/cone_profile.hpp"

#include <cctype>
#include <sstream>

namespace cayley {

const char* connection_name(Connection c) {
    return c == Connection::diagonal ? "diagonal" : "twisted_cubic";
}

ConeProfile builtin_profile(std::string_view name) {
    if (name == "c1")
        return ConeProfile{"c1", 0, Rational(8), 1, {{1, 1}, {1, 1}}, Connection::diagonal};
    if (name == "c2")
        return ConeProfile{"c2", 0, Rational(4), 1, {{2, 2}, {2, 4}}, Connection::diagonal};
    if (name == "c3")
        return ConeProfile{"c3", 0, Rational(8, 3), 3, {{1, 5}, {1, 5}}, Connection::twisted_cubic};
    throw usage_error("unknown builtin profile '" + std::string(name) + "' (expected c1, c2 or c3)");
}

bool is_builtin_profile(std::string_view name) {
    return name == "c1" || name == "c2" || name == "c3";
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;

    bool done() const { return pos >= text.size(); }
};

[[noreturn]] void fail(const Cursor& c, std::size_t column, const std::string& what) {
    throw usage_error("profile parse error: line " + std::to_string(c.line) + ", column " +
                      std::to_string(column) + ": " + what);
}

std::string_view next_line(Cursor& c) {
    std::size_t start = c.pos;
    while (c.pos < c.text.size() && c.text[c.pos] != '\n') ++c.pos;
    std::string_view line = c.text.substr(start, c.pos - start);
    if (c.pos < c.text.size()) ++c.pos;  // consume '\n'
    return line;
}

bool blank_or_comment(std::string_view line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(line[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long long parse_int(const Cursor& c, std::string_view value, std::size_t column) {
    auto r = Rational::parse(value);
    if (!r || !r->is_integer()) fail(c, column, "expected an integer, got '" + std::string(value) + "'");
    if (!r->numerator().fits_slong_p()) fail(c, column, "integer out of range");
    return r->numerator().get_si();
}

std::string parse_quoted(const Cursor& c, std::string_view value, std::size_t column) {
    if (value.size() < 2 || value.front() != '"' || value.back() != '"')
        fail(c, column, "expected a quoted string");
    return std::string(value.substr(1, value.size() - 2));
}

} // namespace

ConeProfile parse_profile(std::string_view text) {
    ConeProfile profile;
    bool have_name = false, have_genus = false, have_kappa = false, have_k = false,
         have_connection = false;
    // -1 = top-level section, otherwise index into profile.summands
    long long section = -1;
    struct SummandSeen {
        bool slope = false, offset = false;
    };
    std::vector<SummandSeen> seen;

    Cursor cursor{text};
    while (!cursor.done()) {
        std::size_t this_line = cursor.line;
        std::string_view raw = next_line(cursor);
        Cursor where{text, 0, this_line};
        if (!blank_or_comment(raw)) {
            std::string_view line = trim(raw);
            if (line == "[[summand]]") {
                profile.summands.push_back(DegreeFamily{});
                seen.push_back(SummandSeen{});
                section = static_cast<long long>(profile.summands.size()) - 1;
            } else if (line.front() == '[') {
                fail(where, raw.find('[') + 1, "unknown section '" + std::string(line) + "'");
            } else {
                std::size_t eq = line.find('=');
                if (eq == std::string_view::npos)
                    fail(where, 1, "expected 'key = value'");
                std::string key(trim(line.substr(0, eq)));
                std::string_view value = trim(line.substr(eq + 1));
                std::size_t vcol = raw.find('=') + 2;
                if (value.empty()) fail(where, vcol, "missing value for '" + key + "'");

                if (section < 0) {
                    if (key == "name") {
                        profile.name = parse_quoted(where, value, vcol);
                        have_name = true;
                    } else if (key == "genus") {
                        profile.genus = parse_int(where, value, vcol);
                        if (profile.genus < 0) fail(where, vcol, "genus must be nonnegative");
                        have_genus = true;
                    } else if (key == "kappa") {
                        std::string s = parse_quoted(where, value, vcol);
                        auto r = Rational::parse(s);
                        if (!r) fail(where, vcol, "kappa is not a rational \"p/q\" string");
                        if (r->sign() <= 0) fail(where, vcol, "kappa must be positive");
                        profile.kappa = *r;
                        have_kappa = true;
                    } else if (key == "lattice_denominator") {
                        profile.lattice_denominator = parse_int(where, value, vcol);
                        if (profile.lattice_denominator < 1)
                            fail(where, vcol, "lattice_denominator must be >= 1");
                        have_k = true;
                    } else if (key == "connection") {
                        std::string s = parse_quoted(where, value, vcol);
                        if (s == "diagonal")
                            profile.connection = Connection::diagonal;
                        else if (s == "twisted_cubic")
                            profile.connection = Connection::twisted_cubic;
                        else
                            fail(where, vcol, "connection must be \"diagonal\" or \"twisted_cubic\"");
                        have_connection = true;
                    } else {
                        fail(where, raw.find_first_not_of(" \t") + 1, "unknown key '" + key + "'");
                    }
                } else {
                    auto idx = static_cast<std::size_t>(section);
                    if (key == "slope") {
                        profile.summands[idx].slope = parse_int(where, value, vcol);
                        if (profile.summands[idx].slope < 1) fail(where, vcol, "slope must be >= 1");
                        seen[idx].slope = true;
                    } else if (key == "offset") {
                        profile.summands[idx].offset = parse_int(where, value, vcol);
                        seen[idx].offset = true;
                    } else {
                        fail(where, raw.find_first_not_of(" \t") + 1,
                             "unknown key '" + key + "' in [[summand]]");
                    }
                }
            }
        }
        ++cursor.line;
    }

    Cursor end{text, 0, cursor.line};
    if (!have_name) fail(end, 1, "missing 'name'");
    if (!have_genus) fail(end, 1, "missing 'genus'");
    if (!have_kappa) fail(end, 1, "missing 'kappa'");
    if (!have_k) fail(end, 1, "missing 'lattice_denominator'");
    if (!have_connection) fail(end, 1, "missing 'connection'");
    if (profile.summands.empty()) fail(end, 1, "at least one [[summand]] is required");
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i].slope) fail(end, 1, "summand " + std::to_string(i + 1) + " missing 'slope'");
        if (!seen[i].offset) fail(end, 1, "summand " + std::to_string(i + 1) + " missing 'offset'");
    }
    return profile;
}

std::string emit_profile(const ConeProfile& profile) {
    std::ostringstream out;
    out << "name = \"" << profile.name << "\"\n";
    out << "genus = " << profile.genus << "\n";
    out << "kappa = \"" << profile.kappa.str() << "\"\n";
    out << "lattice_denominator = " << profile.lattice_denominator << "\n";
    out << "connection = \"" << connection_name(profile.connection) << "\"\n";
    for (const auto& s : profile.summands) {
        out << "\n[[summand]]\n";
        out << "slope = " << s.slope << "\n";
        out << "offset = " << s.offset << "\n";
    }
    return out.str();
}

} // namespace cayley
