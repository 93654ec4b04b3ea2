#pragma once

// Minimal RFC 4180 CSV: header row, comma separator, CRLF-free (LF) records,
// quoting only when a field needs it. Doubles are written with 17 significant
// digits so that parse(format(x)) == x bit for bit.

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "lorentzkit/error.hpp"

namespace lorentzkit::io {

inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (res.ec != std::errc{}) fail(ErrorKind::Numerical, "could not format double");
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    // from_chars rejects a leading '+', accept it for hand-written input
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        fail(ErrorKind::Input, "not a number: '" + std::string(s) + "'");
    }
    return v;
}

inline std::string quote_field(std::string_view f) {
    if (f.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(f);
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) os_ << ',';
            os_ << quote_field(fields[i]);
        }
        os_ << '\n';
        if (!os_) fail(ErrorKind::Io, "write failed");
    }

private:
    std::ostream& os_;
};

using CsvTable = std::vector<std::vector<std::string>>;

/// Parses the whole stream, header included. Quoted fields may contain commas,
/// doubled quotes and line breaks.
inline CsvTable parse_csv(std::istream& is) {
    CsvTable table;
    std::vector<std::string> rec;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    char c = 0;
    auto end_field = [&] {
        rec.push_back(field);
        field.clear();
        field_started = false;
    };
    while (is.get(c)) {
        if (quoted) {
            if (c == '"') {
                if (is.peek() == '"') {
                    is.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
            field_started = true;  // a trailing comma still opens one more field
        } else if (c == '\r') {
            continue;
        } else if (c == '\n') {
            end_field();
            table.push_back(std::move(rec));
            rec.clear();
        } else {
            field += c;
            field_started = true;
        }
    }
    if (quoted) fail(ErrorKind::Input, "unterminated quoted CSV field");
    if (field_started || !field.empty() || !rec.empty()) {
        end_field();
        table.push_back(std::move(rec));
    }
    return table;
}

} // namespace lorentzkit::io
