#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "io.hpp"

namespace tricert {

// S3 chains plus BG-paths, 0-based vertex ids
struct Certificate {
    int n = 0;
    int m = 0;
    std::array<std::vector<int>, 3> s3;
    std::vector<std::vector<int>> paths;

    bool operator==(const Certificate&) const = default;
};

namespace detail {

inline void append_verts(std::string& out, const std::vector<int>& vs) {
    out += " :";
    for (int v : vs) out += ' ' + std::to_string(v + 1);
    out += '\n';
}

inline std::vector<int> parse_verts(const std::vector<std::string_view>& tok, size_t from, int no) {
    std::vector<int> vs;
    for (size_t i = from; i < tok.size(); ++i) {
        long long v = 0;
        if (!to_long(tok[i], v) || v < 1 || v > 2000000000LL) throw ParseError(no, "bad vertex id");
        vs.push_back(static_cast<int>(v - 1));
    }
    return vs;
}

}  // namespace detail

inline std::string format_certificate(const Certificate& c) {
    std::string out = "tricert 1 positive\n";
    out += "g " + std::to_string(c.n) + ' ' + std::to_string(c.m) + '\n';
    for (int k = 0; k < 3; ++k) {
        out += "s3 " + std::to_string(k);
        detail::append_verts(out, c.s3[k]);
    }
    for (size_t i = 0; i < c.paths.size(); ++i) {
        out += "path " + std::to_string(i + 1);
        detail::append_verts(out, c.paths[i]);
    }
    return out;
}

struct CertificateFile {
    bool positive = false;
    Certificate cert;
    Witness witness;
};

// Structural parse only: ids are range-checked against nothing, steps must be consecutive.
inline CertificateFile parse_certificate(std::string_view text) {
    CertificateFile out;
    int stage = 0;  // 0 header, 1 g, 2..4 s3, 5 paths / witness
    for (auto [no, line] : detail::numbered_lines(text)) {
        auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') continue;
        if (stage == 0) {
            if (tok.size() != 3 || tok[0] != "tricert" || tok[1] != "1")
                throw ParseError(no, "expected certificate header");
            if (tok[2] == "positive") out.positive = true;
            else if (tok[2] != "negative") throw ParseError(no, "unknown certificate kind");
            stage = out.positive ? 1 : 5;
            continue;
        }
        if (!out.positive) {
            if (stage != 5) throw ParseError(no, "trailing data after witness");
            try {
                out.witness = parse_witness_line(line);
            } catch (const ParseError& e) {
                throw ParseError(no, e.what());
            }
            stage = 6;
            continue;
        }
        if (stage == 1) {
            long long n = 0, m = 0;
            if (tok.size() != 3 || tok[0] != "g" || !detail::to_long(tok[1], n) ||
                !detail::to_long(tok[2], m) || n < 0 || m < 0)
                throw ParseError(no, "expected g line");
            out.cert.n = static_cast<int>(n);
            out.cert.m = static_cast<int>(m);
            stage = 2;
            continue;
        }
        long long idx = 0;
        if (tok.size() < 3 || tok[2] != ":" || !detail::to_long(tok[1], idx))
            throw ParseError(no, "malformed chain line");
        if (stage <= 4) {
            if (tok[0] != "s3" || idx != stage - 2) throw ParseError(no, "expected s3 line");
            out.cert.s3[stage - 2] = detail::parse_verts(tok, 3, no);
            ++stage;
            continue;
        }
        if (tok[0] != "path" || idx != static_cast<long long>(out.cert.paths.size()) + 1)
            throw ParseError(no, "expected path " + std::to_string(out.cert.paths.size() + 1));
        out.cert.paths.push_back(detail::parse_verts(tok, 3, no));
    }
    if (stage == 0) throw ParseError(0, "empty certificate");
    if (out.positive && stage < 5) throw ParseError(0, "truncated certificate");
    if (!out.positive && stage != 6) throw ParseError(0, "missing witness line");
    return out;
}

}  // namespace tricert
