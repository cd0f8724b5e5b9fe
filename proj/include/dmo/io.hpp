// io.hpp — CSV / JSON time-series output and read-back validation

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dmo/scenario.hpp"

namespace dmo::io {

inline constexpr const char* kColumns = "t,S,W,rho_ee,rho_gg,re_rho_eg,im_rho_eg,norm,trace_deficit";

/// 12 significant digits; negative zero prints as 0.
inline std::string format_number(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::vector<std::pair<std::string, std::string>> metadata(const TimeSeries& ts) {
    const Scenario& s = ts.scenario;
    return {
        {"label", s.label.empty() ? "custom" : s.label},
        {"case", to_string(s.initial)},
        {"theta", format_number(s.theta)},
        {"phi", format_number(s.phi)},
        {"alpha", format_number(s.alpha)},
        {"eta", "1"},
        {"chi", format_number(s.chi)},
        {"mc2", format_number(s.mc2)},
        {"gamma", format_number(s.gamma)},
        {"t_max", format_number(s.t_max)},
        {"dt", format_number(s.dt)},
        {"mode", to_string(s.mode)},
        {"n_max", std::to_string(ts.n_max)},
        {"n_max_request", s.n_max ? std::to_string(*s.n_max) : std::string("auto")},
        {"rows", std::to_string(ts.rows.size())},
    };
}

inline void write_csv(std::ostream& os, const TimeSeries& ts) {
    for (const auto& [k, v] : metadata(ts)) os << "# " << k << '=' << v << '\n';
    os << kColumns << '\n';
    for (const auto& r : ts.rows) {
        const double cols[] = {r.t, r.S, r.W, r.rho_ee, r.rho_gg, r.re_rho_eg, r.im_rho_eg, r.norm, r.trace_deficit};
        for (std::size_t i = 0; i < std::size(cols); ++i) os << (i ? "," : "") << format_number(cols[i]);
        os << '\n';
    }
}

inline void write_json(std::ostream& os, const TimeSeries& ts) {
    nlohmann::ordered_json doc;
    for (const auto& [k, v] : metadata(ts)) doc["meta"][k] = v;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : ts.rows) {
        doc["rows"].push_back({{"t", r.t},
                               {"S", r.S},
                               {"W", r.W},
                               {"rho_ee", r.rho_ee},
                               {"rho_gg", r.rho_gg},
                               {"re_rho_eg", r.re_rho_eg},
                               {"im_rho_eg", r.im_rho_eg},
                               {"norm", r.norm},
                               {"trace_deficit", r.trace_deficit}});
    }
    os << doc.dump(1) << '\n';
}

inline std::vector<TimeSeriesRow> parse_csv(std::istream& is) {
    std::vector<TimeSeriesRow> rows;
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kColumns) throw std::runtime_error("unexpected column header: " + line);
            header_seen = true;
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(ss, cell, ',')) {
            try {
                v.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad number '" + cell + "'");
            }
        }
        if (v.size() != 9) throw std::runtime_error("line " + std::to_string(lineno) + ": expected 9 columns");
        rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]});
    }
    if (!header_seen) throw std::runtime_error("no column header found");
    return rows;
}

inline std::vector<TimeSeriesRow> parse_json(std::istream& is) {
    const auto doc = nlohmann::json::parse(is);
    std::vector<TimeSeriesRow> rows;
    for (const auto& r : doc.at("rows")) {
        rows.push_back({r.at("t").get<double>(), r.at("S").get<double>(), r.at("W").get<double>(),
                        r.at("rho_ee").get<double>(), r.at("rho_gg").get<double>(), r.at("re_rho_eg").get<double>(),
                        r.at("im_rho_eg").get<double>(), r.at("norm").get<double>(),
                        r.at("trace_deficit").get<double>()});
    }
    return rows;
}

inline std::vector<TimeSeriesRow> read_time_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    in >> std::ws;
    if (in.peek() == '{') return parse_json(in);
    return parse_csv(in);
}

struct ValidationReport {
    std::size_t rows{0};
    std::vector<std::string> failures;

    bool ok() const { return rows > 0 && failures.empty(); }
};

/// Per-row observable invariants, with slack for 12-digit output rounding.
inline ValidationReport validate_rows(const std::vector<TimeSeriesRow>& rows, double tol = 1e-9) {
    ValidationReport rep;
    rep.rows = rows.size();
    if (rows.empty()) rep.failures.push_back("no data rows");
    const double ln2 = std::numbers::ln2;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto fail = [&](const std::string& what) {
            rep.failures.push_back("row " + std::to_string(i) + " (t=" + format_number(r.t) + "): " + what);
        };
        if (i > 0 && !(r.t > rows[i - 1].t)) fail("time not increasing");
        if (std::abs(r.rho_ee + r.rho_gg - 1.0) > tol) fail("rho_ee + rho_gg != 1");
        if (r.rho_ee < -tol || r.rho_ee > 1.0 + tol || r.rho_gg < -tol || r.rho_gg > 1.0 + tol)
            fail("population outside [0, 1]");
        const double coh2 = r.re_rho_eg * r.re_rho_eg + r.im_rho_eg * r.im_rho_eg;
        if (coh2 > r.rho_ee * r.rho_gg + tol) fail("|rho_eg|^2 > rho_ee rho_gg");
        if (r.S < -tol || r.S > ln2 + tol) fail("entropy outside [0, ln 2]");
        if (std::abs(r.W - (r.rho_ee - r.rho_gg)) > tol) fail("W != rho_ee - rho_gg");
        if (!(r.norm > 0.0) || r.norm > 1.0 + tol) fail("norm outside (0, 1]");
    }
    return rep;
}

}  // namespace dmo::io
