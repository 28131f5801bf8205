// io.hpp — CSV / JSON serialization of trajectories, polynomials, coefficients

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinstar/cumulants.hpp"
#include "spinstar/polynomial.hpp"
#include "spinstar/trajectory.hpp"

namespace spinstar::io {

// Shortest decimal that round-trips a double is at most 17 significant digits.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
    os << "t,v1,v2,v3,r,entropy\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        os << format_double(traj.times[i]) << ',' << format_double(traj.v1[i]) << ','
           << format_double(traj.v2[i]) << ',' << format_double(traj.v3[i]) << ','
           << format_double(traj.radius[i]) << ',' << format_double(traj.entropy[i]) << '\n';
    }
}

inline void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    write_trajectory_csv(traj, os);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

inline Trajectory read_trajectory_csv(std::istream& is) {
    Trajectory traj;
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,v1,v2,v3,r,entropy", 0) != 0)
        throw std::runtime_error("trajectory CSV: bad header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        if (row.size() != 6) throw std::runtime_error("trajectory CSV: bad row: " + line);
        traj.times.push_back(row[0]);
        traj.v1.push_back(row[1]);
        traj.v2.push_back(row[2]);
        traj.v3.push_back(row[3]);
        traj.radius.push_back(row[4]);
        traj.entropy.push_back(row[5]);
    }
    return traj;
}

inline nlohmann::json trajectory_json(const Trajectory& traj) {
    nlohmann::json j;
    j["method"] = traj.method;
    j["order"] = traj.order;
    if (traj.convention.empty()) j["convention"] = nullptr;
    else j["convention"] = traj.convention;
    if (traj.params.infinite()) j["N"] = "inf";
    else j["N"] = traj.params.n_bath;
    j["alpha"] = traj.params.alpha;
    j["t"] = traj.times;
    j["v1"] = traj.v1;
    j["v2"] = traj.v2;
    j["v3"] = traj.v3;
    j["r"] = traj.radius;
    j["entropy"] = traj.entropy;
    return j;
}

inline nlohmann::json polynomial_json(int a, int b, const PolynomialInN& poly) {
    nlohmann::json j;
    j["a"] = a;
    j["b"] = b;
    std::vector<std::string> coeffs;
    coeffs.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs()) coeffs.push_back(rational_string(c));
    j["coeffs"] = coeffs;
    return j;
}

inline PolynomialInN polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_rational(s.get<std::string>()));
    return PolynomialInN(std::move(coeffs));
}

inline nlohmann::json coefficient_set_json(const CoefficientSet& set) {
    nlohmann::json j;
    j["method"] = to_string(set.method);
    j["channel"] = to_string(set.channel);
    if (set.convention) j["convention"] = to_string(*set.convention);
    else j["convention"] = nullptr;
    std::vector<int> orders;
    std::vector<std::vector<std::string>> generator, table;
    for (int order = 2; order <= set.max_order(); order += 2) {
        orders.push_back(order);
        std::vector<std::string> g, t;
        for (const auto& c : set.at_order(order).coeffs()) g.push_back(rational_string(c));
        const PolynomialInN table_entry = set.tabulated_entry(order);
        for (const auto& c : table_entry.coeffs()) t.push_back(rational_string(c));
        generator.push_back(std::move(g));
        table.push_back(std::move(t));
    }
    j["orders"] = orders;
    j["generator"] = generator; // channel scalars c_{2n} (ascending powers of N)
    j["table"] = table;         // q_{2n} (v3) or s_{2n} (vpm) as tabulated
    return j;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << text;
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

} // namespace spinstar::io
