#include "latdet/potentials.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latdet {

namespace {

std::string_view trim(std::string_view s) noexcept {
    const auto ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_real(std::string_view s) noexcept {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

double LinearPotentialParams::strength() const noexcept {
    const double bh = b / static_cast<double>(p + 1);
    return bh * bh * bh;
}

PotentialTable linear_lattice_potential(const LinearPotentialParams& params) {
    if (params.p < 1) throw std::invalid_argument("linear potential needs p >= 1");
    const double strength = params.strength();
    std::vector<double> v(params.p);
    for (std::size_t j = 1; j <= params.p; ++j) v[j - 1] = strength * static_cast<double>(j);
    return PotentialTable(std::move(v));
}

PotentialTable rosen_morse_lattice_potential(const RosenMorseParams& params) {
    if (params.p < 1) throw std::invalid_argument("Rosen-Morse potential needs p >= 1");
    const double h = params.step();
    const double depth = h * h * params.l * (params.l + 1.0);
    std::vector<double> v(params.p);
    for (std::size_t j = 1; j <= params.p; ++j) {
        const double c = std::cosh(h * static_cast<double>(j) - 0.5);
        v[j - 1] = -depth / (c * c);
    }
    return PotentialTable(std::move(v));
}

double discdet_p3_closed_form(const PotentialTable& v) {
    if (v.size() != 3) {
        throw std::invalid_argument("discdet_p3_closed_form needs exactly 3 vertices, got " +
                                    std::to_string(v.size()));
    }
    const double v1 = v.at(1), v2 = v.at(2), v3 = v.at(3);
    const double s1 = v1 + v2 + v3;
    const double s2 = v1 * v2 + v1 * v3 + v2 * v3;
    const double s3 = v1 * v2 * v3;
    return 1.0 + 0.25 * (3.0 * s1 + 2.0 * s2 + s3 + v2);
}

PotentialTable parse_potential_csv(std::istream& in, std::string_view source) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto field = trim(line);
        if (field.empty()) continue;
        const bool first = !seen_content;
        seen_content = true;
        const auto value = parse_real(field);
        if (!value) {
            if (first) continue;  // header
            throw std::runtime_error(std::string(source) + ":" + std::to_string(line_no) +
                                     ": not a number: '" + std::string(field) + "'");
        }
        if (!std::isfinite(*value)) {
            throw std::runtime_error(std::string(source) + ":" + std::to_string(line_no) +
                                     ": value is not finite");
        }
        values.push_back(*value);
    }
    if (values.empty()) {
        throw std::runtime_error(std::string(source) + ": no potential values");
    }
    return PotentialTable(std::move(values));
}

PotentialTable load_potential_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open potential file " + path.string());
    return parse_potential_csv(in, path.string());
}

}  // namespace latdet
