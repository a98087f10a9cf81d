#include "fyamlab/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fyamlab/errors.hpp"

namespace fyam {

namespace {

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Fritsch-Carlson slopes: harmonic-mean weighting in monotone stretches,
// zero at local extrema, clamped three-point formula at the ends.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t m = x.size();
    std::vector<double> d(m - 1), s(m);
    for (std::size_t i = 0; i + 1 < m; ++i)
        d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    if (m == 2) {
        s[0] = s[1] = d[0];
        return s;
    }
    for (std::size_t i = 1; i + 1 < m; ++i) {
        if (d[i - 1] == 0.0 || d[i] == 0.0 || sgn(d[i - 1]) != sgn(d[i])) {
            s[i] = 0.0;
        } else {
            double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
            double w1 = 2.0 * h1 + h0, w2 = h1 + 2.0 * h0;
            s[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double t = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (sgn(t) != sgn(d0)) return 0.0;
        if (sgn(d0) != sgn(d1) && std::abs(t) > 3.0 * std::abs(d0)) return 3.0 * d0;
        return t;
    };
    s[0] = end_slope(x[1] - x[0], x[2] - x[1], d[0], d[1]);
    s[m - 1] = end_slope(x[m - 1] - x[m - 2], x[m - 2] - x[m - 3], d[m - 2], d[m - 3]);
    return s;
}

} // namespace

TabulatedPotential::TabulatedPotential(std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2) throw domain_error("tabulated potential needs at least 2 knots");
    r_.reserve(knots.size());
    h_.reserve(knots.size());
    for (const auto& [r, h] : knots) {
        if (!r_.empty() && !(r > r_.back()))
            throw domain_error("tabulated potential knots must be strictly increasing in r");
        r_.push_back(r);
        h_.push_back(h);
    }
    slope_ = pchip_slopes(r_, h_);
}

double TabulatedPotential::eval(double r) const {
    if (r < r_.front() || r > r_.back())
        throw domain_error(r, "tabulated potential queried outside knot range [" +
                                  std::to_string(r_.front()) + ", " + std::to_string(r_.back()) + "]");
    auto it = std::upper_bound(r_.begin(), r_.end(), r);
    std::size_t i = (it == r_.begin()) ? 0 : static_cast<std::size_t>(it - r_.begin()) - 1;
    if (i + 1 >= r_.size()) i = r_.size() - 2;
    double w = r_[i + 1] - r_[i];
    double t = (r - r_[i]) / w;
    double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * h_[i] + (t3 - 2 * t2 + t) * w * slope_[i] +
           (-2 * t3 + 3 * t2) * h_[i + 1] + (t3 - t2) * w * slope_[i + 1];
}

double eval_h(const PotentialSpec& h, double r) {
    return std::visit(
        [r](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ZeroPotential>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, ConstantPotential>) {
                return v.c;
            } else if constexpr (std::is_same_v<T, PowerLawPotential>) {
                if (v.p < 0.0 && r <= 0.0)
                    throw domain_error(r, "power-law potential with negative exponent needs r > 0");
                return v.c * std::pow(r, v.p);
            } else if constexpr (std::is_same_v<T, LinearExactPotential>) {
                return -(v.alpha * r / 2.0) * ((v.n - 2) * v.alpha * r * r + v.n + 2);
            } else if constexpr (std::is_same_v<T, BoundedBelowSamplePotential>) {
                return -(v.n - 1) / (1.0 + r);
            } else {
                return v.eval(r);
            }
        },
        h);
}

double h_at_zero(const PotentialSpec& h, double r0) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PowerLawPotential>) {
                if (v.p < 0.0) throw domain_error("h(0) undefined: power law with negative exponent");
                return v.p == 0.0 ? v.c : 0.0;
            } else if constexpr (std::is_same_v<T, TabulatedPotential>) {
                if (v.front_r() > r0)
                    throw domain_error("tabulated potential must include a knot at or below r0");
                return v.eval(v.front_r());
            } else {
                return eval_h(h, 0.0);
            }
        },
        h);
}

std::string potential_label(const PotentialSpec& h) {
    char buf[96];
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ZeroPotential>) {
                return "zero";
            } else if constexpr (std::is_same_v<T, ConstantPotential>) {
                std::snprintf(buf, sizeof buf, "const(c=%g)", v.c);
                return buf;
            } else if constexpr (std::is_same_v<T, PowerLawPotential>) {
                std::snprintf(buf, sizeof buf, "pow(c=%g,p=%g)", v.c, v.p);
                return buf;
            } else if constexpr (std::is_same_v<T, LinearExactPotential>) {
                std::snprintf(buf, sizeof buf, "linexact(alpha=%g,n=%d)", v.alpha, v.n);
                return buf;
            } else if constexpr (std::is_same_v<T, BoundedBelowSamplePotential>) {
                std::snprintf(buf, sizeof buf, "bounded(n=%d)", v.n);
                return buf;
            } else {
                std::snprintf(buf, sizeof buf, "table(%zu knots on [%g,%g])", v.radii().size(),
                              v.front_r(), v.back_r());
                return buf;
            }
        },
        h);
}

nlohmann::json potential_to_json(const PotentialSpec& h) {
    nlohmann::json j;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ZeroPotential>) {
                j["kind"] = "zero";
            } else if constexpr (std::is_same_v<T, ConstantPotential>) {
                j["kind"] = "const";
                j["c"] = v.c;
            } else if constexpr (std::is_same_v<T, PowerLawPotential>) {
                j["kind"] = "pow";
                j["c"] = v.c;
                j["p"] = v.p;
            } else if constexpr (std::is_same_v<T, LinearExactPotential>) {
                j["kind"] = "linexact";
                j["alpha"] = v.alpha;
                j["n"] = v.n;
            } else if constexpr (std::is_same_v<T, BoundedBelowSamplePotential>) {
                j["kind"] = "bounded";
                j["n"] = v.n;
            } else {
                j["kind"] = "table";
                nlohmann::json knots = nlohmann::json::array();
                for (std::size_t i = 0; i < v.radii().size(); ++i)
                    knots.push_back({v.radii()[i], v.values()[i]});
                j["knots"] = std::move(knots);
            }
        },
        h);
    return j;
}

PotentialSpec potential_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return ZeroPotential{};
    if (kind == "const") return ConstantPotential{j.at("c").get<double>()};
    if (kind == "pow") return PowerLawPotential{j.at("c").get<double>(), j.at("p").get<double>()};
    if (kind == "linexact")
        return LinearExactPotential{j.at("alpha").get<double>(), j.at("n").get<int>()};
    if (kind == "bounded") return BoundedBelowSamplePotential{j.at("n").get<int>()};
    if (kind == "table") {
        std::vector<std::pair<double, double>> knots;
        for (const auto& k : j.at("knots"))
            knots.emplace_back(k.at(0).get<double>(), k.at(1).get<double>());
        return TabulatedPotential{std::move(knots)};
    }
    throw domain_error("unknown potential kind '" + kind + "'");
}

PotentialSpec parse_potential(const std::string& text, double alpha, int n) {
    if (text == "zero") return ZeroPotential{};
    if (text == "linexact") return LinearExactPotential{alpha, n};
    if (text == "bounded") return BoundedBelowSamplePotential{n};
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw domain_error("cannot parse potential '" + text + "'");
    const std::string head = text.substr(0, colon), rest = text.substr(colon + 1);
    if (head == "const") return ConstantPotential{std::stod(rest)};
    if (head == "pow") {
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw domain_error("pow potential needs 'pow:<c>,<p>'");
        return PowerLawPotential{std::stod(rest.substr(0, comma)), std::stod(rest.substr(comma + 1))};
    }
    if (head == "table") {
        std::ifstream in(rest);
        if (!in) throw domain_error("cannot open potential table '" + rest + "'");
        std::vector<std::pair<double, double>> knots;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream row(line);
            double r, h;
            if (row >> r >> h) knots.emplace_back(r, h);
        }
        return TabulatedPotential{std::move(knots)};
    }
    throw domain_error("cannot parse potential '" + text + "'");
}

} // namespace fyam
