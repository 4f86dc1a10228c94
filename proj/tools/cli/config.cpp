#include "config.hpp"

#include "vlab/errors.hpp"

#include <cmath>
#include <set>

namespace vlab::cli {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& path)
{
    if (!obj.contains(key)) {
        throw ConfigError(path + "." + key, "missing required field");
    }
    return obj.at(key);
}

double number(const json& value, const std::string& path)
{
    if (!value.is_number()) {
        throw ConfigError(path, "expected a number");
    }
    const double x = value.get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError(path, "expected a finite number");
    }
    return x;
}

long long integer(const json& value, const std::string& path)
{
    if (!value.is_number_integer()) {
        throw ConfigError(path, "expected an integer");
    }
    return value.get<long long>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& path)
{
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError(path.empty() ? key : path + "." + key, "unknown field");
        }
    }
}

void expect_object(const json& value, const std::string& path)
{
    if (!value.is_object()) {
        throw ConfigError(path, "expected an object");
    }
}

bool is_power_of_two(long long n)
{
    return n > 0 && (n & (n - 1)) == 0;
}

SpaceSpec parse_space(const json& spec)
{
    expect_object(spec, "space");
    reject_unknown(spec, {"space", "alpha"}, "space");
    const json& name = require(spec, "space", "space");
    if (!name.is_string()) {
        throw ConfigError("space.space", "expected \"hardy\" or \"bergman\"");
    }
    if (name == "hardy") {
        if (spec.contains("alpha")) {
            throw ConfigError("space.alpha", "alpha is only meaningful for bergman");
        }
        return SpaceSpec::hardy();
    }
    if (name == "bergman") {
        const double alpha = spec.contains("alpha") ? number(spec.at("alpha"), "space.alpha") : 0.0;
        if (!(alpha > -1.0)) {
            throw ConfigError("space.alpha", "must be > -1");
        }
        return SpaceSpec::bergman(alpha);
    }
    throw ConfigError("space.space", "expected \"hardy\" or \"bergman\"");
}

MeasureConfig parse_measure(const json& spec)
{
    expect_object(spec, "measure");
    reject_unknown(spec, {"points", "masses"}, "measure");
    const json& pts = require(spec, "points", "measure");
    const json& ms = require(spec, "masses", "measure");
    if (!pts.is_array()) {
        throw ConfigError("measure.points", "expected an array of [re, im] pairs");
    }
    if (!ms.is_array()) {
        throw ConfigError("measure.masses", "expected an array of numbers");
    }
    if (pts.size() != ms.size()) {
        throw ConfigError("measure.masses", "needs exactly one mass per point");
    }
    MeasureConfig out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string path = "measure.points[" + std::to_string(i) + "]";
        if (!pts[i].is_array() || pts[i].size() != 2) {
            throw ConfigError(path, "expected [re, im]");
        }
        const std::complex<double> z{number(pts[i][0], path), number(pts[i][1], path)};
        if (!(std::abs(z) < 1.0)) {
            throw ConfigError(path, "point must lie in the open unit disc");
        }
        out.points.emplace_back(z);
        const std::string mpath = "measure.masses[" + std::to_string(i) + "]";
        const double c = number(ms[i], mpath);
        if (!(c > 0.0)) {
            throw ConfigError(mpath, "masses must be positive");
        }
        out.masses.push_back(c);
    }
    return out;
}

} // namespace

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error("config field '" + field + "': " + message)
    , field_(std::move(field))
{
}

std::string to_string(Command command)
{
    switch (command) {
    case Command::spectrum: return "spectrum";
    case Command::windows: return "windows";
    case Command::verify: return "verify";
    case Command::toeplitz: return "toeplitz";
    case Command::lpcheck: return "lpcheck";
    case Command::selftest: return "selftest";
    }
    return "unknown";
}

std::optional<Command> parse_command(const std::string& name)
{
    for (auto c : {Command::spectrum, Command::windows, Command::verify, Command::toeplitz,
                   Command::lpcheck, Command::selftest}) {
        if (to_string(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

MeasureConfig default_measure()
{
    MeasureConfig m;
    for (int n = 1; n <= 12; ++n) {
        m.points.emplace_back(1.0 - std::ldexp(1.0, -n), 0.0);
        m.masses.push_back(std::pow(16.0, -n));
    }
    return m;
}

AnalyticSymbol parse_symbol(const json& spec, const std::string& path)
{
    expect_object(spec, path);
    const json& kindValue = require(spec, "kind", path);
    if (!kindValue.is_string()) {
        throw ConfigError(path + ".kind", "expected a string");
    }
    const auto kind = kindValue.get<std::string>();
    if (kind == "monomial") {
        reject_unknown(spec, {"kind", "degree", "scale"}, path);
        const long long degree =
            spec.contains("degree") ? integer(spec.at("degree"), path + ".degree") : 1;
        if (degree < 0 || degree > kMaxDimension) {
            throw ConfigError(path + ".degree", "must lie in [0, 4096]");
        }
        const double scale = spec.contains("scale") ? number(spec.at("scale"), path + ".scale") : 1.0;
        return AnalyticSymbol::monomial(static_cast<int>(degree), scale);
    }
    if (kind == "polynomial") {
        reject_unknown(spec, {"kind", "coefficients"}, path);
        const json& c = require(spec, "coefficients", path);
        if (!c.is_array() || c.empty()) {
            throw ConfigError(path + ".coefficients", "expected a non-empty array of numbers");
        }
        std::vector<double> coeffs;
        for (std::size_t i = 0; i < c.size(); ++i) {
            coeffs.push_back(number(c[i], path + ".coefficients[" + std::to_string(i) + "]"));
        }
        return AnalyticSymbol::polynomial(std::move(coeffs));
    }
    if (kind == "power") {
        reject_unknown(spec, {"kind", "beta"}, path);
        const double beta = number(require(spec, "beta", path), path + ".beta");
        if (!(beta > 0.0 && beta < 1.0)) {
            throw ConfigError(path + ".beta", "must lie in (0, 1)");
        }
        return AnalyticSymbol::power(beta);
    }
    if (kind == "log") {
        reject_unknown(spec, {"kind"}, path);
        return AnalyticSymbol::logarithm();
    }
    if (kind == "lacunary") {
        reject_unknown(spec, {"kind", "sigma"}, path);
        const double sigma = number(require(spec, "sigma", path), path + ".sigma");
        if (!(sigma > 0.0)) {
            throw ConfigError(path + ".sigma", "must be positive");
        }
        return AnalyticSymbol::lacunary(sigma);
    }
    throw ConfigError(path + ".kind",
                      "unknown symbol kind '" + kind +
                          "' (expected monomial, polynomial, power, log or lacunary)");
}

AnalyticSymbol RunConfig::symbol() const
{
    return parse_symbol(symbolSpec);
}

RunConfig parse_config(const json& doc, std::optional<Command> commandOverride)
{
    expect_object(doc, "<root>");
    reject_unknown(doc,
                   {"command", "symbol", "space", "N", "G", "strips", "safetyFactor",
                    "ratioBudget", "tolerances", "indexRange", "measure", "lpMaxDegree",
                    "threads", "seed"},
                   "");
    RunConfig cfg;

    if (doc.contains("command")) {
        if (!doc.at("command").is_string()) {
            throw ConfigError("command", "expected a string");
        }
        const auto parsed = parse_command(doc.at("command").get<std::string>());
        if (!parsed) {
            throw ConfigError("command", "unknown command '" + doc.at("command").get<std::string>() +
                                             "'");
        }
        if (commandOverride && *commandOverride != *parsed) {
            throw ConfigError("command", "disagrees with the command given on the command line");
        }
        cfg.command = *parsed;
    } else if (commandOverride) {
        cfg.command = *commandOverride;
    } else {
        throw ConfigError("command", "no command given in the config or on the command line");
    }
    if (commandOverride) {
        cfg.command = *commandOverride;
    }

    if (doc.contains("symbol")) {
        parse_symbol(doc.at("symbol"));  // validate now, keep the spec for echo
        cfg.symbolSpec = doc.at("symbol");
    }
    if (doc.contains("space")) {
        cfg.space = parse_space(doc.at("space"));
    }
    if (doc.contains("N")) {
        const long long n = integer(doc.at("N"), "N");
        if (!is_power_of_two(n) || n < 4 || n > kMaxDimension) {
            throw ConfigError("N", "must be a power of two in [4, 4096]");
        }
        cfg.dimension = static_cast<int>(n);
    }
    if (doc.contains("G")) {
        const long long g = integer(doc.at("G"), "G");
        if (g < 1 || g > kMaxTableGeneration) {
            throw ConfigError("G", "must lie in [1, 16]");
        }
        cfg.generations = static_cast<int>(g);
    }
    if (doc.contains("strips")) {
        const long long j = integer(doc.at("strips"), "strips");
        if (j < 4 || j > 40) {
            throw ConfigError("strips", "must lie in [4, 40]");
        }
        cfg.strips = static_cast<int>(j);
    }
    if (doc.contains("safetyFactor")) {
        cfg.safetyFactor = number(doc.at("safetyFactor"), "safetyFactor");
        if (!(cfg.safetyFactor >= 1.0)) {
            throw ConfigError("safetyFactor", "must be >= 1");
        }
    }
    if (doc.contains("ratioBudget")) {
        cfg.ratioBudget = number(doc.at("ratioBudget"), "ratioBudget");
        if (!(cfg.ratioBudget >= 1.0)) {
            throw ConfigError("ratioBudget", "must be >= 1");
        }
    }
    if (doc.contains("tolerances")) {
        const json& t = doc.at("tolerances");
        expect_object(t, "tolerances");
        reject_unknown(t, {"quadrature", "spectrum", "lpcheck"}, "tolerances");
        auto read = [&](const char* key, double& dst) {
            if (t.contains(key)) {
                dst = number(t.at(key), std::string("tolerances.") + key);
                if (!(dst > 0.0)) {
                    throw ConfigError(std::string("tolerances.") + key, "must be positive");
                }
            }
        };
        read("quadrature", cfg.tolerances.quadrature);
        read("spectrum", cfg.tolerances.spectrum);
        read("lpcheck", cfg.tolerances.lpcheck);
    }
    if (doc.contains("indexRange")) {
        const json& r = doc.at("indexRange");
        if (!r.is_array() || r.size() != 2) {
            throw ConfigError("indexRange", "expected [first, last]");
        }
        const long long a = integer(r[0], "indexRange[0]");
        const long long b = integer(r[1], "indexRange[1]");
        if (a < 1 || b < 2 * a) {
            throw ConfigError("indexRange", "needs 1 <= first and last >= 2 * first");
        }
        cfg.indexRange = IndexRange{static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
    }
    cfg.measure = doc.contains("measure") ? parse_measure(doc.at("measure")) : default_measure();
    if (doc.contains("lpMaxDegree")) {
        const long long d = integer(doc.at("lpMaxDegree"), "lpMaxDegree");
        if (d < 1 || d > 64) {
            throw ConfigError("lpMaxDegree", "must lie in [1, 64]");
        }
        cfg.lpMaxDegree = static_cast<int>(d);
    }
    if (doc.contains("threads")) {
        const long long k = integer(doc.at("threads"), "threads");
        if (k < 1 || k > 256) {
            throw ConfigError("threads", "must lie in [1, 256]");
        }
        cfg.threads = static_cast<unsigned>(k);
    }
    if (doc.contains("seed")) {
        cfg.seed = integer(doc.at("seed"), "seed");
    }
    return cfg;
}

json RunConfig::echo() const
{
    json space_json = {{"space", space.is_hardy() ? "hardy" : "bergman"}};
    if (!space.is_hardy()) {
        space_json["alpha"] = *space.alpha;
    }
    json j = {
        {"command", to_string(command)},
        {"symbol", symbolSpec},
        {"symbolId", symbol().id()},
        {"space", space_json},
        {"N", dimension},
        {"G", generations},
        {"strips", strips},
        {"safetyFactor", safetyFactor},
        {"ratioBudget", ratioBudget},
        {"tolerances",
         {{"quadrature", tolerances.quadrature},
          {"spectrum", tolerances.spectrum},
          {"lpcheck", tolerances.lpcheck}}},
        {"quadratureOrders", {{"initial", 16}, {"max", 512}}},
        {"lpMaxDegree", lpMaxDegree},
    };
    if (indexRange) {
        j["indexRange"] = {indexRange->first, indexRange->last};
    }
    if (command == Command::toeplitz) {
        json pts = json::array();
        for (const auto& p : measure.points) {
            pts.push_back({p.value().real(), p.value().imag()});
        }
        j["measure"] = {{"points", pts}, {"masses", measure.masses}};
    }
    return j;
}

} // namespace vlab::cli
