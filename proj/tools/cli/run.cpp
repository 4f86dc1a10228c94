#include "run.hpp"

#include "vlab/asymptotics.hpp"
#include "vlab/box_measures.hpp"
#include "vlab/csv_export.hpp"
#include "vlab/errors.hpp"
#include "vlab/operator_matrices.hpp"
#include "vlab/spectra.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace vlab::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    body(os);
    os.flush();
    if (!os) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

void write_json(const fs::path& path, const json& doc)
{
    write_file(path, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
}

json space_json(const SpaceSpec& space)
{
    json j = {{"space", space.is_hardy() ? "hardy" : "bergman"}};
    if (!space.is_hardy()) {
        j["alpha"] = *space.alpha;
    }
    return j;
}

TableOptions table_options(const RunConfig& cfg)
{
    return TableOptions{cfg.tolerances.quadrature, cfg.strips, cfg.threads};
}

json spectrum_summary(const SingularSpectrum& s)
{
    json j = {{"truncationDimension", s.truncationDimension},
              {"convergedPrefixLength", s.convergedPrefixLength},
              {"reportingWindow", s.reporting_window()},
              {"relTolerance", s.relTolerance}};
    j["warning"] = s.warning ? json(*s.warning) : json(nullptr);
    return j;
}

json table_summary(const BoxMeasureTable& table, const RearrangedSequence& seq)
{
    return {{"boxes", table.entries.size()},
            {"sigma", table.sigma()},
            {"certifiedPrefixLength", seq.certifiedPrefixLength},
            {"safetyFactor", seq.safetyFactor},
            {"deepestGenerationSup", seq.deepestGenerationSup},
            {"generationSups", compactness_diagnostic(table)}};
}

int cmd_spectrum(const RunConfig& cfg)
{
    const auto spectrum = converged_spectrum(cfg.symbol(), cfg.space, cfg.dimension,
                                             cfg.tolerances.spectrum);
    write_file(cfg.outputDir / "spectrum.csv",
               [&](std::ostream& os) { write_spectrum_csv(os, spectrum); });
    write_json(cfg.outputDir / "run.json",
               {{"config", cfg.echo()}, {"spectrum", spectrum_summary(spectrum)}});
    return kExitOk;
}

int cmd_windows(const RunConfig& cfg)
{
    const auto table = build_table(cfg.symbol(), cfg.space, cfg.generations, table_options(cfg));
    const auto seq = rearrange(table, cfg.safetyFactor);
    write_file(cfg.outputDir / "table.csv", [&](std::ostream& os) { write_table_csv(os, table); });
    write_file(cfg.outputDir / "rearranged.csv",
               [&](std::ostream& os) { write_rearranged_csv(os, seq); });
    write_json(cfg.outputDir / "run.json",
               {{"config", cfg.echo()}, {"table", table_summary(table, seq)}});
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const auto symbol = cfg.symbol();
    const auto spectrum = converged_spectrum(symbol, cfg.space, cfg.dimension,
                                             cfg.tolerances.spectrum);
    const auto table = build_table(symbol, cfg.space, cfg.generations, table_options(cfg));
    const auto seq = rearrange(table, cfg.safetyFactor);

    write_file(cfg.outputDir / "spectrum.csv",
               [&](std::ostream& os) { write_spectrum_csv(os, spectrum); });
    write_file(cfg.outputDir / "table.csv", [&](std::ostream& os) { write_table_csv(os, table); });
    write_file(cfg.outputDir / "rearranged.csv",
               [&](std::ostream& os) { write_rearranged_csv(os, seq); });

    IndexRange range;
    if (cfg.indexRange) {
        range = *cfg.indexRange;
    } else {
        const std::size_t usable = std::min(spectrum.convergedPrefixLength, seq.certifiedPrefixLength);
        if (usable < 4) {
            throw NumericalFailure("verify: usable prefix has length " + std::to_string(usable) +
                                   " (converged " + std::to_string(spectrum.convergedPrefixLength) +
                                   ", certified " + std::to_string(seq.certifiedPrefixLength) +
                                   "); no index range to compare");
        }
        range = IndexRange{std::max<std::size_t>(1, usable / 8), usable / 2};
    }
    const auto report = two_sided_report(spectrum, seq, range, symbol.id(), cfg.space);

    json r = {{"symbolId", report.symbolId},
              {"space", space_json(report.space)},
              {"indexRange", {report.indexRange.first, report.indexRange.last}},
              {"ratioMin", report.ratioMin},
              {"ratioMax", report.ratioMax},
              {"ratioSpread", report.ratio_spread()},
              {"withinRatioBudget", report.ratio_spread() <= cfg.ratioBudget},
              {"fittedExponentSpectrum", report.fittedExponentSpectrum},
              {"fittedExponentSequence", report.fittedExponentSequence},
              {"minimalTraceConstant", report.minimalTraceConstant},
              {"certifiedUpTo", report.certifiedUpTo},
              {"convergedPrefixLength", report.convergedPrefixLength},
              {"certifiedPrefixLength", report.certifiedPrefixLength}};
    write_json(cfg.outputDir / "report.json",
               {{"config", cfg.echo()},
                {"report", r},
                {"spectrum", spectrum_summary(spectrum)},
                {"table", table_summary(table, seq)}});

    out << "verify " << report.symbolId << " on " << cfg.space.id() << ": range ["
        << range.first << ", " << range.last << "] ratio spread "
        << format_double(report.ratio_spread()) << '\n';
    return kExitOk;
}

int cmd_toeplitz(const RunConfig& cfg)
{
    const DiscreteMeasure measure(cfg.measure.points, cfg.measure.masses);
    const auto gram = toeplitz_gram(measure, cfg.space);
    const auto toeplitz = toeplitz_singular_values(gram);
    const auto embedding = embedding_singular_values(gram);

    // Diagonal Gram entries c_n w_n^2 K(z_n, z_n) are the one-point predictions.
    std::vector<double> predicted;
    for (Eigen::Index i = 0; i < gram.entries.rows(); ++i) {
        predicted.push_back(gram.entries(i, i).real());
    }
    std::sort(predicted.begin(), predicted.end(), std::greater<>());

    write_file(cfg.outputDir / "toeplitz_spectrum.csv", [&](std::ostream& os) {
        os << "index,toeplitz,embedding\n";
        for (std::size_t i = 0; i < toeplitz.size(); ++i) {
            os << i + 1 << ',' << format_double(toeplitz[i]) << ','
               << format_double(embedding[i]) << '\n';
        }
    });
    write_file(cfg.outputDir / "toeplitz_comparison.csv", [&](std::ostream& os) {
        os << "index,predicted,computed,ratio\n";
        for (std::size_t i = 0; i < predicted.size(); ++i) {
            os << i + 1 << ',' << format_double(predicted[i]) << ','
               << format_double(toeplitz[i]) << ',' << format_double(toeplitz[i] / predicted[i])
               << '\n';
        }
    });
    write_json(cfg.outputDir / "run.json",
               {{"config", cfg.echo()}, {"toeplitz", {{"points", measure.size()}}}});
    return kExitOk;
}

int cmd_lpcheck(const RunConfig& cfg, std::ostream& out)
{
    json rows = json::array();
    bool ok = true;
    for (int k = 1; k <= cfg.lpMaxDegree; ++k) {
        std::vector<std::complex<double>> f(static_cast<std::size_t>(k) + 1);
        f[static_cast<std::size_t>(k)] = 1.0;
        const auto lp = lp_check(f, cfg.tolerances.quadrature);
        const bool pass = std::abs(lp.lhs - lp.rhs) <= cfg.tolerances.lpcheck;
        ok = ok && pass;
        out << "k=" << k << " lhs=" << format_double(lp.lhs) << " rhs=" << format_double(lp.rhs)
            << (pass ? " PASS" : " FAIL") << '\n';
        rows.push_back({{"k", k}, {"lhs", lp.lhs}, {"rhs", lp.rhs}, {"pass", pass}});
    }
    write_json(cfg.outputDir / "run.json", {{"config", cfg.echo()}, {"lpcheck", rows}});
    return ok ? kExitOk : kExitNumerical;
}

int dispatch(const RunConfig& cfg, std::ostream& out)
{
    switch (cfg.command) {
    case Command::spectrum: return cmd_spectrum(cfg);
    case Command::windows: return cmd_windows(cfg);
    case Command::verify: return cmd_verify(cfg, out);
    case Command::toeplitz: return cmd_toeplitz(cfg);
    case Command::lpcheck: return cmd_lpcheck(cfg, out);
    case Command::selftest: return run_selftest(out, cfg.threads) == 0 ? kExitOk : kExitNumerical;
    }
    return kExitValidation;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        if (cfg.command != Command::selftest) {
            std::error_code ec;
            fs::create_directories(cfg.outputDir, ec);
            if (ec || !fs::is_directory(cfg.outputDir)) {
                err << "error: output directory '" << cfg.outputDir.string()
                    << "' is not usable\n";
                return kExitValidation;
            }
        }
        return dispatch(cfg, out);
    } catch (const QuadratureFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Singular values of integration operators and dyadic box measures",
                 "volterra_lab"};
    std::string commandName;
    std::string configPath;
    std::string outDir;
    unsigned threads = 0;
    long long seed = 0;
    app.add_option("command", commandName,
                   "spectrum | windows | verify | toeplitz | lpcheck | selftest");
    app.add_option("--config", configPath, "JSON configuration file");
    app.add_option("--out", outDir, "output directory (default: current directory)");
    app.add_option("--threads", threads, "worker threads for box quadrature")
        ->check(CLI::Range(1u, 256u));
    auto* seedOpt = app.add_option("--seed", seed, "reserved; no computation is randomized");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitValidation;
    }

    std::optional<Command> command;
    if (!commandName.empty()) {
        command = parse_command(commandName);
        if (!command) {
            err << "error: unknown command '" << commandName << "'\n" << app.help();
            return kExitValidation;
        }
    }

    json doc = json::object();
    if (!configPath.empty()) {
        std::ifstream is(configPath);
        if (!is) {
            err << "error: cannot read config '" << configPath << "'\n";
            return kExitValidation;
        }
        try {
            doc = json::parse(is);
        } catch (const json::parse_error& e) {
            err << "error: config '" << configPath << "' is not valid JSON: " << e.what() << '\n';
            return kExitValidation;
        }
    }

    RunConfig cfg;
    try {
        cfg = parse_config(doc, command);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        if (e.field() == "command") {
            err << app.help();
        }
        return kExitValidation;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    if (!outDir.empty()) {
        cfg.outputDir = outDir;
    }
    if (threads > 0) {
        cfg.threads = threads;
    }
    if (seedOpt->count() > 0) {
        cfg.seed = seed;
    }
    return run(cfg, out, err);
}

} // namespace vlab::cli
