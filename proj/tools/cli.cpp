// SPDX-License-Identifier: Apache-2.0
//
// polardeg - operational degrees of polarization for 2D and 3D fields
// Copyright (C) 2026 The polardeg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cli.hpp"

#include "polardeg/ensemble.hpp"
#include "polardeg/errors.hpp"
#include "polardeg/optimizer.hpp"
#include "polardeg/polarization.hpp"
#include "polardeg/region_map.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace polardeg::cli
{

namespace
{

using json = nlohmann::json;

// Failures that map to exit code 2.
struct IoFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Bad flag values; exit code 1.
struct UsageFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string fmt12(double x)
{
    if (x == 0.0)
        x = 0.0; // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Rounded to 12 significant digits so the JSON dump prints at most 12.
double round12(double x)
{
    return std::strtod(fmt12(x).c_str(), nullptr);
}

json num_array(std::span<const double> values)
{
    json a = json::array();
    for (double v : values)
        a.push_back(round12(v));
    return a;
}

struct MatrixDocument
{
    int dim = 0;
    ComplexMatrix matrix{2};
    json echo;
};

MatrixDocument read_matrix(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoFailure("cannot open input file '" + path + "'");

    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (const json::exception &e)
    {
        throw IoFailure("cannot parse '" + path + "': " + e.what());
    }

    try
    {
        MatrixDocument out;
        out.dim = doc.at("dim").get<int>();
        if (out.dim != 2 && out.dim != 3)
            throw Error(ErrorKind::UnsupportedDim, "dim must be 2 or 3, got " + std::to_string(out.dim));

        const json &re = doc.at("re");
        const json im = doc.contains("im") ? doc.at("im") : json();
        auto check_shape = [&](const json &a, const char *name) {
            if (!a.is_array() || a.size() != static_cast<std::size_t>(out.dim))
                throw IoFailure(std::string("'") + name + "' must have " + std::to_string(out.dim) + " rows");
            for (const auto &row : a)
                if (!row.is_array() || row.size() != static_cast<std::size_t>(out.dim))
                    throw IoFailure(std::string("'") + name + "' rows must have " + std::to_string(out.dim) +
                                    " entries");
        };
        check_shape(re, "re");
        if (!im.is_null())
            check_shape(im, "im");

        out.matrix = ComplexMatrix(out.dim);
        for (int i = 0; i < out.dim; ++i)
            for (int j = 0; j < out.dim; ++j)
                out.matrix(i, j) = complex(re[i][j].get<double>(), im.is_null() ? 0.0 : im[i][j].get<double>());
        out.echo = doc;
        return out;
    }
    catch (const json::exception &e)
    {
        throw IoFailure("malformed matrix document '" + path + "': " + e.what());
    }
}

CoherenceMatrix load_state(const std::string &path, std::optional<int> expected_dim)
{
    const MatrixDocument doc = read_matrix(path);
    if (expected_dim && *expected_dim != doc.dim)
        throw Error(ErrorKind::DimMismatch,
                    "--dim " + std::to_string(*expected_dim) + " but document has dim " + std::to_string(doc.dim));
    const double scale = std::max(1.0, doc.matrix.max_abs());
    const double dev = hermitian_deviation(doc.matrix);
    if (dev > tol::herm * scale)
        throw Error(ErrorKind::NotHermitian, "max deviation from Hermiticity is " + fmt12(dev));
    return make_coherence(doc.matrix);
}

json matrix_echo(const CoherenceMatrix &rho)
{
    json re = json::array(), im = json::array();
    for (int i = 0; i < rho.dim(); ++i)
    {
        json rr = json::array(), ir = json::array();
        for (int j = 0; j < rho.dim(); ++j)
        {
            rr.push_back(round12(rho.matrix()(i, j).real()));
            ir.push_back(round12(rho.matrix()(i, j).imag()));
        }
        re.push_back(rr);
        im.push_back(ir);
    }
    return {{"dim", rho.dim()}, {"re", re}, {"im", im}};
}

std::vector<Measure> parse_measures(const std::string &list)
{
    if (list.empty())
        return {kAllMeasures.begin(), kAllMeasures.end()};
    std::vector<Measure> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (item.empty())
            continue;
        const auto m = parse_measure(item);
        if (!m)
            throw UsageFailure("unknown measure '" + item + "'");
        out.push_back(*m);
    }
    if (out.empty())
        throw UsageFailure("empty measure list");
    return out;
}

bool dim3_only(Measure m)
{
    return m == Measure::PPp || m == Measure::PU || m == Measure::PPu;
}

json measures_json(const CoherenceMatrix &rho, const std::vector<Measure> &measures, bool strict)
{
    const DegreeReport r = degree_report(rho);
    json out = json::object();
    for (Measure m : measures)
    {
        if (rho.dim() == 2 && dim3_only(m))
        {
            if (strict)
                throw Error(ErrorKind::DimMismatch, std::string(measure_name(m)) + " is defined for 3x3 states only");
            continue;
        }
        double v = 0.0;
        switch (m)
        {
        case Measure::MinOverlap:
            v = degree_hs_analytic(rho).min_overlap;
            break;
        case Measure::PHs:
            v = r.p_hs;
            break;
        case Measure::PPp:
            v = *r.p_pp;
            break;
        case Measure::PU:
            v = *r.p_u;
            break;
        case Measure::PPu:
            v = *r.p_pu;
            break;
        case Measure::PLength:
            v = r.p_length;
            break;
        case Measure::PPurity:
            v = r.p_purity;
            break;
        }
        out[std::string(measure_name(m))] = round12(v);
    }
    return out;
}

json state_header(const std::string &command, const CoherenceMatrix &rho)
{
    json j;
    j["command"] = command;
    j["input"] = matrix_echo(rho);
    j["dim"] = rho.dim();
    return j;
}

json stokes_json(const CoherenceMatrix &rho)
{
    const StokesVector n = to_stokes(rho);
    return num_array(n.components());
}

// Options shared by the subcommands; CLI11 binds into these.
struct Options
{
    std::string input;
    std::string output;
    std::string measures;
    std::optional<int> dim;
    long long resolution = 200;
    long long samples = 100000;
    long long seed = 7;
    long long sweeps = 50;
    long long shots = 100000;
};

json cmd_degree(const Options &o)
{
    const CoherenceMatrix rho = load_state(o.input, o.dim);
    const auto measures = parse_measures(o.measures);
    json j = state_header("degree", rho);
    j["method"] = to_string(Method::Analytic);
    j["eigenvalues"] = num_array(rho.eigenvalues());
    j["stokes"] = stokes_json(rho);
    j["stokes_norm"] = round12(to_stokes(rho).norm());
    j["measures"] = measures_json(rho, measures, !o.measures.empty());
    return j;
}

json cmd_stokes(const Options &o)
{
    const CoherenceMatrix rho = load_state(o.input, o.dim);
    json j = state_header("stokes", rho);
    j["stokes"] = stokes_json(rho);
    j["norm"] = round12(to_stokes(rho).norm());
    return j;
}

json cmd_oracle(const Options &o)
{
    if (o.samples < 1)
        throw UsageFailure("--samples must be at least 1");
    if (o.sweeps < 0)
        throw UsageFailure("--sweeps must be non-negative");
    if (o.seed < 0)
        throw UsageFailure("--seed must be non-negative");
    const CoherenceMatrix rho = load_state(o.input, o.dim);

    const MinimizationResult analytic = degree_hs_analytic(rho);
    OracleOptions opt;
    opt.samples = static_cast<std::size_t>(o.samples);
    opt.seed = static_cast<std::uint64_t>(o.seed);
    opt.sweeps = static_cast<int>(o.sweeps);
    const MinimizationResult oracle = degree_hs_oracle(rho, opt);

    json j = state_header("oracle", rho);
    j["eigenvalues"] = num_array(rho.eigenvalues());
    j["analytic"] = {{"method", to_string(analytic.method)},
                     {"min_overlap", round12(analytic.min_overlap)},
                     {"degree", round12(analytic.degree)},
                     {"trace_distance_degree", round12(degree_trace_distance(rho))}};
    j["oracle"] = {{"method", to_string(oracle.method)},
                   {"samples", o.samples},
                   {"seed", o.seed},
                   {"sweeps", o.sweeps},
                   {"refinement_steps", oracle.refinement_steps},
                   {"min_overlap", round12(oracle.min_overlap)},
                   {"degree", round12(oracle.degree)},
                   {"gap_to_analytic", round12(oracle.min_overlap - analytic.min_overlap)}};
    return j;
}

json cmd_simulate(const Options &o)
{
    if (o.seed < 0)
        throw UsageFailure("--seed must be non-negative");
    const CoherenceMatrix rho = load_state(o.input, o.dim);
    if (o.shots < rho.dim())
        throw UsageFailure("--shots must be at least the field dimension (" + std::to_string(rho.dim()) + ")");

    const FieldEnsemble e = sample_ensemble(rho, static_cast<std::size_t>(o.shots), static_cast<std::uint64_t>(o.seed));
    const CoherenceMatrix est = estimate_coherence(e);
    const auto measures = parse_measures(o.measures);

    json j = state_header("simulate", rho);
    j["shots"] = o.shots;
    j["seed"] = o.seed;
    j["prescribed"] = {{"eigenvalues", num_array(rho.eigenvalues())},
                       {"measures", measures_json(rho, measures, !o.measures.empty())}};
    j["estimated"] = {{"matrix", matrix_echo(est)},
                      {"eigenvalues", num_array(est.eigenvalues())},
                      {"measures", measures_json(est, measures, !o.measures.empty())}};
    return j;
}

void write_scan_csv(const TriangleGrid &grid, const std::string &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoFailure("cannot open output file '" + path + "'");

    out << "n3,n8,inside";
    for (Measure m : kAllMeasures)
        out << ',' << measure_name(m);
    out << '\n';
    for (const auto &cell : grid.cells)
    {
        out << fmt12(cell.n3) << ',' << fmt12(cell.n8) << ',' << (cell.inside ? 1 : 0);
        for (Measure m : kAllMeasures)
        {
            out << ',';
            if (const auto v = cell.value(m))
                out << fmt12(*v);
        }
        out << '\n';
    }
    out.flush();
    if (!out)
        throw IoFailure("failed writing '" + path + "'");
}

json cmd_scan(const Options &o)
{
    if (o.output.empty())
        throw UsageFailure("--output is required");
    if (o.resolution > 5000)
        throw UsageFailure("--resolution is limited to 5000");
    if (o.dim && *o.dim != 3)
        throw Error(ErrorKind::DimMismatch, "the triangle scan is defined for 3x3 states only");
    const auto measures = parse_measures(o.measures);
    const TriangleGrid grid = evaluate_grid(build_grid(static_cast<int>(o.resolution)), measures);
    write_scan_csv(grid, o.output);

    std::size_t inside = 0;
    for (const auto &c : grid.cells)
        inside += c.inside ? 1 : 0;
    json j;
    j["command"] = "scan";
    j["output"] = o.output;
    j["resolution"] = o.resolution;
    j["rows"] = grid.cells.size();
    j["inside"] = inside;
    return j;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Operational degrees of polarization for 2D and 3D coherence matrices", "polardeg"};
    app.require_subcommand(1);

    auto add_input = [&](CLI::App *sub) {
        sub->add_option("--input", o.input, "JSON matrix document {\"dim\":3,\"re\":[[...]],\"im\":[[...]]}")
            ->required();
        sub->add_option("--dim", o.dim, "expected dimension of the input (2 or 3)");
    };

    CLI::App *degree = app.add_subcommand("degree", "all closed-form degrees of polarization");
    add_input(degree);
    degree->add_option("--measure", o.measures, "comma-separated subset, e.g. p_hs,p_pp");

    CLI::App *stokes = app.add_subcommand("stokes", "Stokes components and their length");
    add_input(stokes);

    CLI::App *oracle = app.add_subcommand("oracle", "analytic vs brute-force minimal overlap");
    add_input(oracle);
    oracle->add_option("--samples", o.samples, "random group elements")->capture_default_str();
    oracle->add_option("--seed", o.seed, "sampler seed")->capture_default_str();
    oracle->add_option("--sweeps", o.sweeps, "coordinate-descent sweeps")->capture_default_str();

    CLI::App *simulate = app.add_subcommand("simulate", "estimate degrees from simulated field realizations");
    add_input(simulate);
    simulate->add_option("--shots", o.shots, "number of realizations")->capture_default_str();
    simulate->add_option("--seed", o.seed, "sampler seed")->capture_default_str();
    simulate->add_option("--measure", o.measures, "comma-separated subset");

    CLI::App *scan = app.add_subcommand("scan", "rasterize the (n3, n8) positivity triangle to CSV");
    scan->add_option("--resolution", o.resolution, "grid points per axis")->capture_default_str();
    scan->add_option("--output", o.output, "CSV path")->required();
    scan->add_option("--measure", o.measures, "comma-separated subset; other columns left empty");
    scan->add_option("--dim", o.dim, "must be 3 if given");

    std::vector<const char *> argv{"polardeg"};
    for (const auto &a : args)
        argv.push_back(a.c_str());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kDomainError;
    }

    try
    {
        json report;
        if (*degree)
            report = cmd_degree(o);
        else if (*stokes)
            report = cmd_stokes(o);
        else if (*oracle)
            report = cmd_oracle(o);
        else if (*simulate)
            report = cmd_simulate(o);
        else
            report = cmd_scan(o);
        out << report.dump(2) << '\n';
        return kOk;
    }
    catch (const IoFailure &e)
    {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
    catch (const UsageFailure &e)
    {
        err << "usage error: " << e.what() << '\n';
        return kDomainError;
    }
    catch (const Error &e)
    {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    catch (const std::exception &e)
    {
        err << "internal error: " << e.what() << '\n';
        return kDomainError;
    }
}

} // namespace polardeg::cli
