#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcolab/assembly.hpp"
#include "wcolab/compactness.hpp"
#include "wcolab/dirichlet.hpp"
#include "wcolab/numrange.hpp"
#include "wcolab/scenario.hpp"
#include "wcolab/series.hpp"
#include "wcolab/symbols.hpp"

namespace {

using wcolab::cplx;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for '" + path + "'");
    }
    std::filesystem::rename(tmp, path);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        write_atomic(path, content);
    }
}

std::string boundary_csv(const wcolab::RangeBoundary& boundary) {
    std::string out;
    for (const wcolab::SupportSample& s : boundary.samples) {
        out += fmt(s.theta) + "," + fmt(s.support) + "," + fmt(s.point.real()) +
               "," + fmt(s.point.imag()) + "\n";
    }
    return out;
}

nlohmann::json region_json(const wcolab::RegionSpec& r) {
    using wcolab::RegionKind;
    nlohmann::json j;
    switch (r.kind) {
        case RegionKind::Segment:
            j["kind"] = "segment";
            j["a"] = {r.seg_a.real(), r.seg_a.imag()};
            j["b"] = {r.seg_b.real(), r.seg_b.imag()};
            break;
        case RegionKind::Disk:
            j["kind"] = "disk";
            j["center"] = {r.center.real(), r.center.imag()};
            j["radius"] = r.radius;
            break;
        case RegionKind::Ellipse:
            j["kind"] = "ellipse";
            j["focus1"] = {r.focus1.real(), r.focus1.imag()};
            j["focus2"] = {r.focus2.real(), r.focus2.imag()};
            j["major_axis"] = r.major_axis;
            j["minor_axis"] = r.minor_axis;
            break;
    }
    return j;
}

nlohmann::json status_json(wcolab::CheckStatus s) {
    switch (s) {
        case wcolab::CheckStatus::Pass: return "pass";
        case wcolab::CheckStatus::Fail: return "fail";
        default: return "inconclusive";
    }
}

nlohmann::json hypothesis_json(const wcolab::HypothesisReport& r) {
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["overall"] = status_json(r.overall);
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"status", status_json(c.status)},
                               {"evidence", c.evidence},
                               {"note", c.note}});
    }
    return j;
}

int cmd_matrix(const std::string& psi, const std::string& phi, std::size_t n,
               const std::string& out) {
    const auto ps = wcolab::realize(wcolab::parse_symbol(psi), n).series;
    const auto ph = wcolab::realize(wcolab::parse_symbol(phi), n).series;
    const wcolab::OperatorMatrix op = wcolab::wco_matrix(ps, ph, n);
    std::string csv = "# wco-matrix v1, n=" + std::to_string(n) + "\n";
    for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < op.entries.cols(); ++c) {
            csv += std::to_string(r) + "," + std::to_string(c) + "," +
                   fmt(op.entries(r, c).real()) + "," +
                   fmt(op.entries(r, c).imag()) + "\n";
        }
    }
    emit(out, csv);
    return 0;
}

int cmd_numrange(const std::string& psi, const std::string& phi, std::size_t n,
                 std::size_t angles, const std::string& out) {
    const auto ps = wcolab::realize(wcolab::parse_symbol(psi), n).series;
    const auto ph = wcolab::realize(wcolab::parse_symbol(phi), n).series;
    const wcolab::OperatorMatrix op = wcolab::wco_matrix(ps, ph, n);
    emit(out, boundary_csv(wcolab::numerical_range_boundary(op.entries, angles)));
    return 0;
}

int cmd_kernel(const std::string& w_text, std::size_t n) {
    const cplx w = wcolab::parse_complex_literal(w_text);
    const wcolab::TruncatedSeries kw = wcolab::kernel_series(w, n);
    const double closed = wcolab::kernel_norm_sq(w);
    const double truncated = wcolab::norm_sq(kw, wcolab::SpaceKind::Dirichlet);

    std::vector<cplx> probe(9);
    for (std::size_t k = 0; k < probe.size(); ++k) probe[k] = 1.0 / double(k + 1);
    const wcolab::TruncatedSeries f{std::move(probe)};
    const double residual = std::abs(
        wcolab::inner_product(f, kw, wcolab::SpaceKind::Dirichlet) -
        wcolab::evaluate(f, w));

    std::cout << "closed_form_norm_sq=" << fmt(closed) << "\n"
              << "truncated_norm_sq=" << fmt(truncated) << "\n"
              << "reproducing_residual=" << fmt(residual) << "\n";
    return 0;
}

int cmd_compact_probe(const std::string& psi, const std::string& phi,
                      unsigned rmax_exp, unsigned dirs, const std::string& out) {
    const wcolab::Symbol ps =
        wcolab::realize(wcolab::parse_symbol(psi), wcolab::kDefaultOrder);
    const wcolab::Symbol ph =
        wcolab::realize(wcolab::parse_symbol(phi), wcolab::kDefaultOrder);
    std::vector<double> radii;
    for (unsigned j = 1; j <= rmax_exp; ++j) radii.push_back(1.0 - std::pow(10.0, -double(j)));

    std::string csv;
    for (unsigned d = 0; d < dirs; ++d) {
        const cplx dir = std::polar(1.0, 2.0 * M_PI * double(d) / double(dirs));
        const wcolab::RadialProfile profile =
            wcolab::radial_profile(ps, ph, dir, radii);
        for (std::size_t i = 0; i < profile.radii.size(); ++i) {
            csv += std::to_string(d) + "," + fmt(profile.radii[i]) + "," +
                   (profile.valid[i] ? fmt(profile.values[i]) : std::string{"nan"}) +
                   "\n";
        }
    }
    emit(out, csv);

    nlohmann::json reports = nlohmann::json::array();
    reports.push_back(hypothesis_json(wcolab::check_th1(ps, ph)));
    reports.push_back(hypothesis_json(wcolab::check_th3(ps, ph, radii)));
    std::cout << reports.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& file, const std::string& outdir) {
    const std::vector<wcolab::Scenario> scenarios = wcolab::load_scenarios(file);
    const std::vector<wcolab::ScenarioReport> reports = wcolab::run_batch(scenarios);

    std::filesystem::create_directories(outdir.empty() ? "." : outdir);
    nlohmann::json stream = nlohmann::json::array();
    bool all_pass = true;
    for (const wcolab::ScenarioReport& r : reports) {
        all_pass = all_pass && r.pass;
        std::string csv_path;
        if (!r.boundary.samples.empty()) {
            csv_path = (std::filesystem::path(outdir.empty() ? "." : outdir) /
                        (r.id + "_boundary.csv"))
                           .string();
            write_atomic(csv_path, boundary_csv(r.boundary));
        }
        nlohmann::json j;
        j["id"] = r.id;
        j["pass"] = r.pass;
        if (r.has_predicted) j["predicted"] = region_json(r.predicted);
        j["worst_margin"] = r.worst_margin();
        if (!csv_path.empty()) j["boundary_csv"] = csv_path;
        j["checks"] = nlohmann::json::array();
        for (const wcolab::ScenarioCheck& c : r.checks) {
            j["checks"].push_back({{"name", c.name},
                                   {"pass", c.pass},
                                   {"residual", c.residual},
                                   {"note", c.note}});
        }
        stream.push_back(std::move(j));
    }
    std::cout << stream.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

bool report(const char* name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    return ok;
}

int cmd_selftest() {
    using namespace wcolab;
    bool ok = true;
    std::mt19937 rng(20260826);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const auto rand_series = [&](std::size_t deg) {
        std::vector<cplx> c(deg + 1);
        for (auto& v : c) v = cplx{unit(rng), unit(rng)};
        return TruncatedSeries{std::move(c)};
    };

    {
        bool pass = true;
        for (int t = 0; t < 20; ++t) {
            const auto f = rand_series(8), g = rand_series(8), h = rand_series(8);
            const auto ab = mul(mul(f, g, 24), h, 24);
            const auto ba = mul(f, mul(g, h, 24), 24);
            for (std::size_t k = 0; k <= 24; ++k) {
                pass = pass && std::abs(ab.coeff(k) - ba.coeff(k)) <= 1e-12;
            }
        }
        ok &= report("series_product_associative", pass);
    }
    {
        bool pass = true;
        for (int t = 0; t < 50; ++t) {
            const auto f = rand_series(32);
            const cplx w{0.8 * unit(rng), 0.5 * unit(rng)};
            const auto kw = kernel_series(w, 128);
            pass = pass && std::abs(inner_product(f, kw, SpaceKind::Dirichlet) -
                                    evaluate(f, w)) <= 1e-10;
        }
        ok &= report("kernel_reproducing_property", pass);
    }
    {
        const auto op = wco_matrix(rand_series(6), scale(TruncatedSeries::identity(), cplx{0.5}), 24);
        double upper = 0.0;
        for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
            for (Eigen::Index c = r + 1; c < op.entries.cols(); ++c) {
                if (c > r + 6) upper = std::max(upper, std::abs(op.entries(r, c)));
            }
        }
        ok &= report("matrix_banded_when_phi_fixes_origin", upper <= 1e-14);
    }
    {
        bool pass = true;
        for (int t = 0; t < 50; ++t) {
            Eigen::Matrix2cd a;
            a << cplx{unit(rng), unit(rng)}, cplx{unit(rng), unit(rng)},
                cplx{unit(rng), unit(rng)}, cplx{unit(rng), unit(rng)};
            const RegionSpec e = ellipse_of_2x2(a);
            const auto boundary = numerical_range_boundary(a, 90);
            for (const SupportSample& s : boundary.samples) {
                if (e.kind == RegionKind::Ellipse) {
                    pass = pass && std::abs(std::abs(s.point - e.focus1) +
                                            std::abs(s.point - e.focus2) -
                                            e.major_axis) <= 1e-8;
                }
            }
        }
        ok &= report("elliptical_range_2x2", pass);
    }
    {
        const auto a = parse_symbol("poly: 1 , 0.5 , 0.25");
        const auto b = parse_symbol("poly:1,0.5,0.25");
        const auto fa = realize(a, 8).series, fb = realize(b, 8).series;
        bool pass = fa.coeffs() == fb.coeffs();
        ok &= report("symbol_parse_whitespace_invariant", pass);
    }
    {
        const Symbol one = Symbol::poly(TruncatedSeries::one());
        const Symbol half = realize(parse_symbol("scale:0.5"), 64);
        const double v1 = tilde_f(one, half, cplx{0.9});
        const double v2 = tilde_f(one, half, cplx{0.9});
        ok &= report("tilde_f_deterministic", v1 == v2 && std::isfinite(v1));
    }
    {
        const auto r = run_disk_nilpotent(2, TruncatedSeries::identity(),
                                          cplx{1.0}, 32, 180);
        ok &= report("nilpotent_disk_scenario", r.pass);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted composition operator laboratory"};
    app.require_subcommand(1);

    std::string psi, phi, out, w_text, scen_file, outdir = ".";
    std::size_t n = wcolab::kDefaultOrder, angles = 360;
    unsigned rmax_exp = 8, dirs = 8;

    auto* matrix = app.add_subcommand("matrix", "emit operator matrix CSV");
    matrix->add_option("--psi", psi, "weight symbol")->required();
    matrix->add_option("--phi", phi, "composition symbol")->required();
    matrix->add_option("--n", n, "truncation order")->required();
    matrix->add_option("--out", out, "output path (default stdout)");

    auto* numrange = app.add_subcommand("numrange", "emit numerical range boundary CSV");
    numrange->add_option("--psi", psi)->required();
    numrange->add_option("--phi", phi)->required();
    numrange->add_option("--n", n)->required();
    numrange->add_option("--angles", angles)->required();
    numrange->add_option("--out", out);

    auto* kernel = app.add_subcommand("kernel", "kernel norm and reproducing check");
    kernel->add_option("--w", w_text)->required();
    kernel->add_option("--n", n)->required();

    auto* probe = app.add_subcommand("compact-probe", "radial compactness profile");
    probe->add_option("--psi", psi)->required();
    probe->add_option("--phi", phi)->required();
    probe->add_option("--rmax-exp", rmax_exp, "largest j in r = 1 - 10^-j");
    probe->add_option("--dirs", dirs, "number of directions");
    probe->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "run scenario file");
    verify->add_option("file", scen_file, "scenario JSON file")->required();
    verify->add_option("--outdir", outdir, "directory for boundary CSVs");

    app.add_subcommand("selftest", "run module invariant suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (matrix->parsed()) return cmd_matrix(psi, phi, n, out);
        if (numrange->parsed()) return cmd_numrange(psi, phi, n, angles, out);
        if (kernel->parsed()) return cmd_kernel(w_text, n);
        if (probe->parsed()) return cmd_compact_probe(psi, phi, rmax_exp, dirs, out);
        if (verify->parsed()) return cmd_verify(scen_file, outdir);
        return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
