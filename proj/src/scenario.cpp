#include "wcolab/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "wcolab/symbols.hpp"

namespace wcolab {

namespace {

using json = nlohmann::json;

cplx json_complex(const json& v, const std::string& ctx) {
    if (v.is_number()) return cplx{v.get<double>()};
    if (v.is_string()) return parse_complex_literal(v.get<std::string>());
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return cplx{v[0].get<double>(), v[1].get<double>()};
    }
    throw std::invalid_argument("scenario: bad complex value for '" + ctx + "'");
}

cplx param(const Scenario& sc, const std::string& name) {
    const auto it = sc.parameters.find(name);
    if (it == sc.parameters.end()) {
        throw std::invalid_argument("scenario '" + sc.id +
                                    "': missing parameter '" + name + "'");
    }
    return it->second;
}

double param_real(const Scenario& sc, const std::string& name) {
    const cplx v = param(sc, name);
    if (v.imag() != 0.0) {
        throw std::invalid_argument("scenario '" + sc.id + "': parameter '" +
                                    name + "' must be real");
    }
    return v.real();
}

double param_real_or(const Scenario& sc, const std::string& name, double dflt) {
    return sc.parameters.count(name) ? param_real(sc, name) : dflt;
}

std::size_t param_index(const Scenario& sc, const std::string& name) {
    const double v = param_real(sc, name);
    if (v < 0.0 || v != std::floor(v)) {
        throw std::invalid_argument("scenario '" + sc.id + "': parameter '" +
                                    name + "' must be a non-negative integer");
    }
    return std::size_t(v);
}

TruncatedSeries realize_text(const std::string& text, std::size_t trunc,
                             const std::string& ctx) {
    if (text.empty()) {
        throw std::invalid_argument("scenario: missing symbol '" + ctx + "'");
    }
    return realize(parse_symbol(text), trunc).series;
}

}  // namespace

TheoremKind theorem_from_name(const std::string& name) {
    if (name == "DirectSum") return TheoremKind::DirectSum;
    if (name == "RankOne") return TheoremKind::RankOne;
    if (name == "ZeroInterior") return TheoremKind::ZeroInterior;
    if (name == "ZeroMembership") return TheoremKind::ZeroMembership;
    if (name == "Disk3x3") return TheoremKind::Disk3x3;
    if (name == "DiskOrderR") return TheoremKind::DiskOrderR;
    if (name == "DiskNilpotent") return TheoremKind::DiskNilpotent;
    if (name == "EllipseIrrational") return TheoremKind::EllipseIrrational;
    throw std::invalid_argument("unknown theorem '" + name + "'");
}

std::string theorem_name(TheoremKind kind) {
    switch (kind) {
        case TheoremKind::DirectSum: return "DirectSum";
        case TheoremKind::RankOne: return "RankOne";
        case TheoremKind::ZeroInterior: return "ZeroInterior";
        case TheoremKind::ZeroMembership: return "ZeroMembership";
        case TheoremKind::Disk3x3: return "Disk3x3";
        case TheoremKind::DiskOrderR: return "DiskOrderR";
        case TheoremKind::DiskNilpotent: return "DiskNilpotent";
        case TheoremKind::EllipseIrrational: return "EllipseIrrational";
    }
    throw std::invalid_argument("unknown theorem kind");
}

std::vector<Scenario> parse_scenarios(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string{"scenario file: "} + e.what());
    }
    if (!root.is_array()) {
        throw std::invalid_argument("scenario file: top level must be a list");
    }
    std::vector<Scenario> out;
    for (const json& item : root) {
        if (!item.is_object()) {
            throw std::invalid_argument("scenario file: entries must be objects");
        }
        Scenario sc;
        sc.id = item.at("id").get<std::string>();
        sc.theorem = theorem_from_name(item.at("theorem").get<std::string>());
        if (item.contains("psi_spec")) sc.psi_spec = item["psi_spec"].get<std::string>();
        if (item.contains("phi_spec")) sc.phi_spec = item["phi_spec"].get<std::string>();
        if (item.contains("truncation")) sc.truncation = item["truncation"].get<std::size_t>();
        if (item.contains("angles")) sc.angles = item["angles"].get<std::size_t>();
        for (const char* block : {"parameters", "tolerances"}) {
            if (!item.contains(block)) continue;
            for (const auto& [key, value] : item[block].items()) {
                sc.parameters[key] = json_complex(value, key);
            }
        }
        out.push_back(std::move(sc));
    }
    return out;
}

std::vector<Scenario> load_scenarios(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenarios(buf.str());
}

ScenarioReport run_scenario(const Scenario& sc) {
    ScenarioReport report;
    switch (sc.theorem) {
        case TheoremKind::DirectSum:
            report = run_direct_sum(param_index(sc, "r"),
                                    realize_text(sc.psi_spec, sc.truncation, "g"),
                                    sc.truncation, sc.angles);
            break;
        case TheoremKind::RankOne:
            report = run_rank_one(realize_text(sc.psi_spec, sc.truncation, "psi"),
                                  param(sc, "w"), sc.truncation, sc.angles);
            break;
        case TheoremKind::ZeroInterior:
            report = run_zero_interior(
                realize_text(sc.psi_spec, sc.truncation, "psi"),
                realize_text(sc.phi_spec, sc.truncation, "phi"), sc.truncation,
                param_real_or(sc, "delta", 1e-6), sc.angles);
            break;
        case TheoremKind::ZeroMembership:
            report = run_zero_membership(
                realize_text(sc.psi_spec, sc.truncation, "psi"),
                param_real(sc, "t"), sc.truncation, sc.angles);
            break;
        case TheoremKind::Disk3x3:
            report = run_disk_3x3(param_index(sc, "r"), param_index(sc, "s1"),
                                  param_index(sc, "s2"),
                                  realize_text(sc.psi_spec, sc.truncation, "psi"),
                                  sc.truncation, sc.angles);
            break;
        case TheoremKind::DiskOrderR:
            report = run_disk_order_r(
                param_index(sc, "r"),
                realize_text(sc.psi_spec, sc.truncation, "psi"),
                realize_text(sc.phi_spec, sc.truncation, "phi"),
                sc.parameters.count("mu_grid") ? param_index(sc, "mu_grid") : 16,
                sc.truncation, sc.angles);
            break;
        case TheoremKind::DiskNilpotent:
            report = run_disk_nilpotent(
                param_index(sc, "r"),
                realize_text(sc.psi_spec, sc.truncation, "psi"), param(sc, "mu"),
                sc.truncation, sc.angles);
            break;
        case TheoremKind::EllipseIrrational:
            report = run_ellipse_irrational(
                param_index(sc, "r"), param_index(sc, "s"),
                param_real(sc, "theta"),
                realize_text(sc.psi_spec, sc.truncation, "psi"), sc.truncation,
                sc.angles);
            break;
    }
    report.id = sc.id;
    return report;
}

unsigned runner_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WCOLAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) n = std::min<long>(v, 256);
    }
    return n;
}

std::vector<ScenarioReport> run_batch(const std::vector<Scenario>& scenarios) {
    std::vector<ScenarioReport> reports(scenarios.size());
    const unsigned workers =
        std::min<std::size_t>(runner_threads(), std::max<std::size_t>(scenarios.size(), 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < scenarios.size();
             i = next.fetch_add(1)) {
            try {
                reports[i] = run_scenario(scenarios[i]);
            } catch (const std::exception& e) {
                reports[i].id = scenarios[i].id;
                reports[i].pass = false;
                reports[i].add("exception", false, 0.0, e.what());
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const ScenarioReport& a, const ScenarioReport& b) {
                  return a.id < b.id;
              });
    return reports;
}

}  // namespace wcolab
