#pragma once

#include <map>
#include <string>
#include <vector>

#include "wcolab/theorems.hpp"

namespace wcolab {

enum class TheoremKind {
    DirectSum,
    RankOne,
    ZeroInterior,
    ZeroMembership,
    Disk3x3,
    DiskOrderR,
    DiskNilpotent,
    EllipseIrrational,
};

TheoremKind theorem_from_name(const std::string& name);
std::string theorem_name(TheoremKind kind);

struct Scenario {
    std::string id;
    TheoremKind theorem = TheoremKind::RankOne;
    std::string psi_spec;  // symbol text; for DirectSum this is the outer g
    std::string phi_spec;  // empty when the theorem prescribes phi
    std::map<std::string, cplx> parameters;
    std::size_t truncation = 64;
    std::size_t angles = 720;
};

// Top-level JSON list, one object per scenario.  Field names match the
// Scenario members; parameter values may be numbers, "a+bi" strings, or
// [re, im] pairs.
std::vector<Scenario> parse_scenarios(const std::string& json_text);
std::vector<Scenario> load_scenarios(const std::string& path);

ScenarioReport run_scenario(const Scenario& sc);

// Concurrency cap: WCOLAB_THREADS when set, hardware concurrency otherwise.
unsigned runner_threads();

// Runs scenarios concurrently; reports returned ordered by scenario id.
std::vector<ScenarioReport> run_batch(const std::vector<Scenario>& scenarios);

}  // namespace wcolab
