#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Property harness certifying the risk axioms (R1 translation equivariance,
// R2 monotonicity, R3 positive homogeneity / CVX convexity, R4 superadditivity
// in the risk order) and the region axioms (D1 translation, D2 scaling,
// D3 nesting, D4 closedness/connectedness, D5 cone monotonicity, D6 Minkowski
// subadditivity) on seeded random portfolio clouds.
//
// Some measures are supposed to break an axiom: value-at-risk must produce an
// R4 violation, the entropic measure an R3 violation, and the halfspace family
// a D6 violation.  Those checks PASS only when a violation is exhibited within
// the trial budget.  Every recorded violation replays from its trial seed.

namespace riskgeom::axioms {

struct Violation {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;   // per-trial seed; replays the exact inputs
    std::string digest;       // FNV-1a of the trial inputs
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
};

struct AxiomCheck {
    std::string axiom;
    std::uint64_t trials = 0;
    double tolerance = 0.0;
    bool expect_violation = false;
    bool structural = false;  // D4: satisfied by the representation, no trials
    std::vector<Violation> violations;

    bool passed() const {
        if (structural) return true;
        return expect_violation ? !violations.empty() : violations.empty();
    }
};

struct AxiomReport {
    std::string suite;  // "risk" | "region"
    std::string id;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<AxiomCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
};

// Single-trial evaluation, fully determined by the trial seed; the harness
// loops over these and tests replay them.
struct AxiomEval {
    double lhs = 0.0;   // worst sub-comparison, <= rhs + tolerance when satisfied
    double rhs = 0.0;
    double gap = 0.0;
    bool violated = false;
    std::string digest;
};

AxiomEval eval_risk_axiom(const std::string& id, const std::string& axiom,
                          std::uint64_t trial_seed);
AxiomEval eval_region_axiom(const std::string& id, const std::string& axiom,
                            std::uint64_t trial_seed);

std::vector<std::string> risk_ids();
std::vector<std::string> region_ids();

AxiomReport check_risk_axioms(const std::string& id, std::uint64_t seed, std::uint64_t trials);
AxiomReport check_region_axioms(const std::string& id, std::uint64_t seed, std::uint64_t trials);

// Deterministic per-trial seed derivation.
std::uint64_t trial_seed(std::uint64_t suite_seed, std::uint64_t trial);

}  // namespace riskgeom::axioms
