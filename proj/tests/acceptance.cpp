// Acceptance gate: every release-blocking guarantee of the library, checked
// end to end with one printed verdict line each.  Exits nonzero when any
// guarantee fails, so the test suite blocks on regressions here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "riskgeom/axioms.hpp"
#include "riskgeom/cli.hpp"
#include "riskgeom/depth.hpp"
#include "riskgeom/json_io.hpp"
#include "riskgeom/risk.hpp"
#include "riskgeom/rng.hpp"
#include "riskgeom/univariate.hpp"

using namespace riskgeom;

namespace {

int failures = 0;

void verdict(int idx, bool ok, const std::string& label, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("[%s] %d. %s — %s\n", ok ? "PASS" : "FAIL", idx, label.c_str(), detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

EmpiricalDist random_dist(Rng& rng, std::size_t d, std::size_t max_m, bool random_weights = true) {
    const std::size_t m = 2 + rng.below(max_m - 1);
    std::vector<Vec> pts(m, Vec(d));
    for (auto& p : pts)
        for (auto& x : p) x = rng.uniform(-5.0, 5.0);
    std::vector<double> w;
    if (random_weights) {
        w.resize(m);
        double tot = 0.0;
        for (auto& v : w) {
            v = rng.uniform(0.1, 1.0);
            tot += v;
        }
        for (auto& v : w) v /= tot;
    }
    return EmpiricalDist(pts, std::move(w));
}

RieszCone random_cone(Rng& rng, std::size_t d) {
    Matrix a(d);
    for (std::size_t i = 0; i < d; ++i) {
        double off = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            a(i, j) = rng.uniform(0.0, 0.5);
            off += a(i, j);
        }
        a(i, i) = off + 1.0 + rng.uniform(0.0, 1.0);
    }
    return RieszCone(a);
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RiskPoint corner(const EmpiricalDist& dist, RegionFamily family, TrimLevel level,
                 const RieszCone& cone, const GridPtr& grid) {
    RegionSpec spec;
    spec.family = family;
    spec.level = level;
    spec.cone = cone;
    return region_vector_risk(dist, spec, grid);
}

// 1. In one dimension the lower endpoint of each trimmed region is the
// matching scalar measure.
void check_univariate_bridges() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(0xACC1);
    const RieszCone cone = RieszCone::identity(1);
    const auto grid = DirectionGrid::make_default(1, cone);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto dist = random_dist(rng, 1, 50);
        const double alpha = rng.uniform(0.05, 0.95);
        const int n = 1 + static_cast<int>(rng.below(4));
        const double hd = corner(dist, RegionFamily::Halfspace, alpha, cone, grid).point[0];
        const double zd = corner(dist, RegionFamily::Zonoid, alpha, cone, grid).point[0];
        const double cd = corner(dist, RegionFamily::Ech, n, cone, grid).point[0];
        worst = std::max(worst, std::abs(hd - var(dist, alpha).value));
        worst = std::max(worst, std::abs(zd - es(dist, alpha).value));
        worst = std::max(worst, std::abs(cd - em(dist, n).value));
    }
    const double secs = seconds_since(t0);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "100 distributions, worst gap %.2e (tol 1e-9), %.2fs (budget 5s)", worst, secs);
    verdict(1, worst <= 1e-9 && secs < 5.0, "univariate region corners equal var/es/em", detail);
}

// 2. The zonoid region route agrees with the closed-form marginal-shortfall
// formula under a random cone.
void check_zonoid_closed_form() {
    Rng rng(0xACC2);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t d = 2 + rng.below(2);
        const auto dist = random_dist(rng, d, 40);
        const RieszCone cone = random_cone(rng, d);
        const double alpha = rng.uniform(0.05, 1.0);
        const auto grid = DirectionGrid::make_default(d, cone);
        const RiskPoint via_region = corner(dist, RegionFamily::Zonoid, alpha, cone, grid);
        const RiskPoint direct = srisk_zonoid_direct(dist, alpha, cone);
        for (std::size_t k = 0; k < d; ++k)
            worst = std::max(worst, std::abs(via_region.point[k] - direct.point[k]));
    }
    char detail[120];
    std::snprintf(detail, sizeof detail, "50 clouds in 2D/3D, worst gap %.2e (tol 1e-9)", worst);
    verdict(2, worst <= 1e-9, "zonoid region route equals the marginal closed form", detail);
}

// 3. Worst conditioning maps the negated expectation to expected shortfall,
// exactly and flagged exact.
void check_worst_conditioning_identity() {
    Rng rng(0xACC3);
    double worst = 0.0;
    bool all_exact = true;
    for (int i = 0; i < 200; ++i) {
        const auto dist = random_dist(rng, 1, 50);
        const double alpha = rng.uniform(0.02, 1.0);
        const auto got = worst_conditioning(ScalarRisk::neg_expectation(), dist, alpha);
        all_exact = all_exact && got.exact;
        worst = std::max(worst, std::abs(got.value - es(dist, alpha).value));
    }
    char detail[120];
    std::snprintf(detail, sizeof detail, "200 distributions, worst gap %.2e (tol 1e-12), exact=%s",
                  worst, all_exact ? "true" : "false");
    verdict(3, worst <= 1e-12 && all_exact,
            "worst conditioning of the negated expectation is expected shortfall", detail);
}

// 4. Composed levels on a dense uniform cloud approach the continuous
// closed-form targets; the dispatch itself matches the direct measure at the
// product level to rounding.
void check_composition_laws() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(0xACC4);
    std::vector<Vec> pts(20000, Vec(1));
    for (auto& p : pts) p[0] = rng.uniform();
    const EmpiricalDist dist(pts);

    double worst_target = 0.0;
    double worst_dispatch = 0.0;
    for (const double alpha : {0.25, 0.5}) {
        for (const double beta : {0.25, 0.5}) {
            const double v = worst_conditioning(ScalarRisk::value_at_risk(beta), dist, alpha).value;
            const double e =
                worst_conditioning(ScalarRisk::expected_shortfall(beta), dist, alpha).value;
            worst_dispatch = std::max(worst_dispatch, std::abs(v - var(dist, alpha * beta).value));
            worst_dispatch = std::max(worst_dispatch, std::abs(e - es(dist, alpha * beta).value));
            worst_target = std::max(worst_target, std::abs(v - (-(alpha * beta))));
            worst_target = std::max(worst_target, std::abs(e - (-(alpha * beta) / 2.0)));
        }
    }
    const double secs = seconds_since(t0);
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "20000 uniform atoms, target gap %.2e (tol 0.01), dispatch gap %.2e (tol 1e-12), "
                  "%.2fs (budget 10s)",
                  worst_target, worst_dispatch, secs);
    verdict(4, worst_target <= 0.01 && worst_dispatch <= 1e-12 && secs < 10.0,
            "composed levels approach the continuous targets", detail);
}

const axioms::AxiomCheck* find_check(const axioms::AxiomReport& r, const std::string& axiom) {
    for (const auto& c : r.checks)
        if (c.axiom == axiom) return &c;
    return nullptr;
}

// 5. Coherent measures and compact regions pass their axiom suites; var and
// the halfspace family break the designated axiom within the budget.
void check_axiom_suites() {
    bool ok = true;
    std::string note;

    for (const std::string id : {"es", "em"}) {
        const auto r = axioms::check_risk_axioms(id, 0xACC5, 200);
        if (!r.passed()) {
            ok = false;
            note += id + " failed; ";
        }
    }
    for (const std::string id : {"zonoid", "ech"}) {
        const auto r = axioms::check_region_axioms(id, 0xACC5, 100);
        if (!r.passed()) {
            ok = false;
            note += id + " failed; ";
        }
    }

    const auto var_report = axioms::check_risk_axioms("var", 0xACC5, 200);
    const auto* r4 = find_check(var_report, "R4");
    const bool var_breaks = r4 != nullptr && r4->expect_violation && !r4->violations.empty();
    if (!var_breaks) {
        ok = false;
        note += "var superadditivity violation missing; ";
    }
    if (!var_report.passed()) {
        ok = false;
        note += "var report failed; ";
    }

    const auto hs_report = axioms::check_region_axioms("halfspace", 0xACC5, 100);
    const auto* d6 = find_check(hs_report, "D6");
    const bool hs_breaks = d6 != nullptr && d6->expect_violation && !d6->violations.empty();
    if (!hs_breaks) {
        ok = false;
        note += "halfspace subadditivity violation missing; ";
    }
    if (!hs_report.passed()) {
        ok = false;
        note += "halfspace report failed; ";
    }

    char detail[220];
    std::snprintf(detail, sizeof detail,
                  "es/em 200 trials, zonoid/ech 100 trials clean; var breaks R4 in %zu trials, "
                  "halfspace breaks D6 in %zu trials%s%s",
                  r4 ? r4->violations.size() : 0, d6 ? d6->violations.size() : 0,
                  note.empty() ? "" : " — ", note.c_str());
    verdict(5, ok, "axiom suites certify the designed behaviour", detail);
}

// 6. Entropic: convexity holds on random coupled pairs; homogenisation over
// the default grid lands within the deterministic gamma log(m)/t_max bound
// of the worst loss.
void check_entropic() {
    const auto report = axioms::check_risk_axioms("entropic", 0xACC6, 200);
    const auto* cvx = find_check(report, "CVX");
    bool ok = cvx != nullptr && cvx->trials == 200 && !cvx->expect_violation &&
              cvx->violations.empty();
    std::string note = ok ? "" : "convexity check failed; ";

    Rng rng(0xACC6);
    double worst_slack = 0.0;
    for (int i = 0; i < 25; ++i) {
        const auto dist = random_dist(rng, 1, 50, /*random_weights=*/false);
        const auto hom = homogenise(ScalarRisk::entropic_risk(1.0), dist);
        double lo = dist.scalar_values()[0];
        for (const double v : dist.scalar_values()) lo = std::min(lo, v);
        const double bound = std::log(static_cast<double>(dist.size())) / 1e6;
        const double above = hom.value - (-lo);                    // must be <= 0 (+eps)
        const double below = (-lo - bound) - hom.value;            // must be <= 0 (+eps)
        worst_slack = std::max({worst_slack, above, below});
        if (above > 1e-12 || below > 1e-12) ok = false;
    }
    if (worst_slack > 1e-12) note += "homogenisation bound exceeded; ";

    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "convexity clean on 200 coupled pairs; homogenisation slack %.2e within "
                  "log(m)/1e6 of the worst loss%s%s",
                  worst_slack, note.empty() ? "" : " — ", note.c_str());
    verdict(6, ok, "entropic risk is convex and homogenises to the worst loss", detail);
}

// 7. The real-level spectral measure agrees with the integer expected-minimum
// path at alpha = 1/n, and the expected-convex-hull interval endpoints are the
// +-1 support values.
void check_spectral_consistency() {
    Rng rng(0xACC7);
    double worst_em = 0.0;
    double worst_iv = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto dist = random_dist(rng, 1, 50);
        for (int n = 1; n <= 6; ++n)
            worst_em = std::max(worst_em,
                                std::abs(em_alpha(dist, 1.0 / n).value - em(dist, n).value));
        for (const double alpha : {1.0, 0.5, 1.0 / 3.0, rng.uniform(0.05, 1.0)}) {
            const Interval iv = cd_interval(dist, alpha);
            const double hi = ech_support(dist, alpha, Vec{1.0});
            const double lo = -ech_support(dist, alpha, Vec{-1.0});
            worst_iv = std::max({worst_iv, std::abs(iv.hi - hi), std::abs(iv.lo - lo)});
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "50 distributions: em gap %.2e, interval gap %.2e (tol 1e-12)", worst_em,
                  worst_iv);
    verdict(7, worst_em <= 1e-12 && worst_iv <= 1e-12,
            "real spectral levels match the integer path and interval endpoints", detail);
}

// 8. At level one both compact regions collapse to the expectation point.
void check_level_one_collapse() {
    Rng rng(0xACC8);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t d = 1 + rng.below(3);
        const auto dist = random_dist(rng, d, 40);
        const Vec mu = dist.mean();
        const auto grid = DirectionGrid::make_default(d, RieszCone::identity(d));
        for (const Vec& u : grid->dirs()) {
            const double target = dot(mu, u);
            worst = std::max(worst, std::abs(zonoid_support(dist, 1.0, u) - target));
            worst = std::max(worst, std::abs(ech_support(dist, 1, u) - target));
            worst = std::max(worst, std::abs(ech_support(dist, 1.0, u) - target));
        }
    }
    char detail[120];
    std::snprintf(detail, sizeof detail, "50 clouds, worst support gap %.2e (tol 1e-12)", worst);
    verdict(8, worst <= 1e-12, "level-one regions collapse to the expectation", detail);
}

// 9. Repeated compute runs emit byte-identical reports.
void check_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "riskgeom_acceptance";
    fs::create_directories(dir);
    const fs::path dist_path = dir / "cloud.json";
    {
        std::ofstream out(dist_path);
        out << "{\"points\": [[0.31, -1.2], [2.4, 0.7], [-0.9, 1.05], [1.6, -0.4], [0.2, 2.2]],\n"
               " \"weights\": [0.1, 0.3, 0.2, 0.25, 0.15]}\n";
    }

    bool ok = true;
    std::string note;
    for (const std::string family : {"zonoid", "ech", "halfspace"}) {
        cli::ComputeConfig cfg;
        cfg.dist_path = dist_path.string();
        cfg.family = family;
        cfg.alpha = 0.5;
        cfg.out_path = (dir / (family + ".json")).string();
        std::ostringstream a, b;
        if (cli::cmd_compute(cfg, a) != 0 || cli::cmd_compute(cfg, b) != 0) {
            ok = false;
            note += family + " run failed; ";
            continue;
        }
        if (a.str() != b.str() || a.str() != read_file(cfg.out_path)) {
            ok = false;
            note += family + " output drifted; ";
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "three families, repeated runs and saved files byte-identical%s%s",
                  note.empty() ? "" : " — ", note.c_str());
    verdict(9, ok, "compute reports are deterministic", detail);
}

}  // namespace

int main() {
    std::printf("acceptance checks\n");
    check_univariate_bridges();
    check_zonoid_closed_form();
    check_worst_conditioning_identity();
    check_composition_laws();
    check_axiom_suites();
    check_entropic();
    check_spectral_consistency();
    check_level_one_collapse();
    check_determinism();
    if (failures == 0)
        std::printf("all 9 checks passed\n");
    else
        std::printf("%d of 9 checks FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
