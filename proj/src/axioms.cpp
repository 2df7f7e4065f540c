#include "riskgeom/axioms.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "riskgeom/errors.hpp"
#include "riskgeom/risk.hpp"
#include "riskgeom/rng.hpp"

namespace riskgeom::axioms {

namespace {

constexpr double kTol = 1e-9;

// FNV-1a over the raw bytes of the trial inputs.
class Fnv {
public:
    void add(double v) {
        std::uint64_t bits = 0;
        std::memcpy(&bits, &v, sizeof bits);
        for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(bits >> (8 * i)));
    }
    void add(std::span<const double> xs) {
        for (double v : xs) add(v);
    }
    void add(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(v >> (8 * i)));
    }
    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out(16, '0');
        for (int i = 0; i < 16; ++i) out[15 - i] = digits[(h_ >> (4 * i)) & 0xF];
        return out;
    }

private:
    void byte(unsigned char b) {
        h_ ^= b;
        h_ *= 0x100000001b3ULL;
    }
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

void add_dist(Fnv& f, const EmpiricalDist& d) {
    f.add(static_cast<std::uint64_t>(d.size()));
    f.add(static_cast<std::uint64_t>(d.dim()));
    for (std::size_t j = 0; j < d.dim(); ++j) f.add(d.col(j));
    f.add(d.weights());
}

// --- generators (draw order is part of the replay contract) -----------------

std::vector<double> gen_weights(Rng& rng, std::size_t m) {
    if (rng.below(2) == 0) return {};  // uniform law
    std::vector<double> w(m);
    for (double& v : w) v = rng.uniform(0.1, 1.0);
    return w;
}

std::vector<double> gen_column(Rng& rng, std::size_t m) {
    std::vector<double> col(m);
    if (rng.below(2) == 0) {
        const double c = rng.uniform(-2.0, 2.0);
        const double s = rng.uniform(0.1, 3.0);
        for (double& v : col) v = c + s * (2.0 * rng.uniform() - 1.0);
    } else {
        const double mu = rng.uniform(-0.5, 0.5);
        const double sig = rng.uniform(0.2, 1.0);
        const double shift = rng.uniform(0.0, 2.0);
        for (double& v : col) v = std::exp(mu + sig * rng.normal()) - shift;
    }
    return col;
}

EmpiricalDist gen_dist(Rng& rng, std::size_t m, std::size_t d, std::vector<double> weights) {
    std::vector<double> cols;
    cols.reserve(m * d);
    for (std::size_t j = 0; j < d; ++j) {
        auto col = gen_column(rng, m);
        cols.insert(cols.end(), col.begin(), col.end());
    }
    return EmpiricalDist::from_columns(m, d, std::move(cols), std::move(weights));
}

RieszCone gen_cone(Rng& rng, std::size_t d) {
    if (rng.below(2) == 0) return RieszCone::identity(d);
    Matrix a(d);
    for (std::size_t i = 0; i < d; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            a(i, j) = rng.uniform(0.0, 0.5);
            row_sum += a(i, j);
        }
        a(i, i) = row_sum + 1.0 + rng.uniform(0.0, 1.0);  // strict diagonal dominance
    }
    return RieszCone(a);
}

// --- risk suite ---------------------------------------------------------------

struct MeasureDraw {
    ScalarRisk rho;
    double param = 0.0;
};

MeasureDraw draw_measure(const std::string& id, Rng& rng) {
    if (id == "es") {
        const double a = rng.uniform(0.05, 0.95);
        return {ScalarRisk::expected_shortfall(a), a};
    }
    if (id == "var") {
        const double a = rng.uniform(0.05, 0.8);
        return {ScalarRisk::value_at_risk(a), a};
    }
    if (id == "em") {
        const int n = 1 + static_cast<int>(rng.below(5));
        return {ScalarRisk::expected_minimum(n), static_cast<double>(n)};
    }
    if (id == "em_alpha") {
        const double a = rng.uniform(0.2, 1.0);
        return {ScalarRisk::custom("em_alpha",
                                   [a](const EmpiricalDist& d) { return em_alpha(d, a).value; }),
                a};
    }
    if (id == "entropic") {
        const double g = rng.uniform(0.3, 3.0);
        return {ScalarRisk::entropic_risk(g), g};
    }
    throw ConfigError("axioms: unknown risk id: " + id);
}

// Two-atom coupled construction that defeats value-at-risk superadditivity:
// each marginal hides its loss below the alpha threshold, the sum cannot.
void crafted_var_pair(Rng& rng, double alpha, EmpiricalDist& x, EmpiricalDist& y) {
    const double a = rng.uniform(0.0, 1.0);
    const double b = rng.uniform(0.0, 1.0);
    const double p = 0.6 * alpha;
    const std::vector<Vec> xr = {{-1.0 - a}, {0.0}, {0.0}};
    const std::vector<Vec> yr = {{0.0}, {-1.0 - b}, {0.0}};
    const std::vector<double> w = {p, p, 1.0 - 2.0 * p};
    x = EmpiricalDist(xr, w);
    y = EmpiricalDist(yr, w);
}

AxiomEval finish(Fnv& digest, double lhs, double rhs, double tol) {
    AxiomEval e;
    e.lhs = lhs;
    e.rhs = rhs;
    e.gap = lhs - rhs;
    e.violated = e.gap > tol;
    e.digest = digest.hex();
    return e;
}

}  // namespace

AxiomEval eval_risk_axiom(const std::string& id, const std::string& axiom,
                          std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const std::size_t m = 2 + rng.below(49);
    auto weights = gen_weights(rng, m);
    MeasureDraw md = draw_measure(id, rng);
    Fnv digest;
    digest.add(md.param);

    if (axiom == "R1") {
        const EmpiricalDist x = gen_dist(rng, m, 1, weights);
        const double c = rng.uniform(-3.0, 3.0);
        add_dist(digest, x);
        digest.add(c);
        const double lhs = md.rho(translate(x, Vec{c}));
        const double rhs = md.rho(x) - c;
        AxiomEval e = finish(digest, lhs, rhs, kTol);
        e.gap = std::abs(lhs - rhs);
        e.violated = e.gap > kTol;
        return e;
    }
    if (axiom == "R2") {
        const EmpiricalDist x = gen_dist(rng, m, 1, weights);
        std::vector<Vec> y_rows(m);
        for (std::size_t i = 0; i < m; ++i)
            y_rows[i] = {x.col(0)[i] - std::abs(rng.normal()) * 0.5};
        const EmpiricalDist y(y_rows, std::vector<double>(x.weights().begin(), x.weights().end()));
        add_dist(digest, x);
        add_dist(digest, y);
        // y <= x atomwise, so rho(y) >= rho(x).
        return finish(digest, md.rho(x), md.rho(y), kTol);
    }
    if (axiom == "R3") {
        const EmpiricalDist x = gen_dist(rng, m, 1, weights);
        const double t = (id == "entropic") ? rng.uniform(1.5, 3.0) : rng.uniform(0.1, 5.0);
        add_dist(digest, x);
        digest.add(t);
        const double lhs = md.rho(scale(x, t));
        const double rhs = t * md.rho(x);
        AxiomEval e = finish(digest, lhs, rhs, kTol);
        e.gap = std::abs(lhs - rhs);
        e.violated = e.gap > kTol;
        return e;
    }
    if (axiom == "R4") {
        EmpiricalDist x(std::vector<Vec>{{0.0}});
        EmpiricalDist y(std::vector<Vec>{{0.0}});
        if (id == "var") {
            crafted_var_pair(rng, md.param, x, y);
        } else {
            x = gen_dist(rng, m, 1, weights);
            y = gen_dist(rng, m, 1,
                         std::vector<double>(x.weights().begin(), x.weights().end()));
        }
        add_dist(digest, x);
        add_dist(digest, y);
        // Superadditivity in the risk order: rho(x+y) <= rho(x) + rho(y).
        return finish(digest, md.rho(coupled_sum(x, y)), md.rho(x) + md.rho(y), kTol);
    }
    if (axiom == "CVX") {
        const EmpiricalDist x = gen_dist(rng, m, 1, weights);
        const EmpiricalDist y =
            gen_dist(rng, m, 1, std::vector<double>(x.weights().begin(), x.weights().end()));
        const double t = rng.uniform();
        add_dist(digest, x);
        add_dist(digest, y);
        digest.add(t);
        const double lhs = md.rho(coupled_mix(x, y, t));
        const double rhs = t * md.rho(x) + (1.0 - t) * md.rho(y);
        return finish(digest, lhs, rhs, kTol);
    }
    throw ConfigError("axioms: unknown risk axiom: " + axiom);
}

namespace {

// --- region suite ---------------------------------------------------------------

struct RegionCtx {
    std::size_t d = 0;
    std::size_t m = 0;
    RieszCone cone = RieszCone::identity(1);
    RegionSpec spec;
    GridPtr grid;
    EmpiricalDist x{std::vector<Vec>{{0.0}}};
};

RegionCtx make_region_ctx(const std::string& id, Rng& rng, Fnv& digest) {
    RegionCtx ctx;
    ctx.d = 1 + rng.below(3);
    ctx.m = 2 + rng.below(49);
    ctx.cone = (id == "halfspace") ? gen_cone(rng, ctx.d) : RieszCone::identity(ctx.d);

    ctx.spec.cone = ctx.cone;
    if (id == "zonoid") {
        ctx.spec.family = RegionFamily::Zonoid;
        ctx.spec.level = rng.uniform(0.1, 1.0);
        digest.add(std::get<double>(ctx.spec.level));
    } else if (id == "ech") {
        ctx.spec.family = RegionFamily::Ech;
        if (rng.below(2) == 0) {
            ctx.spec.level = static_cast<int>(1 + rng.below(3));
            digest.add(static_cast<double>(std::get<int>(ctx.spec.level)));
        } else {
            ctx.spec.level = rng.uniform(0.25, 1.0);
            digest.add(std::get<double>(ctx.spec.level));
        }
    } else if (id == "halfspace") {
        ctx.spec.family = RegionFamily::Halfspace;
        ctx.spec.level = rng.uniform(0.05, 0.8);
        digest.add(std::get<double>(ctx.spec.level));
    } else {
        throw ConfigError("axioms: unknown region id: " + id);
    }
    digest.add(ctx.cone.transfer().a);

    auto weights = gen_weights(rng, ctx.m);
    ctx.x = gen_dist(rng, ctx.m, ctx.d, std::move(weights));
    add_dist(digest, ctx.x);
    ctx.grid = DirectionGrid::make_default(ctx.d, ctx.cone);
    return ctx;
}

void worst_pair(double lhs, double rhs, double& worst_lhs, double& worst_rhs) {
    if (lhs - rhs > worst_lhs - worst_rhs) {
        worst_lhs = lhs;
        worst_rhs = rhs;
    }
}

// Support values (compact families) or constraint bounds (halfspace) for the
// spec's level on a given distribution.
std::vector<double> region_values(const RegionCtx& ctx, const EmpiricalDist& dist,
                                  const TrimLevel& level) {
    RegionSpec spec = ctx.spec;
    spec.level = level;
    const Region region = build_region(dist, spec, ctx.grid);
    if (std::holds_alternative<SupportRegion>(region))
        return std::get<SupportRegion>(region).values();
    std::vector<double> q;
    for (const auto& c : std::get<ConstraintRegion>(region).constraints()) q.push_back(c.bound);
    return q;
}

// Directions the values above are indexed by.
std::vector<Vec> region_dirs(const RegionCtx& ctx) {
    if (ctx.spec.family == RegionFamily::Halfspace) {
        std::vector<Vec> dirs;
        for (const Vec& row : ctx.cone.dual_generators()) {
            const double len = norm2(row);
            Vec unit(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) unit[j] = row[j] / len;
            dirs.push_back(std::move(unit));
        }
        return dirs;
    }
    return ctx.grid->dirs();
}

EmpiricalDist dominated_copy(const RegionCtx& ctx, Rng& rng) {
    // y = x - A^{-1} delta with delta >= 0: y <=_K x atomwise.
    std::vector<Vec> rows(ctx.m);
    for (std::size_t i = 0; i < ctx.m; ++i) {
        Vec delta(ctx.d);
        for (double& v : delta) v = rng.uniform(0.0, 1.0);
        const Vec drop = matvec(ctx.cone.transfer_inverse(), delta);
        rows[i] = ctx.x.point(i);
        for (std::size_t j = 0; j < ctx.d; ++j) rows[i][j] -= drop[j];
    }
    return EmpiricalDist(rows,
                         std::vector<double>(ctx.x.weights().begin(), ctx.x.weights().end()));
}

// Coupled crafted pair defeating halfspace D6, mapped through the cone.
void crafted_halfspace_pair(const RegionCtx& ctx, Rng& rng, double alpha, EmpiricalDist& x,
                            EmpiricalDist& y) {
    const double a = rng.uniform(0.0, 1.0);
    const double b = rng.uniform(0.0, 1.0);
    const double p = 0.6 * alpha;
    std::vector<Vec> xr(3, Vec(ctx.d, 0.0));
    std::vector<Vec> yr(3, Vec(ctx.d, 0.0));
    Vec zx(ctx.d, 0.0), zy(ctx.d, 0.0);
    zx[0] = -1.0 - a;
    zy[0] = -1.0 - b;
    xr[0] = matvec(ctx.cone.transfer_inverse(), zx);
    yr[1] = matvec(ctx.cone.transfer_inverse(), zy);
    const std::vector<double> w = {p, p, 1.0 - 2.0 * p};
    x = EmpiricalDist(xr, w);
    y = EmpiricalDist(yr, w);
}

std::vector<TrimLevel> nesting_levels(const std::string& id) {
    if (id == "zonoid") return {0.2, 0.4, 0.6, 0.8, 1.0};
    if (id == "ech") return {0.25, 0.5, 0.75, 1.0};
    return {0.2, 0.4, 0.6, 0.8};
}

}  // namespace

AxiomEval eval_region_axiom(const std::string& id, const std::string& axiom,
                            std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    Fnv digest;
    RegionCtx ctx = make_region_ctx(id, rng, digest);
    const bool halfspace = ctx.spec.family == RegionFamily::Halfspace;

    double worst_lhs = -std::numeric_limits<double>::infinity();
    double worst_rhs = 0.0;

    if (axiom == "D1" || axiom == "D2") {
        const auto base = region_values(ctx, ctx.x, ctx.spec.level);
        const auto dirs = region_dirs(ctx);
        EmpiricalDist moved = ctx.x;
        Vec y;
        double t = 1.0;
        if (axiom == "D1") {
            y.resize(ctx.d);
            for (double& v : y) v = rng.uniform(-2.0, 2.0);
            digest.add(y);
            moved = translate(ctx.x, y);
        } else {
            t = rng.uniform(0.1, 4.0);
            digest.add(t);
            moved = scale(ctx.x, t);
        }
        const auto shifted = region_values(ctx, moved, ctx.spec.level);
        for (std::size_t i = 0; i < base.size(); ++i) {
            const double want =
                (axiom == "D1") ? base[i] + dot(dirs[i], y) : t * base[i];
            worst_pair(std::abs(shifted[i] - want), 0.0, worst_lhs, worst_rhs);
        }
        return finish(digest, worst_lhs, worst_rhs, kTol);
    }

    if (axiom == "D3") {
        const auto levels = nesting_levels(id);
        std::vector<std::vector<double>> vals;
        for (const TrimLevel& lv : levels) vals.push_back(region_values(ctx, ctx.x, lv));
        for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
            for (std::size_t i = 0; i < vals[k].size(); ++i) {
                // Larger level = smaller region: support shrinks, constraint
                // bounds grow.
                if (halfspace)
                    worst_pair(vals[k][i], vals[k + 1][i], worst_lhs, worst_rhs);
                else
                    worst_pair(vals[k + 1][i], vals[k][i], worst_lhs, worst_rhs);
            }
        }
        return finish(digest, worst_lhs, worst_rhs, kTol);
    }

    if (axiom == "D5") {
        const EmpiricalDist y = dominated_copy(ctx, rng);
        add_dist(digest, y);
        const auto hx = region_values(ctx, ctx.x, ctx.spec.level);
        const auto hy = region_values(ctx, y, ctx.spec.level);
        if (halfspace) {
            // q_x(u) >= q_y(u) for every dual generator direction.
            for (std::size_t i = 0; i < hx.size(); ++i)
                worst_pair(hy[i], hx[i], worst_lhs, worst_rhs);
        } else {
            // h(D(x), -u) <= h(D(y), -u) for grid directions u in K*.
            for (std::size_t i = 0; i < ctx.grid->size(); ++i) {
                const Vec& u = ctx.grid->dir(i);
                bool in_dual = true;
                for (double v : u)
                    if (v < -1e-15) { in_dual = false; break; }
                if (!in_dual) continue;
                const auto j = ctx.grid->antipode(i);
                if (!j) continue;
                worst_pair(hx[*j], hy[*j], worst_lhs, worst_rhs);
            }
        }
        // Origin normalization: the region of the point mass at 0 collapses
        // onto the cone vertex (all support values / bounds vanish).
        const EmpiricalDist origin(std::vector<Vec>{Vec(ctx.d, 0.0)});
        for (double v : region_values(ctx, origin, ctx.spec.level))
            worst_pair(std::abs(v), 0.0, worst_lhs, worst_rhs);
        return finish(digest, worst_lhs, worst_rhs, kTol);
    }

    if (axiom == "D6") {
        EmpiricalDist x = ctx.x;
        EmpiricalDist y = ctx.x;
        if (halfspace) {
            crafted_halfspace_pair(ctx, rng, std::get<double>(ctx.spec.level), x, y);
        } else {
            Rng col_rng(rng.next());
            y = gen_dist(col_rng, ctx.m, ctx.d,
                         std::vector<double>(ctx.x.weights().begin(), ctx.x.weights().end()));
        }
        add_dist(digest, x);
        add_dist(digest, y);
        const auto hx = region_values(ctx, x, ctx.spec.level);
        const auto hy = region_values(ctx, y, ctx.spec.level);
        const auto hs = region_values(ctx, coupled_sum(x, y), ctx.spec.level);
        for (std::size_t i = 0; i < hx.size(); ++i) {
            if (halfspace)
                worst_pair(hx[i] + hy[i], hs[i], worst_lhs, worst_rhs);  // q superadditivity
            else
                worst_pair(hs[i], hx[i] + hy[i], worst_lhs, worst_rhs);  // h subadditivity
        }
        return finish(digest, worst_lhs, worst_rhs, kTol);
    }

    throw ConfigError("axioms: unknown region axiom: " + axiom);
}

std::vector<std::string> risk_ids() { return {"es", "var", "em", "em_alpha", "entropic"}; }

std::vector<std::string> region_ids() { return {"zonoid", "ech", "halfspace"}; }

std::uint64_t trial_seed(std::uint64_t suite_seed, std::uint64_t trial) {
    std::uint64_t s = suite_seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    splitmix64(s);
    return splitmix64(s);
}

namespace {

struct CheckPlan {
    std::string axiom;
    bool expect_violation = false;
    bool structural = false;
};

std::vector<CheckPlan> risk_plan(const std::string& id) {
    if (id == "var") return {{"R1"}, {"R2"}, {"R3"}, {"R4", true}};
    if (id == "entropic") return {{"R1"}, {"R2"}, {"CVX"}, {"R3", true}};
    return {{"R1"}, {"R2"}, {"R3"}, {"R4"}};
}

std::vector<CheckPlan> region_plan(const std::string& id) {
    std::vector<CheckPlan> plan = {{"D1"}, {"D2"}, {"D3"}, {"D4", false, true}, {"D5"}};
    plan.push_back({"D6", id == "halfspace"});
    return plan;
}

template <typename EvalFn>
AxiomReport run_suite(const std::string& suite, const std::string& id,
                      const std::vector<CheckPlan>& plan, std::uint64_t seed,
                      std::uint64_t trials, EvalFn&& eval) {
    AxiomReport report;
    report.suite = suite;
    report.id = id;
    report.seed = seed;
    report.trials = trials;
    for (const CheckPlan& cp : plan) {
        AxiomCheck check;
        check.axiom = cp.axiom;
        check.expect_violation = cp.expect_violation;
        check.structural = cp.structural;
        check.tolerance = cp.structural ? 0.0 : kTol;
        check.trials = cp.structural ? 0 : trials;
        if (!cp.structural) {
            for (std::uint64_t t = 0; t < trials; ++t) {
                const std::uint64_t ts = trial_seed(seed, t);
                const AxiomEval e = eval(id, cp.axiom, ts);
                if (e.violated)
                    check.violations.push_back({t, ts, e.digest, e.lhs, e.rhs, e.gap});
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

void require_known(const std::vector<std::string>& ids, const std::string& id,
                   const char* suite) {
    for (const auto& known : ids)
        if (known == id) return;
    throw ConfigError(std::string("axioms: unknown ") + suite + " id: " + id);
}

}  // namespace

AxiomReport check_risk_axioms(const std::string& id, std::uint64_t seed, std::uint64_t trials) {
    require_known(risk_ids(), id, "risk");
    return run_suite("risk", id, risk_plan(id), seed, trials, eval_risk_axiom);
}

AxiomReport check_region_axioms(const std::string& id, std::uint64_t seed,
                                std::uint64_t trials) {
    require_known(region_ids(), id, "region");
    return run_suite("region", id, region_plan(id), seed, trials, eval_region_axiom);
}

}  // namespace riskgeom::axioms
