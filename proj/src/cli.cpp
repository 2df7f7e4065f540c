#include "riskgeom/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>

#include "riskgeom/depth.hpp"
#include "riskgeom/errors.hpp"
#include "riskgeom/json_io.hpp"
#include "riskgeom/risk.hpp"
#include "riskgeom/svg.hpp"

namespace riskgeom::cli {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

EmpiricalDist load_dist(const std::string& path) {
    if (path.empty()) throw ConfigError("no input distribution given");
    if (ends_with(path, ".csv")) return EmpiricalDist::load_csv(path);
    return dist_from_json(load_json_file(path));
}

RieszCone load_cone(const std::string& path, std::size_t dim) {
    if (path.empty()) return RieszCone::identity(dim);
    return cone_from_json(load_json_file(path), dim);
}

RegionFamily parse_family(const std::string& name) {
    if (name == "zonoid") return RegionFamily::Zonoid;
    if (name == "ech") return RegionFamily::Ech;
    if (name == "halfspace") return RegionFamily::Halfspace;
    throw ConfigError("unknown region family: " + name + " (expected zonoid|ech|halfspace)");
}

Vec parse_dir(const std::string& text, std::size_t dim) {
    Vec out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        const std::string cell = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        double v = 0.0;
        const char* b = cell.data();
        const char* e = b + cell.size();
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || p != e)
            throw ConfigError("direction: non-numeric component '" + cell + "' in '" + text + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != dim)
        throw ConfigError("direction '" + text + "' has " + std::to_string(out.size()) +
                          " components, expected " + std::to_string(dim));
    return out;
}

TrimLevel make_level(RegionFamily family, double alpha, int n) {
    if (family == RegionFamily::Ech && n > 0) return n;
    if (n > 0) throw ConfigError("integer level n applies to the ech family only");
    return alpha;
}

void write_level(JsonWriter& w, const TrimLevel& level) {
    w.begin_object();
    if (std::holds_alternative<int>(level)) {
        w.key("n");
        w.value(std::get<int>(level));
    } else {
        w.key("alpha");
        w.value(std::get<double>(level));
    }
    w.end_object();
}

void write_matrix(JsonWriter& w, const Matrix& m) {
    w.begin_array();
    for (std::size_t i = 0; i < m.n; ++i) w.number_array(m.row(i));
    w.end_array();
}

std::vector<std::array<double, 2>> region_polygon(const SupportRegion& region) {
    return polygon_2d(region);
}

}  // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* env = std::getenv("RISKGEOM_SEED");
    if (env == nullptr || *env == '\0') return fallback;
    std::uint64_t v = 0;
    const char* e = env + std::string_view(env).size();
    auto [p, ec] = std::from_chars(env, e, v);
    if (ec != std::errc() || p != e)
        throw ConfigError(std::string("RISKGEOM_SEED must be an unsigned integer, got '") + env +
                          "'");
    return v;
}

int cmd_compute(const ComputeConfig& cfg, std::ostream& out) {
    const EmpiricalDist dist = load_dist(cfg.dist_path);
    const std::size_t d = dist.dim();
    const RieszCone cone = load_cone(cfg.cone_path, d);
    RegionSpec spec;
    spec.family = parse_family(cfg.family);
    spec.level = make_level(spec.family, cfg.alpha, cfg.n);
    spec.cone = cone;
    for (const std::string& s : cfg.extra_dirs) spec.extra_dirs.push_back(parse_dir(s, d));

    const GridPtr grid = DirectionGrid::make_default(d, cone, cfg.grid_2d);
    const Region region = build_region(dist, spec, grid);
    const RiskPoint risk = vector_risk_from_region(region, cone);

    JsonWriter w;
    w.begin_object();
    w.key("schema");
    w.value(1);
    w.key("command");
    w.value("compute");
    w.key("input");
    w.begin_object();
    w.key("path");
    w.value(cfg.dist_path);
    w.key("atoms");
    w.value(static_cast<std::uint64_t>(dist.size()));
    w.key("dim");
    w.value(static_cast<std::uint64_t>(d));
    w.end_object();
    w.key("family");
    w.value(cfg.family);
    w.key("level");
    write_level(w, spec.level);
    w.key("cone");
    w.begin_object();
    w.key("A");
    write_matrix(w, cone.transfer());
    w.end_object();

    w.key("region");
    w.begin_object();
    if (std::holds_alternative<SupportRegion>(region)) {
        const auto& sr = std::get<SupportRegion>(region);
        w.key("kind");
        w.value("support");
        w.key("directions");
        w.begin_array();
        for (const Vec& u : sr.grid()->dirs()) w.number_array(u);
        w.end_array();
        w.key("support");
        w.number_array(sr.values());
        if (d == 2) {
            w.key("polygon");
            w.begin_array();
            for (const auto& p : region_polygon(sr)) w.number_array(p);
            w.end_array();
        }
    } else {
        const auto& cr = std::get<ConstraintRegion>(region);
        w.key("kind");
        w.value("halfspace");
        w.key("directions");
        w.begin_array();
        for (const auto& c : cr.constraints()) w.number_array(c.dir);
        w.end_array();
        w.key("bounds");
        w.begin_array();
        for (const auto& c : cr.constraints()) w.value(c.bound);
        w.end_array();
    }
    w.end_object();

    w.key("risk_point");
    w.number_array(risk.point);
    w.key("acceptable");
    w.value(is_acceptable(risk));
    w.end_object();

    const std::string text = std::move(w).take();
    out << text;
    if (!cfg.out_path.empty()) save_atomic(cfg.out_path, text);

    if (!cfg.svg_path.empty()) {
        if (!std::holds_alternative<SupportRegion>(region))
            throw ConfigError("svg: the halfspace region is unbounded; no polygon to draw");
        if (d != 2) throw ConfigError("svg: rendering needs a 2-dimensional distribution");
        const auto poly = region_polygon(std::get<SupportRegion>(region));
        const std::array<double, 2> corner = {-risk.point[0], -risk.point[1]};
        save_atomic(cfg.svg_path, region_svg(poly, corner));
    }
    return 0;
}

int cmd_axioms(const AxiomsConfig& cfg, std::ostream& out) {
    if (cfg.suite != "risk" && cfg.suite != "region" && cfg.suite != "all")
        throw ConfigError("unknown axiom suite: " + cfg.suite + " (expected risk|region|all)");
    const std::uint64_t seed = cfg.seed_set ? cfg.seed : seed_from_env(cfg.seed);

    std::vector<axioms::AxiomReport> reports;
    auto run_ids = [&](const std::string& suite) {
        const auto ids = suite == "risk" ? axioms::risk_ids() : axioms::region_ids();
        const std::uint64_t trials = suite == "risk" ? cfg.risk_trials : cfg.region_trials;
        for (const auto& id : ids) {
            if (!cfg.id.empty() && cfg.id != id) continue;
            reports.push_back(suite == "risk" ? axioms::check_risk_axioms(id, seed, trials)
                                              : axioms::check_region_axioms(id, seed, trials));
        }
    };
    if (cfg.suite != "region") run_ids("risk");
    if (cfg.suite != "risk") run_ids("region");
    if (reports.empty()) throw ConfigError("no axiom suite matches id '" + cfg.id + "'");

    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed();

    JsonWriter w;
    w.begin_object();
    w.key("schema");
    w.value(1);
    w.key("command");
    w.value("axioms");
    w.key("seed");
    w.value_seed(seed);
    w.key("passed");
    w.value(all_passed);
    w.key("reports");
    w.begin_array();
    for (const auto& r : reports) axiom_report_object(w, r);
    w.end_array();
    w.end_object();

    const std::string text = std::move(w).take();
    out << text;
    if (!cfg.out_path.empty()) save_atomic(cfg.out_path, text);
    return all_passed ? 0 : 1;
}

int cmd_svg(const SvgConfig& cfg) {
    if (cfg.out_path.empty()) throw ConfigError("svg: no output path given");
    const EmpiricalDist dist = load_dist(cfg.dist_path);
    if (dist.dim() != 2) throw ConfigError("svg: rendering needs a 2-dimensional distribution");
    const RieszCone cone = load_cone(cfg.cone_path, 2);
    RegionSpec spec;
    spec.family = parse_family(cfg.family);
    if (spec.family == RegionFamily::Halfspace)
        throw ConfigError("svg: the halfspace region is unbounded; no polygon to draw");
    spec.level = make_level(spec.family, cfg.alpha, cfg.n);
    spec.cone = cone;

    const GridPtr grid = DirectionGrid::make_default(2, cone, cfg.grid_2d);
    const Region region = build_region(dist, spec, grid);
    const auto& sr = std::get<SupportRegion>(region);
    const RiskPoint risk = vector_risk_from_region(sr, cone);
    const std::array<double, 2> corner = {-risk.point[0], -risk.point[1]};
    save_atomic(cfg.out_path, region_svg(polygon_2d(sr), corner));
    return 0;
}

}  // namespace riskgeom::cli
