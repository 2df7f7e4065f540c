#include "riskgeom/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "riskgeom/errors.hpp"

namespace riskgeom {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) throw ConfigError("json: refusing to write a non-finite number");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string escape(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

}  // namespace

void JsonWriter::newline() {
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
}

void JsonWriter::pre() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!stack_.empty()) {
        if (stack_.back().n++ > 0) out_ += ',';
        newline();
    }
}

void JsonWriter::begin_object() {
    pre();
    out_ += '{';
    stack_.push_back({false, 0});
}

void JsonWriter::end_object() {
    const bool had = stack_.back().n > 0;
    stack_.pop_back();
    if (had) newline();
    out_ += '}';
}

void JsonWriter::begin_array() {
    pre();
    out_ += '[';
    stack_.push_back({true, 0});
}

void JsonWriter::end_array() {
    const bool had = stack_.back().n > 0;
    stack_.pop_back();
    if (had) newline();
    out_ += ']';
}

void JsonWriter::key(std::string_view k) {
    if (stack_.back().n++ > 0) out_ += ',';
    newline();
    out_ += escape(k);
    out_ += ": ";
    after_key_ = true;
}

void JsonWriter::value(double v) {
    pre();
    out_ += format_double(v);
}

void JsonWriter::value(int v) {
    pre();
    out_ += std::to_string(v);
}

void JsonWriter::value(std::uint64_t v) {
    pre();
    out_ += std::to_string(v);
}

void JsonWriter::value(bool v) {
    pre();
    out_ += v ? "true" : "false";
}

void JsonWriter::value(std::string_view v) {
    pre();
    out_ += escape(v);
}

void JsonWriter::value_seed(std::uint64_t v) {
    pre();
    out_ += '"';
    out_ += std::to_string(v);
    out_ += '"';
}

void JsonWriter::number_array(std::span<const double> xs) {
    pre();
    out_ += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out_ += ", ";
        out_ += format_double(xs[i]);
    }
    out_ += ']';
}

std::string JsonWriter::take() {
    out_ += '\n';
    return std::move(out_);
}

void save_atomic(const std::string& path, std::string_view content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot open for writing: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw DataError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw DataError("rename failed: " + tmp + " -> " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json load_json_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("json parse error in " + path + ": " + e.what());
    }
}

EmpiricalDist dist_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("points"))
        throw DataError("distribution json: expected an object with a \"points\" array");
    const auto& pts = j.at("points");
    if (!pts.is_array() || pts.empty())
        throw DataError("distribution json: \"points\" must be a non-empty array of rows");
    std::vector<Vec> rows;
    rows.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& row = pts[i];
        if (!row.is_array() || row.empty())
            throw DataError("distribution json: points[" + std::to_string(i) +
                            "] must be a non-empty array");
        Vec r;
        for (const auto& cell : row) {
            if (!cell.is_number())
                throw DataError("distribution json: non-numeric coordinate in points[" +
                                std::to_string(i) + "]");
            r.push_back(cell.get<double>());
        }
        rows.push_back(std::move(r));
    }
    std::vector<double> weights;
    if (j.contains("weights") && !j.at("weights").is_null()) {
        const auto& w = j.at("weights");
        if (!w.is_array())
            throw DataError("distribution json: \"weights\" must be an array");
        for (const auto& cell : w) {
            if (!cell.is_number())
                throw DataError("distribution json: non-numeric weight");
            weights.push_back(cell.get<double>());
        }
    }
    try {
        return EmpiricalDist(rows, std::move(weights));
    } catch (const ConfigError& e) {
        throw DataError(std::string("distribution json: ") + e.what());
    }
}

RieszCone cone_from_json(const nlohmann::json& j, std::size_t dim) {
    if (j.is_null()) return RieszCone::identity(dim);
    const nlohmann::json* rows = nullptr;
    if (j.is_object() && j.contains("A"))
        rows = &j.at("A");
    else if (j.is_array())
        rows = &j;
    else
        throw DataError("cone json: expected {\"A\": [[...], ...]} or a bare matrix");
    if (!rows->is_array() || rows->size() != dim)
        throw DataError("cone json: \"A\" must be a " + std::to_string(dim) + "x" +
                        std::to_string(dim) + " matrix");
    Matrix a(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = (*rows)[i];
        if (!row.is_array() || row.size() != dim)
            throw DataError("cone json: row " + std::to_string(i) + " must have " +
                            std::to_string(dim) + " entries");
        for (std::size_t k = 0; k < dim; ++k) {
            if (!row[k].is_number())
                throw DataError("cone json: non-numeric entry in row " + std::to_string(i));
            a(i, k) = row[k].get<double>();
        }
    }
    return RieszCone(std::move(a));
}

std::string axiom_report_json(const axioms::AxiomReport& report) {
    JsonWriter w;
    axiom_report_object(w, report);
    return std::move(w).take();
}

void axiom_report_object(JsonWriter& w, const axioms::AxiomReport& report) {
    w.begin_object();
    w.key("schema");
    w.value(1);
    w.key("suite");
    w.value(report.suite);
    w.key("id");
    w.value(report.id);
    w.key("seed");
    w.value_seed(report.seed);
    w.key("trials");
    w.value(report.trials);
    w.key("passed");
    w.value(report.passed());
    w.key("checks");
    w.begin_array();
    for (const auto& c : report.checks) {
        w.begin_object();
        w.key("axiom");
        w.value(c.axiom);
        w.key("trials");
        w.value(c.trials);
        w.key("tolerance");
        w.value(c.tolerance);
        w.key("expect_violation");
        w.value(c.expect_violation);
        w.key("structural");
        w.value(c.structural);
        w.key("passed");
        w.value(c.passed());
        w.key("violations");
        w.begin_array();
        for (const auto& v : c.violations) {
            w.begin_object();
            w.key("trial");
            w.value(v.trial);
            w.key("seed");
            w.value_seed(v.seed);
            w.key("digest");
            w.value(v.digest);
            w.key("lhs");
            w.value(v.lhs);
            w.key("rhs");
            w.value(v.rhs);
            w.key("gap");
            w.value(v.gap);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

}  // namespace riskgeom
