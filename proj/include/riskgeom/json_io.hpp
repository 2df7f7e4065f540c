#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "riskgeom/axioms.hpp"
#include "riskgeom/cone.hpp"
#include "riskgeom/empirical.hpp"

// Input side: tolerant JSON parsing (nlohmann) with data errors that name the
// offending field.  Output side: a hand-rolled writer with a fixed key order
// and %.17g floats so repeated runs produce byte-identical reports.

namespace riskgeom {

// Pretty-printing JSON emitter.  Keys appear exactly in call order; numbers
// are rendered with %.17g (round-trip exact for doubles); 64-bit seeds are
// written as decimal strings to survive double-precision JSON readers.
class JsonWriter {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(std::string_view k);

    void value(double v);
    void value(int v);
    void value(std::uint64_t v);
    void value(bool v);
    void value(std::string_view v);
    // Literals must not decay to the bool overload.
    void value(const char* v) { value(std::string_view(v)); }
    void value_seed(std::uint64_t v);  // decimal string

    // Single-line numeric array, e.g. [1, 0.5, -2].
    void number_array(std::span<const double> xs);

    std::string take();

private:
    struct Frame {
        bool array = false;
        std::size_t n = 0;
    };

    void pre();
    void newline();

    std::string out_;
    std::vector<Frame> stack_;
    bool after_key_ = false;
};

// Write content to path via a temp file + rename so readers never observe a
// torn report.
void save_atomic(const std::string& path, std::string_view content);

std::string read_file(const std::string& path);

// Parses the file or throws DataError naming the path and parse position.
nlohmann::json load_json_file(const std::string& path);

// {"points": [[...], ...], "weights": [...]} with weights optional.
EmpiricalDist dist_from_json(const nlohmann::json& j);

// {"A": [[...], ...]}; a missing/null value means the coordinate cone.
RieszCone cone_from_json(const nlohmann::json& j, std::size_t dim);

// Full axiom report with per-check violation lists.
std::string axiom_report_json(const axioms::AxiomReport& report);

// Same object written into an existing stream (for aggregate reports).
void axiom_report_object(JsonWriter& w, const axioms::AxiomReport& report);

}  // namespace riskgeom
