#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

namespace warpds::harness {

using nlohmann::json;

const std::vector<std::string>& known_suites()
{
    static const std::vector<std::string> names{
        "geometry", "covering",    "lie",          "wedges",   "car",
        "deformation", "oracle",   "locality",     "fixed_point", "inequivalence",
        "borchers", "negative_controls"};
    return names;
}

double RunConfig::tolerance(const std::string& suite, double fallback) const
{
    const auto it = tolerances.find(suite);
    return it == tolerances.end() ? fallback : it->second;
}

RunConfig default_config()
{
    RunConfig c;
    c.model = default_model_spec();
    return c;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ConfigError(where + ": " + what);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys)
{
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& [k, v] : j.items())
        if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; }))
            fail(where, "unknown key '" + k + "'");
}

double number(const json& j, const std::string& where)
{
    if (!j.is_number()) fail(where, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(where, "must be finite");
    return v;
}

int integer(const json& j, const std::string& where)
{
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

std::vector<double> numbers(const json& j, const std::string& where)
{
    if (!j.is_array()) fail(where, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

void parse_model(const json& j, ModelSpec& m)
{
    only_keys(j, "model",
              {"d_plus", "d_minus", "boost_freqs_plus", "boost_freqs_minus", "localized_modes",
               "reflection_pairs", "rotation_angle", "seed"});
    if (j.contains("d_plus")) m.d_plus = integer(j["d_plus"], "model.d_plus");
    if (j.contains("d_minus")) m.d_minus = integer(j["d_minus"], "model.d_minus");
    if (j.contains("boost_freqs_plus")) m.boost_freqs_plus = numbers(j["boost_freqs_plus"], "model.boost_freqs_plus");
    if (j.contains("boost_freqs_minus"))
        m.boost_freqs_minus = numbers(j["boost_freqs_minus"], "model.boost_freqs_minus");
    if (j.contains("localized_modes")) {
        const json& a = j["localized_modes"];
        if (!a.is_array()) fail("model.localized_modes", "expected an array of integers");
        m.localized_modes.clear();
        for (std::size_t i = 0; i < a.size(); ++i)
            m.localized_modes.push_back(integer(a[i], "model.localized_modes[" + std::to_string(i) + "]"));
    }
    if (j.contains("reflection_pairs")) {
        const json& a = j["reflection_pairs"];
        if (!a.is_array()) fail("model.reflection_pairs", "expected an array of [i, j] pairs");
        m.reflection_pairs.clear();
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string w = "model.reflection_pairs[" + std::to_string(i) + "]";
            if (!a[i].is_array() || a[i].size() != 2) fail(w, "expected a pair [i, j]");
            m.reflection_pairs.emplace_back(integer(a[i][0], w), integer(a[i][1], w));
        }
    }
    if (j.contains("rotation_angle")) {
        if (j["rotation_angle"].is_null()) m.rotation_angle.reset();
        else m.rotation_angle = number(j["rotation_angle"], "model.rotation_angle");
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<std::int64_t>() >= 0))
            fail("model.seed", "expected a non-negative integer");
        m.seed = j["seed"].get<std::uint64_t>();
    }
}

}  // namespace

void validate(RunConfig& c)
{
    const ModelSpec& m = c.model;
    if (m.d_plus < 0 || m.d_minus < 0) fail("model", "d_plus and d_minus must be non-negative");
    if (m.d_plus + m.d_minus > kMaxModes)
        fail("model", "d_plus + d_minus = " + std::to_string(m.d_plus + m.d_minus) + " exceeds the guard " +
                          std::to_string(kMaxModes) + " (Fock dimension <= 1024)");
    for (double k : c.kappas)
        if (!std::isfinite(k)) fail("deformation.kappa", "must be finite");
    if (c.kappas.empty()) fail("deformation.kappa", "needs at least one value");

    const auto& names = known_suites();
    std::set<std::string> seen;
    for (const auto& s : c.suites) {
        if (std::find(names.begin(), names.end(), s) == names.end()) fail("suites", "unknown suite '" + s + "'");
        if (!seen.insert(s).second) fail("suites", "suite '" + s + "' listed twice");
    }
    for (const auto& [s, t] : c.tolerances) {
        if (std::find(names.begin(), names.end(), s) == names.end())
            fail("tolerances", "unknown suite '" + s + "'");
        if (!std::isfinite(t) || t < 0.0) fail("tolerances." + s, "must be a finite non-negative number");
    }
    if (c.format != "json" && c.format != "csv") fail("output.format", "must be 'json' or 'csv'");
    if (c.output_dir.empty()) fail("output.directory", "must not be empty");

    // model-level consistency (pairing, frequencies, ...) is checked by the model itself
    try {
        OneParticleModel probe(c.model);
    } catch (const ModelError& e) {
        fail("model", e.what());
    } catch (const DomainError& e) {
        fail("model", e.what());
    }
}

RunConfig parse_config(const json& j)
{
    RunConfig c = default_config();
    only_keys(j, "config", {"model", "deformation", "tolerances", "suites", "output"});
    if (j.contains("model")) parse_model(j["model"], c.model);
    if (j.contains("deformation")) {
        only_keys(j["deformation"], "deformation", {"kappa"});
        if (j["deformation"].contains("kappa")) c.kappas = numbers(j["deformation"]["kappa"], "deformation.kappa");
    }
    if (j.contains("tolerances")) {
        if (!j["tolerances"].is_object()) fail("tolerances", "expected an object of suite -> number");
        for (const auto& [k, v] : j["tolerances"].items()) c.tolerances[k] = number(v, "tolerances." + k);
    }
    if (j.contains("suites")) {
        if (!j["suites"].is_array()) fail("suites", "expected an array of names");
        for (const auto& s : j["suites"]) {
            if (!s.is_string()) fail("suites", "expected an array of names");
            c.suites.push_back(s.get<std::string>());
        }
    }
    if (j.contains("output")) {
        only_keys(j["output"], "output", {"directory", "format"});
        if (j["output"].contains("directory")) {
            if (!j["output"]["directory"].is_string()) fail("output.directory", "expected a string");
            c.output_dir = j["output"]["directory"].get<std::string>();
        }
        if (j["output"].contains("format")) {
            if (!j["output"]["format"].is_string()) fail("output.format", "expected a string");
            c.format = j["output"]["format"].get<std::string>();
        }
    }
    validate(c);
    return c;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

json to_json(const RunConfig& c)
{
    const ModelSpec& m = c.model;
    json pairs = json::array();
    for (auto [a, b] : m.reflection_pairs) pairs.push_back({a, b});
    json model{{"d_plus", m.d_plus},
               {"d_minus", m.d_minus},
               {"boost_freqs_plus", m.boost_freqs_plus},
               {"boost_freqs_minus", m.boost_freqs_minus},
               {"localized_modes", m.localized_modes},
               {"reflection_pairs", pairs},
               {"rotation_angle", m.rotation_angle ? json(*m.rotation_angle) : json(nullptr)},
               {"seed", m.seed}};
    return {{"model", model},
            {"deformation", {{"kappa", c.kappas}}},
            {"tolerances", c.tolerances},
            {"suites", c.suites.empty() ? known_suites() : c.suites},
            {"output", {{"directory", c.output_dir}, {"format", c.format}}}};
}

}  // namespace warpds::harness
