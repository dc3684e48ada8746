#include "gabdyn/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gabdyn/errors.hpp"

namespace gabdyn {

namespace {

long get_long(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_integer()) throw input_error("config: " + what + " must be an integer");
    return j.get<long>();
}

}  // namespace

JobConfig JobConfig::parse(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("config: top level must be an object");
    if (!j.contains("gamma") || !j["gamma"].is_array() || j["gamma"].size() != 3)
        throw input_error("config: 'gamma' must be an array of 3 positive integers");

    const long g1 = get_long(j["gamma"][0], "gamma[0]");
    const long g2 = get_long(j["gamma"][1], "gamma[1]");
    const long g3 = get_long(j["gamma"][2], "gamma[2]");
    JobConfig cfg{CuspTriple(g1, g2, g3), {}, 36};

    if (j.contains("generators")) {
        if (!j["generators"].is_array()) throw input_error("config: 'generators' must be an array");
        for (const auto& gen : j["generators"]) {
            if (!gen.is_object() || !gen.contains("num") || !gen.contains("den") ||
                !gen["num"].is_array() || gen["num"].size() != 3)
                throw input_error("config: each generator needs 'num' (3 integers) and 'den'");
            const long den = get_long(gen["den"], "generator den");
            if (den <= 0) throw input_error("config: generator 'den' must be positive");
            cfg.generators.emplace_back(frac(get_long(gen["num"][0], "generator num"), den),
                                        frac(get_long(gen["num"][1], "generator num"), den),
                                        frac(get_long(gen["num"][2], "generator num"), den));
        }
    }
    if (j.contains("order_bound")) {
        cfg.order_bound = get_long(j["order_bound"], "order_bound");
        if (cfg.order_bound < 1) throw input_error("config: 'order_bound' must be >= 1");
    }
    // Validate generators eagerly so malformed configs fail before any work.
    for (const GroupElement& g : cfg.generators) {
        (void)close_generators(cfg.triple, {g});
    }
    return cfg;
}

JobConfig JobConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace gabdyn
