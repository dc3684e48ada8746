#include "gabdyn/analysis.hpp"

#include <sstream>

#include <json.hpp>

namespace gabdyn {

Analysis analyze(const CuspTriple& t, const SymmetryGroup& G) {
    return Analysis{t, compute_stats(G), gabrielov_numbers(t, G), cohomology_dims(t, G)};
}

namespace {

std::string join_longs(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string render_text(const Analysis& a) {
    std::ostringstream os;
    os << "cusp triple gamma' = " << a.triple.to_string() << ", delta = " << a.triple.delta()
       << ", mu' = " << a.dims.mu_prime << "\n";
    os << "|G| = " << a.stats.order << "\n";
    os << "elements (exponents, age, N_g):\n";
    for (const auto& e : a.stats.age_table)
        os << "  " << e.g.to_string() << "  age " << e.age << "  N_g " << e.fixed_dim << "\n";
    os << "n = (" << a.stats.n[0] << "," << a.stats.n[1] << "," << a.stats.n[2] << "), j_G = " << a.stats.j_g
       << "\n";
    const long rhs = 1 + 2 * a.stats.j_g + (a.stats.n[0] - 1) + (a.stats.n[1] - 1) + (a.stats.n[2] - 1);
    os << "order identity: |G| = 1 + 2 j_G + sum(n_i - 1): " << a.stats.order << " = " << rhs
       << (a.stats.identity_holds ? "  ok" : "  FAILED") << "\n";
    os << "gamma = (" << a.gabrielov.gamma[0] << "," << a.gabrielov.gamma[1] << "," << a.gabrielov.gamma[2]
       << ")\n";
    os << "Gabrielov numbers: {" << join_longs(a.gabrielov.multiset) << "}\n";
    os << "dim H_2(Y) = " << a.dims.h2_y << "\n";
    os << "dim H_4(Y) = dim H_2(Y,Z) = " << a.dims.h4_y << "\n";
    os << "dim H_3(Y,Z) = " << a.dims.h3_yz << "\n";
    os << "dim H^2(V)^G = " << a.dims.h2_v_invariant << "\n";
    return os.str();
}

std::string render_json(const Analysis& a) {
    nlohmann::ordered_json j;
    j["gamma_prime"] = a.triple.gamma_prime();
    j["delta"] = a.triple.delta();
    j["mu_prime"] = a.dims.mu_prime;
    j["order"] = a.stats.order;
    j["elements"] = nlohmann::ordered_json::array();
    for (const auto& e : a.stats.age_table) {
        nlohmann::ordered_json el;
        el["exponents"] = {e.g.exponent(1).get_str(), e.g.exponent(2).get_str(), e.g.exponent(3).get_str()};
        el["age"] = e.age;
        el["fixed_dim"] = e.fixed_dim;
        j["elements"].push_back(el);
    }
    j["n"] = a.stats.n;
    j["j_g"] = a.stats.j_g;
    j["order_identity_holds"] = a.stats.identity_holds;
    j["gamma"] = a.gabrielov.gamma;
    j["gabrielov_multiset"] = a.gabrielov.multiset;
    j["dims"] = {{"h2_y", a.dims.h2_y},
                 {"h4_y", a.dims.h4_y},
                 {"h3_yz", a.dims.h3_yz},
                 {"h2_v_invariant", a.dims.h2_v_invariant}};
    return j.dump(2) + "\n";
}

}  // namespace gabdyn
