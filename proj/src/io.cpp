#include "sqtransfer/io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace sqt::io {

Equation equation_from_json(const json& j) {
    if (!j.contains("c") || !j["c"].is_array())
        throw std::invalid_argument("equation JSON needs an array field \"c\"");
    return make_equation(j["c"].get<std::vector<long long>>());
}

json equation_to_json(const Equation& eq) {
    json j;
    j["c"] = eq.coeffs;
    j["s"] = eq.s();
    j["sum_zero"] = eq.sum_zero;
    j["n_pos"] = eq.n_pos;
    j["n_neg"] = eq.n_neg;
    return j;
}

SubspaceFamily family_from_json(const json& j) {
    Equation eq = equation_from_json(j);
    if (!j.contains("forms") || !j["forms"].is_array())
        throw std::invalid_argument("family JSON needs an array field \"forms\"");
    std::vector<std::vector<std::vector<long long>>> forms;
    for (const auto& f : j["forms"]) {
        if (!f.is_array() || f.empty())
            throw std::invalid_argument("each form must be a nonempty array");
        if (f[0].is_array())
            forms.push_back(f.get<std::vector<std::vector<long long>>>());
        else
            forms.push_back({f.get<std::vector<long long>>()});
    }
    return make_family(std::move(eq), std::move(forms));
}

json family_to_json(const SubspaceFamily& fam) {
    json j = equation_to_json(fam.eq);
    json forms = json::array();
    for (const auto& sub : fam.subs) {
        json s;
        s["forms"] = sub.forms;
        s["contains_diagonal"] = sub.contains_diagonal;
        forms.push_back(s);
    }
    j["subspaces"] = forms;
    return j;
}

std::vector<long long> set_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("set JSON must be an array");
    auto v = j.get<std::vector<long long>>();
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!v.empty() && v.front() < 1)
        throw std::invalid_argument("set elements must be positive");
    return v;
}

Equation equation_from_string(const std::string& text) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<long long> c;
    long long v;
    while (in >> v) c.push_back(v);
    if (!in.eof()) throw std::invalid_argument("equation: expected integers, got \"" + text + "\"");
    return make_equation(std::move(c));
}

void write_majorant_csv(std::ostream& os, const Majorant& m) {
    os << "n,numerator,scale_num,scale_den\n";
    for (const auto& [n, numer] : m.entries)
        os << n << ',' << numer << ',' << m.scale_num << ',' << m.scale_den << '\n';
}

json majorant_to_json(const Majorant& m) {
    json j;
    j["support_len"] = m.support_len;
    j["scale_num"] = m.scale_num;
    j["scale_den"] = m.scale_den;
    json entries = json::array();
    for (const auto& [n, numer] : m.entries) entries.push_back(json::array({n, numer}));
    j["entries"] = entries;
    return j;
}

}  // namespace sqt::io
