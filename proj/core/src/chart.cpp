#include "shellcalc/chart.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "shellcalc/derivative.hpp"
#include "shellcalc/parser.hpp"

namespace shellcalc {

const Expr* DerivedVar::gradient(const std::string& base) const {
    for (const auto& [b, g] : gradients) {
        if (b == base) return &g;
    }
    return nullptr;
}

Chart::Chart(std::vector<std::string> base, std::vector<DerivedVar> derived)
    : base_(std::move(base)), derived_(std::move(derived)) {
    std::set<std::string> names(base_.begin(), base_.end());
    if (names.size() != base_.size()) throw EvalError("chart: duplicate base variable");
    for (const DerivedVar& d : derived_) {
        if (d.branch != 1 && d.branch != -1) {
            throw EvalError("chart: branch must be +1 or -1 for " + d.name);
        }
        if (!names.insert(d.name).second) {
            throw EvalError("chart: duplicate variable " + d.name);
        }
        for (const std::string& s : free_symbols(d.def)) {
            if (!is_base(s)) {
                throw EvalError("chart: definition of " + d.name +
                                " uses non-base symbol " + s);
            }
        }
        for (const auto& [b, g] : d.gradients) {
            if (!is_base(b)) {
                throw EvalError("chart: gradient of " + d.name +
                                " keyed by non-base symbol " + b);
            }
            (void)g;
        }
    }
    // Single level of nesting: gradients may reference base and derived names.
    for (const DerivedVar& d : derived_) {
        for (const auto& [b, g] : d.gradients) {
            for (const std::string& s : free_symbols(g)) {
                if (!has_variable(s)) {
                    throw EvalError("chart: gradient d" + d.name + "/d" + b +
                                    " uses unknown symbol " + s);
                }
            }
        }
    }
}

Chart Chart::standard(int branch, bool with_mass_gradient) {
    Expr def = parse("sqrt(m^2 + p1^2 + p2^2 + p3^2)");
    DerivedVar energy;
    energy.name = "E";
    energy.def = def;
    energy.branch = branch;
    energy.gradients = {
        {"p1", parse("p1/E")},
        {"p2", parse("p2/E")},
        {"p3", parse("p3/E")},
    };
    if (with_mass_gradient) energy.gradients.emplace_back("m", parse("m/E"));
    return Chart({"p1", "p2", "p3", "m"}, {energy});
}

bool Chart::is_base(const std::string& name) const {
    return std::find(base_.begin(), base_.end(), name) != base_.end();
}

bool Chart::is_derived(const std::string& name) const {
    for (const DerivedVar& d : derived_) {
        if (d.name == name) return true;
    }
    return false;
}

const DerivedVar& Chart::derived_var(const std::string& name) const {
    for (const DerivedVar& d : derived_) {
        if (d.name == name) return d;
    }
    throw EvalError("chart: unknown derived variable " + name);
}

Expr Chart::defining(const std::string& derived_name) const {
    const DerivedVar& d = derived_var(derived_name);
    return d.branch < 0 ? Expr::neg(d.def) : d.def;
}

Bindings Chart::extend_on_shell(Bindings point) const {
    for (const DerivedVar& d : derived_) {
        if (point.count(d.name)) continue;
        point[d.name] = eval(defining(d.name), point);
    }
    return point;
}

double Chart::gradient_consistency_residual(std::uint64_t seed, int trials) const {
    double worst = 0.0;
    for (const DerivedVar& d : derived_) {
        Expr def = defining(d.name);
        for (const auto& [b, g] : d.gradients) {
            Expr direct = diff_explicit(def, b);
            Expr substituted = subst(g, d.name, def);
            Sampler s = base_sampler(sub_seed(seed, d.name + "/" + b));
            worst = std::max(worst, max_residual(direct, substituted, s, trials));
        }
    }
    return worst;
}

Sampler Chart::base_sampler(std::uint64_t seed) const {
    std::map<std::string, SampleRange> ranges;
    auto standard = standard_base_ranges();
    for (const std::string& b : base_) {
        auto it = standard.find(b);
        ranges[b] = it != standard.end() ? it->second : SampleRange{0.5, 2.0, false};
    }
    return RangeSampler(std::move(ranges), seed);
}

Chart Chart::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> base = j.at("base").get<std::vector<std::string>>();
    std::vector<DerivedVar> derived;
    for (const auto& dj : j.at("derived")) {
        DerivedVar d;
        d.name = dj.at("name").get<std::string>();
        d.def = parse(dj.at("def").get<std::string>());
        d.branch = dj.value("branch", 1);
        for (const auto& [key, val] : dj.at("grad").items()) {
            d.gradients.emplace_back(key, parse(val.get<std::string>()));
        }
        std::sort(d.gradients.begin(), d.gradients.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        derived.push_back(std::move(d));
    }
    return Chart(std::move(base), std::move(derived));
}

Chart Chart::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open chart file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Chart::to_json_text() const {
    nlohmann::json j;
    j["base"] = base_;
    j["derived"] = nlohmann::json::array();
    for (const DerivedVar& d : derived_) {
        nlohmann::json dj;
        dj["name"] = d.name;
        dj["def"] = to_string(d.def);
        dj["branch"] = d.branch;
        nlohmann::json grad;
        for (const auto& [b, g] : d.gradients) grad[b] = to_string(g);
        dj["grad"] = std::move(grad);
        j["derived"].push_back(std::move(dj));
    }
    return j.dump(2);
}

}  // namespace shellcalc
