#include "moho/configspace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace moho {

namespace {

std::string kind_name(ParamKind k) {
    switch (k) {
        case ParamKind::Continuous: return "continuous";
        case ParamKind::Integer: return "integer";
        case ParamKind::Categorical: return "categorical";
    }
    return "?";
}

ParamKind kind_from_name(const std::string& s) {
    if (s == "continuous") return ParamKind::Continuous;
    if (s == "integer") return ParamKind::Integer;
    if (s == "categorical") return ParamKind::Categorical;
    throw std::invalid_argument("unknown hyperparameter kind: " + s);
}

}  // namespace

void HyperparameterSpec::validate() const {
    if (name.empty()) throw std::invalid_argument("hyperparameter needs a name");
    switch (kind) {
        case ParamKind::Continuous:
            if (!(lower < upper))
                throw std::invalid_argument(name + ": continuous requires lower < upper");
            if (log_scale && !(lower > 0.0))
                throw std::invalid_argument(name + ": log scale requires lower > 0");
            break;
        case ParamKind::Integer:
            if (!(lower <= upper))
                throw std::invalid_argument(name + ": integer requires lower <= upper");
            if (std::floor(lower) != lower || std::floor(upper) != upper)
                throw std::invalid_argument(name + ": integer bounds must be integral");
            if (log_scale && !(lower > 0.0))
                throw std::invalid_argument(name + ": log scale requires lower > 0");
            break;
        case ParamKind::Categorical: {
            if (categories.size() < 2)
                throw std::invalid_argument(name + ": categorical needs >= 2 categories");
            std::set<std::string> distinct(categories.begin(), categories.end());
            if (distinct.size() != categories.size())
                throw std::invalid_argument(name + ": duplicate categories");
            if (log_scale)
                throw std::invalid_argument(name + ": log scale is not defined for categorical");
            break;
        }
    }
    if (!value_legal(default_value))
        throw std::invalid_argument(name + ": default value is not in the domain");
}

bool HyperparameterSpec::value_legal(const ParamValue& v) const {
    switch (kind) {
        case ParamKind::Continuous: {
            const double* x = std::get_if<double>(&v);
            return x && std::isfinite(*x) && *x >= lower && *x <= upper;
        }
        case ParamKind::Integer: {
            const std::int64_t* x = std::get_if<std::int64_t>(&v);
            return x && *x >= static_cast<std::int64_t>(lower) &&
                   *x <= static_cast<std::int64_t>(upper);
        }
        case ParamKind::Categorical: {
            const std::string* x = std::get_if<std::string>(&v);
            return x && std::find(categories.begin(), categories.end(), *x) !=
                            categories.end();
        }
    }
    return false;
}

double HyperparameterSpec::encoded_lower() const {
    if (kind == ParamKind::Categorical) return 0.0;
    if (kind == ParamKind::Continuous && log_scale) return std::log(lower);
    return lower;
}

double HyperparameterSpec::encoded_upper() const {
    if (kind == ParamKind::Categorical)
        return static_cast<double>(categories.size() - 1);
    if (kind == ParamKind::Continuous && log_scale) return std::log(upper);
    return upper;
}

ConfigSpace::ConfigSpace(std::vector<HyperparameterSpec> specs,
                         std::map<int, ParamValue> fixed)
    : specs_(std::move(specs)), fixed_(std::move(fixed)) {
    std::set<std::string> names;
    for (const auto& s : specs_) {
        s.validate();
        if (!names.insert(s.name).second)
            throw std::invalid_argument("duplicate hyperparameter name: " + s.name);
    }
    for (const auto& [j, v] : fixed_) {
        if (j < 0 || j >= size())
            throw std::invalid_argument("fixed index out of range");
        if (!specs_[static_cast<size_t>(j)].value_legal(v))
            throw std::invalid_argument("fixed value illegal for " +
                                        specs_[static_cast<size_t>(j)].name);
    }
}

bool ConfigSpace::contains(const Configuration& c) const {
    if (static_cast<int>(c.values.size()) != size()) return false;
    for (int j = 0; j < size(); ++j) {
        if (!specs_[static_cast<size_t>(j)].value_legal(c.values[static_cast<size_t>(j)]))
            return false;
        auto it = fixed_.find(j);
        if (it != fixed_.end() && !(c.values[static_cast<size_t>(j)] == it->second))
            return false;
    }
    return true;
}

void ConfigSpace::require_legal(const Configuration& c) const {
    if (!contains(c))
        throw std::invalid_argument("configuration is not legal in this space");
}

static ParamValue value_from_json(const nlohmann::json& v,
                                  const HyperparameterSpec& spec) {
    switch (spec.kind) {
        case ParamKind::Continuous: return v.get<double>();
        case ParamKind::Integer: return v.get<std::int64_t>();
        case ParamKind::Categorical: return v.get<std::string>();
    }
    throw std::invalid_argument("bad value");
}

static nlohmann::json value_to_json(const ParamValue& v) {
    if (const double* x = std::get_if<double>(&v)) return *x;
    if (const std::int64_t* x = std::get_if<std::int64_t>(&v)) return *x;
    return std::get<std::string>(v);
}

ConfigSpace ConfigSpace::from_json(const nlohmann::json& doc) {
    std::vector<HyperparameterSpec> specs;
    for (const auto& h : doc.at("hyperparameters")) {
        HyperparameterSpec s;
        s.name = h.at("name").get<std::string>();
        s.kind = kind_from_name(h.at("kind").get<std::string>());
        if (s.kind == ParamKind::Categorical) {
            s.categories = h.at("categories").get<std::vector<std::string>>();
        } else {
            s.lower = h.at("lower").get<double>();
            s.upper = h.at("upper").get<double>();
            s.log_scale = h.value("log", false);
        }
        if (h.contains("default")) {
            s.default_value = value_from_json(h.at("default"), s);
        } else if (s.kind == ParamKind::Categorical) {
            s.default_value = s.categories.front();
        } else if (s.kind == ParamKind::Integer) {
            s.default_value = static_cast<std::int64_t>(
                std::llround((s.lower + s.upper) / 2.0));
        } else {
            s.default_value = s.log_scale
                                  ? std::exp((std::log(s.lower) + std::log(s.upper)) / 2.0)
                                  : (s.lower + s.upper) / 2.0;
        }
        specs.push_back(std::move(s));
    }
    std::map<int, ParamValue> fixed;
    if (doc.contains("fixed")) {
        for (const auto& [key, v] : doc.at("fixed").items()) {
            int j = std::stoi(key);
            if (j < 0 || j >= static_cast<int>(specs.size()))
                throw std::invalid_argument("fixed index out of range");
            fixed.emplace(j, value_from_json(v, specs[static_cast<size_t>(j)]));
        }
    }
    return ConfigSpace(std::move(specs), std::move(fixed));
}

nlohmann::json ConfigSpace::to_json() const {
    nlohmann::json hps = nlohmann::json::array();
    for (const auto& s : specs_) {
        nlohmann::json h;
        h["name"] = s.name;
        h["kind"] = kind_name(s.kind);
        if (s.kind == ParamKind::Categorical) {
            h["categories"] = s.categories;
        } else {
            h["lower"] = s.lower;
            h["upper"] = s.upper;
            h["log"] = s.log_scale;
        }
        h["default"] = value_to_json(s.default_value);
        hps.push_back(std::move(h));
    }
    nlohmann::json doc;
    doc["hyperparameters"] = std::move(hps);
    if (!fixed_.empty()) {
        nlohmann::json f = nlohmann::json::object();
        for (const auto& [j, v] : fixed_) f[std::to_string(j)] = value_to_json(v);
        doc["fixed"] = std::move(f);
    }
    return doc;
}

namespace {

ParamValue sample_value(const HyperparameterSpec& spec, Rng& rng) {
    switch (spec.kind) {
        case ParamKind::Continuous:
            if (spec.log_scale)
                return std::exp(rng.uniform(std::log(spec.lower), std::log(spec.upper)));
            return rng.uniform(spec.lower, spec.upper);
        case ParamKind::Integer: {
            if (spec.log_scale) {
                double v = std::exp(rng.uniform(std::log(spec.lower), std::log(spec.upper)));
                auto r = static_cast<std::int64_t>(std::llround(v));
                r = std::max<std::int64_t>(r, static_cast<std::int64_t>(spec.lower));
                r = std::min<std::int64_t>(r, static_cast<std::int64_t>(spec.upper));
                return r;
            }
            return rng.uniform_int(static_cast<std::int64_t>(spec.lower),
                                   static_cast<std::int64_t>(spec.upper));
        }
        case ParamKind::Categorical:
            return spec.categories[rng.uniform_index(spec.categories.size())];
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Configuration sample_one(const ConfigSpace& space, Rng& rng) {
    Configuration c;
    c.values.reserve(static_cast<size_t>(space.size()));
    for (int j = 0; j < space.size(); ++j) {
        auto it = space.fixed().find(j);
        if (it != space.fixed().end()) {
            c.values.push_back(it->second);
        } else {
            c.values.push_back(sample_value(space.spec(j), rng));
        }
    }
    return c;
}

std::vector<Configuration> sample(const ConfigSpace& space, int count, Rng& rng) {
    if (count <= 0) throw std::invalid_argument("sample count must be positive");
    std::vector<Configuration> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(sample_one(space, rng));
    return out;
}

ConfigSpace reduce(const ConfigSpace& space, const std::set<int>& important,
                   const Configuration& anchor) {
    // Reduction is anchored in the original space: ignore any existing `fixed`.
    ConfigSpace original(space.specs());
    original.require_legal(anchor);
    for (int j : important) {
        if (j < 0 || j >= space.size())
            throw std::invalid_argument("important index out of range");
    }
    std::map<int, ParamValue> fixed;
    for (int j = 0; j < space.size(); ++j) {
        if (!important.count(j)) fixed.emplace(j, anchor.values[static_cast<size_t>(j)]);
    }
    return ConfigSpace(space.specs(), std::move(fixed));
}

Configuration default_configuration(const ConfigSpace& space) {
    Configuration c;
    c.values.reserve(static_cast<size_t>(space.size()));
    for (int j = 0; j < space.size(); ++j) {
        auto it = space.fixed().find(j);
        c.values.push_back(it != space.fixed().end() ? it->second
                                                     : space.spec(j).default_value);
    }
    return c;
}

double encode_value(const ParamValue& v, const HyperparameterSpec& spec) {
    switch (spec.kind) {
        case ParamKind::Continuous: {
            double x = std::get<double>(v);
            return spec.log_scale ? std::log(x) : x;
        }
        case ParamKind::Integer:
            return static_cast<double>(std::get<std::int64_t>(v));
        case ParamKind::Categorical: {
            const auto& label = std::get<std::string>(v);
            auto it = std::find(spec.categories.begin(), spec.categories.end(), label);
            return static_cast<double>(it - spec.categories.begin());
        }
    }
    throw std::logic_error("unreachable");
}

ParamValue decode_value(double encoded, const HyperparameterSpec& spec) {
    switch (spec.kind) {
        case ParamKind::Continuous: {
            double x = spec.log_scale ? std::exp(encoded) : encoded;
            return std::min(std::max(x, spec.lower), spec.upper);
        }
        case ParamKind::Integer: {
            auto r = static_cast<std::int64_t>(std::llround(encoded));
            r = std::max<std::int64_t>(r, static_cast<std::int64_t>(spec.lower));
            r = std::min<std::int64_t>(r, static_cast<std::int64_t>(spec.upper));
            return r;
        }
        case ParamKind::Categorical: {
            auto idx = static_cast<size_t>(std::llround(encoded));
            idx = std::min(idx, spec.categories.size() - 1);
            return spec.categories[idx];
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<double> encode(const Configuration& config, const ConfigSpace& space) {
    if (static_cast<int>(config.values.size()) != space.size())
        throw std::invalid_argument("configuration/space size mismatch");
    std::vector<double> out(config.values.size());
    for (int j = 0; j < space.size(); ++j)
        out[static_cast<size_t>(j)] =
            encode_value(config.values[static_cast<size_t>(j)], space.spec(j));
    return out;
}

std::vector<Configuration> neighbors(const Configuration& config,
                                     const ConfigSpace& space, int count,
                                     Rng& rng) {
    if (count <= 0) throw std::invalid_argument("neighbor count must be positive");
    space.require_legal(config);
    std::vector<int> tunable;
    for (int j = 0; j < space.size(); ++j)
        if (!space.is_fixed(j)) tunable.push_back(j);
    if (tunable.empty())
        throw std::invalid_argument("cannot mutate a fully fixed space");

    std::vector<Configuration> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        Configuration n = config;
        int j = tunable[rng.uniform_index(tunable.size())];
        const auto& spec = space.spec(j);
        auto& slot = n.values[static_cast<size_t>(j)];
        if (spec.kind == ParamKind::Categorical) {
            const auto& current = std::get<std::string>(slot);
            // Resample among the other categories.
            size_t pick = rng.uniform_index(spec.categories.size() - 1);
            size_t cur_idx = static_cast<size_t>(
                std::find(spec.categories.begin(), spec.categories.end(), current) -
                spec.categories.begin());
            slot = spec.categories[pick >= cur_idx ? pick + 1 : pick];
        } else {
            double lo = spec.encoded_lower(), hi = spec.encoded_upper();
            double sigma = 0.2 * (hi - lo);
            double enc = encode_value(slot, spec);
            // Integers can round back onto themselves; retry a bounded number
            // of times so a neighbor is an actual move whenever one exists.
            for (int attempt = 0; attempt < 32; ++attempt) {
                double stepped = enc + sigma * rng.normal();
                stepped = std::min(std::max(stepped, lo), hi);
                ParamValue candidate = decode_value(stepped, spec);
                if (!(candidate == slot) || hi == lo) {
                    slot = candidate;
                    break;
                }
                if (attempt == 31) slot = candidate;
            }
        }
        out.push_back(std::move(n));
    }
    return out;
}

}  // namespace moho
