#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "moho/rng.hpp"

namespace moho {

enum class ParamKind { Continuous, Integer, Categorical };

// A single hyperparameter value: double for continuous, int64 for integer,
// category label for categorical.
using ParamValue = std::variant<double, std::int64_t, std::string>;

struct HyperparameterSpec {
    std::string name;
    ParamKind kind = ParamKind::Continuous;
    double lower = 0.0;   // continuous/integer only
    double upper = 0.0;   // inclusive
    std::vector<std::string> categories;  // categorical only
    bool log_scale = false;
    ParamValue default_value;

    void validate() const;
    bool value_legal(const ParamValue& v) const;

    // Bounds of the surrogate encoding of this dimension.
    double encoded_lower() const;
    double encoded_upper() const;
};

// A point in a configuration space; one value per spec, in spec order.
struct Configuration {
    std::vector<ParamValue> values;

    bool operator==(const Configuration& other) const = default;
};

// Mixed search space. `fixed` pins individual dimensions to constants; a
// reduced space is the original spec list plus a non-empty `fixed` map.
class ConfigSpace {
public:
    ConfigSpace() = default;
    explicit ConfigSpace(std::vector<HyperparameterSpec> specs,
                         std::map<int, ParamValue> fixed = {});

    const std::vector<HyperparameterSpec>& specs() const { return specs_; }
    const HyperparameterSpec& spec(int j) const { return specs_[static_cast<size_t>(j)]; }
    const std::map<int, ParamValue>& fixed() const { return fixed_; }
    int size() const { return static_cast<int>(specs_.size()); }
    int tunable_count() const { return size() - static_cast<int>(fixed_.size()); }
    bool is_fixed(int j) const { return fixed_.count(j) != 0; }

    bool contains(const Configuration& c) const;
    void require_legal(const Configuration& c) const;

    static ConfigSpace from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;

private:
    std::vector<HyperparameterSpec> specs_;
    std::map<int, ParamValue> fixed_;
};

// Uniform sampling: tunable dimensions uniform in their (log-)domain, fixed
// dimensions take their constants.
std::vector<Configuration> sample(const ConfigSpace& space, int count, Rng& rng);
Configuration sample_one(const ConfigSpace& space, Rng& rng);

// Fixes every dimension outside `important` to the anchor's value. Always
// starts from the original spec list; any pre-existing `fixed` is discarded.
ConfigSpace reduce(const ConfigSpace& space, const std::set<int>& important,
                   const Configuration& anchor);

// Per-spec defaults, overridden by the space's fixed constants.
Configuration default_configuration(const ConfigSpace& space);

// Surrogate input representation: continuous -> value (ln if log-scaled),
// integer -> value as real, categorical -> ordinal index.
std::vector<double> encode(const Configuration& config, const ConfigSpace& space);
double encode_value(const ParamValue& v, const HyperparameterSpec& spec);
ParamValue decode_value(double encoded, const HyperparameterSpec& spec);

// Each neighbor mutates exactly one tunable dimension: continuous/integer by
// a Gaussian step (sigma = 0.2 of the encoded range, clipped), categorical by
// resampling to a different category. Throws if tunable_count() == 0.
std::vector<Configuration> neighbors(const Configuration& config,
                                     const ConfigSpace& space, int count,
                                     Rng& rng);

}  // namespace moho
