#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contestlab/contest.hpp"
#include "contestlab/cost.hpp"
#include "contestlab/distribution.hpp"

namespace contestlab {

// A fully validated problem instance.
struct Instance {
    ContestConfig config;
    TypeDistribution F;
    CostFunction c;
};

// Reads {"n":..,"m":..,"lambda":..,"F":{"kind":..},"c":{"kind":..}} and
// constructs the model objects, running every invariant check eagerly.
// Violations throw ValidationError with the offending field path.
Instance load_config(const std::string& path);
Instance parse_config(const std::string& json_text);  // same, from a string

// FNV-1a over the canonical (sorted-key) serialization; identifies a config
// in run manifests.
std::uint64_t config_hash(const std::string& json_text);
std::string read_file(const std::string& path);

// "0.25,0.5,1" -> allocation vector for the given contest.
AllocationVector parse_allocation(const std::string& text, const ContestConfig& config);

// "standard" | "reversed" | "random" | "quota:T" | "blind:T" | "custom:v1,v2,..."
AllocationVector parse_mechanism(const std::string& text, const ContestConfig& config);

// 17 significant digits (%.17g), round-trip exact. Used for every float
// written to JSON or CSV so artifacts are byte-stable.
std::string format_double(double x);

// Minimal JSON emitter (objects, arrays, numbers via format_double, strings,
// literals pushed verbatim). nlohmann stays on the parse side; emission is
// pinned to the documented float format.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double x);
    JsonWriter& value(long long x);
    JsonWriter& value(std::uint64_t x);
    JsonWriter& value(int x) { return value(static_cast<long long>(x)); }
    JsonWriter& value(const std::string& s);
    JsonWriter& value_raw(const std::string& token);  // pre-rendered

    std::string str() const { return out_; }

  private:
    void comma();
    void value_escaped(const std::string& s);
    std::string out_;
    std::vector<bool> need_comma_;
    bool after_key_ = false;
};

}  // namespace contestlab
