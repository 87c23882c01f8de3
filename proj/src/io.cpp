#include "contestlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "../vendor/json.hpp"
#include "contestlab/errors.hpp"

namespace contestlab {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
    throw ValidationError("config field " + path + ": " + why);
}

const json& get_field(const json& obj, const std::string& path, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end()) bad_field(path + "." + name, "missing");
    return *it;
}

double get_number(const json& obj, const std::string& path, const char* name) {
    const json& v = get_field(obj, path, name);
    if (!v.is_number()) bad_field(path + "." + name, "must be a number");
    return v.get<double>();
}

int get_int(const json& obj, const std::string& path, const char* name) {
    const json& v = get_field(obj, path, name);
    if (!v.is_number_integer()) bad_field(path + "." + name, "must be an integer");
    return v.get<int>();
}

std::vector<double> get_array(const json& obj, const std::string& path, const char* name) {
    const json& v = get_field(obj, path, name);
    if (!v.is_array()) bad_field(path + "." + name, "must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number()) bad_field(path + "." + name, "must be an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) bad_field(path + "." + it.key(), "unknown field");
    }
}

TypeDistribution parse_distribution(const json& node) {
    if (!node.is_object()) bad_field("F", "must be an object");
    const json& kind = get_field(node, "F", "kind");
    if (!kind.is_string()) bad_field("F.kind", "must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "uniform") {
        reject_unknown(node, "F", {"kind"});
        return TypeDistribution::uniform();
    }
    if (k == "power") {
        reject_unknown(node, "F", {"kind", "alpha"});
        return TypeDistribution::power(get_number(node, "F", "alpha"));
    }
    if (k == "tabulated") {
        reject_unknown(node, "F", {"kind", "x", "F"});
        return TypeDistribution::tabulated(get_array(node, "F", "x"), get_array(node, "F", "F"));
    }
    bad_field("F.kind", "must be uniform, power, or tabulated");
}

CostFunction parse_cost(const json& node, const TypeDistribution& F) {
    if (!node.is_object()) bad_field("c", "must be an object");
    const json& kind = get_field(node, "c", "kind");
    if (!kind.is_string()) bad_field("c.kind", "must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "affine") {
        reject_unknown(node, "c", {"kind", "a", "b"});
        return CostFunction::affine(get_number(node, "c", "a"), get_number(node, "c", "b"));
    }
    if (k == "power") {
        reject_unknown(node, "c", {"kind", "gamma", "eps"});
        return CostFunction::power(get_number(node, "c", "gamma"), get_number(node, "c", "eps"),
                                   F);
    }
    if (k == "tabulated") {
        reject_unknown(node, "c", {"kind", "x", "c"});
        return CostFunction::tabulated(get_array(node, "c", "x"), get_array(node, "c", "c"));
    }
    bad_field("c.kind", "must be affine, power, or tabulated");
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("config must be a JSON object");
    reject_unknown(doc, "config", {"n", "m", "lambda", "F", "c"});

    ContestConfig cfg;
    cfg.n = get_int(doc, "config", "n");
    cfg.m = get_int(doc, "config", "m");
    cfg.lambda = doc.contains("lambda") ? get_number(doc, "config", "lambda") : 1.0;
    cfg.validate();
    TypeDistribution F = parse_distribution(get_field(doc, "config", "F"));
    CostFunction c = parse_cost(get_field(doc, "config", "c"), F);
    return Instance{cfg, std::move(F), std::move(c)};
}

Instance load_config(const std::string& path) { return parse_config(read_file(path)); }

std::uint64_t config_hash(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    const std::string canonical = doc.dump();  // object keys are kept sorted
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

AllocationVector parse_allocation(const std::string& text, const ContestConfig& config) {
    config.validate();
    std::vector<double> comps;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(',', pos);
        const std::string tok =
            text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::size_t used = 0;
        double val = 0.0;
        try {
            val = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw ValidationError("allocation component is not a number: '" + tok + "'");
        }
        if (used != tok.size())
            throw ValidationError("allocation component is not a number: '" + tok + "'");
        comps.push_back(val);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    AllocationVector v(config.n, config.m, std::move(comps));
    if (!v.ex_post_feasible())
        throw ValidationError("allocation violates the ex-post feasibility bounds");
    return v;
}

AllocationVector parse_mechanism(const std::string& text, const ContestConfig& config) {
    config.validate();
    if (text == "standard") return standard_vector(config);
    if (text == "reversed") return reversed_vector(config);
    if (text == "random") return random_vector(config);
    auto family_at = [&](const MechanismFamily& fam, const std::string& arg) {
        std::size_t used = 0;
        double t = 0.0;
        try {
            t = std::stod(arg, &used);
        } catch (const std::exception&) {
            throw ValidationError("mechanism parameter is not a number: '" + arg + "'");
        }
        if (used != arg.size())
            throw ValidationError("mechanism parameter is not a number: '" + arg + "'");
        if (!(t >= 0.0 && t <= 1.0))
            throw ValidationError("mechanism parameter must lie in [0, 1]");
        return fam.at(t);
    };
    if (text.rfind("quota:", 0) == 0) return family_at(quota_family(config), text.substr(6));
    if (text.rfind("blind:", 0) == 0) return family_at(blind_eye_family(config), text.substr(6));
    if (text.rfind("custom:", 0) == 0) return parse_allocation(text.substr(7), config);
    throw ValidationError(
        "unknown mechanism '" + text +
        "' (expected standard, reversed, random, quota:T, blind:T, or custom:v1,v2,...)");
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void JsonWriter::comma() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!need_comma_.empty()) {
        if (need_comma_.back()) out_ += ',';
        need_comma_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += '{';
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    need_comma_.pop_back();
    out_ += '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma();
    out_ += '[';
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    need_comma_.pop_back();
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    comma();
    value_escaped(k);
    out_ += ':';
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double x) {
    comma();
    if (std::isfinite(x))
        out_ += format_double(x);
    else
        out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::value(long long x) {
    comma();
    out_ += std::to_string(x);
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t x) {
    comma();
    out_ += std::to_string(x);
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    comma();
    value_escaped(s);
    return *this;
}

JsonWriter& JsonWriter::value_raw(const std::string& token) {
    comma();
    out_ += token;
    return *this;
}

void JsonWriter::value_escaped(const std::string& s) {
    out_ += '"';
    for (unsigned char ch : s) {
        switch (ch) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\b': out_ += "\\b"; break;
            case '\f': out_ += "\\f"; break;
            case '\n': out_ += "\\n"; break;
            case '\r': out_ += "\\r"; break;
            case '\t': out_ += "\\t"; break;
            default:
                if (ch < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out_ += buf;
                } else {
                    out_ += static_cast<char>(ch);
                }
        }
    }
    out_ += '"';
}

}  // namespace contestlab
