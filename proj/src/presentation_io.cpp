#include "oi/presentation.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace oi {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
    return j.get<int>();
}

FieldSpec parse_field(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw SchemaError("field must be an object with a string 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return FieldSpec{FieldSpec::Kind::rationals, 0};
    if (kind == "prime") {
        if (!j.contains("p")) throw SchemaError("prime field requires 'p'");
        long p = require_int(j.at("p"), "field characteristic");
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw SchemaError("field characteristic must be prime");
        return FieldSpec{FieldSpec::Kind::prime, static_cast<std::uint64_t>(p)};
    }
    throw SchemaError("unknown field kind '" + kind + "'");
}

} // namespace

PresentationData parse_presentation(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("presentation must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "field" && key != "generators" && key != "relations")
            throw SchemaError("unknown presentation key '" + key + "'");
    if (!j.contains("field") || !j.contains("generators"))
        throw SchemaError("presentation requires 'field' and 'generators'");

    PresentationData data;
    data.field = parse_field(j.at("field"));

    const json& gens = j.at("generators");
    if (!gens.is_array()) throw SchemaError("'generators' must be an array");
    for (const auto& g : gens) {
        int d = require_int(g, "generator degree");
        if (d < 0) throw SchemaError("generator degree must be non-negative");
        data.generators.push_back(d);
    }

    if (j.contains("relations")) {
        const json& rels = j.at("relations");
        if (!rels.is_array()) throw SchemaError("'relations' must be an array");
        for (const auto& r : rels) {
            if (!r.is_object() || !r.contains("degree") || !r.contains("terms"))
                throw SchemaError("relation requires 'degree' and 'terms'");
            PresentationData::Relation rel;
            rel.degree = require_int(r.at("degree"), "relation degree");
            if (rel.degree < 0) throw SchemaError("relation degree must be non-negative");
            if (!r.at("terms").is_array()) throw SchemaError("'terms' must be an array");
            for (const auto& t : r.at("terms")) {
                if (!t.is_object() || !t.contains("gen") || !t.contains("map") || !t.contains("coeff"))
                    throw SchemaError("relation term requires 'gen', 'map' and 'coeff'");
                PresentationData::RelTerm term;
                term.gen = require_int(t.at("gen"), "term generator index");
                if (!t.at("map").is_array()) throw SchemaError("term 'map' must be an array");
                for (const auto& v : t.at("map"))
                    term.map_values.push_back(require_int(v, "map value"));
                if (!t.at("coeff").is_string()) throw SchemaError("term 'coeff' must be a string");
                term.coeff = t.at("coeff").get<std::string>();
                rel.terms.push_back(std::move(term));
            }
            data.relations.push_back(std::move(rel));
        }
    }
    return data;
}

PresentationData load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string serialize_presentation(const PresentationData& data) {
    json j;
    if (data.field.kind == FieldSpec::Kind::rationals) {
        j["field"] = {{"kind", "rationals"}};
    } else {
        j["field"] = {{"kind", "prime"}, {"p", data.field.p}};
    }
    j["generators"] = data.generators;
    j["relations"] = json::array();
    for (const auto& rel : data.relations) {
        json r;
        r["degree"] = rel.degree;
        r["terms"] = json::array();
        for (const auto& t : rel.terms)
            r["terms"].push_back({{"gen", t.gen}, {"map", t.map_values}, {"coeff", t.coeff}});
        j["relations"].push_back(std::move(r));
    }
    return j.dump();
}

} // namespace oi
