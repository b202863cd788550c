#pragma once

#include <string>
#include <vector>

#include "oi/module.hpp"

namespace oi {

/// A finitely presented OI-module V = F/W over a concrete field: a free module
/// and the homogeneous relation elements generating W.
template <FieldType F>
struct Presentation {
    F field;
    FreeModule free;
    std::vector<Element<F>> relations;

    int max_generator_degree() const { return free.max_degree(); }
    int max_relation_degree() const {
        int m = -1;
        for (const auto& r : relations) m = std::max(m, r.degree);
        return m;
    }
};

/// Field-independent presentation data as read from or written to a file;
/// coefficients stay serialized.
struct PresentationData {
    struct RelTerm {
        int gen = 0;
        std::vector<int> map_values;
        std::string coeff;
    };
    struct Relation {
        int degree = 0;
        std::vector<RelTerm> terms;
    };

    FieldSpec field;
    std::vector<int> generators;
    std::vector<Relation> relations;
};

/// Parse and schema-check the canonical JSON presentation format.
PresentationData parse_presentation(const std::string& json_text);
PresentationData load_presentation(const std::string& path);
/// Canonical serialization: sorted keys, normalized scalars, no whitespace.
std::string serialize_presentation(const PresentationData& data);

template <FieldType F>
Presentation<F> instantiate(const F& f, const PresentationData& data) {
    if (f.spec() != data.field) throw SchemaError("presentation: field mismatch");
    Presentation<F> p{f, FreeModule{data.generators}, {}};
    for (int d : data.generators)
        if (d < 0) throw SchemaError("presentation: negative generator degree");
    for (const auto& rel : data.relations) {
        if (rel.degree < 0) throw SchemaError("presentation: negative relation degree");
        Element<F> e;
        e.degree = rel.degree;
        for (const auto& t : rel.terms) {
            if (t.gen < 0 || static_cast<std::size_t>(t.gen) >= data.generators.size())
                throw SchemaError("presentation: relation term generator index out of range");
            e.terms.push_back(Term<F>{static_cast<std::size_t>(t.gen),
                                      IncreasingMap(t.map_values, rel.degree), f.parse(t.coeff)});
        }
        validate_element(p.free, e);
        normalize_element(f, e);
        if (!e.is_zero()) p.relations.push_back(std::move(e));
    }
    return p;
}

template <FieldType F>
PresentationData to_data(const Presentation<F>& p) {
    PresentationData d;
    d.field = p.field.spec();
    d.generators = p.free.degrees;
    for (const auto& rel : p.relations) {
        PresentationData::Relation r;
        r.degree = rel.degree;
        for (const auto& t : rel.terms)
            r.terms.push_back(PresentationData::RelTerm{static_cast<int>(t.gen), t.map.values,
                                                        p.field.to_string(t.coeff)});
        d.relations.push_back(std::move(r));
    }
    return d;
}

/// Concatenation of generators and relations; dims add degreewise.
template <FieldType F>
Presentation<F> direct_sum(const Presentation<F>& a, const Presentation<F>& b) {
    if (a.field.spec() != b.field.spec()) throw SchemaError("direct_sum: field mismatch");
    Presentation<F> out = a;
    const std::size_t shift = a.free.degrees.size();
    out.free.degrees.insert(out.free.degrees.end(), b.free.degrees.begin(), b.free.degrees.end());
    for (auto rel : b.relations) {
        for (auto& t : rel.terms) t.gen += shift;
        out.relations.push_back(std::move(rel));
    }
    return out;
}

/// The induced module on one degree with a multiplicity: a copies of M(n),
/// no relations (OB has only identity automorphisms).
template <FieldType F>
Presentation<F> induced(const F& f, int n, int multiplicity) {
    if (n < 0 || multiplicity < 0) throw SchemaError("induced: negative parameter");
    Presentation<F> p{f, FreeModule{std::vector<int>(static_cast<std::size_t>(multiplicity), n)}, {}};
    return p;
}

} // namespace oi
