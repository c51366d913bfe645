#pragma once

// JSON forms of the library's values, for the CLI and reports.
// Field order is fixed (ordered_json) so identical inputs give identical bytes.

#include "trigrat/binomial.hpp"
#include "trigrat/cyclotomic.hpp"
#include "trigrat/gauss_sum.hpp"
#include "trigrat/metacyclic.hpp"
#include "trigrat/rat_poly.hpp"
#include "trigrat/rational.hpp"
#include "trigrat/root_membership.hpp"
#include "trigrat/sweep.hpp"
#include "trigrat/trig_values.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace trigrat::json {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.to_string(); }

/// Coefficient list, constant term first.
inline Json to_json(const RatPoly& p)
{
    Json arr = Json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(c.to_string());
    return arr;
}

inline Json to_json(const CycElem& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(c.to_string());
    return Json{{"modulus", x.modulus()}, {"coeffs", std::move(coeffs)}};
}

inline CycElem cyc_elem_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("modulus") || !j.contains("coeffs"))
        throw std::invalid_argument("CycElem JSON needs 'modulus' and 'coeffs'");
    const auto m = j.at("modulus").get<std::uint64_t>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    return CycElem(m, std::move(coeffs));
}

inline Json to_json(const ExactValue& v) { return v.to_string(); }

inline Json to_json(const Classification& c)
{
    Json j{{"func", std::string(to_string(c.func))},
           {"theta", c.angle.to_string()},
           {"case", std::string(to_string(c.verdict))}};
    j["minimal_n"] = c.minimal_n ? Json(*c.minimal_n) : Json(nullptr);
    j["value"] = c.value_at_minimal_n ? to_json(*c.value_at_minimal_n) : Json(nullptr);
    j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
    return j;
}

inline Json to_json(const RootMembershipVerdict& v)
{
    Json j{{"answer", std::string(to_string(v.answer))},
           {"justification", std::string(to_string(v.justification))},
           {"reduced_alpha", to_json(v.reduced_alpha)},
           {"reduced_n", v.reduced_n}};
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    return j;
}

inline Json to_json(const SqrtEmbedding& s) { return Json{{"modulus", s.modulus}, {"witness", to_json(s.witness)}}; }

inline Json to_json(const MetaGroupReport& r)
{
    return Json{{"n", r.n},
                {"order", r.order},
                {"axioms_hold", r.axioms_hold},
                {"abelian", r.abelian},
                {"relation_holds", r.relation_holds},
                {"translations_normal", r.translations_normal}};
}

inline Json to_json(const OracleFactor& f, unsigned n)
{
    return Json{{"subset", subset_indices(f.subset, n)}, {"factor", to_json(f.factor)}, {"cofactor", to_json(f.cofactor)}};
}

inline Json to_json(const SweepHit& h)
{
    return Json{{"func", std::string(to_string(h.func))},
                {"theta", h.angle.to_string()},
                {"n", h.n},
                {"value", to_json(h.value)},
                {"underlying", h.underlying ? to_json(*h.underlying) : Json(nullptr)}};
}

inline Json to_json(const SweepViolation& v)
{
    return Json{{"func", std::string(to_string(v.func))},
                {"theta", v.angle.to_string()},
                {"n", v.n},
                {"reason", v.reason}};
}

inline Json to_json(const SweepTotals& t)
{
    return Json{{"queries", t.queries},
                {"power_queries", t.power_queries},
                {"VALUE_RATIONAL", t.value_rational},
                {"SQUARE_RATIONAL", t.square_rational},
                {"NEVER", t.never},
                {"UNDEFINED", t.undefined}};
}

inline Json to_json(const SweepReport& r)
{
    Json hits = Json::array();
    for (const auto& h : r.hits)
        hits.push_back(to_json(h));
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(to_json(v));
    return Json{{"hits", std::move(hits)}, {"violations", std::move(violations)}, {"totals", to_json(r.totals)}};
}

} // namespace trigrat::json
