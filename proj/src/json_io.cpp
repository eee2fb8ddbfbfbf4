#include "qfoulkes/json_io.hpp"

#include <stdexcept>

namespace qfoulkes {

namespace {

Json witness_json(const std::optional<std::pair<Partition, QPoly>>& w)
{
    if (!w)
        return nullptr;
    return Json{{"partition", to_json(w->first)}, {"coeff", to_json(w->second)}};
}

Json form_json(const SymFunc& f)
{
    const auto form = H1H2E2Form::from_symfunc(f);
    return form ? Json(form->str()) : Json(nullptr);
}

}  // namespace

Json to_json(const QPoly& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs())
        out.push_back(rational_str(c));
    return out;
}

QPoly qpoly_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("q-polynomial JSON must be an array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer())
            coeffs.push_back(Rational(c.get<long>()));
        else
            throw std::invalid_argument("q-polynomial coefficient must be a string or integer");
    }
    return QPoly(std::move(coeffs));
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const SchurExpansion& e)
{
    Json terms = Json::array();
    for (const auto& [lambda, c] : e.terms())
        terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
    const auto d = e.degree();
    return Json{{"degree", d ? Json(*d) : Json(nullptr)}, {"terms", std::move(terms)}};
}

SchurExpansion schur_from_json(const Json& j)
{
    SchurExpansion out;
    for (const auto& t : j.at("terms"))
        out.add_term(partition_from_json(t.at("partition")), qpoly_from_json(t.at("coeff")));
    return out;
}

Json to_json(const FoulkesReport& r, bool with_expansion, bool with_timing)
{
    Json params = Json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    Json out{{"kind", r.kind}, {"params", std::move(params)}, {"positive", r.positive}};
    if (with_expansion)
        out["expansion"] = to_json(r.expansion);
    out["witness"] = witness_json(r.witness);
    if (with_timing)
        out["ms"] = r.ms;
    return out;
}

Json to_json(const Configuration& c, bool with_certificate)
{
    Json out{{"alpha", to_json(c.alpha)},
             {"beta", to_json(c.beta)},
             {"gamma", to_json(c.gamma)},
             {"delta", to_json(c.delta)},
             {"n", c.n},
             {"is_foulkes", c.is_foulkes},
             {"passed_e_condition", c.passed_e_condition},
             {"is_q_foulkes", c.is_q_foulkes}};
    if (with_certificate)
        out["certificate"] = to_json(c.certificate);
    if (c.witness)
        out["witness"] = witness_json(c.witness);
    return out;
}

Json to_json(const Conjecture4Report& r)
{
    Json one = Json::array();
    for (const auto& c : r.one_sided)
        one.push_back(to_json(c, true));
    return Json{{"n", r.n},           {"e_pairs", r.e_pairs}, {"both", r.both},
                {"neither", r.neither}, {"holds", r.holds()}, {"one_sided", std::move(one)}};
}

Json to_json(const GuessVerdict& v)
{
    return Json{{"a", v.a},
                {"b", v.b},
                {"c", v.c},
                {"d", v.d},
                {"k", v.k},
                {"q_config", v.q_config},
                {"schur_pattern", v.schur_pattern},
                {"h_power_pattern", v.h_power_pattern}};
}

Json to_json(const ThetaReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json j{{"b", row.b}};
        j["direct"] = row.direct ? form_json(*row.direct) : Json(nullptr);
        j["direct_natural"] = row.direct_natural;
        j["chain"] = form_json(row.chain);
        j["chain_agrees"] = row.chain_agrees;
        j["recurrence_from_direct"] = row.recurrence_from_direct ? form_json(*row.recurrence_from_direct) : Json(nullptr);
        j["recurrence_agrees"] = row.recurrence_agrees ? Json(*row.recurrence_agrees) : Json(nullptr);
        j["bridge"] = row.bridge ? form_json(*row.bridge) : Json(nullptr);
        j["bridge_agrees"] = row.bridge_agrees;
        rows.push_back(std::move(j));
    }
    return Json{{"a", r.a}, {"bmax", r.bmax}, {"rows", std::move(rows)}};
}

Json to_json(const CheckResult& r, bool with_timing)
{
    Json out{{"name", r.name}, {"passed", r.passed}};
    if (!r.detail.empty())
        out["detail"] = r.detail;
    if (with_timing)
        out["ms"] = r.ms;
    return out;
}

}  // namespace qfoulkes
