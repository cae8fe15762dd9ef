#include "siegelp/json_io.hpp"

#include "siegelp/errors.hpp"

namespace siegelp {

json poly_to_json(const LaurentPoly& f)
{
    json j = json::object();
    for (int e = f.low(); !f.is_zero() && e <= f.high(); ++e) {
        const QElem c = f.coeff(e);
        if (!c.is_zero())
            j[std::to_string(e)] = {c.rational_part().get_str(), c.radical_part().get_str()};
    }
    return j;
}

LaurentPoly poly_from_json(const json& j, long d)
{
    if (!j.is_object())
        throw ParseError("polynomial must be a JSON object");
    LaurentPoly out;
    for (const auto& [key, val] : j.items()) {
        if (!val.is_array() || val.size() != 2)
            throw ParseError("coefficient must be [a, b]");
        int e = 0;
        try {
            std::size_t used = 0;
            e = std::stoi(key, &used);
            if (used != key.size())
                throw ParseError("bad exponent '" + key + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad exponent '" + key + "'");
        }
        Rat a(val[0].get<std::string>()), b(val[1].get<std::string>());
        a.canonicalize();
        b.canonicalize();
        QElem c = sgn(b) == 0 ? QElem(a) : QElem(a, b, d);
        out += LaurentPoly::monomial(c, e);
    }
    return out;
}

json ratfunc_to_json(const RatFunc& f, long p, long d)
{
    return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}, {"p", p}, {"d", d}};
}

RatFunc ratfunc_from_json(const json& j)
{
    try {
        const long d = j.at("d").get<long>();
        return RatFunc::normalize(poly_from_json(j.at("num"), d), poly_from_json(j.at("den"), d));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad rational function JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad rational in JSON: ") + e.what());
    }
}

json local_data_to_json(const LocalData& L)
{
    return {{"detN", L.detN.get_str()},   {"D_N", L.D_N.get_str()},     {"d_p", L.d_p},
            {"Dprime", L.Dprime.get_str()}, {"a_N", L.a_N},             {"e_p", L.e_p},
            {"zeta_p", L.zeta_p},           {"eta_p", L.eta_p},         {"chiN_p", L.chiN_p},
            {"chiNstar_p", L.chiNstar_p},   {"hasse", L.hasse},         {"fund_disc", L.fund_disc.get_str()},
            {"fund_disc_star", L.fund_disc_star.get_str()}};
}

json series_value_to_json(const SeriesValue& v, long p, long d)
{
    return {{"S", ratfunc_to_json(v.S, p, d)},
            {"beta", ratfunc_to_json(v.beta, p, d)},
            {"F", ratfunc_to_json(v.F, p, d)},
            {"local", local_data_to_json(v.local)}};
}

json matrix_to_json(const RatMatrixFn& m, long p, long d)
{
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& f : row)
            r.push_back(ratfunc_to_json(f, p, d));
        rows.push_back(r);
    }
    return rows;
}

json compare_to_json(const CompareReport& r, const OracleSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs)
        coeffs.push_back({c.real(), c.imag()});
    return {{"max_abs_diff", r.max_abs_diff}, {"per_order", r.per_order}, {"max_imag", r.max_imag},
            {"ok", r.ok},                     {"oracle", coeffs},         {"order", s.L}};
}

HalfIntMatrix matrix_from_json(const json& j)
{
    try {
        std::vector<std::vector<Int>> g;
        for (const auto& row : j) {
            std::vector<Int> r;
            for (const auto& x : row)
                r.emplace_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long>()));
            g.push_back(std::move(r));
        }
        return HalfIntMatrix(std::move(g));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
}

} // namespace siegelp
