#ifndef MOTIVIC_IO_HPP
#define MOTIVIC_IO_HPP

#include <cstdint>
#include <limits>
#include <string>

#include <json.hpp>

#include <motivic/error.hpp>
#include <motivic/lring.hpp>

namespace motivic
{

using Json = nlohmann::json;

namespace detail
{

// Coefficients that fit in 64 bits are emitted as numbers, larger ones as
// decimal strings.
inline Json integer_to_json(const Integer &c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(c);
    }
    return c.str();
}

inline Integer integer_from_json(const Json &j)
{
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception &) {
        }
    }
    throw Error(ErrorCode::parse_error, "expected an integer coefficient, got " + j.dump());
}

inline Json poly_to_json(const LaurentPolynomial &p)
{
    Json arr = Json::array();
    for (const auto &[e, c] : p.terms()) {
        arr.push_back(Json::array({e, integer_to_json(c)}));
    }
    return arr;
}

inline LaurentPolynomial poly_from_json(const Json &arr)
{
    if (!arr.is_array()) {
        throw Error(ErrorCode::parse_error, "expected an array of [exp, coeff] pairs");
    }
    LaurentPolynomial p;
    for (const auto &t : arr) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) {
            throw Error(ErrorCode::parse_error, "malformed term " + t.dump());
        }
        p.add_term(t[0].get<Exponent>(), integer_from_json(t[1]));
    }
    return p;
}

} // namespace detail

// {"infinite": bool, "num": [[exp, coeff], ...] (descending exp), "den": [a, ...] (ascending)}
inline Json to_json(const MotivicValue &v)
{
    Json j;
    j["infinite"] = v.is_infinite();
    j["num"] = detail::poly_to_json(v.numerator());
    j["den"] = v.denominator_factors();
    return j;
}

inline MotivicValue motivic_value_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw Error(ErrorCode::parse_error, "MotivicValue JSON needs \"num\" and \"den\"");
    }
    const bool infinite = j.value("infinite", false);
    auto num = detail::poly_from_json(j.at("num"));
    const auto &den_json = j.at("den");
    if (!den_json.is_array()) {
        throw Error(ErrorCode::parse_error, "\"den\" must be an array");
    }
    std::vector<Exponent> den;
    for (const auto &a : den_json) {
        if (!a.is_number_integer()) {
            throw Error(ErrorCode::parse_error, "denominator entries must be integers");
        }
        den.push_back(a.get<Exponent>());
    }
    if (infinite) {
        if (!num.is_zero() || !den.empty()) {
            throw Error(ErrorCode::parse_error, "infinite value must have empty num and den");
        }
        return MotivicValue::infinity();
    }
    return MotivicValue(std::move(num), std::move(den));
}

inline MotivicValue parse_motivic_value(const std::string &text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorCode::parse_error, e.what());
    }
    return motivic_value_from_json(j);
}

inline Json to_json(const TruncatedSeries &s)
{
    Json j;
    j["window_low"] = s.window_low();
    j["window_high"] = s.window_high();
    j["coefficients"] = detail::poly_to_json(s.coefficients());
    return j;
}

} // namespace motivic

#endif
