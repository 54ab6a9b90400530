#include "ech/json_io.hpp"

#include <stdexcept>

namespace ech {

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw std::invalid_argument("expected a rational as a \"n/d\" string or an integer");
}

namespace {

Int int_from_json(const json& j) {
    Rat r = rat_from_json(j);
    if (!is_integer(r)) throw std::invalid_argument("expected an integer, got " + rat_to_string(r));
    return rat_num(r);
}

json point_to_json(const Point2& p) { return json::array({rat_to_json(p.x), rat_to_json(p.y)}); }

Point2 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected a point as a two-element array");
    return {rat_from_json(j[0]), rat_from_json(j[1])};
}

}  // namespace

json polygon_to_json(const ConvexPolygon& P) {
    json verts = json::array();
    for (const auto& v : P.vertices()) verts.push_back(point_to_json(v));
    return json{{"vertices", verts}};
}

ConvexPolygon polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("expected an object with a \"vertices\" array");
    std::vector<Point2> pts;
    for (const auto& v : j["vertices"]) pts.push_back(point_from_json(v));
    if (pts.empty()) throw std::invalid_argument("polygon needs at least one vertex");
    return ConvexPolygon::from_points(pts);
}

json domain_to_json(const ConvexDomain& d) {
    json j = polygon_to_json(d.polygon);
    j["free"] = d.is_free;
    return j;
}

ConvexDomain domain_from_json(const json& j) {
    ConvexPolygon p = polygon_from_json(j);
    bool free = j.value("free", false);
    return free ? ConvexDomain::free(std::move(p)) : ConvexDomain::standard(std::move(p));
}

json weights_to_json(const WeightSequence& w) {
    json a = json::array(), b = json::array();
    for (const auto& x : w.a) a.push_back(x.str());
    for (const auto& x : w.b) b.push_back(x.str());
    return json{{"c", w.c.str()}, {"a", a}, {"b", b}};
}

WeightSequence weights_from_json(const json& j) {
    if (!j.is_object() || !j.contains("c"))
        throw std::invalid_argument("expected an object with \"c\", \"a\", \"b\"");
    WeightSequence w;
    w.c = int_from_json(j["c"]);
    for (const auto& x : j.value("a", json::array())) w.a.push_back(int_from_json(x));
    for (const auto& x : j.value("b", json::array())) w.b.push_back(int_from_json(x));
    return w;
}

json divisor_to_json(const ToricDivisor& d) {
    json rays = json::array(), coeffs = json::array();
    for (const auto& r : d.fan.rays)
        rays.push_back(json::array({rat_num(r.x).str(), rat_num(r.y).str()}));
    for (const auto& c : d.coeffs) coeffs.push_back(rat_to_json(c));
    return json{{"rays", rays},
                {"coeffs", coeffs},
                {"convention",
                 d.fan.convention == FanConvention::normal_fan ? "normal" : "slope"}};
}

ToricDivisor divisor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rays") || !j.contains("coeffs"))
        throw std::invalid_argument("expected an object with \"rays\" and \"coeffs\"");
    ToricDivisor d;
    for (const auto& r : j["rays"]) {
        Point2 p = point_from_json(r);
        d.fan.rays.push_back(p);
    }
    std::string conv = j.value("convention", "normal");
    if (conv != "normal" && conv != "slope")
        throw std::invalid_argument("convention must be \"normal\" or \"slope\"");
    d.fan.convention = conv == "normal" ? FanConvention::normal_fan : FanConvention::slope_fan;
    validate_fan(d.fan);
    for (const auto& c : j["coeffs"]) d.coeffs.push_back(rat_from_json(c));
    if (d.coeffs.size() != d.fan.rays.size())
        throw std::invalid_argument("coefficient count does not match ray count");
    return d;
}

}  // namespace ech
