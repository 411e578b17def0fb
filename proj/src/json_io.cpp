#include "discderiv/json_io.hpp"

#include <stdexcept>

#include "discderiv/sampling.hpp"

namespace discderiv {

json poly_to_json(const AnalyticPoly& p) {
    json arr = json::array();
    for (const cxd& c : p.coeffs()) arr.push_back({c.real(), c.imag()});
    return arr;
}

namespace {

std::vector<cxd> coeff_list(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("coefficients must be an array");
    std::vector<cxd> out;
    out.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("coefficient entries must be [re, im]");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

}  // namespace

AnalyticPoly poly_from_json(const json& j) { return AnalyticPoly(coeff_list(j)); }

json symbol_to_json(const SymbolH1& h) {
    json arr = json::array();
    for (int n = 1; n <= h.degree(); ++n) {
        const cxd c = h.coeff(n);
        arr.push_back({c.real(), c.imag()});
    }
    return arr;
}

namespace {

int checked_degree(int degree) {
    if (degree > 4096)
        throw std::invalid_argument("symbol degree beyond the desk-scale cap of 4096");
    return degree;
}

}  // namespace

SymbolH1 symbol_from_spec(const json& j) {
    if (j.contains("coeffs")) {
        auto c = coeff_list(j["coeffs"]);
        checked_degree(static_cast<int>(c.size()));
        return SymbolH1::from_tail_coeffs(c);
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "monomial") return SymbolH1::monomial(checked_degree(j.at("n").get<int>()));
    if (kind == "random")
        return random_symbol(checked_degree(j.at("degree").get<int>()),
                             j.at("seed").get<std::uint64_t>());
    throw std::invalid_argument("unknown symbol kind: " + kind);
}

AnalyticPoly poly_from_spec(const json& j) {
    if (j.contains("coeffs")) return poly_from_json(j["coeffs"]);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "monomial") return AnalyticPoly::monomial(j.at("n").get<int>());
    if (kind == "random")
        return random_poly(j.at("degree").get<int>(), j.at("seed").get<std::uint64_t>());
    throw std::invalid_argument("unknown polynomial kind: " + kind);
}

namespace {

std::string kind_name(DensityKind k) {
    switch (k) {
        case DensityKind::ArcLength: return "arclength";
        case DensityKind::Boundary: return "boundary";
        case DensityKind::Interior: return "interior";
    }
    return "?";
}

DensityKind kind_from_name(const std::string& s) {
    if (s == "arclength") return DensityKind::ArcLength;
    if (s == "boundary") return DensityKind::Boundary;
    if (s == "interior") return DensityKind::Interior;
    throw std::invalid_argument("unknown measure kind: " + s);
}

}  // namespace

json measure_to_json(const DiscMeasure& mu) {
    json arr = json::array();
    for (const auto& c : mu.components()) {
        json entry;
        entry["kind"] = kind_name(c.kind);
        entry["weight"] = c.weight;
        entry["k_coeffs"] =
            c.kind == DensityKind::ArcLength ? json::array() : poly_to_json(c.k);
        arr.push_back(std::move(entry));
    }
    return arr;
}

DiscMeasure measure_from_json(const json& j) {
    DiscMeasure mu;
    for (const auto& entry : j) {
        MeasureComponent c;
        c.kind = kind_from_name(entry.at("kind").get<std::string>());
        c.weight = entry.at("weight").get<double>();
        if (c.kind != DensityKind::ArcLength) c.k = poly_from_json(entry.at("k_coeffs"));
        mu.append(std::move(c));
    }
    return mu;
}

json certificate_to_json(const PietschCertificate& cert) {
    json j;
    j["symbol"] = symbol_to_json(cert.symbol);
    j["alpha"] = {cert.decomposition.alpha.real(), cert.decomposition.alpha.imag()};
    j["c"] = cert.decomposition.c;
    j["k1_coeffs"] = poly_to_json(cert.decomposition.k1);
    j["k2_coeffs"] = poly_to_json(cert.decomposition.k2);
    json comps = json::array();
    for (const auto& c : cert.components) {
        json entry;
        entry["tag"] = c.tag;
        entry["weight"] = c.weight;
        entry["measure"] = measure_to_json(c.measure);
        comps.push_back(std::move(entry));
    }
    j["components"] = std::move(comps);
    j["combine_factor"] = cert.combine_factor;
    j["total_mass"] = cert.total_mass;
    if (cert.verification) {
        const VerifyReport& r = *cert.verification;
        json v;
        v["samples"] = r.samples;
        v["deg"] = r.deg;
        v["seed"] = r.seed;
        v["max_ratio"] = r.max_ratio;
        v["violations"] = r.violations;
        v["worst_index"] = r.worst_index;
        v["worst_lhs"] = r.worst_lhs;
        v["worst_rhs"] = r.worst_rhs;
        j["verification"] = std::move(v);
    }
    json meta;
    meta["tail_error"] = cert.decomposition.tail_error;
    meta["splitting_constant_rule"] = "max(L1(F), 1.001*sup(F))";
    meta["combine_factor_note"] =
        "sqrt(5) enters the norm inequality; the measure scales by its square";
    j["meta"] = std::move(meta);
    return j;
}

}  // namespace discderiv
